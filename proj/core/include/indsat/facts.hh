/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_FACTS_HH
#define INDSAT_GUARD_INDSAT_FACTS_HH 1

#include <indsat/search.hh>
#include <indsat/trigraph.hh>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace indsat
{
    /**
     * Structural properties every indsat(P4) trigraph is known to have, made
     * executable so they can be checked against exhaustively enumerated
     * witnesses:
     *
     *   complement_closure            the complement is indsat(P4) too
     *   monochromatic_cut_heredity    both sides of an all-black or all-white cut are indsat(P4)
     *   same_neighbourhood_heredity   a set with a gray-free cut whose members agree outside is indsat(P4)
     *   gray_components_shape         every gray component is trivial, a star or a triangle
     *   star_partition                partition_star succeeds on each gray star
     *   triangle_partition            partition_triangle succeeds on each gray triangle
     *   star_z_cuts                   for a star's partition, Z-X pairs are black and Z-Y pairs white
     *   gray_edge_exists              at least one gray pair once n >= 2
     */
    struct FactViolation
    {
        std::string fact;
        CanonicalForm witness;
        std::string detail;
    };

    struct FactTally
    {
        std::map<std::string, std::size_t> checks;
        std::vector<FactViolation> violations;
    };

    /// Runs every check on one trigraph, which the caller asserts is indsat(P4). n <= 8.
    auto check_p4_facts(const Trigraph & t, FactTally & tally) -> void;

    struct FactSuiteReport
    {
        int n = 0;
        std::size_t trigraphs = 0;
        std::map<int, std::size_t> per_gray_count;
        FactTally tally;

        auto ok() const -> bool { return tally.violations.empty(); }
    };

    /// Enumerates all canonical indsat(P4) trigraphs on n vertices (every gray count,
    /// without complement identification) and checks each.
    auto run_p4_fact_suite(int n, int workers = 1) -> FactSuiteReport;
}

#endif

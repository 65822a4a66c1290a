/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_IO_HH
#define INDSAT_GUARD_INDSAT_IO_HH 1

#include <indsat/dnf.hh>
#include <indsat/graph.hh>
#include <indsat/trigraph.hh>

#include <iosfwd>
#include <string>

namespace indsat
{
    /**
     * Trigraph text:
     *
     *     trigraph <n>
     *     <u> <v> <B|W|G>      one line per pair, 0-based, u < v; missing pairs are W
     *
     * Blank lines and # comments are ignored. Writing lists every non-white pair in colex order.
     */
    auto read_trigraph(std::istream & in) -> Trigraph;
    auto write_trigraph(std::ostream & out, const Trigraph & t) -> void;

    /// "graph <k>" followed by one "<u> <v>" line per edge.
    auto read_pattern(std::istream & in, const std::string & name) -> PatternGraph;

    /// "dnf <m> <c>", then c lines of signed 1-based variables, negative meaning negated.
    auto read_dnf(std::istream & in) -> DnfFormula;
    auto write_dnf(std::ostream & out, const DnfFormula & f) -> void;

    /// One of 1, 0, - per variable; whitespace ignored.
    auto read_assignment(std::istream & in) -> PartialAssignment;
    auto write_assignment(std::ostream & out, const PartialAssignment & alpha) -> void;

    auto read_trigraph_file(const std::string & path) -> Trigraph;
    auto write_trigraph_file(const std::string & path, const Trigraph & t) -> void;
}

#endif

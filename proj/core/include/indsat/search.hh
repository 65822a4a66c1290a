/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_SEARCH_HH
#define INDSAT_GUARD_INDSAT_SEARCH_HH 1

#include <indsat/graph.hh>
#include <indsat/trigraph.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace indsat
{
    /**
     * Isomorphism class key: the lexicographically smallest (gray mask, black
     * mask) pair, compared as integers, over all relabelings of the vertices.
     */
    struct CanonicalForm
    {
        int n = 0;
        PairMask gray = 0, black = 0;

        auto trigraph() const -> Trigraph { return Trigraph::from_masks(n, black, gray); }
        auto gray_count() const -> int { return popcount(gray); }

        friend auto operator== (const CanonicalForm &, const CanonicalForm &) -> bool = default;
        friend auto operator< (const CanonicalForm & a, const CanonicalForm & b) -> bool
        {
            if (a.n != b.n)
                return a.n < b.n;
            if (a.gray != b.gray)
                return a.gray < b.gray;
            return a.black < b.black;
        }
    };

    constexpr int max_canonical_vertices = 8;

    /// Minimum over all n! relabelings. Throws ResourceError for n > 8.
    auto canonical_form(const Trigraph & t) -> CanonicalForm;

    enum class DedupStrategy
    {
        /// Test a colouring only if it is the smallest member of its symmetry class.
        Orderly,

        /// Test the first colouring seen from each class, tracked in a bounded set.
        SeenSet
    };

    struct SearchOptions
    {
        /// Largest gray count to try; negative means C(n,2).
        int k_max = -1;

        int workers = 1;

        DedupStrategy dedup = DedupStrategy::Orderly;

        /// SeenSet only: past this many entries, stop remembering (duplicates get retested).
        std::size_t seen_cap = std::size_t{ 1 } << 24;

        /// Also identify a trigraph with its complement, when the pattern is self-complementary.
        bool complement_symmetry = true;

        /// Stop after testing this many candidates; 0 means no limit.
        std::uint64_t candidate_cap = 0;
    };

    struct SearchStats
    {
        std::uint64_t gray_sets = 0;             // gray subsets generated
        std::uint64_t gray_orbits = 0;           // of which were orbit representatives
        std::uint64_t candidates_examined = 0;   // colourings tested for saturation
        std::uint64_t symmetry_skipped = 0;      // colourings rejected as non-canonical or already seen
        std::uint64_t indsat_found = 0;          // candidates that passed
        double wall_seconds = 0.0;

        auto operator+= (const SearchStats & other) -> SearchStats &;
    };

    struct SearchResult
    {
        int n = 0;
        std::string pattern;

        /// nullopt: no indsat trigraph up to the gray cap (or the candidate cap hit first).
        std::optional<int> min_gray;
        bool capped = false;

        /// Sorted by key.
        std::vector<CanonicalForm> witnesses;
        SearchStats stats;
    };

    constexpr int max_search_vertices = 7;

    /// Least gray count over indsat(h) trigraphs on n vertices, 2 <= n <= 7, by increasing gray count.
    auto isat_min(int n, const PatternGraph & h, const SearchOptions & options = {}) -> SearchResult;

    /// Every trigraph on n vertices, no pruning, n <= 6. The independent check for isat_min.
    auto isat_min_naive(int n, const PatternGraph & h, int k_max = -1) -> SearchResult;

    /// All canonical indsat(h) trigraphs on 1 <= n <= 7 vertices with exactly k gray pairs.
    auto enumerate_indsat(int n, const PatternGraph & h, int k, const SearchOptions & options = {}) -> std::vector<CanonicalForm>;

    /// Reads INDSAT_SEEN_CAP, falling back when it is unset or unparsable.
    auto seen_cap_from_environment(std::size_t fallback = std::size_t{ 1 } << 24) -> std::size_t;
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_PATTERN_DETECT_HH
#define INDSAT_GUARD_INDSAT_PATTERN_DETECT_HH 1

#include <indsat/graph.hh>
#include <indsat/trigraph.hh>

#include <optional>
#include <span>
#include <vector>

namespace indsat
{
    using Realization = Graph;

    struct GrayResolution
    {
        Pair pair;
        bool as_edge;
    };

    /**
     * An injection of the pattern's vertices into the trigraph under which every
     * pattern edge lands on a black or gray pair and every pattern nonedge on a
     * white or gray pair. resolved lists how each gray pair inside the image
     * is set.
     */
    struct Embedding
    {
        std::vector<int> image;
        std::vector<GrayResolution> resolved;
    };

    /// Whether image is a valid embedding of h into t.
    auto realizes(const Trigraph & t, const PatternGraph & h, std::span<const int> image) -> bool;

    /// Builds the Embedding (including gray resolutions) for an image already known to be valid.
    auto make_embedding(const Trigraph & t, const PatternGraph & h, std::vector<int> image) -> Embedding;

    /// Some realization of t contains h as an induced subgraph. Each gray pair
    /// resolves independently, so this only searches injections.
    auto has_realization_of(const Trigraph & t, const PatternGraph & h) -> bool;
    auto find_realization_of(const Trigraph & t, const PatternGraph & h) -> std::optional<Embedding>;

    /// Specialised P4 search: pick the middle pair, then the two ends, all with row masks.
    auto find_p4_realization(const Trigraph & t) -> std::optional<Embedding>;

    /// Generic injection search with degree pruning, for any pattern.
    auto find_generic_realization(const Trigraph & t, const PatternGraph & h) -> std::optional<Embedding>;

    constexpr int brute_gray_cap = 20;

    /// Enumerates all 2^|EG| realizations and scans each one. Throws
    /// ResourceError past brute_gray_cap gray pairs.
    auto has_realization_brute(const Trigraph & t, const PatternGraph & h) -> bool;

    /// Some |V(H)|-subset of g induces a copy of h.
    auto contains_induced(const Realization & g, const PatternGraph & h) -> bool;
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_SATURATION_HH
#define INDSAT_GUARD_INDSAT_SATURATION_HH 1

#include <indsat/pattern_detect.hh>

#include <optional>
#include <string>
#include <vector>

namespace indsat
{
    struct FlipWitness
    {
        Pair pair;
        Embedding embedding;
    };

    struct SaturationReport
    {
        /// No realization of T contains H.
        bool holds_free = false;

        /// When holds_free is false, one realization that does.
        std::optional<Embedding> free_violation;

        /// First non-gray pair, colex order, whose flip still has no realization of H.
        std::optional<Pair> failing_flip;

        /// Filled only on request, for every passing flip.
        std::vector<FlipWitness> witness_flips;

        auto is_indsat() const -> bool { return holds_free && ! failing_flip; }
    };

    /// Full report. Flips are only examined once holds_free is established.
    auto check_indsat(const Trigraph & t, const PatternGraph & h, bool collect_witnesses = false) -> SaturationReport;

    /// The same predicate without building a report.
    auto is_indsat(const Trigraph & t, const PatternGraph & h) -> bool;

    enum class GrayComponentKind
    {
        Trivial,
        Star,
        Triangle,
        Other
    };

    auto to_string(GrayComponentKind k) -> std::string;

    struct GrayComponent
    {
        GrayComponentKind kind;
        std::vector<int> vertices;
        int center = -1;                // Star only; for a single gray edge, the smaller end

        auto size() const -> int { return int(vertices.size()); }
    };

    /// One entry per gray component, ordered by smallest vertex.
    auto classify_gray_components(const Trigraph & t) -> std::vector<GrayComponent>;

    struct PartitionFailure
    {
        int vertex;
        std::string reason;
    };

    enum class StarZCase
    {
        None,               // Z empty
        CenterBlack,        // uz black, v_i z white, leaves pairwise white
        CenterWhite         // uz white, v_i z black, leaves pairwise black
    };

    struct StarPartition
    {
        std::vector<int> x, y, z;
        StarZCase z_case = StarZCase::None;
        std::optional<PartitionFailure> failure;

        auto ok() const -> bool { return ! failure; }
    };

    struct TrianglePartition
    {
        std::vector<int> x, y;
        std::optional<PartitionFailure> failure;

        auto ok() const -> bool { return ! failure; }
    };

    /**
     * Splits the vertices outside a gray star into X (black to the whole star),
     * Y (white to the whole star) and Z (black to the centre and white to the
     * leaves, or the reverse, consistently across Z and matching the colour
     * between leaves). Reports the first vertex that fits none of these.
     *
     * Throws ArgumentError unless {center} + leaves is exactly a gray star component.
     */
    auto partition_star(const Trigraph & t, int center, std::span<const int> leaves) -> StarPartition;

    /// Splits the vertices outside a gray triangle component into all-black X and all-white Y.
    auto partition_triangle(const Trigraph & t, std::span<const int> triangle) -> TrianglePartition;
}

#endif

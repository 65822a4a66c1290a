/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/saturation.hh>
#include <indsat/errors.hh>

#include <algorithm>

namespace indsat
{
    auto check_indsat(const Trigraph & t, const PatternGraph & h, bool collect_witnesses) -> SaturationReport
    {
        SaturationReport report;
        report.free_violation = find_realization_of(t, h);
        report.holds_free = ! report.free_violation;
        if (! report.holds_free)
            return report;

        Trigraph scratch = t;
        for (int v = 1 ; v < t.size() ; ++v)
            for (int u = 0 ; u < v ; ++u) {
                auto old = t.color(u, v);
                if (old == EdgeColor::Gray)
                    continue;

                scratch.set_color(u, v, EdgeColor::Gray);
                if (collect_witnesses) {
                    auto e = find_realization_of(scratch, h);
                    if (! e) {
                        report.failing_flip = Pair{ u, v };
                        return report;
                    }
                    report.witness_flips.push_back(FlipWitness{ Pair{ u, v }, std::move(*e) });
                }
                else if (! has_realization_of(scratch, h)) {
                    report.failing_flip = Pair{ u, v };
                    return report;
                }
                scratch.set_color(u, v, old);
            }
        return report;
    }

    auto is_indsat(const Trigraph & t, const PatternGraph & h) -> bool
    {
        if (has_realization_of(t, h))
            return false;

        Trigraph scratch = t;
        for (int v = 1 ; v < t.size() ; ++v)
            for (int u = 0 ; u < v ; ++u) {
                auto old = t.color(u, v);
                if (old == EdgeColor::Gray)
                    continue;
                scratch.set_color(u, v, EdgeColor::Gray);
                if (! has_realization_of(scratch, h))
                    return false;
                scratch.set_color(u, v, old);
            }
        return true;
    }

    auto to_string(GrayComponentKind k) -> std::string
    {
        switch (k) {
            case GrayComponentKind::Trivial:  return "trivial";
            case GrayComponentKind::Star:     return "star";
            case GrayComponentKind::Triangle: return "triangle";
            case GrayComponentKind::Other:    return "other";
        }
        return "?";
    }

    auto classify_gray_components(const Trigraph & t) -> std::vector<GrayComponent>
    {
        std::vector<GrayComponent> result;
        for (auto & vertices : components(t, ColorSet{ EdgeColor::Gray })) {
            GrayComponent c{ GrayComponentKind::Other, vertices, -1 };
            int size = int(vertices.size());
            VertexMask members = to_vertex_mask(t.size(), vertices);

            if (size == 1)
                c.kind = GrayComponentKind::Trivial;
            else if (size == 3 && std::all_of(vertices.begin(), vertices.end(),
                        [&] (int v) { return (t.gray_row(v) & members) == (members & ~vertex_bit(v)); }))
                c.kind = GrayComponentKind::Triangle;
            else {
                for (int u : vertices) {
                    bool centre = (t.gray_row(u) & members) == (members & ~vertex_bit(u));
                    for (int v : vertices)
                        if (centre && v != u && (t.gray_row(v) & members) != vertex_bit(u))
                            centre = false;
                    if (centre) {
                        c.kind = GrayComponentKind::Star;
                        c.center = u;
                        break;
                    }
                }
            }
            result.push_back(std::move(c));
        }
        return result;
    }

    auto partition_star(const Trigraph & t, int center, std::span<const int> leaves) -> StarPartition
    {
        if (center < 0 || center >= t.size())
            throw ArgumentError("star centre out of range");
        VertexMask leaf_mask = to_vertex_mask(t.size(), leaves);
        if (leaf_mask == 0 || (leaf_mask & vertex_bit(center)))
            throw ArgumentError("star needs at least one leaf distinct from the centre");

        VertexMask star = leaf_mask | vertex_bit(center);
        if (t.gray_row(center) != leaf_mask)
            throw ArgumentError("centre's gray neighbourhood is not exactly the leaves");
        for (int v : leaves)
            if (t.gray_row(v) != vertex_bit(center))
                throw ArgumentError("leaf " + std::to_string(v) + " has gray pairs besides the centre");

        StarPartition result;

        // Leaves must be pairwise all black or all white.
        std::optional<EdgeColor> leaf_color;
        for (int a : leaves)
            for (int b : leaves)
                if (a < b) {
                    auto c = t.color(a, b);
                    if (! leaf_color)
                        leaf_color = c;
                    else if (*leaf_color != c) {
                        result.failure = PartitionFailure{ b, "leaves are not pairwise one colour" };
                        return result;
                    }
                }

        for (int w = 0 ; w < t.size() ; ++w) {
            if (star & vertex_bit(w))
                continue;

            bool all_black = (t.black_row(w) & star) == star;
            bool all_white = (t.white_row(w) & star) == star;
            if (all_black) {
                result.x.push_back(w);
                continue;
            }
            if (all_white) {
                result.y.push_back(w);
                continue;
            }

            StarZCase z_case = StarZCase::None;
            if ((t.black_row(w) & vertex_bit(center)) && (t.white_row(w) & leaf_mask) == leaf_mask)
                z_case = StarZCase::CenterBlack;
            else if ((t.white_row(w) & vertex_bit(center)) && (t.black_row(w) & leaf_mask) == leaf_mask)
                z_case = StarZCase::CenterWhite;

            if (z_case == StarZCase::None) {
                result.failure = PartitionFailure{ w, "mixed colours to the star" };
                return result;
            }
            if (result.z_case != StarZCase::None && result.z_case != z_case) {
                result.failure = PartitionFailure{ w, "Z vertices disagree on which side is black" };
                return result;
            }
            if (leaf_color && *leaf_color != (z_case == StarZCase::CenterBlack ? EdgeColor::White : EdgeColor::Black)) {
                result.failure = PartitionFailure{ w, "colour between leaves does not match the Z case" };
                return result;
            }
            result.z_case = z_case;
            result.z.push_back(w);
        }

        return result;
    }

    auto partition_triangle(const Trigraph & t, std::span<const int> triangle) -> TrianglePartition
    {
        VertexMask tri = to_vertex_mask(t.size(), triangle);
        if (triangle.size() != 3)
            throw ArgumentError("a triangle has three vertices");
        for (int v : triangle)
            if (t.gray_row(v) != (tri & ~vertex_bit(v)))
                throw ArgumentError("not a gray triangle component");

        TrianglePartition result;
        for (int w = 0 ; w < t.size() ; ++w) {
            if (tri & vertex_bit(w))
                continue;
            if ((t.black_row(w) & tri) == tri)
                result.x.push_back(w);
            else if ((t.white_row(w) & tri) == tri)
                result.y.push_back(w);
            else {
                result.failure = PartitionFailure{ w, "mixed colours to the triangle" };
                return result;
            }
        }
        return result;
    }
}

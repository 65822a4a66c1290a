/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/facts.hh>
#include <indsat/saturation.hh>

namespace indsat
{
    namespace
    {
        const PatternGraph & p4()
        {
            static const PatternGraph result = path_pattern(4);
            return result;
        }

        auto all_colored(const Trigraph & t, VertexMask a, VertexMask b, EdgeColor c) -> bool
        {
            bool ok = true;
            for_each_vertex(a, [&] (int u) {
                if ((t.row(u, ColorSet{ c }) & b) != b)
                    ok = false;
            });
            return ok;
        }

        auto induced_by(const Trigraph & t, VertexMask s) -> Trigraph
        {
            auto vertices = to_vertex_list(s);
            return induced(t, vertices).trigraph;
        }
    }

    auto check_p4_facts(const Trigraph & t, FactTally & tally) -> void
    {
        auto form = canonical_form(t);
        auto violation = [&] (const std::string & fact, const std::string & detail) {
            tally.violations.push_back(FactViolation{ fact, form, detail });
        };

        int n = t.size();
        VertexMask everything = all_vertices(n);

        ++tally.checks["complement_closure"];
        if (! is_indsat(complement(t), p4()))
            violation("complement_closure", "complement is not indsat(P4)");

        ++tally.checks["gray_edge_exists"];
        if (n >= 2 && t.count(EdgeColor::Gray) == 0)
            violation("gray_edge_exists", "no gray pair");

        // Subsets containing vertex 0 cover each bipartition once.
        for (VertexMask v1 = 1 ; v1 < everything ; v1 += 2) {
            VertexMask v2 = everything & ~v1;
            if (all_colored(t, v1, v2, EdgeColor::Black) || all_colored(t, v1, v2, EdgeColor::White)) {
                ++tally.checks["monochromatic_cut_heredity"];
                if (! is_indsat(induced_by(t, v1), p4()) || ! is_indsat(induced_by(t, v2), p4()))
                    violation("monochromatic_cut_heredity", "a side of a monochromatic cut is not indsat(P4)");
            }
        }

        for (VertexMask s = 1 ; s < everything ; ++s) {
            VertexMask rest = everything & ~s;
            bool gray_free = true, agree = true;
            int first = std::countr_zero(s);
            for_each_vertex(s, [&] (int v) {
                if (t.gray_row(v) & rest)
                    gray_free = false;
                if ((t.black_row(v) & rest) != (t.black_row(first) & rest))
                    agree = false;
            });
            if (gray_free && agree) {
                ++tally.checks["same_neighbourhood_heredity"];
                if (! is_indsat(induced_by(t, s), p4()))
                    violation("same_neighbourhood_heredity", "vertex set " + std::to_string(s) + " is not indsat(P4)");
            }
        }

        for (auto & c : classify_gray_components(t)) {
            ++tally.checks["gray_components_shape"];
            switch (c.kind) {
                case GrayComponentKind::Trivial:
                    break;

                case GrayComponentKind::Other:
                    violation("gray_components_shape", "gray component is neither a star nor a triangle");
                    break;

                case GrayComponentKind::Triangle: {
                    ++tally.checks["triangle_partition"];
                    auto part = partition_triangle(t, c.vertices);
                    if (! part.ok())
                        violation("triangle_partition", part.failure->reason + " at vertex " + std::to_string(part.failure->vertex));
                    break;
                }

                case GrayComponentKind::Star: {
                    std::vector<int> leaves;
                    for (int v : c.vertices)
                        if (v != c.center)
                            leaves.push_back(v);

                    ++tally.checks["star_partition"];
                    auto part = partition_star(t, c.center, leaves);
                    if (! part.ok()) {
                        violation("star_partition", part.failure->reason + " at vertex " + std::to_string(part.failure->vertex));
                        break;
                    }

                    ++tally.checks["star_z_cuts"];
                    VertexMask x = to_vertex_mask(n, part.x), y = to_vertex_mask(n, part.y), z = to_vertex_mask(n, part.z);
                    if (! all_colored(t, z, x, EdgeColor::Black) || ! all_colored(t, z, y, EdgeColor::White))
                        violation("star_z_cuts", "Z is not black to X and white to Y");
                    break;
                }
            }
        }
    }

    auto run_p4_fact_suite(int n, int workers) -> FactSuiteReport
    {
        FactSuiteReport report;
        report.n = n;

        SearchOptions options;
        options.workers = workers;
        options.complement_symmetry = false;

        for (int k = 0 ; k <= num_pairs(n) ; ++k) {
            auto witnesses = enumerate_indsat(n, p4(), k, options);
            report.per_gray_count[k] = witnesses.size();
            report.trigraphs += witnesses.size();
            for (auto & w : witnesses)
                check_p4_facts(w.trigraph(), report.tally);
        }
        return report;
    }
}

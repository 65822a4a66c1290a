/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/pattern_detect.hh>
#include <indsat/errors.hh>

#include <algorithm>
#include <array>

namespace indsat
{
    namespace
    {
        struct GenericSearch
        {
            const Trigraph & t;
            const PatternGraph & h;
            int k;
            std::array<int, 8> order{};                    // pattern vertices, most constrained first
            std::array<VertexMask, 8> admissible{};        // per pattern vertex, after degree pruning
            std::array<int, 8> image{};
            VertexMask used = 0;

            GenericSearch(const Trigraph & tt, const PatternGraph & hh) :
                t(tt), h(hh), k(hh.size())
            {
                // Greedy ordering: highest degree first, then whoever has the most
                // already-placed neighbours, so candidate masks shrink early.
                VertexMask placed = 0;
                for (int i = 0 ; i < k ; ++i) {
                    int best = -1, best_placed = -1, best_degree = -1;
                    for (int v = 0 ; v < k ; ++v) {
                        if (placed & vertex_bit(v))
                            continue;
                        int np = std::popcount(h.graph.neighbours(v) & placed);
                        int d = h.graph.degree(v);
                        if (np > best_placed || (np == best_placed && d > best_degree)) {
                            best = v;
                            best_placed = np;
                            best_degree = d;
                        }
                    }
                    order[unsigned(i)] = best;
                    placed |= vertex_bit(best);
                }

                for (int v = 0 ; v < k ; ++v) {
                    int d = h.graph.degree(v);
                    VertexMask ok = 0;
                    for (int x = 0 ; x < t.size() ; ++x)
                        if (std::popcount(t.can_be_edge_row(x)) >= d && std::popcount(t.can_be_nonedge_row(x)) >= k - 1 - d)
                            ok |= vertex_bit(x);
                    admissible[unsigned(v)] = ok;
                }
            }

            auto search(int depth) -> bool
            {
                if (depth == k)
                    return true;

                int hv = order[unsigned(depth)];
                VertexMask candidates = admissible[unsigned(hv)] & ~used;
                for (int i = 0 ; i < depth && candidates ; ++i) {
                    int prior = order[unsigned(i)];
                    int x = image[unsigned(prior)];
                    candidates &= h.graph.adjacent(hv, prior) ? t.can_be_edge_row(x) : t.can_be_nonedge_row(x);
                }

                while (candidates) {
                    int x = std::countr_zero(candidates);
                    candidates &= candidates - 1;
                    image[unsigned(hv)] = x;
                    used |= vertex_bit(x);
                    if (search(depth + 1))
                        return true;
                    used &= ~vertex_bit(x);
                }
                return false;
            }
        };

        auto next_subset(VertexMask s) -> VertexMask
        {
            // Gosper's hack
            VertexMask c = s & -s, r = s + c;
            return (((r ^ s) >> 2) / c) | r;
        }
    }

    auto realizes(const Trigraph & t, const PatternGraph & h, std::span<const int> image) -> bool
    {
        if (int(image.size()) != h.size())
            return false;
        for (int x : image)
            if (x < 0 || x >= t.size())
                return false;

        for (int b = 0 ; b < h.size() ; ++b)
            for (int a = 0 ; a < b ; ++a) {
                if (image[unsigned(a)] == image[unsigned(b)])
                    return false;
                auto c = t.color(image[unsigned(a)], image[unsigned(b)]);
                if (h.graph.adjacent(a, b) ? c == EdgeColor::White : c == EdgeColor::Black)
                    return false;
            }
        return true;
    }

    auto make_embedding(const Trigraph & t, const PatternGraph & h, std::vector<int> image) -> Embedding
    {
        Embedding result{ std::move(image), {} };
        for (int b = 0 ; b < h.size() ; ++b)
            for (int a = 0 ; a < b ; ++a) {
                int x = result.image[unsigned(a)], y = result.image[unsigned(b)];
                if (t.color(x, y) == EdgeColor::Gray)
                    result.resolved.push_back(GrayResolution{ Pair{ std::min(x, y), std::max(x, y) }, h.graph.adjacent(a, b) });
            }
        std::sort(result.resolved.begin(), result.resolved.end(),
                [] (const GrayResolution & p, const GrayResolution & q) { return p.pair < q.pair; });
        return result;
    }

    auto find_p4_realization(const Trigraph & t) -> std::optional<Embedding>
    {
        static const PatternGraph p4 = path_pattern(4);

        // path a - b - c - d: ab, bc, cd can be edges; ac, bd, ad can be nonedges
        for (int b = 0 ; b < t.size() ; ++b) {
            VertexMask cs = t.can_be_edge_row(b) & ~all_vertices(b + 1);
            while (cs) {
                int c = std::countr_zero(cs);
                cs &= cs - 1;

                VertexMask as = t.can_be_edge_row(b) & t.can_be_nonedge_row(c);
                VertexMask ds_base = t.can_be_edge_row(c) & t.can_be_nonedge_row(b);
                if (! ds_base)
                    continue;

                while (as) {
                    int a = std::countr_zero(as);
                    as &= as - 1;
                    VertexMask ds = ds_base & t.can_be_nonedge_row(a);
                    if (ds) {
                        int d = std::countr_zero(ds);
                        return make_embedding(t, p4, { a, b, c, d });
                    }
                }
            }
        }
        return std::nullopt;
    }

    auto find_generic_realization(const Trigraph & t, const PatternGraph & h) -> std::optional<Embedding>
    {
        if (h.size() > t.size())
            return std::nullopt;

        GenericSearch s(t, h);
        if (! s.search(0))
            return std::nullopt;
        return make_embedding(t, h, std::vector<int>(s.image.begin(), s.image.begin() + h.size()));
    }

    auto find_realization_of(const Trigraph & t, const PatternGraph & h) -> std::optional<Embedding>
    {
        if (h.size() > t.size())
            return std::nullopt;

        if (is_p4(h)) {
            auto e = find_p4_realization(t);
            if (! e)
                return e;
            // the caller's P4 may be labelled differently; map the path a,b,c,d onto it
            std::array<int, 4> path{};
            int end = 0;
            while (h.graph.degree(end) != 1)
                ++end;
            VertexMask seen = vertex_bit(end);
            path[0] = end;
            for (int i = 1 ; i < 4 ; ++i) {
                path[unsigned(i)] = std::countr_zero(h.graph.neighbours(path[unsigned(i - 1)]) & ~seen);
                seen |= vertex_bit(path[unsigned(i)]);
            }
            std::vector<int> image(4);
            for (int i = 0 ; i < 4 ; ++i)
                image[unsigned(path[unsigned(i)])] = e->image[unsigned(i)];
            return make_embedding(t, h, std::move(image));
        }

        return find_generic_realization(t, h);
    }

    auto has_realization_of(const Trigraph & t, const PatternGraph & h) -> bool
    {
        if (h.size() > t.size())
            return false;

        if (is_p4(h)) {
            for (int b = 0 ; b < t.size() ; ++b) {
                VertexMask cs = t.can_be_edge_row(b) & ~all_vertices(b + 1);
                while (cs) {
                    int c = std::countr_zero(cs);
                    cs &= cs - 1;
                    VertexMask as = t.can_be_edge_row(b) & t.can_be_nonedge_row(c);
                    VertexMask ds = t.can_be_edge_row(c) & t.can_be_nonedge_row(b);
                    if (! ds)
                        continue;
                    while (as) {
                        int a = std::countr_zero(as);
                        as &= as - 1;
                        if (ds & t.can_be_nonedge_row(a))
                            return true;
                    }
                }
            }
            return false;
        }

        GenericSearch s(t, h);
        return s.search(0);
    }

    auto contains_induced(const Realization & g, const PatternGraph & h) -> bool
    {
        int n = g.size(), k = h.size();
        if (k > n)
            return false;
        if (n > 32)
            throw SizeError("subset scan is limited to 32 vertices");

        int h_edges = h.graph.edge_count();
        std::array<int, 9> h_degrees{};
        for (int v = 0 ; v < k ; ++v)
            ++h_degrees[unsigned(h.graph.degree(v))];

        for (VertexMask s = all_vertices(k) ; s < vertex_bit(n) ; s = next_subset(s)) {
            int twice = 0;
            std::array<int, 9> degrees{};
            for_each_vertex(s, [&] (int v) {
                int d = std::popcount(g.neighbours(v) & s);
                twice += d;
                ++degrees[unsigned(d)];
            });
            if (twice != 2 * h_edges || degrees != h_degrees)
                continue;
            if (isomorphic(induced_graph(g, s), h.graph))
                return true;
        }
        return false;
    }

    auto has_realization_brute(const Trigraph & t, const PatternGraph & h) -> bool
    {
        int gray_count = t.count(EdgeColor::Gray);
        if (gray_count > brute_gray_cap)
            throw ResourceError("brute-force realization check capped at " + std::to_string(brute_gray_cap)
                    + " gray pairs, got " + std::to_string(gray_count));

        PairMask gray = t.gray_mask();
        PairMask sub = 0;
        do {
            if (contains_induced(Graph::from_edge_mask(t.size(), t.black_mask() | sub), h))
                return true;
            sub = (sub - gray) & gray;
        } while (sub);
        return false;
    }
}

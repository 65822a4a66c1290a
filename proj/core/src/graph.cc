/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/graph.hh>
#include <indsat/errors.hh>
#include <indsat/trigraph.hh>

#include <algorithm>
#include <numeric>

namespace indsat
{
    Graph::Graph(int n) :
        _size(n)
    {
        if (n < 0 || n > max_vertices)
            throw SizeError("graphs support 0 to " + std::to_string(max_vertices)
                    + " vertices, not " + std::to_string(n));
    }

    auto Graph::degree(int v) const -> int
    {
        return std::popcount(VertexMask(_rows[unsigned(v)]));
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0 ; v < _size ; ++v)
            twice += degree(v);
        return twice / 2;
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        if (u < 0 || v < 0 || u >= _size || v >= _size || u == v)
            throw ArgumentError("invalid edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
        _rows[unsigned(u)] |= vertex_bit(v);
        _rows[unsigned(v)] |= vertex_bit(u);
    }

    auto Graph::remove_edge(int u, int v) -> void
    {
        if (u < 0 || v < 0 || u >= _size || v >= _size || u == v)
            throw ArgumentError("invalid edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
        _rows[unsigned(u)] &= ~vertex_bit(v);
        _rows[unsigned(v)] &= ~vertex_bit(u);
    }

    auto Graph::edge_mask() const -> PairMask
    {
        if (_size > max_mask_vertices)
            throw SizeError("pair masks only cover up to " + std::to_string(max_mask_vertices) + " vertices");
        PairMask result = 0;
        for (int v = 1, p = 0 ; v < _size ; ++v)
            for (int u = 0 ; u < v ; ++u, ++p)
                if (adjacent(u, v))
                    result |= bit(p);
        return result;
    }

    auto Graph::from_edge_mask(int n, PairMask edges) -> Graph
    {
        Graph result(n);
        for_each_bit(edges & low_bits(num_pairs(n)), [&] (int p) {
            auto [u, v] = pair_at(p);
            result.add_edge(u, v);
        });
        return result;
    }

    auto complement(const Graph & g) -> Graph
    {
        Graph result(g.size());
        for (int v = 1 ; v < g.size() ; ++v)
            for (int u = 0 ; u < v ; ++u)
                if (! g.adjacent(u, v))
                    result.add_edge(u, v);
        return result;
    }

    auto induced_graph(const Graph & g, VertexMask s) -> Graph
    {
        auto vertices = to_vertex_list(s);
        Graph result{ static_cast<int>(vertices.size()) };
        for (unsigned j = 1 ; j < vertices.size() ; ++j)
            for (unsigned i = 0 ; i < j ; ++i)
                if (g.adjacent(vertices[i], vertices[j]))
                    result.add_edge(int(i), int(j));
        return result;
    }

    auto as_trigraph(const Graph & g) -> Trigraph
    {
        Trigraph result(g.size());
        for (int v = 1 ; v < g.size() ; ++v)
            for (int u = 0 ; u < v ; ++u)
                if (g.adjacent(u, v))
                    result.set_color(u, v, EdgeColor::Black);
        return result;
    }

    auto make_pattern(Graph g, std::string name) -> PatternGraph
    {
        if (g.size() < 2 || g.size() > 8)
            throw SizeError("patterns need 2 to 8 vertices, not " + std::to_string(g.size()));
        return PatternGraph{ std::move(g), std::move(name) };
    }

    auto path_pattern(int k) -> PatternGraph
    {
        Graph g(k);
        for (int v = 0 ; v + 1 < k ; ++v)
            g.add_edge(v, v + 1);
        return make_pattern(g, "p" + std::to_string(k));
    }

    auto complete_pattern(int k) -> PatternGraph
    {
        Graph g(k);
        for (int v = 0 ; v < k ; ++v)
            for (int u = 0 ; u < v ; ++u)
                g.add_edge(u, v);
        return make_pattern(g, "k" + std::to_string(k));
    }

    auto cycle_pattern(int k) -> PatternGraph
    {
        if (k < 3)
            throw SizeError("cycles need at least 3 vertices");
        Graph g(k);
        for (int v = 0 ; v < k ; ++v)
            g.add_edge(v, (v + 1) % k);
        return make_pattern(g, "c" + std::to_string(k));
    }

    auto complete_minus_edge_pattern(int k) -> PatternGraph
    {
        if (k < 3)
            throw SizeError("K_h minus an edge needs h >= 3");
        auto h = complete_pattern(k);
        h.graph.remove_edge(0, 1);
        h.name = "khminus:" + std::to_string(k);
        return h;
    }

    auto pattern_by_id(const std::string & id) -> PatternGraph
    {
        auto number = [&] (std::size_t from) -> int {
            if (from >= id.size() || ! std::all_of(id.begin() + long(from), id.end(), [] (char c) { return c >= '0' && c <= '9'; }))
                throw ArgumentError("unknown pattern '" + id + "'");
            return std::stoi(id.substr(from));
        };

        if (id.rfind("khminus:", 0) == 0)
            return complete_minus_edge_pattern(number(8));
        if (! id.empty() && id[0] == 'p')
            return path_pattern(number(1));
        if (! id.empty() && id[0] == 'c')
            return cycle_pattern(number(1));
        if (! id.empty() && id[0] == 'k')
            return complete_pattern(number(1));
        throw ArgumentError("unknown pattern '" + id + "'");
    }

    auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.size() != b.size() || a.edge_count() != b.edge_count())
            return false;

        std::vector<int> da, db;
        for (int v = 0 ; v < a.size() ; ++v) {
            da.push_back(a.degree(v));
            db.push_back(b.degree(v));
        }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return false;

        std::vector<int> perm(static_cast<unsigned>(a.size()));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int v = 0 ; v < a.size() && ok ; ++v)
                for (int u = 0 ; u < v && ok ; ++u)
                    ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    auto is_p4(const PatternGraph & h) -> bool
    {
        // four vertices, three edges, degrees 1,1,2,2 characterises P4
        if (h.size() != 4 || h.graph.edge_count() != 3)
            return false;
        int leaves = 0;
        for (int v = 0 ; v < 4 ; ++v)
            leaves += (h.graph.degree(v) == 1);
        return leaves == 2;
    }

    auto is_self_complementary(const PatternGraph & h) -> bool
    {
        return isomorphic(h.graph, complement(h.graph));
    }
}

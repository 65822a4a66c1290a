/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_GRAPH_HH
#define INDSAT_GUARD_INDSAT_GRAPH_HH 1

#include <indsat/bits.hh>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace indsat
{
    class Trigraph;

    /// A simple undirected graph on at most 64 vertices, stored as adjacency rows.
    class Graph
    {
        private:
            int _size = 0;
            std::array<VertexMask, max_vertices> _rows{};

        public:
            Graph() = default;
            explicit Graph(int n);

            auto size() const -> int { return _size; }

            auto adjacent(int u, int v) const -> bool { return _rows[unsigned(u)] & vertex_bit(v); }
            auto neighbours(int v) const -> VertexMask { return _rows[unsigned(v)]; }
            auto degree(int v) const -> int;
            auto edge_count() const -> int;

            auto add_edge(int u, int v) -> void;
            auto remove_edge(int u, int v) -> void;

            /// Edge set as a pair mask in colex order.
            auto edge_mask() const -> PairMask;
            static auto from_edge_mask(int n, PairMask edges) -> Graph;

            friend auto operator== (const Graph &, const Graph &) -> bool = default;
    };

    auto complement(const Graph & g) -> Graph;

    /// The graph on the vertices of s induced by g, relabelled in increasing order.
    auto induced_graph(const Graph & g, VertexMask s) -> Graph;

    /// A trigraph with no gray pairs: edges black, nonedges white.
    auto as_trigraph(const Graph & g) -> Trigraph;

    /// The small graph H whose induced copies are forbidden. 2 <= k <= 8.
    struct PatternGraph
    {
        Graph graph;
        std::string name;

        auto size() const -> int { return graph.size(); }
    };

    /// Throws SizeError unless 2 <= g.size() <= 8.
    auto make_pattern(Graph g, std::string name) -> PatternGraph;

    auto path_pattern(int k) -> PatternGraph;
    auto complete_pattern(int k) -> PatternGraph;
    auto cycle_pattern(int k) -> PatternGraph;
    auto complete_minus_edge_pattern(int k) -> PatternGraph;

    /// p<k>, c<k>, k<k>, khminus:<k>; throws ArgumentError on anything else.
    auto pattern_by_id(const std::string & id) -> PatternGraph;

    /// True if the pattern is the path on four vertices, under any labelling.
    auto is_p4(const PatternGraph & h) -> bool;

    auto isomorphic(const Graph & a, const Graph & b) -> bool;
    auto is_self_complementary(const PatternGraph & h) -> bool;
}

#endif

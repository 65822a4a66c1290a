/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_TRIGRAPH_HH
#define INDSAT_GUARD_INDSAT_TRIGRAPH_HH 1

#include <indsat/bits.hh>

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace indsat
{
    enum class EdgeColor : std::uint8_t
    {
        Black,
        White,
        Gray
    };

    auto to_char(EdgeColor c) -> char;

    /// A subset of {Black, White, Gray}, used to pick which pairs count as edges.
    class ColorSet
    {
        private:
            std::uint8_t _bits = 0;

        public:
            constexpr ColorSet() = default;

            constexpr ColorSet(std::initializer_list<EdgeColor> colors)
            {
                for (auto c : colors)
                    _bits |= std::uint8_t(1u << unsigned(c));
            }

            constexpr auto contains(EdgeColor c) const -> bool
            {
                return _bits & (1u << unsigned(c));
            }

            constexpr auto empty() const -> bool
            {
                return 0 == _bits;
            }
    };

    /**
     * A trigraph on at most 64 vertices: every unordered pair is black (edge),
     * white (nonedge) or gray (free). Stored as per-vertex black and gray
     * neighbourhood rows with white implicit. For n <= 16 the same data is
     * also available as black and gray masks over the colex pair order.
     */
    class Trigraph
    {
        private:
            int _size = 0;
            std::array<VertexMask, max_vertices> _black_rows{}, _gray_rows{};

        public:
            Trigraph() = default;

            /// Every pair gets colour fill. Throws SizeError if n is outside [0, 64].
            explicit Trigraph(int n, EdgeColor fill = EdgeColor::White);

            /// Throws ArgumentError if the masks overlap or reach past C(n,2),
            /// SizeError if n > 16.
            static auto from_masks(int n, PairMask black, PairMask gray) -> Trigraph;

            auto size() const -> int { return _size; }
            auto pair_count() const -> int { return num_pairs(_size); }

            auto color(int u, int v) const -> EdgeColor;
            auto color_at(int pair) const -> EdgeColor;

            /// Throws ArgumentError on an invalid pair.
            auto set_color(int u, int v, EdgeColor c) -> void;

            /// Masks need n <= 16 and throw SizeError otherwise.
            auto black_mask() const -> PairMask;
            auto gray_mask() const -> PairMask;
            auto white_mask() const -> PairMask;
            auto mask(EdgeColor c) const -> PairMask;

            auto count(EdgeColor c) const -> int;

            /// Neighbourhoods of v in each colour, as vertex bitmasks. v itself is never included.
            auto black_row(int v) const -> VertexMask { return _black_rows[unsigned(v)]; }
            auto gray_row(int v) const -> VertexMask { return _gray_rows[unsigned(v)]; }
            auto white_row(int v) const -> VertexMask
            {
                return all_vertices(_size) & ~vertex_bit(v) & ~(_black_rows[unsigned(v)] | _gray_rows[unsigned(v)]);
            }
            auto row(int v, ColorSet palette) const -> VertexMask;

            /// Pairs usable as an edge, or as a nonedge, in some realization.
            auto can_be_edge_row(int v) const -> VertexMask { return _black_rows[unsigned(v)] | _gray_rows[unsigned(v)]; }
            auto can_be_nonedge_row(int v) const -> VertexMask { return all_vertices(_size) & ~vertex_bit(v) & ~_black_rows[unsigned(v)]; }

            friend auto operator== (const Trigraph & a, const Trigraph & b) -> bool
            {
                if (a._size != b._size)
                    return false;
                for (int v = 0 ; v < a._size ; ++v)
                    if (a._black_rows[unsigned(v)] != b._black_rows[unsigned(v)] || a._gray_rows[unsigned(v)] != b._gray_rows[unsigned(v)])
                        return false;
                return true;
            }
    };

    /// Vertices of an induced subtrigraph, with vertex_map[i] the original vertex for new vertex i.
    struct InducedSubtrigraph
    {
        Trigraph trigraph;
        std::vector<int> vertex_map;
    };

    auto complete_gray(int n) -> Trigraph;

    /// Swaps black and white on every pair.
    auto complement(const Trigraph & t) -> Trigraph;

    /// Makes e gray; a no-op if it already is.
    auto flip(const Trigraph & t, Pair e) -> Trigraph;

    /// Order-preserving relabeling of the vertices in s. Throws ArgumentError on
    /// out-of-range or repeated vertices.
    auto induced(const Trigraph & t, std::span<const int> s) -> InducedSubtrigraph;

    /// New vertex perm[v] takes the place of old vertex v.
    auto relabel(const Trigraph & t, std::span<const int> perm) -> Trigraph;

    /// Connected components of the graph whose edges are the pairs coloured from
    /// palette. Singletons included; each component sorted, components ordered
    /// by smallest vertex.
    auto components(const Trigraph & t, ColorSet palette) -> std::vector<std::vector<int>>;

    /// Colours of the pairs between a and b, iterated over a then b. The sets must be disjoint.
    auto cut_colors(const Trigraph & t, std::span<const int> a, std::span<const int> b) -> std::vector<EdgeColor>;

    auto to_vertex_mask(int n, std::span<const int> s) -> VertexMask;
    auto to_vertex_list(VertexMask m) -> std::vector<int>;
}

#endif

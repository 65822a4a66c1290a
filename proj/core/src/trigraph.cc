/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/trigraph.hh>
#include <indsat/errors.hh>

#include <algorithm>
#include <string>

namespace indsat
{
    namespace
    {
        auto check_pair(int n, int u, int v) -> void
        {
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw ArgumentError("invalid pair {" + std::to_string(u) + ", " + std::to_string(v)
                        + "} on " + std::to_string(n) + " vertices");
        }
    }

    auto to_hex(PairMask m) -> std::string
    {
        if (0 == m)
            return "0x0";

        static const char digits[] = "0123456789abcdef";
        std::string result;
        while (m) {
            result.push_back(digits[unsigned(m & 0xf)]);
            m >>= 4;
        }
        result += "x0";
        std::reverse(result.begin(), result.end());
        return result;
    }

    auto to_char(EdgeColor c) -> char
    {
        switch (c) {
            case EdgeColor::Black: return 'B';
            case EdgeColor::White: return 'W';
            case EdgeColor::Gray:  return 'G';
        }
        return '?';
    }

    Trigraph::Trigraph(int n, EdgeColor fill) :
        _size(n)
    {
        if (n < 0 || n > max_vertices)
            throw SizeError("trigraphs support 0 to " + std::to_string(max_vertices)
                    + " vertices, not " + std::to_string(n));

        if (fill != EdgeColor::White)
            for (int v = 0 ; v < n ; ++v)
                (fill == EdgeColor::Black ? _black_rows : _gray_rows)[unsigned(v)] = all_vertices(n) & ~vertex_bit(v);
    }

    auto Trigraph::from_masks(int n, PairMask black, PairMask gray) -> Trigraph
    {
        if (n > max_mask_vertices)
            throw SizeError("pair masks only cover up to " + std::to_string(max_mask_vertices) + " vertices");

        Trigraph result(n);
        if (black & gray)
            throw ArgumentError("black and gray masks overlap");
        if ((black | gray) & ~low_bits(num_pairs(n)))
            throw ArgumentError("mask has bits beyond C(n,2)");

        for (int v = 1, p = 0 ; v < n ; ++v)
            for (int u = 0 ; u < v ; ++u, ++p) {
                if (black & bit(p)) {
                    result._black_rows[unsigned(u)] |= vertex_bit(v);
                    result._black_rows[unsigned(v)] |= vertex_bit(u);
                }
                else if (gray & bit(p)) {
                    result._gray_rows[unsigned(u)] |= vertex_bit(v);
                    result._gray_rows[unsigned(v)] |= vertex_bit(u);
                }
            }
        return result;
    }

    auto Trigraph::color(int u, int v) const -> EdgeColor
    {
        check_pair(_size, u, v);
        if (_black_rows[unsigned(u)] & vertex_bit(v))
            return EdgeColor::Black;
        if (_gray_rows[unsigned(u)] & vertex_bit(v))
            return EdgeColor::Gray;
        return EdgeColor::White;
    }

    auto Trigraph::color_at(int p) const -> EdgeColor
    {
        auto [u, v] = pair_at(p);
        return color(u, v);
    }

    auto Trigraph::set_color(int u, int v, EdgeColor c) -> void
    {
        check_pair(_size, u, v);
        _black_rows[unsigned(u)] &= ~vertex_bit(v);
        _black_rows[unsigned(v)] &= ~vertex_bit(u);
        _gray_rows[unsigned(u)] &= ~vertex_bit(v);
        _gray_rows[unsigned(v)] &= ~vertex_bit(u);

        if (c == EdgeColor::Black) {
            _black_rows[unsigned(u)] |= vertex_bit(v);
            _black_rows[unsigned(v)] |= vertex_bit(u);
        }
        else if (c == EdgeColor::Gray) {
            _gray_rows[unsigned(u)] |= vertex_bit(v);
            _gray_rows[unsigned(v)] |= vertex_bit(u);
        }
    }

    auto Trigraph::mask(EdgeColor c) const -> PairMask
    {
        if (_size > max_mask_vertices)
            throw SizeError("pair masks only cover up to " + std::to_string(max_mask_vertices) + " vertices");

        PairMask result = 0;
        for (int v = 1, p = 0 ; v < _size ; ++v) {
            VertexMask r = c == EdgeColor::Black ? black_row(v) : c == EdgeColor::Gray ? gray_row(v) : white_row(v);
            for (int u = 0 ; u < v ; ++u, ++p)
                if (r & vertex_bit(u))
                    result |= bit(p);
        }
        return result;
    }

    auto Trigraph::black_mask() const -> PairMask
    {
        return mask(EdgeColor::Black);
    }

    auto Trigraph::gray_mask() const -> PairMask
    {
        return mask(EdgeColor::Gray);
    }

    auto Trigraph::white_mask() const -> PairMask
    {
        return mask(EdgeColor::White);
    }

    auto Trigraph::count(EdgeColor c) const -> int
    {
        int twice = 0;
        for (int v = 0 ; v < _size ; ++v)
            twice += std::popcount(c == EdgeColor::Black ? black_row(v) : c == EdgeColor::Gray ? gray_row(v) : white_row(v));
        return twice / 2;
    }

    auto Trigraph::row(int v, ColorSet palette) const -> VertexMask
    {
        VertexMask result = 0;
        if (palette.contains(EdgeColor::Black))
            result |= black_row(v);
        if (palette.contains(EdgeColor::Gray))
            result |= gray_row(v);
        if (palette.contains(EdgeColor::White))
            result |= white_row(v);
        return result;
    }

    auto complete_gray(int n) -> Trigraph
    {
        return Trigraph(n, EdgeColor::Gray);
    }

    auto complement(const Trigraph & t) -> Trigraph
    {
        Trigraph result(t.size());
        for (int v = 1 ; v < t.size() ; ++v)
            for (int u = 0 ; u < v ; ++u)
                switch (t.color(u, v)) {
                    case EdgeColor::Black: break;
                    case EdgeColor::White: result.set_color(u, v, EdgeColor::Black); break;
                    case EdgeColor::Gray:  result.set_color(u, v, EdgeColor::Gray); break;
                }
        return result;
    }

    auto flip(const Trigraph & t, Pair e) -> Trigraph
    {
        Trigraph result = t;
        result.set_color(e.u, e.v, EdgeColor::Gray);
        return result;
    }

    auto to_vertex_mask(int n, std::span<const int> s) -> VertexMask
    {
        VertexMask result = 0;
        for (int v : s) {
            if (v < 0 || v >= n)
                throw ArgumentError("vertex " + std::to_string(v) + " out of range");
            if (result & vertex_bit(v))
                throw ArgumentError("vertex " + std::to_string(v) + " repeated");
            result |= vertex_bit(v);
        }
        return result;
    }

    auto to_vertex_list(VertexMask m) -> std::vector<int>
    {
        std::vector<int> result;
        for_each_vertex(m, [&] (int v) { result.push_back(v); });
        return result;
    }

    auto induced(const Trigraph & t, std::span<const int> s) -> InducedSubtrigraph
    {
        auto vertices = to_vertex_list(to_vertex_mask(t.size(), s));
        int k = int(vertices.size());

        Trigraph result(k);
        for (int j = 1 ; j < k ; ++j)
            for (int i = 0 ; i < j ; ++i)
                result.set_color(i, j, t.color(vertices[unsigned(i)], vertices[unsigned(j)]));

        return InducedSubtrigraph{ std::move(result), std::move(vertices) };
    }

    auto relabel(const Trigraph & t, std::span<const int> perm) -> Trigraph
    {
        if (int(perm.size()) != t.size() || to_vertex_mask(t.size(), perm) != all_vertices(t.size()))
            throw ArgumentError("relabeling is not a permutation of the vertices");

        Trigraph result(t.size());
        for (int v = 1 ; v < t.size() ; ++v)
            for (int u = 0 ; u < v ; ++u)
                result.set_color(perm[unsigned(u)], perm[unsigned(v)], t.color(u, v));
        return result;
    }

    auto components(const Trigraph & t, ColorSet palette) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        VertexMask unseen = all_vertices(t.size());
        while (unseen) {
            int start = std::countr_zero(unseen);
            VertexMask component = vertex_bit(start), frontier = component;
            while (frontier) {
                VertexMask next = 0;
                for_each_vertex(frontier, [&] (int v) { next |= t.row(v, palette); });
                frontier = next & ~component;
                component |= next;
            }
            unseen &= ~component;
            result.push_back(to_vertex_list(component));
        }
        return result;
    }

    auto cut_colors(const Trigraph & t, std::span<const int> a, std::span<const int> b) -> std::vector<EdgeColor>
    {
        if (to_vertex_mask(t.size(), a) & to_vertex_mask(t.size(), b))
            throw ArgumentError("cut sides overlap");

        std::vector<EdgeColor> result;
        for (int u : a)
            for (int v : b)
                result.push_back(t.color(u, v));
        return result;
    }
}

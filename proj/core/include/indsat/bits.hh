/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_INDSAT_BITS_HH
#define INDSAT_GUARD_INDSAT_BITS_HH 1

#include <bit>
#include <cstdint>
#include <string>
#include <utility>

namespace indsat
{
    /// One bit per unordered vertex pair, colex order. 120 pairs at n = 16.
    using PairMask = unsigned __int128;

    /// One bit per vertex.
    using VertexMask = std::uint64_t;

    constexpr int max_vertices = 64;

    /// Largest n whose C(n,2) pairs fit in a PairMask.
    constexpr int max_mask_vertices = 16;

    constexpr auto num_pairs(int n) -> int
    {
        return n * (n - 1) / 2;
    }

    /// Colex index of the pair {u, v}: {0,1}=0, {0,2}=1, {1,2}=2, {0,3}=3, ...
    constexpr auto pair_index(int u, int v) -> int
    {
        if (u > v)
            std::swap(u, v);
        return v * (v - 1) / 2 + u;
    }

    struct Pair
    {
        int u = 0, v = 0;    // u < v

        friend constexpr auto operator== (const Pair &, const Pair &) -> bool = default;
        friend constexpr auto operator<=> (const Pair & a, const Pair & b)
        {
            return pair_index(a.u, a.v) <=> pair_index(b.u, b.v);
        }
    };

    constexpr auto pair_at(int index) -> Pair
    {
        int v = 1;
        while ((v + 1) * v / 2 <= index)
            ++v;
        return Pair{ index - v * (v - 1) / 2, v };
    }

    constexpr auto bit(int i) -> PairMask
    {
        return PairMask{ 1 } << i;
    }

    constexpr auto low_bits(int count) -> PairMask
    {
        return count >= 128 ? ~PairMask{ 0 } : (PairMask{ 1 } << count) - 1;
    }

    inline auto popcount(PairMask m) -> int
    {
        return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
    }

    inline auto lowest_bit(PairMask m) -> int
    {
        auto lo = static_cast<std::uint64_t>(m);
        if (lo)
            return std::countr_zero(lo);
        return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
    }

    constexpr auto vertex_bit(int v) -> VertexMask
    {
        return VertexMask{ 1 } << v;
    }

    constexpr auto all_vertices(int n) -> VertexMask
    {
        return n >= 64 ? ~VertexMask{ 0 } : (VertexMask{ 1 } << n) - 1;
    }

    /// Hex rendering of a pair mask, used in JSON output and keys.
    auto to_hex(PairMask m) -> std::string;

    /// Calls f(i) for every set bit i of m, lowest first.
    template <typename F_>
    auto for_each_bit(PairMask m, F_ && f) -> void
    {
        while (m) {
            int i = lowest_bit(m);
            f(i);
            m &= m - 1;
        }
    }

    template <typename F_>
    auto for_each_vertex(VertexMask m, F_ && f) -> void
    {
        while (m) {
            int i = std::countr_zero(m);
            f(i);
            m &= m - 1;
        }
    }
}

#endif

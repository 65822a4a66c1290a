/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef INDSAT_GUARD_TESTS_TEST_SUPPORT_HH
#define INDSAT_GUARD_TESTS_TEST_SUPPORT_HH 1

#include <indsat/trigraph.hh>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace indsat::test
{
    /// Calls f on each of the 3^C(n,2) trigraphs on n vertices, by base-3 code.
    template <typename F_>
    auto for_each_trigraph(int n, F_ && f) -> void
    {
        int pairs = num_pairs(n);
        std::uint64_t total = 1;
        for (int p = 0 ; p < pairs ; ++p)
            total *= 3;

        for (std::uint64_t code = 0 ; code < total ; ++code) {
            Trigraph t(n);
            std::uint64_t c = code;
            for (int p = 0 ; p < pairs ; ++p, c /= 3) {
                auto [u, v] = pair_at(p);
                t.set_color(u, v, c % 3 == 0 ? EdgeColor::White : c % 3 == 1 ? EdgeColor::Black : EdgeColor::Gray);
            }
            f(t);
        }
    }

    /// Uniform gray count in 0..max_gray, gray pairs uniform, the rest black or white by coin flip.
    inline auto random_trigraph(std::mt19937_64 & rng, int n, int max_gray) -> Trigraph
    {
        Trigraph t(n);
        int pairs = num_pairs(n);
        std::vector<int> order(static_cast<unsigned>(pairs));
        for (int p = 0 ; p < pairs ; ++p)
            order[unsigned(p)] = p;
        std::shuffle(order.begin(), order.end(), rng);

        int gray = std::uniform_int_distribution<int>(0, std::min(max_gray, pairs))(rng);
        std::bernoulli_distribution coin;
        for (int i = 0 ; i < pairs ; ++i) {
            auto [u, v] = pair_at(order[unsigned(i)]);
            t.set_color(u, v, i < gray ? EdgeColor::Gray : coin(rng) ? EdgeColor::Black : EdgeColor::White);
        }
        return t;
    }

    /// Deliberately plain: some ordered a-b-c-d whose path pairs can be edges
    /// and whose other three pairs can be nonedges. Gray pairs resolve
    /// independently, so this is exactly "some realization has an induced P4".
    inline auto oracle_has_p4(const Trigraph & t) -> bool
    {
        int n = t.size();
        auto edge = [&] (int x, int y) { return t.color(x, y) != EdgeColor::White; };
        auto nonedge = [&] (int x, int y) { return t.color(x, y) != EdgeColor::Black; };
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b)
                for (int c = 0 ; c < n ; ++c)
                    for (int d = 0 ; d < n ; ++d) {
                        if (a == b || a == c || a == d || b == c || b == d || c == d)
                            continue;
                        if (edge(a, b) && edge(b, c) && edge(c, d) && nonedge(a, c) && nonedge(b, d) && nonedge(a, d))
                            return true;
                    }
        return false;
    }

    /// indsat(P4) straight from the definition, using oracle_has_p4.
    inline auto oracle_indsat_p4(const Trigraph & t) -> bool
    {
        if (oracle_has_p4(t))
            return false;
        for (int v = 1 ; v < t.size() ; ++v)
            for (int u = 0 ; u < v ; ++u)
                if (t.color(u, v) != EdgeColor::Gray) {
                    auto f = t;
                    f.set_color(u, v, EdgeColor::Gray);
                    if (! oracle_has_p4(f))
                        return false;
                }
        return true;
    }
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/constructions.hh>
#include <indsat/errors.hh>
#include <indsat/saturation.hh>
#include <indsat/search.hh>

#include "test_support.hh"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace indsat;

namespace
{
    /// Burnside: orbits of S_n on 3-colourings of pairs = mean over S_n of 3^(pair cycles).
    auto burnside_trigraph_count(int n) -> std::uint64_t
    {
        std::vector<int> perm(static_cast<unsigned>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t total = 0, perms = 0;
        do {
            std::set<int> seen;
            std::uint64_t term = 1;
            for (int p = 0 ; p < num_pairs(n) ; ++p) {
                if (seen.contains(p))
                    continue;
                term *= 3;
                for (int q = p ; ! seen.contains(q) ; ) {
                    seen.insert(q);
                    auto [u, v] = pair_at(q);
                    q = pair_index(std::min(perm[unsigned(u)], perm[unsigned(v)]), std::max(perm[unsigned(u)], perm[unsigned(v)]));
                }
            }
            total += term;
            ++perms;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return total / perms;
    }
}

TEST(CanonicalForm, InvariantUnderRelabelling)
{
    std::mt19937_64 rng(3);
    for (int i = 0 ; i < 300 ; ++i) {
        int n = 2 + i % 7;
        auto t = test::random_trigraph(rng, n, num_pairs(n));
        std::vector<int> perm(static_cast<unsigned>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ASSERT_EQ(canonical_form(t), canonical_form(relabel(t, perm)));
        ASSERT_EQ(canonical_form(canonical_form(t).trigraph()), canonical_form(t));
    }
    EXPECT_EQ(canonical_form(complete_gray(4)).gray_count(), 6);
    EXPECT_THROW(canonical_form(Trigraph(9)), ResourceError);
}

TEST(CanonicalForm, CountMatchesBurnside)
{
    EXPECT_EQ(burnside_trigraph_count(3), 10u);
    EXPECT_EQ(burnside_trigraph_count(4), 66u);
    for (int n : { 3, 4, 5 }) {
        std::set<CanonicalForm> forms;
        test::for_each_trigraph(n, [&] (const Trigraph & t) { forms.insert(canonical_form(t)); });
        EXPECT_EQ(forms.size(), burnside_trigraph_count(n)) << n;
    }
}

TEST(IsatMin, PFourSmall)
{
    auto p4 = path_pattern(4);
    for (int n = 4 ; n <= 7 ; ++n) {
        auto r = isat_min(n, p4);
        ASSERT_TRUE(r.min_gray);
        EXPECT_EQ(*r.min_gray, (n + 3) / 3) << n;
        EXPECT_FALSE(r.capped);
        EXPECT_FALSE(r.witnesses.empty());
        for (auto & w : r.witnesses) {
            EXPECT_EQ(w.gray_count(), *r.min_gray);
            EXPECT_TRUE(is_indsat(w.trigraph(), p4));
        }
    }
    EXPECT_EQ(*isat_min(2, p4).min_gray, 1);
    EXPECT_EQ(*isat_min(3, p4).min_gray, 3);
}

TEST(IsatMin, AgreesWithNaiveSweep)
{
    for (auto & h : { path_pattern(4), complete_pattern(3), path_pattern(3), cycle_pattern(4) })
        for (int n = 3 ; n <= 5 ; ++n) {
            auto fast = isat_min(n, h), naive = isat_min_naive(n, h);
            ASSERT_EQ(fast.min_gray, naive.min_gray) << h.name << " " << n;
            ASSERT_EQ(fast.witnesses, naive.witnesses) << h.name << " " << n;
        }
}

TEST(IsatMin, StrategiesAndWorkersAgree)
{
    auto p4 = path_pattern(4);
    auto reference = isat_min(6, p4);
    for (auto dedup : { DedupStrategy::Orderly, DedupStrategy::SeenSet })
        for (bool complement : { true, false })
            for (int workers : { 1, 3 }) {
                SearchOptions o;
                o.dedup = dedup;
                o.complement_symmetry = complement;
                o.workers = workers;
                auto r = isat_min(6, p4, o);
                ASSERT_EQ(r.min_gray, reference.min_gray);
                ASSERT_EQ(r.witnesses, reference.witnesses);
            }

    SearchOptions tiny;
    tiny.dedup = DedupStrategy::SeenSet;
    tiny.seen_cap = 4;
    EXPECT_EQ(isat_min(5, p4, tiny).witnesses, isat_min(5, p4).witnesses);
}

TEST(IsatMin, OtherPatterns)
{
    for (int n : { 3, 4, 5 }) {
        EXPECT_EQ(*isat_min(n, complete_pattern(3)).min_gray, n - 1) << n;
        EXPECT_EQ(*isat_min(n, path_pattern(3)).min_gray, 0) << n;
    }
    EXPECT_EQ(*isat_min(4, complete_minus_edge_pattern(4)).min_gray, 0);
}

TEST(IsatMin, Caps)
{
    SearchOptions o;
    o.k_max = 1;
    auto r = isat_min(5, path_pattern(4), o);
    EXPECT_FALSE(r.min_gray);

    SearchOptions c;
    c.candidate_cap = 5;
    auto capped = isat_min(6, path_pattern(4), c);
    EXPECT_TRUE(capped.capped);
    EXPECT_FALSE(capped.min_gray);

    EXPECT_THROW(isat_min(8, path_pattern(4)), ArgumentError);
    EXPECT_THROW(isat_min_naive(7, path_pattern(4)), ArgumentError);
}

TEST(Enumerate, Examples)
{
    auto p4 = path_pattern(4);
    EXPECT_TRUE(enumerate_indsat(4, p4, 0).empty());

    auto two = enumerate_indsat(4, p4, 2);
    EXPECT_NE(std::find(two.begin(), two.end(), canonical_form(construct_tn(4).trigraph)), two.end());

    auto three = enumerate_indsat(3, p4, 3);
    ASSERT_EQ(three.size(), 1u);
    EXPECT_EQ(three.front(), canonical_form(complete_gray(3)));
    for (int k = 0 ; k < 3 ; ++k)
        EXPECT_TRUE(enumerate_indsat(3, p4, k).empty());
}

TEST(Enumerate, MatchesBruteForceClassesOnFive)
{
    auto p4 = path_pattern(4);
    std::map<int, std::set<CanonicalForm>> expected;
    test::for_each_trigraph(5, [&] (const Trigraph & t) {
        if (test::oracle_indsat_p4(t))
            expected[t.count(EdgeColor::Gray)].insert(canonical_form(t));
    });
    for (int k = 0 ; k <= 10 ; ++k) {
        auto got = enumerate_indsat(5, p4, k);
        ASSERT_EQ(std::set<CanonicalForm>(got.begin(), got.end()), expected[k]) << k;
    }
}

TEST(SeenCap, Environment)
{
    ::setenv("INDSAT_SEEN_CAP", "1234", 1);
    EXPECT_EQ(seen_cap_from_environment(7), 1234u);
    ::setenv("INDSAT_SEEN_CAP", "bogus", 1);
    EXPECT_EQ(seen_cap_from_environment(7), 7u);
    ::unsetenv("INDSAT_SEEN_CAP");
    EXPECT_EQ(seen_cap_from_environment(7), 7u);
}

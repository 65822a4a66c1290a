/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/constructions.hh>
#include <indsat/dnf.hh>
#include <indsat/errors.hh>
#include <indsat/io.hh>
#include <indsat/saturation.hh>

#include "test_support.hh"

#include <gtest/gtest.h>

#include <sstream>

using namespace indsat;

TEST(Encode, Counts)
{
    auto f = encode_pattern(4, path_pattern(4));
    EXPECT_EQ(f.variable_count(), 6);
    EXPECT_EQ(f.clauses().size(), 12u);
    for (auto & c : f.clauses()) {
        EXPECT_EQ(popcount(c.positive), 3);
        EXPECT_EQ(popcount(c.negative), 3);
    }

    auto k3 = encode_pattern(3, complete_pattern(3));
    EXPECT_EQ(k3.variable_count(), 3);
    ASSERT_EQ(k3.clauses().size(), 1u);
    EXPECT_EQ(k3.clauses()[0].negative, 0);
    EXPECT_EQ(popcount(k3.clauses()[0].positive), 3);

    // labelled copies of H in K_n: C(n,k) * k! / |Aut(H)|
    EXPECT_EQ(encode_pattern(5, path_pattern(4)).clauses().size(), 60u);
    EXPECT_EQ(encode_pattern(6, cycle_pattern(4)).clauses().size(), 15u * 3u);
    EXPECT_EQ(encode_pattern(5, complete_minus_edge_pattern(4)).clauses().size(), 5u * 6u);

    EXPECT_THROW(encode_pattern(3, path_pattern(4)), ArgumentError);
    EXPECT_THROW(encode_pattern(9, path_pattern(4)), ArgumentError);
}

TEST(Encode, ClauseSatisfiedIffInducedCopy)
{
    auto h = path_pattern(4);
    auto f = encode_pattern(5, h);
    for (PairMask m = 0 ; m < (PairMask{ 1 } << 10) ; ++m) {
        auto g = Graph::from_edge_mask(5, m);
        bool satisfied = false;
        for (auto & c : f.clauses())
            satisfied = satisfied || ((c.positive & ~m) == 0 && (c.negative & m) == 0);
        ASSERT_EQ(satisfied, contains_induced(g, h));
    }
}

TEST(Assignment, Bijection)
{
    for (int n = 1 ; n <= 5 ; ++n)
        test::for_each_trigraph(n, [&] (const Trigraph & t) {
            ASSERT_EQ(trigraph_of(n, assignment_of(t)), t);
        });
    EXPECT_EQ(assignment_of(complete_gray(4)).unassigned_count(), 6);
    EXPECT_EQ(assignment_of(construct_tn(4).trigraph).unassigned_count(), 2);
    EXPECT_THROW(trigraph_of(5, PartialAssignment(6)), ArgumentError);
}

TEST(Saturated, Examples)
{
    auto p4 = path_pattern(4);
    for (int n = 4 ; n <= 8 ; ++n)
        EXPECT_TRUE(is_saturated(encode_pattern(n, p4), assignment_of(construct_tn(n).trigraph))) << n;
    EXPECT_FALSE(is_saturated(encode_pattern(4, p4), PartialAssignment(6)));
    EXPECT_THROW(is_saturated(encode_pattern(4, p4), PartialAssignment(5)), ArgumentError);
}

TEST(Saturated, CorrespondenceOnAllOfFour)
{
    auto p4 = path_pattern(4);
    auto f = encode_pattern(4, p4);
    int saturated = 0;
    test::for_each_trigraph(4, [&] (const Trigraph & t) {
        auto alpha = assignment_of(t);
        bool local = is_saturated(f, alpha), enumerated = is_saturated(f, alpha, CompletionCheck::Enumerate);
        ASSERT_EQ(local, is_indsat(trigraph_of(4, alpha), p4));
        ASSERT_EQ(local, enumerated);
        ASSERT_EQ(has_satisfying_completion(f, alpha), has_satisfying_completion_enumerated(f, alpha));
        saturated += local;
    });
    EXPECT_GT(saturated, 0);
}

TEST(Saturated, EnumerationCap)
{
    DnfFormula f(25);
    f.add_clause({ Literal{ 0, true } });
    EXPECT_THROW(has_satisfying_completion_enumerated(f, PartialAssignment(25)), ResourceError);
    EXPECT_THROW(is_saturated(f, PartialAssignment(25), CompletionCheck::Enumerate), ResourceError);
    EXPECT_NO_THROW(is_saturated(f, PartialAssignment(25)));
}

TEST(MinUnassigned, Examples)
{
    EXPECT_EQ(min_unassigned(encode_pattern(4, path_pattern(4)), 6), 2);
    EXPECT_EQ(min_unassigned(encode_pattern(5, path_pattern(4)), 10), 2);
    EXPECT_EQ(min_unassigned(encode_pattern(3, complete_pattern(3)), 3), 2);

    DnfFormula single(1);
    single.add_clause({ Literal{ 0, true } });
    EXPECT_EQ(min_unassigned(single, 1), 0);

    EXPECT_FALSE(min_unassigned(encode_pattern(5, path_pattern(4)), 1));
    EXPECT_THROW(min_unassigned(DnfFormula(22), 1), ResourceError);
}

TEST(Dnf, Validation)
{
    DnfFormula f(3);
    EXPECT_THROW(f.add_clause({}), ArgumentError);
    EXPECT_THROW(f.add_clause({ Literal{ 3, true } }), ArgumentError);
    EXPECT_THROW(f.add_clause({ Literal{ 1, true }, Literal{ 1, false } }), ArgumentError);
    EXPECT_THROW(DnfFormula(129), SizeError);
}

TEST(DnfIo, RoundTrip)
{
    auto f = encode_pattern(5, path_pattern(4));
    std::stringstream s;
    write_dnf(s, f);
    auto g = read_dnf(s);
    EXPECT_EQ(g.variable_count(), f.variable_count());
    EXPECT_EQ(g.clauses(), f.clauses());

    std::istringstream text("dnf 3 2\n1 -2\n# comment\n-3\n");
    auto h = read_dnf(text);
    ASSERT_EQ(h.clauses().size(), 2u);
    EXPECT_EQ(h.clauses()[0].positive, bit(0));
    EXPECT_EQ(h.clauses()[0].negative, bit(1));

    for (std::string bad : { "dnf 3 1\n4\n", "dnf 3 2\n1\n", "dnf 3 1\n1 x\n", "dnf 3 1\n0\n", "cnf 3 1\n1\n", "dnf 3 1\n1 -1\n" }) {
        std::istringstream in(bad);
        EXPECT_THROW(read_dnf(in), ParseError) << bad;
    }
}

TEST(AssignmentIo, RoundTrip)
{
    auto alpha = assignment_of(construct_tn(5).trigraph);
    std::stringstream s;
    write_assignment(s, alpha);
    auto beta = read_assignment(s);
    ASSERT_EQ(beta.size(), alpha.size());
    for (int v = 0 ; v < alpha.size() ; ++v)
        EXPECT_EQ(beta[v], alpha[v]);

    std::istringstream spaced("1 0\n-");
    EXPECT_EQ(read_assignment(spaced).size(), 3);
    std::istringstream bad("10x");
    EXPECT_THROW(read_assignment(bad), ParseError);
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/constructions.hh>
#include <indsat/facts.hh>

#include <gtest/gtest.h>

using namespace indsat;

TEST(Facts, NoViolationsUpToFive)
{
    for (int n = 2 ; n <= 5 ; ++n) {
        auto report = run_p4_fact_suite(n);
        EXPECT_GT(report.trigraphs, 0u) << n;
        EXPECT_TRUE(report.ok()) << n << ": " << (report.ok() ? "" : report.tally.violations.front().fact);
        EXPECT_GT(report.tally.checks["complement_closure"], 0u);
        EXPECT_EQ(report.per_gray_count[0], 0u);
    }
}

TEST(Facts, ConstructionsPass)
{
    FactTally tally;
    for (int n = 4 ; n <= 8 ; ++n)
        check_p4_facts(construct_tn(n).trigraph, tally);
    check_p4_facts(construct_alternative(6).trigraph, tally);
    EXPECT_TRUE(tally.violations.empty());
    EXPECT_GT(tally.checks["star_partition"], 0u);
}

TEST(Facts, DetectsViolations)
{
    // a gray path on four vertices is not indsat, and its gray component is neither star nor triangle
    Trigraph path(4);
    path.set_color(0, 1, EdgeColor::Gray);
    path.set_color(1, 2, EdgeColor::Gray);
    path.set_color(2, 3, EdgeColor::Gray);
    FactTally tally;
    check_p4_facts(path, tally);
    bool shape = false;
    for (auto & v : tally.violations)
        shape = shape || v.fact == "gray_components_shape";
    EXPECT_TRUE(shape);

    FactTally white;
    check_p4_facts(Trigraph(4), white);
    bool no_gray = false;
    for (auto & v : white.violations)
        no_gray = no_gray || v.fact == "gray_edge_exists";
    EXPECT_TRUE(no_gray);
}

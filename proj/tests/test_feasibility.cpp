#include "mixedcolor/bounds.hpp"
#include "mixedcolor/feasibility.hpp"
#include "mixedcolor/solvers/preorder_ilp.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace mixedcolor;

namespace {

// Two cliques joined by a complete bundle of arcs, a third clique hanging off the first by edges,
// and a single vertex joined to the third.
MixedGraph four_type_graph()
{
    std::vector<Edge> edges{{0, 1}, {2, 3}, {4, 5}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 6}, {5, 6}};
    std::vector<Arc> arcs{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    return MixedGraph::create(7, edges, arcs);
}

} // namespace

TEST(Feasibility, SingleVariableEquality)
{
    FeasibilityProgram p;
    int v = p.add_variable("v", 1, 3);
    p.add_constraint({{v, 1}}, Relation::equal, 2);
    auto a = solve_feasibility(p);
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(*a, (Assignment{2}));
}

TEST(Feasibility, InfeasibleLowerBound)
{
    FeasibilityProgram p;
    int v = p.add_variable("v", 1, 1);
    p.add_constraint({{v, -1}}, Relation::less_equal, -2);
    EXPECT_FALSE(solve_feasibility(p).has_value());
    EXPECT_FALSE(propagate_bounds(p).has_value());
}

TEST(Propagation, DetectsSumOverflow)
{
    FeasibilityProgram p;
    int a = p.add_variable("a", 2, 5);
    int b = p.add_variable("b", 2, 5);
    p.add_constraint({{a, 1}, {b, 1}}, Relation::less_equal, 3);
    EXPECT_FALSE(propagate_bounds(p).has_value());
}

TEST(Propagation, TightensDifference)
{
    FeasibilityProgram p;
    int a = p.add_variable("a", 1, 9);
    int b = p.add_variable("b", 1, 9);
    p.add_constraint({{a, 1}, {b, -1}}, Relation::less_equal, -1);
    auto q = propagate_bounds(p);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(q->variables()[a].lower, 1);
    EXPECT_EQ(q->variables()[a].upper, 8);
    EXPECT_EQ(q->variables()[b].lower, 2);
    EXPECT_EQ(q->variables()[b].upper, 9);
}

TEST(Propagation, NoConstraintsUnchanged)
{
    FeasibilityProgram p;
    p.add_variable("a", -3, 4);
    p.add_variable("b", 0, 0);
    auto q = propagate_bounds(p);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, p);
}

TEST(Feasibility, AgreesWithEnumerationOnRandomPrograms)
{
    mixedcolor::testing::Rng rng(41);
    int feasible = 0;
    for (int i = 0; i < 500; ++i) {
        auto p = mixedcolor::testing::random_program(rng, 5, 5);
        auto expected = enumerate_feasibility(p);
        auto got = solve_feasibility(p);
        ASSERT_EQ(got.has_value(), expected.has_value()) << i;
        if (got) {
            EXPECT_TRUE(p.satisfied_by(*got));
            ++feasible;
        }
    }
    // the generator should produce both outcomes in quantity
    EXPECT_GT(feasible, 50);
    EXPECT_LT(feasible, 450);
}

TEST(Propagation, NeverRemovesSolutions)
{
    mixedcolor::testing::Rng rng(42);
    for (int i = 0; i < 300; ++i) {
        auto p = mixedcolor::testing::random_program(rng, 3, 4);
        auto q = propagate_bounds(p);
        // every satisfying point of p must survive the tightened domains
        std::vector<std::int64_t> a;
        for (const auto& v : p.variables())
            a.push_back(v.lower);
        while (true) {
            if (p.satisfied_by(a)) {
                ASSERT_TRUE(q.has_value());
                EXPECT_TRUE(q->satisfied_by(a));
            }
            int j = static_cast<int>(a.size()) - 1;
            while (j >= 0 && a[j] == p.variables()[j].upper) {
                a[j] = p.variables()[j].lower;
                --j;
            }
            if (j < 0)
                break;
            ++a[j];
        }
    }
}

TEST(Feasibility, BudgetExceeded)
{
    FeasibilityProgram p;
    std::vector<Term> sum;
    for (int i = 0; i < 12; ++i)
        sum.push_back({p.add_variable("x" + std::to_string(i), 0, 1), 2});
    // parity makes the program infeasible but invisible to bounds reasoning
    p.add_constraint(sum, Relation::equal, 11);
    EXPECT_THROW(solve_feasibility(p, 10), BudgetExceeded);
    EXPECT_FALSE(solve_feasibility(p).has_value());
}

TEST(Feasibility, DumpListsVariablesAndRows)
{
    FeasibilityProgram p;
    int a = p.add_variable("a", 0, 2);
    p.add_constraint({{a, 1}}, Relation::less_equal, 1);
    std::ostringstream out;
    dump_program(out, p);
    EXPECT_NE(out.str().find("a"), std::string::npos);
    EXPECT_NE(out.str().find("<="), std::string::npos);
}

TEST(PreorderProgram, FourTypeExample)
{
    auto g = four_type_graph();
    auto ts = type_structure(g);
    ASSERT_EQ(ts.count, 4);
    EXPECT_EQ(ts.arc_to[0], 1U << 1);
    EXPECT_EQ(ts.arc_to[1] | ts.arc_to[2] | ts.arc_to[3], 0U);

    TypeEndpointPreorder pre;
    pre.endpoint_count = 6;
    pre.p_minus = {1, 4, 2, 3};
    pre.p_plus = {4, 6, 5, 6};
    ASSERT_TRUE(pre.proper(ts));

    for (auto form : {ProgramForm::reduced, ProgramForm::full}) {
        auto pp = build_preorder_program(ts, pre, 6, form);
        auto a = solve_feasibility(pp.program);
        ASSERT_TRUE(a.has_value());
        auto c = reconstruct_coloring(g, ts, pp, *a);
        EXPECT_TRUE(check_proper(g, c).proper);
        EXPECT_LE(c.color_count(), 6);
    }

    TypeEndpointPreorder bad = pre;
    bad.p_minus[1] = 3;
    EXPECT_FALSE(bad.proper(ts));
}

TEST(PreorderProgram, FourTypeChromaticNumber)
{
    auto g = four_type_graph();
    auto ts = type_structure(g);
    auto feasible_at = [&](int k) {
        for (const auto& pre : enumerate_preorders(ts)) {
            auto pp = build_preorder_program(ts, pre, k);
            if (auto a = solve_feasibility(pp.program)) {
                EXPECT_TRUE(check_proper(g, reconstruct_coloring(g, ts, pp, *a)).proper);
                return true;
            }
        }
        return false;
    };
    EXPECT_TRUE(feasible_at(4));
    EXPECT_FALSE(feasible_at(3));
}

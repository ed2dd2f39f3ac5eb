#include <gtest/gtest.h>

#include <random>

#include "rdpforge/decompose.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/verifier.hpp"
#include "rdpforge/wreath.hpp"
#include "support.hpp"

using namespace rdpforge;
using namespace rdpforge::testing;

TEST(WreathMul, Examples) {
    const Descriptor w = D("wr(Z,Z)");
    EXPECT_EQ(wreath_mul(w, E(w, "(1;{0:2})"), E(w, "(0;{1:3})")), E(w, "(1;{0:5})"));
    const Elem x = E(w, "(1;{0:2,4:-1})");
    EXPECT_EQ(wreath_mul(w, x, identity(w)), x);
    EXPECT_TRUE(is_identity(w, wreath_mul(w, E(w, "(1;{0:2})"), E(w, "(-1;{1:-2})"))));
}

TEST(WreathInv, Examples) {
    const Descriptor w = D("wr(Z,Z)");
    const Elem x = E(w, "(1;{0:2})");
    EXPECT_EQ(wreath_inv(w, x), E(w, "(-1;{1:-2})"));
    EXPECT_TRUE(is_identity(w, wreath_mul(w, wreath_inv(w, x), x)));
    EXPECT_EQ(wreath_inv(w, identity(w)), identity(w));
    EXPECT_EQ(wreath_inv(w, E(w, "(0;{5:3})")), E(w, "(0;{5:-3})"));
}

// Non-abelian fiber: the inverse must invert values in the fiber, not negate
// them naively.
TEST(WreathInv, NonAbelianFiber) {
    const Descriptor w = D("wr(Z,wr(Z,Z))");
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const Elem x = random_elem(w, 3, rng);
        ASSERT_TRUE(is_identity(w, wreath_mul(w, x, wreath_inv(w, x))));
        ASSERT_TRUE(is_identity(w, wreath_mul(w, wreath_inv(w, x), x)));
    }
}

TEST(WreathAlgebra, SupportOfProductStaysInUnion) {
    const Descriptor w = D("wr(Z,Z)");
    std::mt19937_64 rng(2);
    for (int i = 0; i < 500; ++i) {
        const Elem x = random_elem(w, 3, rng), y = random_elem(w, 3, rng);
        const Elem p = wreath_mul(w, x, y);
        const auto n = x.shift().as_integer();
        for (const Elem& k : p.as_wreath().keys) {
            const auto a = k.as_integer();
            const bool in_x = !is_identity(D("Z"), wreath_at(w, x, k));
            const bool in_y = !is_identity(D("Z"), wreath_at(w, y, Elem::integer(a + n)));
            ASSERT_TRUE(in_x || in_y) << format_elem(x) << " * " << format_elem(y);
        }
    }
}

TEST(WreathOrder, MatchesPairwiseDefinition) {
    const Descriptor w = D("wr(Z,Z)");
    const auto xs = enumerate_box(w, 1);
    for (const Elem& x : xs)
        for (const Elem& y : xs) {
            const auto n = x.shift().as_integer(), m = y.shift().as_integer();
            bool pairwise = n < m;
            if (n == m) {
                pairwise = true;
                for (int a = -1; a <= 1; ++a)
                    if (wreath_at(w, x, Elem::integer(a)).as_integer() > wreath_at(w, y, Elem::integer(a)).as_integer())
                        pairwise = false;
            }
            ASSERT_EQ(leq(w, x, y), pairwise) << format_elem(x) << " " << format_elem(y);
            ASSERT_EQ(leq(w, x, y), in_positive_cone(w, wreath_mul(w, wreath_inv(w, x), y)));
        }
}

TEST(WreathDecompose, CaseIvByConstruction) {
    const Descriptor w = D("wr(Z,Z)");
    const Elem a1 = E(w, "(1;{0:5})"), a2 = E(w, "(0;{0:3})"), b1 = E(w, "(0;{0:1})");
    const Elem b2 = left_sub(w, b1, wreath_mul(w, a1, a2));
    const Quadruple q{a1, a2, b1, b2};
    EXPECT_EQ(wreath_mul(w, a1, a2), wreath_mul(w, b1, b2));
    EXPECT_EQ(classify_wreath_quadruple(w, q).split, SplitCase::IV);
    const RefinementTable t = wreath_rdp_decompose(w, RdpKind::RDP1, q);
    EXPECT_EQ(validate_table(w, q, t, RdpKind::RDP1).verdict, Verdict::Pass);
    EXPECT_TRUE(is_identity(w, t.c21));
}

TEST(WreathDecompose, ZeroShiftsArePointwise) {
    const Descriptor w = D("wr(Z,Z)");
    const Quadruple q = Q(w, "(0;{0:5,1:2});(0;{0:3});(0;{0:6,1:1});(0;{0:2,1:1})");
    const RefinementTable t = wreath_rdp_decompose(w, RdpKind::RDP1, q);
    EXPECT_EQ(classify_wreath_quadruple(w, q).split, SplitCase::I);
    EXPECT_EQ(validate_table(w, q, t, RdpKind::RDP1).verdict, Verdict::Pass);
    const Descriptor z = D("Z");
    const RefinementTable f0 = project_table_to_fiber(w, t, Elem::integer(0));
    EXPECT_EQ(validate_table(z, Q(z, "5;3;6;2"), f0, RdpKind::RDP).verdict, Verdict::Pass);
}

TEST(WreathDecompose, DegenerateAndErrors) {
    const Descriptor w = D("wr(Z,Z)");
    const Quadruple q = Q(w, "(0;{});(1;{0:2});(1;{0:2});(0;{})");
    const RefinementTable t = wreath_rdp_decompose(w, RdpKind::RDP, q);
    EXPECT_EQ(t, T(w, "(0;{});(0;{});(1;{0:2});(0;{})"));
    const Quadruple unequal = Q(w, "(1;{0:1});(1;{});(1;{});(1;{0:1})");
    EXPECT_NE(wreath_mul(w, unequal.a1, unequal.a2), wreath_mul(w, unequal.b1, unequal.b2));
    EXPECT_THROW(wreath_rdp_decompose(w, RdpKind::RDP, unequal), InputError);
}

TEST(ProjectTableToFiber, Examples) {
    const Descriptor w = D("wr(Z,Z)");
    const Descriptor z = D("Z");
    EXPECT_EQ(project_table_to_fiber(w, T(w, "(0;{2:5});(0;{});(0;{2:1});(0;{2:2})"), Elem::integer(2)),
              T(z, "5;0;1;2"));
    EXPECT_EQ(project_table_to_fiber(w, T(w, "(0;{});(0;{});(0;{});(0;{})"), Elem::integer(0)), T(z, "0;0;0;0"));
    EXPECT_THROW(project_table_to_fiber(w, T(w, "(1;{});(0;{});(0;{});(0;{})"), Elem::integer(0)), InputError);
}

TEST(WreathDecompose, ExhaustiveSmallBox) {
    const Descriptor w = D("wr(Z,Z)");
    std::vector<Elem> pos;
    for (const Elem& x : positives(w, 1))
        if (x.shift().as_integer() >= 0) pos.push_back(x);
    std::size_t n = 0;
    for_each_box_quadruple(w, pos, 1, [&](const Quadruple& q) {
        ++n;
        const RefinementTable t = wreath_rdp_decompose(w, RdpKind::RDP1, q);
        ASSERT_EQ(validate_table(w, q, t, RdpKind::RDP1).verdict, Verdict::Pass) << show(q);
    });
    EXPECT_EQ(n, 6065u);
}

TEST(WreathDecompose, RandomQuadruplesOverVectorFiber) {
    const Descriptor w = D("wr(Zvec(2,lex),Zvec(2,cw))");
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        const Quadruple q = random_quadruple(w, 2, rng);
        const RefinementTable t = wreath_rdp_decompose(w, RdpKind::RDP1, q);
        ASSERT_EQ(validate_table(w, q, t, RdpKind::RDP2).verdict, Verdict::Pass) << show(q);
    }
}

TEST(WreathDecompose, BruteSearchAgrees) {
    const Descriptor w = D("wr(Z,Z)");
    std::mt19937_64 rng(29);
    int found = 0;
    for (int i = 0; i < 40; ++i) {
        const Quadruple q = random_quadruple(w, 1, rng);
        const BruteSearch b = brute_rdp_search(w, RdpKind::RDP, q);
        // Intervals of wr(Z,Z) are infinite, so a scan may end unknown but never empty.
        EXPECT_NE(b.outcome, SearchOutcome::NoneExists) << show(q);
        if (b.outcome == SearchOutcome::Found) ++found;
        if (b.table) EXPECT_TRUE(table_sums_hold(w, q, *b.table));
    }
    EXPECT_GT(found, 20);
}

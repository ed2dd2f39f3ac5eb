#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"
#include "rdpforge/table.hpp"
#include "support.hpp"

using namespace rdpforge;
using namespace rdpforge::testing;

TEST(Identity, NeutralElements) {
    EXPECT_EQ(identity(D("Z")), Elem(Elem::Integer{0}));
    EXPECT_EQ(format_elem(identity(D("Zvec(2,cw)"))), "(0,0)");
    EXPECT_EQ(format_elem(identity(D("rwz(Z)"))), "(0;{})");
    EXPECT_EQ(format_elem(identity(D("trivial"))), "e");
}

TEST(Add, Examples) {
    EXPECT_EQ(add(D("Z"), E(D("Z"), "3"), E(D("Z"), "4")), E(D("Z"), "7"));
    const Descriptor lex = D("lex(Z,Z)");
    EXPECT_EQ(add(lex, E(lex, "(1;2)"), E(lex, "(0;-5)")), E(lex, "(1;-3)"));
    const Descriptor w = D("rwz(Z)");
    EXPECT_EQ(add(w, E(w, "(1;{0:2})"), E(w, "(0;{1:3})")), E(w, "(1;{0:5})"));
}

TEST(Neg, Examples) {
    EXPECT_EQ(neg(D("Z"), E(D("Z"), "5")), E(D("Z"), "-5"));
    const Descriptor w = D("rwz(Z)");
    const Elem x = E(w, "(1;{0:2})");
    EXPECT_EQ(neg(w, x), E(w, "(-1;{1:-2})"));
    EXPECT_TRUE(is_identity(w, add(w, x, neg(w, x))));
    EXPECT_TRUE(is_identity(w, add(w, neg(w, x), x)));
    const Descriptor lex = D("lex(Z,Z)");
    EXPECT_EQ(neg(lex, E(lex, "(1;-3)")), E(lex, "(-1;3)"));
}

TEST(Leq, Examples) {
    const Descriptor s = D("Zvec(2,strict)");
    EXPECT_TRUE(leq(s, E(s, "(0,0)"), E(s, "(1,1)")));
    EXPECT_FALSE(leq(s, E(s, "(0,0)"), E(s, "(1,0)")));
    const Descriptor r = D("rwz(Z)"), l = D("lwz(Z)");
    EXPECT_TRUE(leq(r, identity(r), E(r, "(0;{-1:-5,2:1})")));
    EXPECT_FALSE(leq(l, identity(l), E(l, "(0;{-1:-5,2:1})")));
}

TEST(PositiveCone, Examples) {
    EXPECT_FALSE(in_positive_cone(D("Z"), E(D("Z"), "-1")));
    const Descriptor lex = D("lex(Z,Z)");
    EXPECT_TRUE(in_positive_cone(lex, E(lex, "(0;3)")));
    EXPECT_FALSE(in_positive_cone(lex, E(lex, "(0;-1)")));
    const Descriptor s = D("Zvec(2,strict)");
    EXPECT_TRUE(in_positive_cone(s, E(s, "(2,3)")));
    EXPECT_FALSE(in_positive_cone(s, E(s, "(2,0)")));
}

TEST(UpperBound, Examples) {
    EXPECT_EQ(upper_bound(D("Z"), E(D("Z"), "3"), E(D("Z"), "7")), E(D("Z"), "7"));
    const Descriptor s = D("Zvec(2,strict)");
    EXPECT_EQ(upper_bound(s, E(s, "(1,0)"), E(s, "(0,1)")), E(s, "(2,2)"));
    const Descriptor lex = D("lex(Z,Z)");
    EXPECT_EQ(upper_bound(lex, E(lex, "(0;5)"), E(lex, "(1;-9)")), E(lex, "(1;-9)"));
}

TEST(UpperBound, DominatesOnRandomPairs) {
    std::mt19937_64 rng(7);
    for (const char* text : {"Z", "Q", "Zvec(3,strict)", "Qvec(2,cw)", "lex(Zvec(2,strict),Z)", "wr(Z,Z)", "rwz(Z)",
                             "lwz(Zvec(2,cw))"}) {
        const Descriptor d = D(text);
        for (int i = 0; i < 200; ++i) {
            const Elem x = random_elem(d, 3, rng), y = random_elem(d, 3, rng);
            const Elem u = upper_bound(d, x, y), l = lower_bound(d, x, y);
            EXPECT_TRUE(leq(d, x, u) && leq(d, y, u)) << text;
            EXPECT_TRUE(leq(d, l, x) && leq(d, l, y)) << text;
            EXPECT_EQ(u, upper_bound(d, x, y));
        }
    }
}

TEST(ValidateTable, Examples) {
    const Descriptor z = D("Z");
    const Quadruple q = Q(z, "5;3;6;2");
    EXPECT_EQ(validate_table(z, q, T(z, "5;0;1;2"), RdpKind::RDP).verdict, Verdict::Pass);
    const VerdictReport bad = validate_table(z, q, T(z, "6;-1;0;3"), RdpKind::RDP);
    EXPECT_EQ(bad.verdict, Verdict::Fail);
    EXPECT_FALSE(bad.counterexamples.empty());

    const Descriptor lex = D("lex(Z,Z)");
    const VerdictReport r1 = validate_table(lex, Q(lex, "(2;5);(0;3);(0;1);(2;7)"),
                                            T(lex, "(0;1);(2;4);(0;0);(0;3)"), RdpKind::RDP1);
    EXPECT_EQ(r1.verdict, Verdict::Pass);
    EXPECT_EQ(r1.mode, Mode::Exhaustive);
}

TEST(ValidateTable, Errors) {
    const Descriptor z = D("Z");
    EXPECT_THROW(validate_table(z, Q(z, "5;3;6;1"), T(z, "5;0;1;1"), RdpKind::RDP), InputError);
    EXPECT_THROW(validate_table(z, Q(z, "-1;3;1;1"), T(z, "0;-1;1;0"), RdpKind::RDP), InputError);
    const Descriptor s = D("Qvec(2,strict)");
    const Quadruple q = Q(s, "(1,2);(2,1);(1,1);(2,2)");
    const RefinementTable t = T(s, "(1/2,1/2);(1/2,3/2);(1/2,1/2);(3/2,1/2)");
    EXPECT_EQ(validate_table(s, q, t, RdpKind::RDP).verdict, Verdict::Pass);
    EXPECT_THROW(validate_table(s, q, t, RdpKind::RDP2), CapabilityError);
}

TEST(ValidateTable, MonotoneInKind) {
    const Descriptor d = D("Zvec(2,cw)");
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Quadruple q = random_quadruple(d, 3, rng);
        for (const Elem& c11 : candidates_between(d, {identity(d)}, {q.a1, q.b1}, 3).elems) {
            const auto t = complete_table(d, q, c11);
            if (!t) continue;
            const bool r2 = validate_table(d, q, *t, RdpKind::RDP2).passed();
            const bool r1 = validate_table(d, q, *t, RdpKind::RDP1).passed();
            const bool r0 = validate_table(d, q, *t, RdpKind::RDP).passed();
            EXPECT_TRUE(r0);
            if (r2) EXPECT_TRUE(r1);
            if (r1) EXPECT_TRUE(r0);
        }
    }
}

TEST(ComProbe, Examples) {
    const Descriptor z = D("Z");
    EXPECT_EQ(com_probe(z, E(z, "3"), E(z, "5")).verdict, Verdict::Pass);
    const Descriptor t = D("trivial");
    EXPECT_EQ(com_probe(t, identity(t), identity(t)).verdict, Verdict::Pass);

    const Descriptor w = D("wr(Z,Z)");
    const VerdictReport r = com_probe(w, E(w, "(0;{0:1})"), E(w, "(0;{1:1})"));
    if (r.verdict == Verdict::Fail) {
        ASSERT_FALSE(r.counterexamples.empty());
        const auto& xs = r.counterexamples.front().elems;
        ASSERT_EQ(xs.size(), 2u);
        EXPECT_NE(add(w, xs[0], xs[1]), add(w, xs[1], xs[0]));
    }
}

TEST(ComProbe, NonCommutingPairIsFound) {
    const Descriptor w = D("wr(Z,Z)");
    const VerdictReport r = com_probe(w, E(w, "(1;{})"), E(w, "(0;{0:1})"));
    ASSERT_EQ(r.verdict, Verdict::Fail);
    const auto& xs = r.counterexamples.front().elems;
    EXPECT_NE(add(w, xs[0], xs[1]), add(w, xs[1], xs[0]));
}

TEST(Lattice, Examples) {
    const Descriptor cw = D("Zvec(2,cw)");
    EXPECT_EQ(lattice_meet(cw, E(cw, "(2,1)"), E(cw, "(1,2)")), E(cw, "(1,1)"));
    EXPECT_EQ(lattice_join(D("Z"), E(D("Z"), "3"), E(D("Z"), "7")), E(D("Z"), "7"));
    const Descriptor lex = D("lex(Z,Z)");
    EXPECT_EQ(lattice_meet(lex, E(lex, "(1;5)"), E(lex, "(1;2)")), E(lex, "(1;2)"));
    const Descriptor s = D("Zvec(2,strict)");
    EXPECT_THROW(lattice_meet(s, E(s, "(1,1)"), E(s, "(2,2)")), CapabilityError);
    const Descriptor w = D("rwz(Zvec(2,cw))");
    EXPECT_THROW(lattice_join(w, identity(w), identity(w)), CapabilityError);
}

TEST(Lattice, MeetJoinLawsOnBox) {
    for (const char* text : {"Zvec(2,cw)", "Zvec(2,lex)", "lex(Z,Zvec(2,cw))"}) {
        const Descriptor d = D(text);
        const auto xs = enumerate_box(d, 1);
        for (const Elem& x : xs)
            for (const Elem& y : xs) {
                const Elem m = lattice_meet(d, x, y), j = lattice_join(d, x, y);
                EXPECT_TRUE(leq(d, m, x) && leq(d, m, y) && leq(d, x, j) && leq(d, y, j)) << text;
                for (const Elem& z : xs) {
                    if (leq(d, z, x) && leq(d, z, y)) EXPECT_TRUE(leq(d, z, m)) << text;
                    if (leq(d, x, z) && leq(d, y, z)) EXPECT_TRUE(leq(d, j, z)) << text;
                }
            }
    }
}

TEST(Shape, MismatchNamesPath) {
    const Descriptor lex = D("lex(Z,Zvec(2,cw))");
    const Elem bad = Elem::pair(Elem::integer(1), Elem::vector({Elem::integer(1)}));
    try {
        add(lex, bad, bad);
        FAIL() << "expected ShapeError";
    } catch (const ShapeError& e) {
        EXPECT_NE(e.path().find("tail"), std::string::npos) << e.path();
    }
    const Descriptor w = D("rwz(Z)");
    const Elem unsorted = Elem::wreath(Elem::integer(0), {Elem::integer(2), Elem::integer(1)},
                                       {Elem::integer(1), Elem::integer(1)});
    EXPECT_FALSE(has_shape(w, unsorted));
    const Elem zero_value = Elem::wreath(Elem::integer(0), {Elem::integer(1)}, {Elem::integer(0)});
    EXPECT_FALSE(has_shape(w, zero_value));
}

TEST(Capabilities, Flags) {
    EXPECT_TRUE(D("Z").is_linear());
    EXPECT_TRUE(D("Zvec(2,lex)").is_linear());
    EXPECT_FALSE(D("Zvec(2,cw)").is_linear());
    EXPECT_TRUE(D("Zvec(2,strict)").is_antilattice());
    EXPECT_FALSE(D("Zvec(2,cw)").is_antilattice());
    EXPECT_TRUE(D("Q").is_non_atomistic());
    EXPECT_FALSE(D("Z").is_non_atomistic());
    EXPECT_TRUE(D("lex(Z,Z)").is_enumerable());
    EXPECT_FALSE(D("lex(Q,Z)").is_enumerable());
    EXPECT_FALSE(D("wr(Z,Z)").is_abelian());
    EXPECT_TRUE(D("lex(Z,Zvec(2,cw))").has_lattice_ops());
    EXPECT_FALSE(D("lex(Zvec(2,cw),Z)").has_lattice_ops());
    EXPECT_TRUE(D("wr(Z,Zvec(2,cw))").has_lattice_ops());
    EXPECT_TRUE(D("rwz(Z)").has_lattice_ops());
    EXPECT_FALSE(D("rwz(Zvec(2,cw))").has_lattice_ops());
    EXPECT_THROW(Descriptor::wreath(D("Zvec(2,cw)"), D("Z")), CapabilityError);
}

TEST(Integers, OverflowIsChecked) {
    const Descriptor z = D("Z");
    const Elem big = Elem::integer(std::numeric_limits<Elem::Integer>::max());
    EXPECT_THROW(add(z, big, Elem::integer(1)), Error);
    EXPECT_THROW(neg(z, Elem::integer(std::numeric_limits<Elem::Integer>::min())), Error);
}

namespace {

const char* const kGroups[] = {"trivial", "Z", "Q", "Zvec(2,cw)", "Qvec(2,strict)", "Zvec(3,lex)",
                               "lex(Z,Z)", "lex(Zvec(2,strict),Q)", "wr(Z,Z)", "wr(Zvec(2,lex),Zvec(2,cw))",
                               "rwz(Z)", "lwz(Q)", "rwz(wr(Z,Z))"};

}  // namespace

class GroupLaws : public ::testing::TestWithParam<const char*> {};

TEST_P(GroupLaws, AssociativityIdentityInverse) {
    const Descriptor d = D(GetParam());
    std::mt19937_64 rng(42);
    const Elem e = identity(d);
    for (int i = 0; i < 500; ++i) {
        const Elem x = random_elem(d, 3, rng), y = random_elem(d, 3, rng), z = random_elem(d, 3, rng);
        ASSERT_EQ(add(d, add(d, x, y), z), add(d, x, add(d, y, z))) << format_elem(x);
        ASSERT_EQ(add(d, e, x), x);
        ASSERT_EQ(add(d, x, e), x);
        ASSERT_EQ(add(d, x, neg(d, x)), e);
        ASSERT_EQ(add(d, neg(d, x), x), e);
        ASSERT_TRUE(has_shape(d, add(d, x, y)));
    }
}

TEST_P(GroupLaws, ConeAntisymmetryAndTranslationInvariance) {
    const Descriptor d = D(GetParam());
    std::mt19937_64 rng(43);
    for (int i = 0; i < 500; ++i) {
        const Elem x = random_elem(d, 2, rng);
        if (in_positive_cone(d, x) && in_positive_cone(d, neg(d, x))) ASSERT_TRUE(is_identity(d, x));
        const Elem a = random_elem(d, 2, rng), p = random_positive(d, 2, rng);
        const Elem b = add(d, a, p);
        ASSERT_TRUE(leq(d, a, b));
        const Elem l = random_elem(d, 2, rng), r = random_elem(d, 2, rng);
        ASSERT_TRUE(leq(d, add(d, add(d, l, a), r), add(d, add(d, l, b), r))) << GetParam();
    }
}

INSTANTIATE_TEST_SUITE_P(Groups, GroupLaws, ::testing::ValuesIn(kGroups));

TEST(GroupLaws, TranslationInvarianceExhaustive) {
    for (const char* text : {"Zvec(2,strict)", "lex(Z,Z)", "wr(Z,Z)", "rwz(Z)", "lwz(Z)"}) {
        const Descriptor d = D(text);
        const auto xs = enumerate_box(d, 1);
        std::vector<std::pair<Elem, Elem>> ordered;
        for (const Elem& a : xs)
            for (const Elem& b : xs)
                if (leq(d, a, b) && !(a == b)) ordered.emplace_back(a, b);
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
        for (const auto& [a, b] : ordered)
            for (int k = 0; k < 4; ++k) {
                const Elem& x = xs[pick(rng)];
                const Elem& y = xs[pick(rng)];
                ASSERT_TRUE(leq(d, add(d, add(d, x, a), y), add(d, add(d, x, b), y)))
                    << text << " " << format_elem(a) << " <= " << format_elem(b);
            }
    }
}

TEST(RdpKind, StrengthAndParse) {
    EXPECT_EQ(strength(RdpKind::RIP), strength(RdpKind::RDP0));
    EXPECT_LT(strength(RdpKind::RDP0), strength(RdpKind::RDP));
    EXPECT_LT(strength(RdpKind::RDP), strength(RdpKind::RDP1));
    EXPECT_LT(strength(RdpKind::RDP1), strength(RdpKind::RDP2));
    EXPECT_EQ(parse_rdp_kind("RDP1"), RdpKind::RDP1);
    EXPECT_EQ(parse_rdp_kind("rip"), RdpKind::RIP);
    EXPECT_THROW(parse_rdp_kind("rdp3"), InputError);
}

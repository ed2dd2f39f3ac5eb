#include <gtest/gtest.h>

#include <algorithm>

#include "rdpforge/errors.hpp"
#include "rdpforge/interval.hpp"
#include "rdpforge/verifier.hpp"
#include "support.hpp"

using namespace rdpforge;
using namespace rdpforge::testing;

namespace {

struct Gamma {
    UnitIntervalContext ctx;
    IntervalElem operator()(std::string_view text) const { return IntervalElem(ctx, E(ctx.desc(), text)); }
};

Gamma gamma(std::string_view group, std::string_view unit) {
    const Descriptor d = D(group);
    return Gamma{UnitIntervalContext(d, E(d, unit))};
}

}  // namespace

TEST(Context, Construction) {
    const Descriptor z = D("Z");
    EXPECT_THROW(UnitIntervalContext(z, E(z, "0")), InputError);
    EXPECT_THROW(UnitIntervalContext(z, E(z, "-2")), InputError);
    const UnitIntervalContext ctx(z, E(z, "5"));
    EXPECT_THROW(IntervalElem(ctx, E(z, "6")), InputError);
    EXPECT_THROW(IntervalElem(ctx, E(z, "-1")), InputError);
    EXPECT_TRUE(ctx.contains(E(z, "5")));
}

TEST(PeaAdd, Examples) {
    const Gamma g = gamma("Z", "5");
    EXPECT_FALSE(pea_add(g.ctx, g("3"), g("4")).has_value());
    EXPECT_EQ(pea_add(g.ctx, g("3"), g("2")), g("5"));
    const Gamma l = gamma("lex(Z,Z)", "(1;0)");
    EXPECT_EQ(pea_add(l.ctx, l("(0;2)"), l("(1;-5)")), l("(1;-3)"));
    EXPECT_FALSE(pea_add(l.ctx, l("(0;2)"), l("(1;-1)")).has_value());
}

TEST(PeaNeg, Examples) {
    const Gamma g = gamma("Z", "5");
    EXPECT_EQ(pea_lneg(g.ctx, g("3")), g("2"));
    EXPECT_EQ(pea_rneg(g.ctx, g("3")), g("2"));
    EXPECT_EQ(pea_lneg(g.ctx, g("0")), g("5"));
    const Gamma l = gamma("lex(Z,Z)", "(1;0)");
    EXPECT_EQ(pea_lneg(l.ctx, l("(0;2)")), l("(1;-2)"));
}

TEST(PeaNeg, ComplementLawsOnNonAbelianInterval) {
    const Descriptor w = D("wr(Z,Z)");
    const UnitIntervalContext ctx(w, E(w, "(1;{})"));
    const IntervalElem u(ctx, ctx.unit());
    for (const Elem& x : interval_carrier(ctx, 1).elems) {
        const IntervalElem a(ctx, x);
        EXPECT_EQ(pea_add(ctx, pea_lneg(ctx, a), a), u);
        EXPECT_EQ(pea_add(ctx, a, pea_rneg(ctx, a)), u);
        EXPECT_EQ(pea_rneg(ctx, pea_lneg(ctx, a)), a);
        EXPECT_EQ(pea_lneg(ctx, pea_rneg(ctx, a)), a);
    }
}

TEST(PeaMinus, Examples) {
    const Gamma g = gamma("Z", "5");
    EXPECT_EQ(pea_minus_left(g.ctx, g("4"), g("1")), g("3"));
    EXPECT_EQ(pea_minus_right(g.ctx, g("2"), g("2")), g("0"));
    EXPECT_THROW(pea_minus_left(g.ctx, g("1"), g("4")), InputError);
    const Gamma l = gamma("lex(Z,Z)", "(1;0)");
    EXPECT_EQ(pea_minus_left(l.ctx, l("(1;-2)"), l("(0;3)")), l("(1;-5)"));
}

TEST(Pmv, Examples) {
    const Gamma g = gamma("Z", "5");
    EXPECT_EQ(pmv_oplus(g.ctx, g("3"), g("4")), g("5"));
    EXPECT_EQ(pmv_odot(g.ctx, g("3"), g("4")), g("2"));
    for (int x = 0; x <= 5; ++x) {
        const IntervalElem e = g(std::to_string(x));
        EXPECT_EQ(pmv_oplus(g.ctx, e, g("0")), e);
    }
    const Gamma s = gamma("Zvec(2,strict)", "(2,2)");
    EXPECT_THROW(pmv_oplus(s.ctx, s("(1,1)"), s("(0,0)")), CapabilityError);
}

TEST(Pmv, LukasiewiczTables) {
    const Gamma g = gamma("Z", "5");
    for (int x = 0; x <= 5; ++x)
        for (int y = 0; y <= 5; ++y) {
            const IntervalElem a = g(std::to_string(x)), b = g(std::to_string(y));
            EXPECT_EQ(pmv_oplus(g.ctx, a, b), g(std::to_string(std::min(x + y, 5))));
            EXPECT_EQ(pmv_odot(g.ctx, a, b), g(std::to_string(std::max(x + y - 5, 0))));
        }
}

TEST(Conversions, Examples) {
    const Gamma g = gamma("Z", "5");
    EXPECT_EQ(pea_to_pmv_oplus(g.ctx, g("3"), g("4")), g("5"));
    EXPECT_EQ(pea_to_pmv_oplus(g.ctx, g("0"), g("4")), g("4"));
    EXPECT_EQ(pea_to_pmv_oplus(g.ctx, g("3"), g("0")), g("3"));
    EXPECT_EQ(pmv_to_pea_add(g.ctx, g("3"), g("2")), g("5"));
    EXPECT_FALSE(pmv_to_pea_add(g.ctx, g("3"), g("4")).has_value());
    EXPECT_EQ(pmv_to_pea_add(g.ctx, g("0"), g("4")), g("4"));
}

TEST(Conversions, CoherentOnAllPairs) {
    for (const auto& [group, unit] : {std::pair{"Z", "5"}, std::pair{"Zvec(2,cw)", "(2,2)"},
                                      std::pair{"lex(Z,Z)", "(1;0)"}, std::pair{"wr(Z,Z)", "(1;{0:1})"}}) {
        const Gamma g = gamma(group, unit);
        const auto xs = interval_carrier(g.ctx, 2).elems;
        for (const Elem& x : xs)
            for (const Elem& y : xs) {
                const IntervalElem a(g.ctx, x), b(g.ctx, y);
                ASSERT_EQ(pea_to_pmv_oplus(g.ctx, a, b), pmv_oplus(g.ctx, a, b)) << group;
                const auto via_pmv = pmv_to_pea_add(g.ctx, a, b), direct = pea_add(g.ctx, a, b);
                if (via_pmv && direct) ASSERT_EQ(*via_pmv, *direct) << group;
                // Abelian units: the two domains coincide.
                if (g.ctx.desc().is_abelian()) ASSERT_EQ(via_pmv.has_value(), direct.has_value()) << group;
            }
    }
}

TEST(StrongUnit, Examples) {
    const Gamma a = gamma("Z", "1");
    EXPECT_EQ(is_strong_unit_probe(a.ctx, 5, 10).verdict, Verdict::Pass);
    const Gamma l = gamma("lex(Z,Z)", "(1;0)");
    EXPECT_EQ(is_strong_unit_probe(l.ctx, 3, 10).verdict, Verdict::Pass);
    const Gamma c = gamma("Zvec(2,cw)", "(1,0)");
    const VerdictReport r = is_strong_unit_probe(c.ctx, 2, 10);
    ASSERT_EQ(r.verdict, Verdict::Fail);
    const Descriptor d = c.ctx.desc();
    bool has_01 = false;
    for (const Witness& w : r.counterexamples)
        for (const Elem& x : w.elems) has_01 = has_01 || x == E(d, "(0,1)");
    EXPECT_TRUE(has_01);
}

TEST(Carrier, Gamma5) {
    const Gamma g = gamma("Z", "5");
    const IntervalCarrier c = interval_carrier(g.ctx, 5);
    EXPECT_TRUE(c.complete);
    EXPECT_EQ(c.elems.size(), 6u);
}

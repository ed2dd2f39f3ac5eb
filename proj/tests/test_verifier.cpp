#include <gtest/gtest.h>

#include <algorithm>

#include "rdpforge/decompose.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/interval.hpp"
#include "rdpforge/verifier.hpp"
#include "rdpforge/zwreath.hpp"
#include "support.hpp"

using namespace rdpforge;
using namespace rdpforge::testing;

namespace {

CheckBudget box(int radius) {
    CheckBudget b;
    b.radius = radius;
    return b;
}

bool has_counterexample(const VerdictReport& r, const std::vector<Elem>& elems) {
    return std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                       [&](const Witness& w) { return w.elems == elems; });
}

}  // namespace

TEST(BruteSearch, Examples) {
    const Descriptor z = D("Z");
    const Quadruple q = Q(z, "5;3;6;2");
    const BruteSearch b = brute_rdp_search(z, RdpKind::RDP, q);
    ASSERT_EQ(b.outcome, SearchOutcome::Found);
    EXPECT_EQ(validate_table(z, q, *b.table, RdpKind::RDP).verdict, Verdict::Pass);

    const Descriptor s = D("Zvec(2,strict)");
    const BruteSearch none = brute_rdp_search(s, RdpKind::RDP, Q(s, "(1,2);(2,1);(1,1);(2,2)"));
    EXPECT_EQ(none.outcome, SearchOutcome::NoneExists);
    EXPECT_FALSE(none.table.has_value());
    EXPECT_GT(none.scanned, 0u);

    const BruteSearch zero = brute_rdp_search(z, RdpKind::RDP, Q(z, "0;0;0;0"));
    EXPECT_EQ(*zero.table, T(z, "0;0;0;0"));
    EXPECT_THROW(brute_rdp_search(D("Q"), RdpKind::RDP, Q(D("Q"), "1;1;1;1")), CapabilityError);
}

TEST(BruteSearch, Rdp1OnNonAbelianGroup) {
    const Descriptor w = D("wr(Z,Z)");
    const Elem a1 = E(w, "(0;{0:1})"), a2 = E(w, "(1;{})"), b1 = E(w, "(1;{})");
    const Quadruple q{a1, a2, b1, left_sub(w, b1, add(w, a1, a2))};
    ASSERT_EQ(q.b2, E(w, "(0;{1:1})"));
    const BruteSearch b = brute_rdp_search(w, RdpKind::RDP1, q);
    ASSERT_EQ(b.outcome, SearchOutcome::Found);
    EXPECT_EQ(validate_table(w, q, *b.table, RdpKind::RDP1).verdict, Verdict::Pass);
}

TEST(CheckRdp, Examples) {
    const VerdictReport z = check_rdp(D("Z"), RdpKind::RDP, box(4));
    EXPECT_EQ(z.verdict, Verdict::Pass);
    EXPECT_EQ(z.mode, Mode::Exhaustive);
    EXPECT_GT(z.stats.checked, 0u);

    const Descriptor s = D("Zvec(2,strict)");
    const VerdictReport f = check_rdp(s, RdpKind::RDP, box(3));
    EXPECT_EQ(f.verdict, Verdict::Fail);
    EXPECT_TRUE(has_counterexample(f, parse_elem_list(s, "(1,2);(2,1);(1,1);(2,2)")));

    EXPECT_EQ(check_rdp(D("lex(Z,Z)"), RdpKind::RDP1, box(2)).verdict, Verdict::Pass);
}

TEST(CheckRdp, Rdp0Form) {
    EXPECT_EQ(check_rdp(D("Zvec(2,cw)"), RdpKind::RDP0, box(2)).verdict, Verdict::Pass);
    EXPECT_EQ(check_rdp(D("Zvec(2,strict)"), RdpKind::RDP0, box(2)).verdict, Verdict::Fail);
}

TEST(CheckRdp, NonEnumerableIsSampled) {
    CheckBudget b = box(2);
    b.samples = 200;
    const VerdictReport r = check_rdp(D("lex(Q,Q)"), RdpKind::RDP1, b);
    EXPECT_EQ(r.mode, Mode::Sampled);
    EXPECT_EQ(r.verdict, Verdict::Inconclusive);
}

TEST(CheckRdp, DeterministicAndThreadIndependent) {
    const Descriptor d = D("lex(Zvec(2,cw),Z)");
    CheckBudget one = box(1), four = box(1);
    four.threads = 4;
    const VerdictReport a = check_rdp(d, RdpKind::RDP, one);
    const VerdictReport b = check_rdp(d, RdpKind::RDP, four);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.counterexamples, b.counterexamples);
    EXPECT_EQ(a.witnesses, b.witnesses);
    EXPECT_EQ(a.stats.checked, b.stats.checked);
    EXPECT_EQ(a.note, b.note);
}

TEST(CheckRdp, KindsPassingAreUpwardClosed) {
    for (const char* text : {"Z", "Zvec(2,cw)", "Zvec(2,strict)", "lex(Z,Z)", "lex(Zvec(2,strict),Z)"}) {
        const Descriptor d = D(text);
        std::vector<RdpKind> kinds{RdpKind::RDP0, RdpKind::RDP, RdpKind::RDP1};
        if (d.has_lattice_ops()) kinds.push_back(RdpKind::RDP2);
        std::vector<bool> pass;
        for (RdpKind k : kinds) pass.push_back(check_rdp(d, k, box(1)).passed());
        for (std::size_t i = 1; i < pass.size(); ++i)
            EXPECT_TRUE(!pass[i] || pass[i - 1]) << text << " " << to_string(kinds[i]);
    }
}

TEST(CheckRip, Examples) {
    EXPECT_EQ(check_rip(D("Z"), box(3)).verdict, Verdict::Pass);
    EXPECT_EQ(check_rip(D("Zvec(2,cw)"), box(2)).verdict, Verdict::Pass);
    EXPECT_EQ(check_rip(D("Zvec(2,strict)"), box(2)).verdict, Verdict::Fail);
}

TEST(CheckRip, AgreesWithRdp0) {
    for (const char* text : {"Z", "Zvec(2,cw)", "Zvec(2,strict)", "lex(Z,Z)"}) {
        const Descriptor d = D(text);
        EXPECT_EQ(check_rdp(d, RdpKind::RDP0, box(2)).verdict, check_rip(d, box(2)).verdict) << text;
    }
}

TEST(Axioms, PmvGamma5) {
    const Descriptor z = D("Z");
    const UnitIntervalContext ctx(z, E(z, "5"));
    const VerdictReport r = check_pmv_axioms(ctx, box(5));
    EXPECT_EQ(r.verdict, Verdict::Pass);
    EXPECT_EQ(r.stats.checked, 216u);
    EXPECT_TRUE(r.failed.empty());
}

TEST(Axioms, CorruptedOplusFailsA6) {
    const Descriptor z = D("Z");
    const UnitIntervalContext ctx(z, E(z, "5"));
    PmvOps ops = default_pmv_ops(ctx);
    ops.oplus = [&ctx](const IntervalElem& x, const IntervalElem& y) {
        return IntervalElem(ctx, std::max(x.value().as_integer(), y.value().as_integer()));
    };
    const VerdictReport r = check_pmv_axioms(ctx, ops, box(5));
    EXPECT_EQ(r.verdict, Verdict::Fail);
    EXPECT_NE(std::find(r.failed.begin(), r.failed.end(), "A6"), r.failed.end());
}

TEST(Axioms, PeaLexSlice) {
    const Descriptor d = D("lex(Z,Z)");
    const UnitIntervalContext ctx(d, E(d, "(1;0)"));
    const VerdictReport r = check_pea_axioms(ctx, box(5));
    EXPECT_EQ(r.verdict, Verdict::Pass) << r.note;
}

TEST(Axioms, PmvNeedsLattice) {
    const Descriptor s = D("Zvec(2,strict)");
    const UnitIntervalContext ctx(s, E(s, "(2,2)"));
    EXPECT_THROW(check_pmv_axioms(ctx, box(2)), CapabilityError);
    EXPECT_EQ(check_pea_axioms(ctx, box(2)).verdict, Verdict::Pass);
}

TEST(Lattice, Classification) {
    const VerdictReport cw = check_lattice_or_antilattice(D("Zvec(2,cw)"), box(2));
    EXPECT_EQ(cw.verdict, Verdict::Pass);
    EXPECT_NE(cw.note.find("lattice evidence"), std::string::npos);

    const VerdictReport st = check_lattice_or_antilattice(D("Zvec(2,strict)"), box(2));
    EXPECT_EQ(st.verdict, Verdict::Fail);
    EXPECT_NE(st.note.find("antilattice evidence"), std::string::npos);

    const VerdictReport rw = check_lattice_or_antilattice(D("rwz(Zvec(2,cw))"), box(2));
    EXPECT_EQ(rw.verdict, Verdict::Fail);
    EXPECT_NE(rw.note.find("non-lattice evidence"), std::string::npos);
}

TEST(ZeroShiftLowerBounds, AllBelowBothAndStoppable) {
    const Descriptor w = D("rwz(Zvec(2,cw))");
    const Elem x = E(w, "(0;{0:(2,1)})"), y = E(w, "(0;{0:(1,2)})");
    std::uint64_t seen = 0;
    const std::uint64_t n = for_each_zero_shift_lower_bound(w, x, y, 1, [&](const Elem& z) {
        ++seen;
        EXPECT_TRUE(leq(w, z, x) && leq(w, z, y));
        EXPECT_EQ(z.shift().as_integer(), 0);
        return true;
    });
    EXPECT_EQ(n, seen);
    EXPECT_GT(n, 100u);
    const std::uint64_t stopped = for_each_zero_shift_lower_bound(w, x, y, 1, [](const Elem&) { return false; });
    EXPECT_EQ(stopped, 1u);
}

// Engine tables re-verify under the brute validator, and brute existence
// implies engine success.
TEST(OracleAgreement, EnginesVersusBruteSearch) {
    for (const char* text : {"Zvec(2,cw)", "lex(Z,Zvec(2,cw))", "wr(Z,Z)"}) {
        const Descriptor d = D(text);
        const auto pos = positives(d, 1);
        for_each_box_quadruple(d, pos, 1, [&](const Quadruple& q) {
            const BruteSearch b = brute_rdp_search(d, RdpKind::RDP, q);
            ASSERT_EQ(b.outcome, SearchOutcome::Found) << text;
            const RefinementTable t = decompose(d, RdpKind::RDP, q);
            ASSERT_TRUE(table_sums_hold(d, q, t)) << text << " " << show(q);
        });
    }
}

TEST(Interpolation, EngineAvailability) {
    EXPECT_TRUE(has_interpolation_engine(D("rwz(Z)")));
    EXPECT_TRUE(has_interpolation_engine(D("Zvec(2,cw)")));
    const Descriptor d = D("lex(Z,Z)");
    const Elem c = interpolate(d, E(d, "(0;1)"), E(d, "(0;2)"), E(d, "(1;-4)"), E(d, "(0;7)"));
    EXPECT_TRUE(leq(d, E(d, "(0;2)"), c) && leq(d, c, E(d, "(0;7)")));
}

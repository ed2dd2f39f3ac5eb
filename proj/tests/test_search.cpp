#include <gtest/gtest.h>

#include <set>

#include "rdpforge/errors.hpp"
#include "rdpforge/search.hpp"
#include "rdpforge/verifier.hpp"
#include "support.hpp"

using namespace rdpforge;
using namespace rdpforge::testing;

namespace {

SearchConfig config(const char* group, int radius) {
    SearchConfig c;
    c.group = D(group);
    c.radius = radius;
    return c;
}

}  // namespace

TEST(OpenProblem, Names) {
    EXPECT_EQ(parse_open_problem("remark32"), OpenProblem::Remark32);
    EXPECT_EQ(parse_open_problem("wreath-rdp"), OpenProblem::WreathRdp);
    EXPECT_THROW(parse_open_problem("riemann"), InputError);
    EXPECT_STREQ(to_string(OpenProblem::WreathRdp), "wreath-rdp");
    EXPECT_EQ(default_search_group(OpenProblem::Remark32), D("lex(Zvec(2,cw),Z)"));
    EXPECT_EQ(default_search_group(OpenProblem::WreathRdp), D("rwz(Z)"));
}

TEST(Checkpoint, RoundTrip) {
    SearchCheckpoint c;
    c.problem = "wreath-rdp";
    c.descriptor = "rwz(Z)";
    c.kind = "RDP";
    c.seed = 9;
    c.radius_completed = 2;
    c.checked = 8843;
    c.engine_tables = 8843;
    c.first_undecided = "";
    const std::string text = checkpoint_to_json(c);
    EXPECT_EQ(checkpoint_from_json(text), c);
    EXPECT_EQ(checkpoint_to_json(checkpoint_from_json(text)), text);
}

TEST(Checkpoint, RejectsMalformed) {
    EXPECT_THROW(checkpoint_from_json("not json"), InputError);
    EXPECT_THROW(checkpoint_from_json("{}"), InputError);
    SearchCheckpoint c;
    c.version = 2;
    EXPECT_THROW(checkpoint_from_json(checkpoint_to_json(c)), InputError);
}

TEST(SearchBox, WeightMetricSizes) {
    const Descriptor w = D("rwz(Z)");
    EXPECT_EQ(search_box(w, 0).size(), 1u);
    EXPECT_EQ(search_box(w, 1).size(), 9u);
    EXPECT_EQ(search_box(w, 2).size(), 85u);
    for (int r = 0; r < 2; ++r) {
        std::set<std::string> big;
        for (const Elem& x : search_box(w, r + 1)) big.insert(format_elem(x));
        for (const Elem& x : search_box(w, r)) {
            EXPECT_TRUE(big.count(format_elem(x)));
            EXPECT_TRUE(in_search_box(w, x, r));
        }
    }
    EXPECT_FALSE(in_search_box(w, E(w, "(1;{0:1})"), 1));
    EXPECT_TRUE(in_search_box(w, E(w, "(1;{0:1})"), 2));
    EXPECT_EQ(search_box(D("Zvec(2,cw)"), 1).size(), 9u);
}

TEST(Search, ZeroRadiusIsPassBoxed) {
    const SearchResult r = search_open_problem(OpenProblem::WreathRdp, config("rwz(Z)", 0));
    EXPECT_EQ(r.report.verdict, Verdict::Inconclusive);
    EXPECT_EQ(r.report.note.rfind("pass-boxed", 0), 0u) << r.report.note;
    EXPECT_EQ(r.frontier.radius_completed, 0);
}

TEST(Search, WreathRdpRadiusOneSettlesByEngine) {
    const SearchResult r = search_open_problem(OpenProblem::WreathRdp, config("rwz(Z)", 1));
    EXPECT_EQ(r.report.verdict, Verdict::Inconclusive);
    EXPECT_EQ(r.report.note.rfind("pass-boxed", 0), 0u);
    EXPECT_EQ(r.frontier.radius_completed, 1);
    EXPECT_EQ(r.frontier.undecided, 0u);
    EXPECT_EQ(r.frontier.checked, r.frontier.engine_tables + r.frontier.brute_tables);
}

TEST(Search, ResumeMatchesFreshRun) {
    std::vector<SearchCheckpoint> seen;
    SearchConfig first = config("lex(Zvec(2,cw),Z)", 1);
    first.on_checkpoint = [&](const SearchCheckpoint& c) { seen.push_back(c); };
    const SearchResult partial = search_open_problem(OpenProblem::Remark32, first);
    ASSERT_EQ(seen.size(), 2u);
    EXPECT_EQ(seen.back(), partial.frontier);

    SearchConfig resumed = config("lex(Zvec(2,cw),Z)", 2);
    resumed.resume = checkpoint_from_json(checkpoint_to_json(partial.frontier));
    const SearchResult a = search_open_problem(OpenProblem::Remark32, resumed);
    const SearchResult b = search_open_problem(OpenProblem::Remark32, config("lex(Zvec(2,cw),Z)", 2));
    EXPECT_EQ(a.frontier, b.frontier);
    EXPECT_EQ(a.report.note, b.report.note);
    EXPECT_EQ(a.report.verdict, b.report.verdict);
    EXPECT_EQ(a.report.stats.checked, b.report.stats.checked);
}

TEST(Search, ResumeMustMatchProblem) {
    SearchConfig c = config("rwz(Z)", 1);
    SearchCheckpoint other;
    other.problem = "remark32";
    other.descriptor = "lex(Zvec(2,cw),Z)";
    other.kind = "RDP";
    other.radius_completed = 0;
    c.resume = other;
    EXPECT_THROW(search_open_problem(OpenProblem::WreathRdp, c), InputError);
}

TEST(Search, ThreadsDoNotChangeResult) {
    SearchConfig one = config("lex(Zvec(2,cw),Z)", 1), many = config("lex(Zvec(2,cw),Z)", 1);
    many.threads = 3;
    const SearchResult a = search_open_problem(OpenProblem::Remark32, one);
    const SearchResult b = search_open_problem(OpenProblem::Remark32, many);
    EXPECT_EQ(a.frontier, b.frontier);
    EXPECT_EQ(a.report.counterexamples, b.report.counterexamples);
}

TEST(Search, StrictHeadYieldsCertifiedCounterexample) {
    const SearchResult r = search_open_problem(OpenProblem::Remark32, config("lex(Zvec(2,strict),Z)", 2));
    ASSERT_EQ(r.report.verdict, Verdict::Fail);
    ASSERT_FALSE(r.report.counterexamples.empty());
    const Descriptor d = D("lex(Zvec(2,strict),Z)");
    const auto& xs = r.report.counterexamples.front().elems;
    ASSERT_EQ(xs.size(), 4u);
    const Quadruple q{xs[0], xs[1], xs[2], xs[3]};
    EXPECT_EQ(brute_rdp_search(d, RdpKind::RDP, q).outcome, SearchOutcome::NoneExists);
    EXPECT_LT(r.frontier.radius_completed, 2);
}

TEST(Search, BudgetStopsInconclusive) {
    SearchConfig c = config("rwz(Z)", 2);
    c.max_quadruples = 50;
    const SearchResult r = search_open_problem(OpenProblem::WreathRdp, c);
    EXPECT_EQ(r.report.verdict, Verdict::Inconclusive);
    EXPECT_EQ(r.report.note.find("pass-boxed"), std::string::npos);
    EXPECT_LE(r.report.stats.checked, 50u);
}

TEST(Search, ShapeAndCapabilityErrors) {
    EXPECT_THROW(search_open_problem(OpenProblem::Remark32, config("lex(Q,Z)", 1)), CapabilityError);
    EXPECT_THROW(search_open_problem(OpenProblem::Remark32, config("rwz(Z)", 1)), CapabilityError);
    EXPECT_THROW(search_open_problem(OpenProblem::WreathRdp, config("lex(Z,Z)", 1)), CapabilityError);
    SearchConfig rip = config("rwz(Z)", 1);
    rip.kind = RdpKind::RIP;
    EXPECT_THROW(search_open_problem(OpenProblem::WreathRdp, rip), InputError);
}

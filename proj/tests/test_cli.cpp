#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "report.hpp"

using rdpforge::cli::Json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = rdpforge::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("rdpforge_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, CheckLexRdp1) {
    const CliResult r = run({"check", "--group", "lex(Z,Z)", "--kind", "rdp1", "--radius", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    const Json j = r.json();
    EXPECT_EQ(j["verdict"], "pass");
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["command"], "check");
    EXPECT_EQ(j["descriptor"], "lex(Z,Z)");
}

TEST(Cli, ReportFieldOrder) {
    const CliResult r = run({"check", "rdp", "--group", "Z", "--radius", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const Json doc = r.json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    const std::vector<std::string> expected{"schema_version", "command", "descriptor", "parameters", "verdict",
                                            "mode", "note", "failed", "witnesses", "counterexamples", "stats"};
    EXPECT_EQ(keys, expected);
    std::vector<std::string> stats;
    for (const auto& [k, v] : doc["stats"].items()) stats.push_back(k);
    EXPECT_EQ(stats, (std::vector<std::string>{"checked", "elapsed_ms", "seed", "radius"}));
}

TEST(Cli, DecomposeCaseIv) {
    const CliResult r = run({"decompose", "--group", "lex(Z,Z)", "--kind", "rdp", "--elems", "(2,5);(0,3);(0,1);(2,7)",
                       "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.out;
    const Json j = r.json();
    EXPECT_EQ(j["case"], "iv");
    EXPECT_EQ(j["engine"], "linear");
    EXPECT_EQ(j["table"]["c11"], "(0;1)");
    EXPECT_EQ(j["table"]["c12"], "(2;4)");
    EXPECT_EQ(j["table"]["c21"], "(0;0)");
    EXPECT_EQ(j["table"]["c22"], "(0;3)");
}

TEST(Cli, DecomposeTextShowsLabelledTable) {
    const CliResult r = run({"decompose", "--group", "lex(Z,Z)", "--elems", "(2,5);(0,3);(0,1);(2,7)"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("a1 = (2;5)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("b2 = (2;7)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("case: iv"), std::string::npos);
}

TEST(Cli, DecomposeNoTableIsFail) {
    const CliResult r = run({"decompose", "--group", "Zvec(2,strict)", "--elems", "(1,2);(2,1);(1,1);(2,2)", "--format",
                       "json"});
    EXPECT_EQ(r.code, 1);
    const Json j = r.json();
    EXPECT_EQ(j["verdict"], "fail");
    ASSERT_FALSE(j["counterexamples"].empty());
}

TEST(Cli, DecomposeBruteFallback) {
    const CliResult r = run({"decompose", "--group", "lex(Zvec(2,cw),Z)", "--elems", "((1,0);0);((0,1);0);((0,1);0);((1,0);0)",
                       "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(r.json().contains("table"));
}

TEST(Cli, SearchRemark32RadiusOne) {
    const CliResult r = run({"search", "remark32", "--group", "lex(Zvec(2,cw),Z)", "--radius", "1", "--format", "json"});
    EXPECT_TRUE(r.code == 2 || r.code == 1) << r.out;
    const Json j = r.json();
    EXPECT_TRUE(j.contains("frontier"));
    EXPECT_EQ(j["frontier"]["radius_completed"], 1);
}

TEST(Cli, SearchDeterministicAndResumable) {
    const std::vector<std::string> base{"search", "wreath-rdp", "--group", "rwz(Z)", "--format", "json"};
    auto with = [&](std::vector<std::string> extra) {
        std::vector<std::string> a = base;
        a.insert(a.end(), extra.begin(), extra.end());
        return run(a);
    };
    const CliResult full1 = with({"--radius", "2"});
    const CliResult full2 = with({"--radius", "2"});
    EXPECT_EQ(full1.out, full2.out);
    const auto ck = temp_file("ck.json");
    std::filesystem::remove(ck);
    const CliResult part = with({"--radius", "1", "--checkpoint", ck.string()});
    EXPECT_EQ(part.code, 2);
    ASSERT_TRUE(std::filesystem::exists(ck));
    const CliResult resumed = with({"--radius", "2", "--resume", ck.string()});
    EXPECT_EQ(resumed.out, full1.out);
    EXPECT_EQ(Json::parse(slurp(ck))["radius_completed"], 2);
    std::filesystem::remove(ck);
}

TEST(Cli, InterpolateRwz) {
    const CliResult r = run({"interpolate", "--group", "rwz(Z)", "--elems", "(0;{0:1});(0;{1:1});(0;{1:2});(0;{0:5,1:2})",
                       "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.out;
    const Json j = r.json();
    EXPECT_TRUE(j.contains("case"));
    ASSERT_FALSE(j["witnesses"].empty());
}

TEST(Cli, AxiomsGamma5) {
    const CliResult r = run({"axioms", "--group", "Z", "--unit", "5", "--radius", "5", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.out;
    const std::string note = r.json()["note"];
    EXPECT_NE(note.find("pea"), std::string::npos);
    EXPECT_NE(note.find("pmv"), std::string::npos);
}

TEST(Cli, CheckPmvAndLattice) {
    const CliResult p = run({"check", "pmv", "--group", "Z", "--unit", "5", "--radius", "5", "--format", "json"});
    EXPECT_EQ(p.code, 0);
    EXPECT_EQ(p.json()["stats"]["checked"], 216);
    const CliResult l = run({"check", "lattice", "--group", "Zvec(2,strict)", "--radius", "2", "--format", "json"});
    EXPECT_EQ(l.code, 1);
}

TEST(Cli, ErrorsAreDiagnosticObjects) {
    const CliResult parse = run({"check", "rdp", "--group", "lex(Z,Zq)", "--format", "json"});
    EXPECT_EQ(parse.code, 3);
    Json j = parse.json();
    EXPECT_EQ(j["error"]["type"], "parse_error");
    EXPECT_EQ(j["error"]["line"], 1);
    EXPECT_EQ(j["error"]["column"], 7);

    const CliResult cap = run({"check", "rdp", "--group", "wr(Zvec(2,cw),Z)", "--format", "json"});
    EXPECT_EQ(cap.code, 3);
    EXPECT_EQ(cap.json()["error"]["type"], "capability_error");

    const CliResult usage = run({"check", "--group", "Z", "--format", "json"});
    EXPECT_EQ(usage.code, 3);
    EXPECT_EQ(usage.json()["error"]["type"], "usage_error");

    const CliResult unknown = run({"frobnicate"});
    EXPECT_EQ(unknown.code, 3);

    const CliResult pmv = run({"check", "pmv", "--group", "Zvec(2,strict)", "--unit", "(2,2)", "--format", "json"});
    EXPECT_EQ(pmv.code, 3);
    EXPECT_EQ(pmv.json()["error"]["type"], "capability_error");
}

TEST(Cli, HelpExitsZero) {
    const CliResult r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE((r.out + r.err).find("search"), std::string::npos);
}

TEST(Cli, OutFileAndReportCommand) {
    const auto path = temp_file("report.json");
    const CliResult r = run({"check", "rdp", "--group", "Zvec(2,strict)", "--radius", "2", "--format", "json", "--out",
                       path.string()});
    EXPECT_EQ(r.code, 1);
    const std::string saved = slurp(path);
    ASSERT_FALSE(saved.empty());
    const CliResult text = run({"report", path.string()});
    EXPECT_EQ(text.code, 1);
    EXPECT_NE(text.out.find("verdict: fail"), std::string::npos) << text.out;
    EXPECT_NE(text.out.find("counterexamples:"), std::string::npos);
    const CliResult again = run({"report", path.string(), "--format", "json"});
    EXPECT_EQ(Json::parse(again.out), Json::parse(saved));
    std::filesystem::remove(path);

    const auto bad = temp_file("bad.json");
    std::ofstream(bad) << "{\"schema_version\": 99}";
    EXPECT_EQ(run({"report", bad.string()}).code, 3);
    std::filesystem::remove(bad);
}

TEST(Cli, ThreadsFromEnvironment) {
    ::setenv("RDPFORGE_THREADS", "2", 1);
    const CliResult a = run({"check", "rdp", "--group", "lex(Z,Z)", "--radius", "1", "--format", "json"});
    ::unsetenv("RDPFORGE_THREADS");
    const CliResult b = run({"check", "rdp", "--group", "lex(Z,Z)", "--radius", "1", "--format", "json"});
    Json ja = a.json(), jb = b.json();
    ja["parameters"].erase("threads");
    jb["parameters"].erase("threads");
    ja["stats"].erase("elapsed_ms");
    jb["stats"].erase("elapsed_ms");
    EXPECT_EQ(ja, jb);
}

TEST(Cli, ExitCodesMatchVerdicts) {
    const std::vector<std::vector<std::string>> cases{
        {"check", "rdp", "--group", "Z", "--radius", "2"},
        {"check", "rdp", "--group", "Zvec(2,strict)", "--radius", "2"},
        {"check", "rdp1", "--group", "lex(Q,Q)", "--samples", "50"},
        {"check", "rip", "--group", "Zvec(2,cw)", "--radius", "1"},
        {"search", "wreath-rdp", "--radius", "1"},
    };
    for (std::vector<std::string> args : cases) {
        args.insert(args.end(), {"--format", "json"});
        const CliResult r = run(args);
        EXPECT_EQ(r.code, static_cast<int>(rdpforge::cli::exit_code_of(r.json()))) << args[2];
    }
}

TEST(Report, RenderTextFromDocument) {
    Json doc = rdpforge::cli::error_json("check", "input_error", "bad input", 0, 0);
    EXPECT_EQ(rdpforge::cli::render_text(doc), "error (input_error): bad input\n");
    EXPECT_EQ(rdpforge::cli::exit_code_of(doc), rdpforge::cli::ExitCode::Usage);
    rdpforge::VerdictReport rep;
    rep.verdict = rdpforge::Verdict::Inconclusive;
    rep.note = "pass-boxed: test";
    doc = rdpforge::cli::report_json("search", "rwz(Z)", Json::object(), rep);
    const std::string text = rdpforge::cli::render_text(doc);
    EXPECT_NE(text.find("verdict: inconclusive (exhaustive)"), std::string::npos);
    EXPECT_NE(text.find("note: pass-boxed: test"), std::string::npos);
    EXPECT_EQ(rdpforge::cli::exit_code_of(doc), rdpforge::cli::ExitCode::Inconclusive);
}

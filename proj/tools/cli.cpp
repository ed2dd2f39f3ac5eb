#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rdpforge/decompose.hpp"
#include "rdpforge/enumerate.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"
#include "rdpforge/interval.hpp"
#include "rdpforge/lex.hpp"
#include "rdpforge/search.hpp"
#include "rdpforge/syntax.hpp"
#include "rdpforge/verifier.hpp"
#include "rdpforge/wreath.hpp"
#include "rdpforge/zwreath.hpp"
#include "report.hpp"

namespace rdpforge::cli {

namespace {

struct Options {
    std::string group;
    std::string kind;
    std::optional<int> radius;
    std::optional<std::int64_t> samples;
    std::uint64_t seed = 0;
    std::string unit;
    std::string elems;
    std::string format = "text";
    std::string out;
    std::string resume;
    std::string checkpoint;
    std::optional<int> threads;
    std::string target;  // positional: check kind, search problem or report file
};

// Thrown for missing or contradictory flags.
struct UsageError : Error {
    using Error::Error;
};

int thread_count(const Options& o) {
    if (o.threads) return std::max(*o.threads, 1);
    if (const char* env = std::getenv("RDPFORGE_THREADS")) {
        try {
            return std::max(std::stoi(env), 1);
        } catch (const std::exception&) {
            throw UsageError(std::string("RDPFORGE_THREADS is not a number: ") + env);
        }
    }
    return 1;
}

Descriptor group_of(const Options& o) {
    if (o.group.empty()) throw UsageError("--group is required");
    return parse_descriptor(o.group);
}

CheckBudget budget_of(const Options& o, int default_radius) {
    CheckBudget b;
    b.radius = o.radius.value_or(default_radius);
    if (b.radius < 0) throw UsageError("--radius must be non-negative");
    if (o.samples) b.samples = *o.samples;
    b.seed = o.seed;
    b.threads = thread_count(o);
    return b;
}

Json budget_params(const CheckBudget& b) {
    Json p;
    p["radius"] = b.radius;
    p["samples"] = b.samples;
    p["seed"] = b.seed;
    p["threads"] = b.threads;
    return p;
}

Quadruple quadruple_of(const Descriptor& d, const Options& o) {
    if (o.elems.empty()) throw UsageError("--elems needs four elements a1;a2;b1;b2");
    std::vector<Elem> xs = parse_elem_list(d, o.elems);
    if (xs.size() != 4) throw UsageError("--elems needs four elements a1;a2;b1;b2, got " + std::to_string(xs.size()));
    return {xs[0], xs[1], xs[2], xs[3]};
}

Json elem_texts(const std::vector<Elem>& xs) {
    Json a = Json::array();
    for (const Elem& x : xs) a.push_back(format_elem(x));
    return a;
}

UnitIntervalContext interval_of(const Descriptor& d, const Options& o) {
    if (o.unit.empty()) throw UsageError("--unit is required");
    return UnitIntervalContext(d, parse_elem(d, o.unit));
}

Json cmd_check(const Options& o) {
    const std::string what = o.target.empty() ? o.kind : o.target;
    if (what.empty()) throw UsageError("check needs one of rdp0, rdp, rdp1, rdp2, rip, pea, pmv, lattice");
    const Descriptor d = group_of(o);
    const CheckBudget b = budget_of(o, 3);
    Json p = budget_params(b);
    VerdictReport r;
    if (what == "pea" || what == "pmv") {
        const UnitIntervalContext ctx = interval_of(d, o);
        p["unit"] = format_elem(ctx.unit());
        r = what == "pea" ? check_pea_axioms(ctx, b) : check_pmv_axioms(ctx, b);
    } else if (what == "lattice") {
        r = check_lattice_or_antilattice(d, b);
    } else {
        const RdpKind k = parse_rdp_kind(what);
        r = check_rdp(d, k, b);
    }
    Json params;
    params["check"] = what;
    for (auto& [k, v] : p.items()) params[k] = v;
    return report_json("check", d.to_string(), std::move(params), r);
}

Json table_json(const RefinementTable& t) {
    Json j;
    j["c11"] = format_elem(t.c11);
    j["c12"] = format_elem(t.c12);
    j["c21"] = format_elem(t.c21);
    j["c22"] = format_elem(t.c22);
    return j;
}

std::optional<std::string> case_of(const Descriptor& d, const Quadruple& q) {
    try {
        CaseTag tag;
        if (d.kind() == Descriptor::Kind::Lex && d.head().is_linear())
            tag = classify_lex_quadruple(d, q);
        else if (d.kind() == Descriptor::Kind::Wreath)
            tag = classify_wreath_quadruple(d, q);
        else
            return std::nullopt;
        return std::string(to_string(tag.split)) + (tag.mirrored ? " (mirrored)" : "");
    } catch (const Error&) {
        return std::nullopt;
    }
}

Json cmd_decompose(const Options& o) {
    const Descriptor d = group_of(o);
    const RdpKind k = o.kind.empty() ? RdpKind::RDP : parse_rdp_kind(o.kind);
    if (k == RdpKind::RIP || k == RdpKind::RDP0) throw UsageError("decompose produces rdp, rdp1 or rdp2 tables");
    const Quadruple q = quadruple_of(d, o);
    require_positive_equal_sums(d, q);
    const std::vector<Elem> qe{q.a1, q.a2, q.b1, q.b2};
    Json params;
    params["kind"] = to_string(k);
    params["elems"] = elem_texts(qe);

    VerdictReport r;
    r.stats.checked = 1;
    std::optional<RefinementTable> table;
    std::string source;
    const Engine eng = engine_for(d, k);
    if (eng != Engine::None) {
        source = to_string(eng);
        try {
            table = decompose(d, k, q);
            CheckBudget b;
            b.radius = static_cast<int>(std::max<Elem::Integer>(
                {max_abs_coordinate(q.a1), max_abs_coordinate(q.a2), max_abs_coordinate(q.b1),
                 max_abs_coordinate(q.b2), 1}));
            try {
                const VerdictReport v = validate_table(d, q, *table, k, b);
                r.verdict = v.verdict;
                r.note = "engine table, validated";
                if (!v.passed()) r.note = "engine table did not validate: " + v.note;
            } catch (const CapabilityError& ex) {
                r.verdict = Verdict::Inconclusive;
                r.note = std::string("engine table, side conditions not checkable: ") + ex.what();
            }
        } catch (const NoTableExists& ex) {
            r.fail({"quadruple", qe});
            r.note = ex.what();
        }
    } else if (d.is_enumerable()) {
        source = "brute-search";
        const BruteSearch bs = brute_rdp_search(d, k, q);
        r.stats.checked = bs.scanned;
        if (bs.outcome == SearchOutcome::Found) {
            table = bs.table;
            r.note = "first table in enumeration order";
        } else if (bs.outcome == SearchOutcome::NoneExists) {
            r.fail({"quadruple", qe});
            r.note = "no table: complete candidate scan";
        } else {
            r.verdict = Verdict::Inconclusive;
            r.note = "no table among the boxed candidates; scan incomplete";
        }
    } else {
        throw CapabilityError(std::string("no ") + to_string(k) + " engine and no enumeration for " + d.to_string());
    }
    if (table) r.witnesses.push_back({"table", {table->c11, table->c12, table->c21, table->c22}});
    Json j = report_json("decompose", d.to_string(), std::move(params), r);
    j["engine"] = source;
    if (auto c = case_of(d, q)) j["case"] = *c;
    if (table) j["table"] = table_json(*table);
    return j;
}

Json cmd_interpolate(const Options& o) {
    const Descriptor d = group_of(o);
    const Quadruple q = quadruple_of(d, o);
    const std::vector<Elem> qe{q.a1, q.a2, q.b1, q.b2};
    for (const Elem* a : {&q.a1, &q.a2})
        for (const Elem* b : {&q.b1, &q.b2})
            if (!leq(d, *a, *b))
                throw InputError("interpolation needs a1, a2 <= b1, b2; " + format_elem(*a) + " is not below " +
                                 format_elem(*b));
    Json params;
    params["elems"] = elem_texts(qe);
    VerdictReport r;
    r.stats.checked = 1;
    std::optional<Elem> c;
    std::string source, branch;
    if (d.is_z_wreath()) {
        const InterpResult ir = d.kind() == Descriptor::Kind::RightWreathZ
                                    ? rw_interpolate_traced(d, q.a1, q.a2, q.b1, q.b2)
                                    : lw_interpolate_traced(d, q.a1, q.a2, q.b1, q.b2);
        c = ir.c;
        source = "engine";
        branch = std::string(to_string(ir.which)) + (ir.detail.empty() ? "" : " " + ir.detail);
    } else if (has_interpolation_engine(d)) {
        c = interpolate(d, q.a1, q.a2, q.b1, q.b2);
        source = "engine";
    } else if (d.is_enumerable()) {
        source = "brute-search";
        const int radius = static_cast<int>(std::max<Elem::Integer>(
            {max_abs_coordinate(q.a1), max_abs_coordinate(q.a2), max_abs_coordinate(q.b1),
             max_abs_coordinate(q.b2), 1}));
        const CandidateSet cs = candidates_between(d, {q.a1, q.a2}, {q.b1, q.b2}, radius);
        if (!cs.elems.empty()) {
            c = cs.elems.front();
        } else if (cs.complete) {
            r.fail({"no interpolant", qe});
            r.note = "complete candidate scan";
        } else {
            r.verdict = Verdict::Inconclusive;
            r.note = "no interpolant among the boxed candidates; scan incomplete";
        }
    } else {
        throw CapabilityError("no interpolation engine and no enumeration for " + d.to_string());
    }
    if (c) {
        const bool ok = leq(d, q.a1, *c) && leq(d, q.a2, *c) && leq(d, *c, q.b1) && leq(d, *c, q.b2);
        if (!ok) {
            r.fail({"interpolant out of bounds", {*c}});
        } else {
            r.witnesses.push_back({"interpolant", {*c}});
            r.note = "a1, a2 <= c <= b1, b2 verified";
        }
    }
    Json j = report_json("interpolate", d.to_string(), std::move(params), r);
    j["engine"] = source;
    if (!branch.empty()) j["case"] = branch;
    return j;
}

Json cmd_axioms(const Options& o) {
    const Descriptor d = group_of(o);
    const CheckBudget b = budget_of(o, 3);
    const UnitIntervalContext ctx = interval_of(d, o);
    VerdictReport r = check_pea_axioms(ctx, b);
    r.note = "pea " + r.note;
    if (d.has_lattice_ops()) {
        const VerdictReport m = check_pmv_axioms(ctx, b);
        r.verdict = combine(r.verdict, m.verdict);
        if (m.mode == Mode::Sampled) r.mode = Mode::Sampled;
        for (const auto& f : m.failed) r.failed.push_back(f);
        for (const auto& w : m.witnesses) r.witnesses.push_back(w);
        for (const auto& w : m.counterexamples) r.counterexamples.push_back(w);
        r.stats.checked += m.stats.checked;
        r.stats.elapsed_ms += m.stats.elapsed_ms;
        r.note += "; pmv " + m.note;
    } else {
        r.note += "; pmv skipped, no lattice ops";
    }
    Json p = budget_params(b);
    p["unit"] = format_elem(ctx.unit());
    return report_json("axioms", d.to_string(), std::move(p), r);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

Json frontier_json(const SearchCheckpoint& f) { return Json::parse(checkpoint_to_json(f)); }

Json cmd_search(const Options& o) {
    if (o.target.empty()) throw UsageError("search needs remark32 or wreath-rdp");
    const OpenProblem p = parse_open_problem(o.target);
    SearchConfig cfg;
    cfg.group = o.group.empty() ? default_search_group(p) : parse_descriptor(o.group);
    cfg.kind = o.kind.empty() ? default_search_kind(p) : parse_rdp_kind(o.kind);
    cfg.radius = o.radius.value_or(2);
    if (cfg.radius < 0) throw UsageError("--radius must be non-negative");
    cfg.seed = o.seed;
    cfg.threads = thread_count(o);
    if (o.samples) {
        if (*o.samples <= 0) throw UsageError("--samples must be positive");
        cfg.max_quadruples = static_cast<std::uint64_t>(*o.samples);
    }
    if (!o.resume.empty()) cfg.resume = checkpoint_from_json(read_file(o.resume));
    const std::string ckpt = o.checkpoint.empty() ? o.resume : o.checkpoint;
    if (!ckpt.empty()) cfg.on_checkpoint = [&](const SearchCheckpoint& f) { write_file(ckpt, checkpoint_to_json(f)); };

    const SearchResult res = search_open_problem(p, cfg);
    // Checkpoint paths stay out of the report so resumed and fresh runs match.
    Json params;
    params["problem"] = to_string(p);
    params["kind"] = to_string(cfg.kind);
    params["radius"] = cfg.radius;
    params["max_quadruples"] = cfg.max_quadruples;
    params["seed"] = cfg.seed;
    Json j = report_json("search", cfg.group.to_string(), std::move(params), res.report);
    j["frontier"] = frontier_json(res.frontier);
    return j;
}

Json cmd_report(const Options& o) {
    if (o.target.empty()) throw UsageError("report needs a JSON report file");
    Json doc;
    try {
        doc = Json::parse(read_file(o.target));
    } catch (const Json::parse_error& ex) {
        throw InputError(std::string("not a JSON report: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("schema_version")) throw InputError("not a report document");
    if (doc.at("schema_version") != schema_version)
        throw InputError("unsupported schema_version " + doc.at("schema_version").dump());
    return doc;
}

// First value of --format in raw arguments, so errors before parsing still
// honor it.
std::string sniff_format(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format" && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind("--format=", 0) == 0) return args[i].substr(9);
    }
    return "text";
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
    const std::string text = o.format == "json" ? doc.dump(2) + "\n" : render_text(doc);
    if (o.out.empty())
        out << text;
    else
        write_file(o.out, text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Riesz decomposition checks on towers of partially ordered groups", "rdpforge"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--group", o.group, "Tower expression, e.g. lex(Z,Zvec(2,cw))");
    app.add_option("--kind", o.kind, "rip | rdp0 | rdp | rdp1 | rdp2");
    app.add_option("--radius", o.radius, "Box radius");
    app.add_option("--samples", o.samples, "Sample count (check) or quadruple budget (search)");
    app.add_option("--seed", o.seed, "Random seed");
    app.add_option("--unit", o.unit, "Strong unit u of the interval [0, u]");
    app.add_option("--elems", o.elems, "Element list a1;a2;b1;b2");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", o.out, "Write the report to FILE");
    app.add_option("--resume", o.resume, "Resume a search from a checkpoint FILE");
    app.add_option("--checkpoint", o.checkpoint, "Write search checkpoints to FILE (default: the --resume file)");
    app.add_option("--threads", o.threads, "Worker threads (default RDPFORGE_THREADS or 1)");

    auto* check = app.add_subcommand("check", "Property check: rdp0 rdp rdp1 rdp2 rip pea pmv lattice");
    check->add_option("property", o.target, "Property to check");
    app.add_subcommand("decompose", "Refinement table for --elems a1;a2;b1;b2");
    app.add_subcommand("interpolate", "Interpolant for --elems a1;a2;b1;b2 with a1, a2 <= b1, b2");
    app.add_subcommand("axioms", "Interval algebra axioms on [0, --unit]");
    auto* search = app.add_subcommand("search", "Open-problem search: remark32 | wreath-rdp");
    search->add_option("problem", o.target, "Problem to search");
    auto* report = app.add_subcommand("report", "Pretty-print a JSON report");
    report->add_option("file", o.target, "Report file")->required();

    std::string command = "rdpforge";
    const bool json_errors = sniff_format(args) == "json";
    auto fail_with = [&](const std::string& type, const std::string& msg, int line = 0, int column = 0) {
        const Json doc = error_json(command, type, msg, line, column);
        if (json_errors)
            out << doc.dump(2) << "\n";
        else
            err << render_text(doc);
        return static_cast<int>(ExitCode::Usage);
    };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& ex) {
        return fail_with("usage_error", ex.what());
    }
    command = app.get_subcommands().front()->get_name();

    try {
        Json doc;
        if (command == "check") doc = cmd_check(o);
        else if (command == "decompose") doc = cmd_decompose(o);
        else if (command == "interpolate") doc = cmd_interpolate(o);
        else if (command == "axioms") doc = cmd_axioms(o);
        else if (command == "search") doc = cmd_search(o);
        else doc = cmd_report(o);
        emit(doc, o, out);
        return static_cast<int>(exit_code_of(doc));
    } catch (const ParseError& ex) {
        return fail_with("parse_error", ex.what(), ex.line(), ex.column());
    } catch (const CapabilityError& ex) {
        return fail_with("capability_error", ex.what());
    } catch (const UsageError& ex) {
        return fail_with("usage_error", ex.what());
    } catch (const Error& ex) {
        return fail_with("input_error", ex.what());
    }
}

}  // namespace rdpforge::cli

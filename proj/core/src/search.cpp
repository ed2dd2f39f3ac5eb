#include "rdpforge/search.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "parallel.hpp"
#include "rdpforge/decompose.hpp"
#include "rdpforge/enumerate.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"
#include "rdpforge/syntax.hpp"
#include "rdpforge/verifier.hpp"

namespace rdpforge {

using Integer = Elem::Integer;

const char* to_string(OpenProblem p) {
    switch (p) {
    case OpenProblem::Remark32: return "remark32";
    case OpenProblem::WreathRdp: return "wreath-rdp";
    }
    return "?";
}

OpenProblem parse_open_problem(const std::string& text) {
    std::string t = text;
    for (char& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (t == "remark32") return OpenProblem::Remark32;
    if (t == "wreath-rdp") return OpenProblem::WreathRdp;
    throw InputError("unknown search problem '" + text + "' (expected remark32 or wreath-rdp)");
}

Descriptor default_search_group(OpenProblem p) {
    if (p == OpenProblem::Remark32)
        return Descriptor::lex(Descriptor::int_vec(2, ConeKind::Coordinatewise), Descriptor::integers());
    return Descriptor::right_wreath_z(Descriptor::integers());
}

RdpKind default_search_kind(OpenProblem) { return RdpKind::RDP; }

std::string checkpoint_to_json(const SearchCheckpoint& c) {
    nlohmann::ordered_json j;
    j["version"] = c.version;
    j["problem"] = c.problem;
    j["descriptor"] = c.descriptor;
    j["kind"] = c.kind;
    j["seed"] = c.seed;
    j["radius_completed"] = c.radius_completed;
    j["checked"] = c.checked;
    j["engine_tables"] = c.engine_tables;
    j["brute_tables"] = c.brute_tables;
    j["undecided"] = c.undecided;
    j["first_undecided"] = c.first_undecided;
    return j.dump(2) + "\n";
}

SearchCheckpoint checkpoint_from_json(const std::string& text) {
    SearchCheckpoint c;
    try {
        const auto j = nlohmann::json::parse(text);
        c.version = j.at("version").get<int>();
        if (c.version != 1) throw InputError("unsupported checkpoint version " + std::to_string(c.version));
        c.problem = j.at("problem").get<std::string>();
        c.descriptor = j.at("descriptor").get<std::string>();
        c.kind = j.at("kind").get<std::string>();
        c.seed = j.at("seed").get<std::uint64_t>();
        c.radius_completed = j.at("radius_completed").get<int>();
        c.checked = j.at("checked").get<std::uint64_t>();
        c.engine_tables = j.at("engine_tables").get<std::uint64_t>();
        c.brute_tables = j.at("brute_tables").get<std::uint64_t>();
        c.undecided = j.at("undecided").get<std::uint64_t>();
        c.first_undecided = j.at("first_undecided").get<std::string>();
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed checkpoint: ") + ex.what());
    }
    return c;
}

namespace {

Integer weight(const Elem& x) { return max_abs_coordinate(x); }

Integer wreath_weight(const Elem& x) {
    const auto& w = x.as_wreath();
    Integer s = weight(*w.shift);
    for (const Elem& v : w.values) s += weight(v);
    return s;
}

std::vector<Elem> weighted_wreath_box(const Descriptor& desc, int r) {
    const Descriptor& A = desc.index();
    const Descriptor& G = desc.fiber();
    std::vector<Elem> keys = enumerate_box(A, r);
    std::sort(keys.begin(), keys.end(),
              [&](const Elem& p, const Elem& q) { return detail::compare_linear(A, p, q) < 0; });
    const Elem eg = identity(G);
    std::vector<Elem> values;
    for (Elem& v : enumerate_box(G, r))
        if (!(v == eg)) values.push_back(std::move(v));

    std::vector<Elem> out;
    std::vector<Elem> ks, vs;
    for (const Elem& s : keys) {
        const Integer ws = weight(s);
        if (ws > r) continue;
        // Supports as increasing key sequences with total value weight <= rem.
        auto rec = [&](auto&& self, std::size_t from, Integer rem) -> void {
            out.push_back(Elem::wreath(s, ks, vs));
            for (std::size_t i = from; i < keys.size(); ++i)
                for (const Elem& v : values) {
                    const Integer wv = weight(v);
                    if (wv > rem) continue;
                    ks.push_back(keys[i]);
                    vs.push_back(v);
                    self(self, i + 1, rem - wv);
                    ks.pop_back();
                    vs.pop_back();
                }
        };
        rec(rec, 0, r - ws);
    }
    return out;
}

void require_problem_shape(OpenProblem p, const Descriptor& d) {
    if (!d.is_enumerable()) throw CapabilityError("search needs an enumerable group, got " + d.to_string());
    if (p == OpenProblem::Remark32 && d.kind() != Descriptor::Kind::Lex)
        throw CapabilityError("remark32 searches lex products, got " + d.to_string());
    if (p == OpenProblem::WreathRdp && !d.is_z_wreath())
        throw CapabilityError("wreath-rdp searches rwz or lwz groups, got " + d.to_string());
}

enum class Outcome { Skip, Engine, Brute, Undecided, Counterexample, Disagreement };

struct QuadResult {
    Outcome outcome = Outcome::Skip;
    std::vector<Witness> witnesses;
};

QuadResult settle(const Descriptor& desc, RdpKind kind, const Quadruple& q) {
    const Witness qw{"quadruple", {q.a1, q.a2, q.b1, q.b2}};
    bool engine_none = false;
    if (engine_for(desc, kind) != Engine::None) {
        try {
            const RefinementTable t = decompose(desc, kind, q);
            CheckBudget b;
            b.radius = static_cast<int>(std::max<Integer>(
                {weight(q.a1), weight(q.a2), weight(q.b1), weight(q.b2), Integer{1}}));
            const Verdict v = validate_table(desc, q, t, kind, b).verdict;
            if (v == Verdict::Pass) return {Outcome::Engine, {}};
            if (v == Verdict::Fail)
                return {Outcome::Disagreement, {qw, {"invalid engine table", {t.c11, t.c12, t.c21, t.c22}}}};
        } catch (const NoTableExists&) {
            engine_none = true;
        } catch (const CapabilityError&) {
        }
    }
    const BruteSearch bs = brute_rdp_search(desc, kind, q);
    if (bs.outcome == SearchOutcome::Found) {
        if (engine_none) {
            const RefinementTable& t = *bs.table;
            return {Outcome::Disagreement, {qw, {"table missed by engine", {t.c11, t.c12, t.c21, t.c22}}}};
        }
        return {Outcome::Brute, {}};
    }
    if (bs.outcome == SearchOutcome::NoneExists) return {Outcome::Counterexample, {qw}};
    return {Outcome::Undecided, {qw}};
}

std::string quad_text(const Witness& w) {
    std::string s;
    for (std::size_t i = 0; i < w.elems.size(); ++i) s += (i ? ", " : "") + format_elem(w.elems[i]);
    return s;
}

constexpr std::size_t max_counterexamples = 256;

}  // namespace

std::vector<Elem> search_box(const Descriptor& desc, int radius) {
    if (radius < 0) throw InputError("negative search radius");
    if (desc.is_wreath_like()) return weighted_wreath_box(desc, radius);
    return enumerate_box(desc, radius);
}

bool in_search_box(const Descriptor& desc, const Elem& x, int radius) {
    if (!in_box(desc, x, radius)) return false;
    return !desc.is_wreath_like() || wreath_weight(x) <= radius;
}

SearchResult search_open_problem(OpenProblem problem, const SearchConfig& config) {
    const Descriptor& d = config.group;
    require_problem_shape(problem, d);
    if (config.kind == RdpKind::RIP || config.kind == RdpKind::RDP0)
        throw InputError("search covers RDP, RDP1 and RDP2");
    if (config.radius < 0) throw InputError("negative search radius");

    SearchResult res;
    SearchCheckpoint& f = res.frontier;
    f.problem = to_string(problem);
    f.descriptor = d.to_string();
    f.kind = to_string(config.kind);
    f.seed = config.seed;
    if (config.resume) {
        const SearchCheckpoint& c = *config.resume;
        if (c.problem != f.problem || c.descriptor != f.descriptor || c.kind != f.kind || c.seed != f.seed)
            throw InputError("checkpoint is for " + c.problem + " on " + c.descriptor + " (" + c.kind + ", seed " +
                             std::to_string(c.seed) + "), not " + f.problem + " on " + f.descriptor + " (" + f.kind +
                             ", seed " + std::to_string(f.seed) + ")");
        f = c;
    }

    VerdictReport& r = res.report;
    r.stats.radius = config.radius;
    r.stats.seed = config.seed;
    std::uint64_t failing = 0;
    bool budget_hit = false;

    for (int level = f.radius_completed + 1; level <= config.radius && !budget_hit; ++level) {
        const std::vector<Elem> box = search_box(d, level);
        std::vector<Elem> pos;
        for (const Elem& x : box)
            if (detail::positive(d, x)) pos.push_back(x);

        // Triples (a1, a2, b1) of positives in index order; b2 is determined.
        // Quadruples entirely inside the previous level were settled there.
        const std::size_t n = pos.size();
        const std::size_t total = n * n * n;
        auto job = [&](std::size_t t) -> QuadResult {
            const Elem& a1 = pos[t / (n * n)];
            const Elem& a2 = pos[t / n % n];
            const Elem& b1 = pos[t % n];
            Elem b2 = detail::add(d, detail::add(d, detail::neg(d, b1), a1), a2);
            if (!detail::positive(d, b2) || !in_search_box(d, b2, level)) return {};
            if (level > 0 && in_search_box(d, a1, level - 1) && in_search_box(d, a2, level - 1) &&
                in_search_box(d, b1, level - 1) && in_search_box(d, b2, level - 1))
                return {};
            return settle(d, config.kind, {a1, a2, b1, std::move(b2)});
        };
        constexpr std::size_t block = 1 << 16;
        for (std::size_t lo = 0; lo < total && !budget_hit; lo += block) {
            const std::size_t len = std::min(block, total - lo);
            const auto results =
                detail::map_indexed<QuadResult>(len, config.threads, [&](std::size_t i) { return job(lo + i); });
            for (const QuadResult& q : results) {
                if (q.outcome == Outcome::Skip) continue;
                if (config.max_quadruples > 0 && f.checked >= config.max_quadruples) {
                    budget_hit = true;
                    r.note = "budget of " + std::to_string(config.max_quadruples) +
                             " quadruples exhausted during level " + std::to_string(level);
                    break;
                }
                ++f.checked;
                switch (q.outcome) {
                case Outcome::Skip: break;
                case Outcome::Engine: ++f.engine_tables; break;
                case Outcome::Brute: ++f.brute_tables; break;
                case Outcome::Undecided:
                    if (f.undecided++ == 0) f.first_undecided = quad_text(q.witnesses.front());
                    break;
                case Outcome::Disagreement:
                    if (std::find(r.failed.begin(), r.failed.end(), "engine/oracle disagreement") == r.failed.end())
                        r.failed.push_back("engine/oracle disagreement");
                    [[fallthrough]];
                case Outcome::Counterexample:
                    ++failing;
                    r.verdict = Verdict::Fail;
                    for (const Witness& w : q.witnesses)
                        if (r.counterexamples.size() < max_counterexamples) r.counterexamples.push_back(w);
                    break;
                }
            }
        }
        if (budget_hit) break;
        if (failing > 0) {
            r.note = std::to_string(failing) + " quadruples without a table at level " + std::to_string(level) +
                     " (certified by complete candidate scans)";
            break;
        }
        f.radius_completed = level;
        if (config.on_checkpoint) config.on_checkpoint(f);
    }

    r.stats.checked = f.checked;
    std::string tally = std::to_string(f.checked) + " quadruples through level " + std::to_string(f.radius_completed) +
                        ": " + std::to_string(f.engine_tables) + " by engine, " + std::to_string(f.brute_tables) +
                        " by brute search, " + std::to_string(f.undecided) + " undecided";
    if (f.undecided > 0) tally += " (first: " + f.first_undecided + ")";
    // A finished box settles nothing about the whole group, so pass-boxed is
    // reported as inconclusive with that qualifier.
    if (r.verdict != Verdict::Fail) {
        r.verdict = Verdict::Inconclusive;
        if (!budget_hit && f.undecided == 0)
            r.note = "pass-boxed: every positive equal-sum quadruple up to search radius " +
                     std::to_string(config.radius) + " has a table";
    }
    r.note = r.note.empty() ? tally : r.note + "; " + tally;
    return res;
}

}  // namespace rdpforge

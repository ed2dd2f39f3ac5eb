#include "rdpforge/table.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <random>

#include "rdpforge/enumerate.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"

namespace rdpforge {

using Kind = Descriptor::Kind;

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Mode m) { return m == Mode::Exhaustive ? "exhaustive" : "sampled"; }

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
    return Verdict::Pass;
}

const char* to_string(RdpKind k) {
    switch (k) {
    case RdpKind::RIP: return "RIP";
    case RdpKind::RDP0: return "RDP0";
    case RdpKind::RDP: return "RDP";
    case RdpKind::RDP1: return "RDP1";
    case RdpKind::RDP2: return "RDP2";
    }
    return "?";
}

RdpKind parse_rdp_kind(std::string_view text) {
    std::string t(text);
    for (char& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (RdpKind k : {RdpKind::RIP, RdpKind::RDP0, RdpKind::RDP, RdpKind::RDP1, RdpKind::RDP2}) {
        std::string name = to_string(k);
        for (char& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (name == t) return k;
    }
    throw InputError("unknown kind '" + std::string(text) + "' (expected rip, rdp0, rdp, rdp1 or rdp2)");
}

int strength(RdpKind k) {
    switch (k) {
    case RdpKind::RIP:
    case RdpKind::RDP0: return 0;
    case RdpKind::RDP: return 1;
    case RdpKind::RDP1: return 2;
    case RdpKind::RDP2: return 3;
    }
    return 0;
}

void require_positive_equal_sums(const Descriptor& desc, const Quadruple& q) {
    check_shape(desc, q.a1, "a1");
    check_shape(desc, q.a2, "a2");
    check_shape(desc, q.b1, "b1");
    check_shape(desc, q.b2, "b2");
    for (const Elem* x : {&q.a1, &q.a2, &q.b1, &q.b2})
        if (!detail::positive(desc, *x)) throw InputError("quadruple entry " + format_elem(*x) + " is not positive");
    if (!(detail::add(desc, q.a1, q.a2) == detail::add(desc, q.b1, q.b2)))
        throw InputError("a1 + a2 != b1 + b2 for " + format_elem(q.a1) + ", " + format_elem(q.a2) + ", " +
                         format_elem(q.b1) + ", " + format_elem(q.b2));
}

std::optional<RefinementTable> complete_table(const Descriptor& desc, const Quadruple& q, const Elem& c11) {
    if (!detail::positive(desc, c11)) return std::nullopt;
    const Elem m = detail::neg(desc, c11);
    Elem c12 = detail::add(desc, m, q.a1);
    if (!detail::positive(desc, c12)) return std::nullopt;
    Elem c21 = detail::add(desc, m, q.b1);
    if (!detail::positive(desc, c21)) return std::nullopt;
    Elem c22 = detail::add(desc, detail::neg(desc, c21), q.a2);
    if (!detail::positive(desc, c22)) return std::nullopt;
    if (!(detail::add(desc, c12, c22) == q.b2)) return std::nullopt;
    return RefinementTable{c11, std::move(c12), std::move(c21), std::move(c22)};
}

bool table_sums_hold(const Descriptor& desc, const Quadruple& q, const RefinementTable& t) {
    for (const Elem* c : {&t.c11, &t.c12, &t.c21, &t.c22})
        if (!has_shape(desc, *c) || !detail::positive(desc, *c)) return false;
    return detail::add(desc, t.c11, t.c12) == q.a1 && detail::add(desc, t.c21, t.c22) == q.a2 &&
           detail::add(desc, t.c11, t.c21) == q.b1 && detail::add(desc, t.c12, t.c22) == q.b2;
}

VerdictReport validate_table(const Descriptor& desc, const Quadruple& q, const RefinementTable& t, RdpKind kind,
                             const CheckBudget& budget) {
    if (kind != RdpKind::RDP && kind != RdpKind::RDP1 && kind != RdpKind::RDP2)
        throw InputError(std::string("validate_table supports RDP, RDP1, RDP2; got ") + to_string(kind));
    require_positive_equal_sums(desc, q);
    if (kind == RdpKind::RDP2 && !desc.has_lattice_ops())
        throw CapabilityError("RDP2 validation needs lattice operations on " + desc.to_string());

    VerdictReport r;
    r.stats.checked = 1;
    r.stats.seed = budget.seed;
    r.stats.radius = budget.radius;
    const Witness table_w{"table", {t.c11, t.c12, t.c21, t.c22}};

    for (const Elem* c : {&t.c11, &t.c12, &t.c21, &t.c22}) {
        if (!has_shape(desc, *c)) {
            r.failed.push_back("shape");
            r.fail(table_w);
            return r;
        }
    }
    for (const Elem* c : {&t.c11, &t.c12, &t.c21, &t.c22}) {
        if (!detail::positive(desc, *c)) {
            r.failed.push_back("cone");
            r.fail(table_w);
            return r;
        }
    }
    if (!(detail::add(desc, t.c11, t.c12) == q.a1) || !(detail::add(desc, t.c21, t.c22) == q.a2)) {
        r.failed.push_back("row sums");
        r.fail(table_w);
        return r;
    }
    if (!(detail::add(desc, t.c11, t.c21) == q.b1) || !(detail::add(desc, t.c12, t.c22) == q.b2)) {
        r.failed.push_back("column sums");
        r.fail(table_w);
        return r;
    }
    if (kind == RdpKind::RDP1) {
        VerdictReport com = com_probe(desc, t.c12, t.c21, budget);
        if (com.verdict == Verdict::Fail) {
            r.failed.push_back("com");
            r.verdict = Verdict::Fail;
            r.counterexamples.push_back(table_w);
            for (auto& w : com.counterexamples) r.counterexamples.push_back(std::move(w));
            return r;
        }
        if (com.verdict == Verdict::Inconclusive) {
            r.weaken();
            r.mode = Mode::Sampled;
            r.note = "com relation " + com.note;
        }
    }
    if (kind == RdpKind::RDP2) {
        const Elem m = lattice_meet(desc, t.c12, t.c21);
        if (!(m == identity(desc))) {
            r.failed.push_back("meet");
            r.fail(table_w);
            r.counterexamples.push_back({"c12 meet c21", {m}});
            return r;
        }
    }
    return r;
}

namespace {

bool is_id(const Descriptor& desc, const Elem& x) { return x == identity(desc); }

// Structural answers; nullopt when no shortcut applies.
std::optional<VerdictReport> com_shortcut(const Descriptor& desc, const Elem& a, const Elem& b,
                                          const CheckBudget& budget) {
    VerdictReport r;
    r.stats.seed = budget.seed;
    r.stats.radius = budget.radius;
    if (desc.is_abelian()) {
        r.note = "abelian";
        return r;
    }
    if (is_id(desc, a) || is_id(desc, b)) {
        r.note = "identity interval";
        return r;
    }
    if (desc.kind() == Kind::Lex && is_id(desc.head(), a.head()) && is_id(desc.head(), b.head())) {
        // [0,(0,t)] = {(0,s) : 0 <= s <= t}
        return com_probe(desc.tail(), a.tail(), b.tail(), budget);
    }
    if (desc.is_wreath_like() && is_id(desc.index(), a.shift()) && is_id(desc.index(), b.shift())) {
        if (desc.kind() == Kind::Wreath) {
            // Zero-shift intervals are pointwise boxes; different indices never interact.
            VerdictReport acc = r;
            for (const Elem& key : a.as_wreath().keys) {
                const Elem av = wreath_at(desc, a, key);
                const Elem bv = wreath_at(desc, b, key);
                VerdictReport sub = com_probe(desc.fiber(), av, bv, budget);
                acc.stats.checked += sub.stats.checked;
                acc.verdict = combine(acc.verdict, sub.verdict);
                if (sub.verdict == Verdict::Fail) {
                    for (auto& w : sub.counterexamples) acc.counterexamples.push_back(std::move(w));
                    return acc;
                }
                if (sub.verdict == Verdict::Inconclusive) acc.mode = Mode::Sampled;
            }
            acc.note = "pointwise";
            return acc;
        }
        if (desc.fiber().is_abelian()) {
            // Zero-shift intervals stay inside the abelian zero-shift subgroup.
            r.note = "abelian zero-shift subgroup";
            return r;
        }
    }
    return std::nullopt;
}

}  // namespace

VerdictReport com_probe(const Descriptor& desc, const Elem& a, const Elem& b, const CheckBudget& budget) {
    check_shape(desc, a, "a");
    check_shape(desc, b, "b");
    if (!detail::positive(desc, a) || !detail::positive(desc, b))
        throw InputError("com_probe needs positive arguments");
    if (auto s = com_shortcut(desc, a, b, budget)) return *s;

    VerdictReport r;
    r.stats.seed = budget.seed;
    r.stats.radius = budget.radius;
    // The endpoints lie in their own intervals.
    ++r.stats.checked;
    if (!(detail::add(desc, a, b) == detail::add(desc, b, a))) {
        r.fail({"non-commuting pair", {a, b}});
        return r;
    }
    if (!desc.is_enumerable()) {
        r.verdict = Verdict::Inconclusive;
        r.mode = Mode::Sampled;
        r.note = "not decidable here: no enumeration for " + desc.to_string();
        return r;
    }
    const int radius = static_cast<int>(std::max<Elem::Integer>(
        budget.radius, std::max(max_abs_coordinate(a), max_abs_coordinate(b))));
    const auto limit = static_cast<std::size_t>(std::max<std::int64_t>(budget.samples, 1));
    const Elem zero = identity(desc);
    const CandidateSet xs = candidates_between(desc, {zero}, {a}, radius, limit);
    const CandidateSet ys = candidates_between(desc, {zero}, {b}, radius, limit);
    const double pairs = static_cast<double>(xs.elems.size()) * static_cast<double>(ys.elems.size());
    if (pairs <= 4.0 * static_cast<double>(limit)) {
        for (const Elem& x : xs.elems) {
            for (const Elem& y : ys.elems) {
                ++r.stats.checked;
                if (!(detail::add(desc, x, y) == detail::add(desc, y, x))) {
                    r.fail({"non-commuting pair", {x, y}});
                    return r;
                }
            }
        }
    } else {
        std::mt19937_64 rng(budget.seed);
        std::uniform_int_distribution<std::size_t> pick_x(0, xs.elems.size() - 1), pick_y(0, ys.elems.size() - 1);
        for (std::size_t i = 0; i < limit; ++i) {
            const Elem& x = xs.elems[pick_x(rng)];
            const Elem& y = ys.elems[pick_y(rng)];
            ++r.stats.checked;
            if (!(detail::add(desc, x, y) == detail::add(desc, y, x))) {
                r.fail({"non-commuting pair", {x, y}});
                return r;
            }
        }
        r.verdict = Verdict::Inconclusive;
        r.mode = Mode::Sampled;
        r.note = "sampled pairs";
        return r;
    }
    if (!(xs.complete && ys.complete)) {
        r.verdict = Verdict::Inconclusive;
        r.mode = Mode::Sampled;
        r.note = "checked on a bounded part of an infinite interval";
    }
    return r;
}

}  // namespace rdpforge

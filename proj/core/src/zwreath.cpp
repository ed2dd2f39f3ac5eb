#include "rdpforge/zwreath.hpp"

#include <algorithm>

#include "rdpforge/decompose.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"
#include "rdpforge/lex.hpp"
#include "rdpforge/wreath.hpp"

namespace rdpforge {

using Kind = Descriptor::Kind;

namespace {

void require_kind(const Descriptor& desc, Kind k, const char* what) {
    if (desc.kind() != k) throw CapabilityError(std::string(what) + " on " + desc.to_string());
}

void require_z_wreath(const Descriptor& desc, const char* what) {
    if (!desc.is_z_wreath()) throw CapabilityError(std::string(what) + " on " + desc.to_string());
}

std::int64_t shift_of(const Elem& x) { return x.shift().as_integer(); }

// Greatest index where x and y differ; nullopt when equal.
std::optional<std::int64_t> max_diff(const Elem& x, const Elem& y) {
    const auto& wx = x.as_wreath();
    const auto& wy = y.as_wreath();
    std::size_t i = wx.keys.size(), j = wy.keys.size();
    while (i > 0 || j > 0) {
        if (j == 0 || (i > 0 && wx.keys[i - 1].as_integer() > wy.keys[j - 1].as_integer()))
            return wx.keys[i - 1].as_integer();
        if (i == 0 || wy.keys[j - 1].as_integer() > wx.keys[i - 1].as_integer()) return wy.keys[j - 1].as_integer();
        if (!(wx.values[i - 1] == wy.values[j - 1])) return wx.keys[i - 1].as_integer();
        --i;
        --j;
    }
    return std::nullopt;
}

std::vector<std::pair<Elem, Elem>> entries_above(const Elem& x, std::int64_t i0) {
    std::vector<std::pair<Elem, Elem>> out;
    const auto& w = x.as_wreath();
    for (std::size_t i = 0; i < w.keys.size(); ++i)
        if (w.keys[i].as_integer() > i0) out.emplace_back(w.keys[i], w.values[i]);
    return out;
}

InterpResult rw_core(const Descriptor& desc, Elem a1, Elem a2, Elem b1, Elem b2) {
    const Descriptor& G = desc.fiber();
    if (a1 == a2 || a1 == b1 || a1 == b2) return {a1, InterpCase::Coincide, {}};
    if (b1 == b2) return {b1, InterpCase::Coincide, {}};
    if (a2 == b1 || a2 == b2) return {a2, InterpCase::Coincide, {}};

    if (shift_of(a1) > shift_of(a2)) std::swap(a1, a2);
    if (shift_of(b1) > shift_of(b2)) std::swap(b1, b2);
    const std::int64_t n1 = shift_of(a1), n2 = shift_of(a2), m1 = shift_of(b1), m2 = shift_of(b2);

    if (n2 < m1) {
        if (n1 < n2) return {a2, InterpCase::ShiftSeparated, {}};
        std::vector<Elem> keys;
        for (const Elem* x : {&a1, &a2})
            for (const Elem& k : x->as_wreath().keys) keys.push_back(k);
        std::vector<std::pair<Elem, Elem>> entries;
        for (const Elem& k : keys)
            entries.emplace_back(k, strict_upper_bound(G, {wreath_at(desc, a1, k), wreath_at(desc, a2, k)}));
        // make_wreath would merge duplicate keys by adding; dedupe first.
        std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
            return x.first.as_integer() < y.first.as_integer();
        });
        entries.erase(std::unique(entries.begin(), entries.end(),
                                  [](const auto& x, const auto& y) { return x.first == y.first; }),
                      entries.end());
        return {make_wreath(desc, Elem(n1), std::move(entries)), InterpCase::ShiftSeparated, {}};
    }
    if (n1 < n2) return {a2, InterpCase::ShiftTouching, {}};
    if (m1 < m2) return {b1, InterpCase::ShiftTouching, {}};

    // All four shifts equal; compare supports at the greatest differing index.
    auto diff = [](const Elem& x, const Elem& y) {
        auto d = max_diff(x, y);
        if (!d) throw Error("internal: equal pair reached the support dispatch");
        return *d;
    };
    std::int64_t p = diff(a1, b1), q = diff(a2, b1), r = diff(a1, b2), s = diff(a2, b2);
    const std::int64_t top = std::max({p, q, r, s});
    if (q != top) {
        if (p == top) {
            std::swap(a1, a2);
            std::swap(p, q);
            std::swap(r, s);
        } else if (s == top) {
            std::swap(b1, b2);
            std::swap(q, s);
            std::swap(p, r);
        } else {
            std::swap(a1, a2);
            std::swap(b1, b2);
            std::swap(p, s);
            std::swap(q, r);
        }
    }

    if (p == q && q == r && r == s) {
        const std::int64_t i0 = q;
        const Elem key(i0), below(i0 - 1);
        const Elem x1 = wreath_at(desc, a1, key), x2 = wreath_at(desc, a2, key);
        const Elem y1 = wreath_at(desc, b1, key), y2 = wreath_at(desc, b2, key);
        const Elem cp = interpolate(G, x1, x2, y1, y2);
        auto entries = entries_above(a1, i0);
        const Elem n(n1);
        if (!(cp == x1 || cp == x2 || cp == y1 || cp == y2)) {
            entries.emplace_back(key, cp);
            return {make_wreath(desc, n, std::move(entries)), InterpCase::C1, "strict"};
        }
        if (cp == x1 || cp == x2) {
            if (!(x1 == x2)) return {cp == x1 ? a1 : a2, InterpCase::C1, "a-coincide"};
            entries.emplace_back(key, x1);
            entries.emplace_back(below,
                                 strict_upper_bound(G, {wreath_at(desc, a1, below), wreath_at(desc, a2, below)}));
            return {make_wreath(desc, n, std::move(entries)), InterpCase::C1, "a-step"};
        }
        if (!(y1 == y2)) return {cp == y1 ? b1 : b2, InterpCase::C1, "b-coincide"};
        entries.emplace_back(key, y1);
        entries.emplace_back(below, strict_lower_bound(G, {wreath_at(desc, b1, below), wreath_at(desc, b2, below)}));
        return {make_wreath(desc, n, std::move(entries)), InterpCase::C1, "b-step"};
    }
    if (r <= s && s < p && p == q) return {b2, InterpCase::C3, {}};
    if (r < s && s == p && p == q) return {b2, InterpCase::C4, {}};
    if (r < p && p < s && s == q) return {a1, InterpCase::C8, {}};
    if (p <= r && r < s && s == q) return {a1, InterpCase::C10, {}};
    if (p < r && r == s && s == q) return {a1, InterpCase::C11, {}};
    if (s <= r && r < p && p == q) return {b2, InterpCase::C12, {}};
    if (s < r && r == p && p == q) return {b2, InterpCase::C13, {}};
    throw Error("internal: difference indices (" + std::to_string(p) + "," + std::to_string(q) + "," +
                std::to_string(r) + "," + std::to_string(s) + ") match no interpolation case");
}

void require_interpolation_input(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1,
                                  const Elem& b2) {
    check_shape(desc, a1, "a1");
    check_shape(desc, a2, "a2");
    check_shape(desc, b1, "b1");
    check_shape(desc, b2, "b2");
    const Descriptor& G = desc.fiber();
    if (!has_interpolation_engine(G)) throw CapabilityError("fiber " + G.to_string() + " has no interpolation engine");
    for (const Elem* a : {&a1, &a2})
        for (const Elem* b : {&b1, &b2})
            if (!detail::leq(desc, *a, *b))
                throw InputError("interpolation needs a1, a2 <= b1, b2; " + format_elem(*a) + " is not below " +
                                 format_elem(*b));
}

}  // namespace

SignedSupportStats signed_support_stats(const Descriptor& desc, const Elem& x) {
    require_z_wreath(desc, "signed_support_stats");
    check_shape(desc, x);
    SignedSupportStats st;
    for (const Elem& k : x.as_wreath().keys) st.supp.push_back(k.as_integer());
    if (!st.supp.empty()) {
        st.i0_min = st.supp.front();
        st.i0_max = st.supp.back();
    }
    return st;
}

namespace {

bool positive_at_end(const Descriptor& desc, const Elem& x, bool right) {
    require_z_wreath(desc, right ? "rw_positive" : "lw_positive");
    check_shape(desc, x);
    const std::int64_t n = shift_of(x);
    if (n != 0) return n > 0;
    const auto& w = x.as_wreath();
    if (w.keys.empty()) return true;
    const Elem& v = right ? w.values.back() : w.values.front();
    return detail::positive(desc.fiber(), v);
}

}  // namespace

bool rw_positive(const Descriptor& desc, const Elem& x) { return positive_at_end(desc, x, true); }
bool lw_positive(const Descriptor& desc, const Elem& x) { return positive_at_end(desc, x, false); }

Elem reflect(const Elem& x) {
    const auto& w = x.as_wreath();
    std::vector<Elem> keys, values;
    for (std::size_t i = w.keys.size(); i-- > 0;) {
        keys.push_back(Elem(-w.keys[i].as_integer()));
        values.push_back(w.values[i]);
    }
    return Elem::wreath(*w.shift, std::move(keys), std::move(values));
}

const char* to_string(InterpCase c) {
    switch (c) {
    case InterpCase::Coincide: return "coincide";
    case InterpCase::ShiftSeparated: return "a";
    case InterpCase::ShiftTouching: return "b";
    case InterpCase::C1: return "1";
    case InterpCase::C3: return "3";
    case InterpCase::C4: return "4";
    case InterpCase::C8: return "8";
    case InterpCase::C10: return "10";
    case InterpCase::C11: return "11";
    case InterpCase::C12: return "12";
    case InterpCase::C13: return "13";
    }
    return "?";
}

InterpResult rw_interpolate_traced(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1,
                                   const Elem& b2) {
    require_kind(desc, Kind::RightWreathZ, "rw_interpolate");
    require_interpolation_input(desc, a1, a2, b1, b2);
    return rw_core(desc, a1, a2, b1, b2);
}

InterpResult lw_interpolate_traced(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1,
                                   const Elem& b2) {
    require_kind(desc, Kind::LeftWreathZ, "lw_interpolate");
    require_interpolation_input(desc, a1, a2, b1, b2);
    const Descriptor rdesc = Descriptor::right_wreath_z(desc.fiber());
    InterpResult r = rw_core(rdesc, reflect(a1), reflect(a2), reflect(b1), reflect(b2));
    r.c = reflect(r.c);
    return r;
}

Elem rw_interpolate(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1, const Elem& b2) {
    return rw_interpolate_traced(desc, a1, a2, b1, b2).c;
}

Elem lw_interpolate(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1, const Elem& b2) {
    return lw_interpolate_traced(desc, a1, a2, b1, b2).c;
}

namespace {

RefinementTable zw_core(const Descriptor& desc, bool right, const Quadruple& q) {
    const Elem e = identity(desc);
    if (q.a1 == e) return {e, e, q.b1, q.b2};
    if (q.a2 == e) return {q.b1, q.b2, e, e};
    if (q.b1 == e) return {e, q.a1, e, q.a2};
    if (q.b2 == e) return {q.a1, e, q.a2, e};

    const CaseTag tag =
        classify_heads(desc.index(), q.a1.shift(), q.a2.shift(), q.b1.shift(), q.b2.shift());
    if (tag.mirrored || tag.split == SplitCase::VIII) return zw_core(desc, right, q.swapped()).transposed();
    switch (tag.split) {
    case SplitCase::I: {
        // Zero-shift subgroup: c11 interpolates {0, b1 - a2} below {a1, b1}.
        const Elem lo = sub(desc, q.b1, q.a2);
        const Elem c11 = right ? rw_interpolate(desc, e, lo, q.a1, q.b1) : lw_interpolate(desc, e, lo, q.a1, q.b1);
        auto t = complete_table(desc, q, c11);
        if (!t) throw Error("internal: zero-shift interpolant did not complete a table");
        return *t;
    }
    case SplitCase::II: return {e, q.a1, q.b1, left_sub(desc, q.b1, q.a2)};
    case SplitCase::III: return {sub(desc, q.a1, q.b2), q.b2, q.a2, e};
    case SplitCase::IV:
    case SplitCase::V: return {q.b1, left_sub(desc, q.b1, q.a1), e, q.a2};
    case SplitCase::VI:
    case SplitCase::VII: return {q.a1, e, left_sub(desc, q.a1, q.b1), q.b2};
    case SplitCase::IX: return detail::wreath_aligned_table(desc, RdpKind::RDP, q, true, true);
    case SplitCase::VIII:
    case SplitCase::Incomparable: break;
    }
    throw Error("internal: unhandled Z-wreath case");
}

void require_abelian_fiber(const Descriptor& desc) {
    const Descriptor& G = desc.fiber();
    if (!G.is_abelian() || !G.is_directed() || !G.is_non_atomistic())
        throw CapabilityError("fiber " + G.to_string() + " is not a directed non-atomistic abelian group");
    if (engine_for(G, RdpKind::RDP) == Engine::None)
        throw CapabilityError("fiber " + G.to_string() + " has no RDP engine");
    if (!has_interpolation_engine(G)) throw CapabilityError("fiber " + G.to_string() + " has no interpolation engine");
}

}  // namespace

RefinementTable rw_rdp_decompose_abelian(const Descriptor& desc, const Quadruple& q) {
    require_kind(desc, Kind::RightWreathZ, "rw_rdp_decompose_abelian");
    require_abelian_fiber(desc);
    require_positive_equal_sums(desc, q);
    return zw_core(desc, true, q);
}

RefinementTable lw_rdp_decompose_abelian(const Descriptor& desc, const Quadruple& q) {
    require_kind(desc, Kind::LeftWreathZ, "lw_rdp_decompose_abelian");
    require_abelian_fiber(desc);
    require_positive_equal_sums(desc, q);
    return zw_core(desc, false, q);
}

Elem no_meet_witness(const Descriptor& desc, const Elem& a, const Elem& b, const Elem& c, const Elem& z) {
    require_z_wreath(desc, "no_meet_witness");
    const Descriptor& G = desc.fiber();
    check_shape(G, a, "a");
    check_shape(G, b, "b");
    check_shape(G, c, "c");
    check_shape(desc, z, "z");
    const Elem eg = identity(G);
    if (!strictly_positive(G, a) || !strictly_positive(G, b)) throw InputError("a and b must be strictly positive");
    if (comparable(G, a, b)) throw InputError("a and b must be incomparable");
    if (!less(G, eg, c) || !less(G, c, a) || !less(G, c, b))
        throw InputError("c must lie strictly between e and both a and b");
    if (shift_of(z) != 0) throw InputError("z must have zero shift");
    const Elem zero(std::int64_t{0});
    const Elem x = Elem::wreath(zero, {zero}, {a});
    const Elem y = Elem::wreath(zero, {zero}, {b});
    if (!detail::leq(desc, z, x) || !detail::leq(desc, z, y))
        throw InputError("z is not a lower bound of (0,{0:a}) and (0,{0:b})");

    // z with c added at the index just outside the deciding side of 0.
    const std::int64_t at = desc.kind() == Kind::RightWreathZ ? -1 : 1;
    const auto& w = z.as_wreath();
    std::vector<Elem> keys, values;
    keys.reserve(w.keys.size() + 1);
    values.reserve(w.keys.size() + 1);
    bool placed = false;
    for (std::size_t i = 0; i <= w.keys.size(); ++i) {
        const bool end = i == w.keys.size();
        const std::int64_t k = end ? 0 : w.keys[i].as_integer();
        if (!placed && (end || k >= at)) {
            placed = true;
            if (!end && k == at) {
                Elem v = detail::add(G, w.values[i], c);
                if (!(v == eg)) {
                    keys.push_back(w.keys[i]);
                    values.push_back(std::move(v));
                }
                continue;
            }
            keys.emplace_back(at);
            values.push_back(c);
        }
        if (!end) {
            keys.push_back(w.keys[i]);
            values.push_back(w.values[i]);
        }
    }
    return Elem::wreath(zero, std::move(keys), std::move(values));
}

const char* to_string(Tristate t) {
    switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
    }
    return "?";
}

namespace {

Tristate rdp1_gate(const Descriptor& desc) {
    const Descriptor& G = desc.fiber();
    if (G.is_linear()) return Tristate::True;
    if (!G.is_abelian()) return Tristate::False;
    return Tristate::Unknown;
}

}  // namespace

bool rw_rdp2_gate(const Descriptor& desc) {
    require_kind(desc, Kind::RightWreathZ, "rw_rdp2_gate");
    return desc.fiber().is_linear();
}

bool lw_rdp2_gate(const Descriptor& desc) {
    require_kind(desc, Kind::LeftWreathZ, "lw_rdp2_gate");
    return desc.fiber().is_linear();
}

Tristate rw_rdp1_gate(const Descriptor& desc) {
    require_kind(desc, Kind::RightWreathZ, "rw_rdp1_gate");
    return rdp1_gate(desc);
}

Tristate lw_rdp1_gate(const Descriptor& desc) {
    require_kind(desc, Kind::LeftWreathZ, "lw_rdp1_gate");
    return rdp1_gate(desc);
}

RefinementTable extract_fiber_table(const Descriptor& desc, const RefinementTable& t) {
    require_z_wreath(desc, "extract_fiber_table");
    return project_table_to_fiber(desc, t, Elem(std::int64_t{0}));
}

}  // namespace rdpforge

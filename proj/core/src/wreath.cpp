#include "rdpforge/wreath.hpp"

#include <algorithm>

#include "rdpforge/decompose.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"

namespace rdpforge {

namespace {

void require_wreath_like(const Descriptor& desc, const char* what) {
    if (!desc.is_wreath_like()) throw CapabilityError(std::string(what) + " on " + desc.to_string());
}

// Sorted union of support keys.
std::vector<Elem> key_union(const Descriptor& a, std::initializer_list<const Elem*> xs) {
    std::vector<Elem> keys;
    for (const Elem* x : xs)
        for (const Elem& k : x->as_wreath().keys) keys.push_back(k);
    std::sort(keys.begin(), keys.end(),
              [&](const Elem& p, const Elem& q) { return detail::compare_linear(a, p, q) < 0; });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

}  // namespace

Elem wreath_mul(const Descriptor& desc, const Elem& x, const Elem& y) {
    require_wreath_like(desc, "wreath_mul");
    check_shape(desc, x, "x");
    check_shape(desc, y, "y");
    return detail::add(desc, x, y);
}

Elem wreath_inv(const Descriptor& desc, const Elem& x) {
    require_wreath_like(desc, "wreath_inv");
    check_shape(desc, x, "x");
    return detail::neg(desc, x);
}

CaseTag classify_wreath_quadruple(const Descriptor& desc, const Quadruple& q) {
    require_wreath_like(desc, "classify_wreath_quadruple");
    require_positive_equal_sums(desc, q);
    return classify_heads(desc.index(), q.a1.shift(), q.a2.shift(), q.b1.shift(), q.b2.shift());
}

namespace detail {

RefinementTable wreath_aligned_table(const Descriptor& desc, RdpKind kind, const Quadruple& q, bool use_low,
                                     bool use_high) {
    const Descriptor& A = desc.index();
    const Descriptor& G = desc.fiber();
    const Elem& n1 = q.a1.shift();
    const Elem& n2 = q.a2.shift();
    const Elem eg = identity(G);

    // d_b below the four values at b, for b in the joint support; e elsewhere.
    const std::vector<Elem> U = key_union(A, {&q.a1, &q.a2, &q.b1, &q.b2});
    std::vector<Elem> low(U.size(), eg), high(U.size(), eg);
    for (std::size_t i = 0; i < U.size(); ++i) {
        const Elem g = wreath_at(desc, q.a1, U[i]), h = wreath_at(desc, q.a2, U[i]);
        const Elem u = wreath_at(desc, q.b1, U[i]), v = wreath_at(desc, q.b2, U[i]);
        if (use_low || use_high) {
            const Elem d = use_low ? lower_bound(G, {g, h, u, v}) : lower_bound(G, {h, v});
            if (use_low) low[i] = d;
            if (use_high) high[i] = d;
        }
    }
    auto at = [&](const std::vector<Elem>& d, const Elem& key) -> Elem {
        auto it = std::lower_bound(U.begin(), U.end(), key,
                                   [&](const Elem& p, const Elem& k) { return detail::compare_linear(A, p, k) < 0; });
        if (it == U.end() || !(*it == key)) return eg;
        return d[static_cast<std::size_t>(it - U.begin())];
    };

    // Index a is refined when a or a + n1 lies in U.
    std::vector<Elem> idx = U;
    const Elem minus_n1 = detail::neg(A, n1);
    for (const Elem& b : U) idx.push_back(detail::add(A, b, minus_n1));
    std::sort(idx.begin(), idx.end(), [&](const Elem& p, const Elem& k) { return detail::compare_linear(A, p, k) < 0; });
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

    std::vector<std::pair<Elem, Elem>> e11, e12, e21, e22;
    for (const Elem& a : idx) {
        const Elem an = detail::add(A, a, n1);
        const Elem la = at(low, a), hn = at(high, an);
        const Elem nla = detail::neg(G, la), nhn = detail::neg(G, hn);
        const Quadruple fq{detail::add(G, nla, wreath_at(desc, q.a1, a)), detail::add(G, wreath_at(desc, q.a2, an), nhn),
                           detail::add(G, nla, wreath_at(desc, q.b1, a)), detail::add(G, wreath_at(desc, q.b2, an), nhn)};
        RefinementTable t{eg, eg, eg, eg};
        if (!(fq.a1 == eg && fq.a2 == eg && fq.b1 == eg && fq.b2 == eg)) t = decompose(G, kind, fq);
        e11.emplace_back(a, detail::add(G, la, t.c11));
        e12.emplace_back(an, t.c12);
        e21.emplace_back(an, t.c21);
        e22.emplace_back(an, detail::add(G, t.c22, hn));
    }
    const Elem ea = identity(A);
    return {make_wreath(desc, n1, std::move(e11)), make_wreath(desc, ea, std::move(e12)),
            make_wreath(desc, ea, std::move(e21)), make_wreath(desc, n2, std::move(e22))};
}

}  // namespace detail

namespace {

RefinementTable wreath_core(const Descriptor& desc, RdpKind kind, const Quadruple& q) {
    const CaseTag tag = classify_heads(desc.index(), q.a1.shift(), q.a2.shift(), q.b1.shift(), q.b2.shift());
    if (tag.mirrored || tag.split == SplitCase::VIII) return wreath_core(desc, kind, q.swapped()).transposed();
    const Elem e = identity(desc);
    switch (tag.split) {
    case SplitCase::I: return detail::wreath_aligned_table(desc, kind, q, false, false);
    case SplitCase::II: return detail::wreath_aligned_table(desc, kind, q, false, true);
    case SplitCase::III:
    case SplitCase::IX: return detail::wreath_aligned_table(desc, kind, q, true, true);
    case SplitCase::IV:
    case SplitCase::V: return {q.b1, left_sub(desc, q.b1, q.a1), e, q.a2};
    case SplitCase::VI:
    case SplitCase::VII: return {q.a1, e, left_sub(desc, q.a1, q.b1), q.b2};
    case SplitCase::VIII:
    case SplitCase::Incomparable: break;
    }
    throw Error("internal: unhandled wreath case");
}

}  // namespace

RefinementTable wreath_rdp_decompose(const Descriptor& desc, RdpKind kind, const Quadruple& q) {
    if (desc.kind() != Descriptor::Kind::Wreath) throw CapabilityError("wreath_rdp_decompose on " + desc.to_string());
    if (kind != RdpKind::RDP && kind != RdpKind::RDP1 && kind != RdpKind::RDP2)
        throw InputError("wreath engine produces RDP, RDP1 or RDP2 tables");
    require_positive_equal_sums(desc, q);
    return wreath_core(desc, kind, q);
}

RefinementTable project_table_to_fiber(const Descriptor& desc, const RefinementTable& t, const Elem& pick) {
    require_wreath_like(desc, "project_table_to_fiber");
    check_shape(desc.index(), pick, "pick");
    const Elem ea = identity(desc.index());
    for (const Elem* c : {&t.c11, &t.c12, &t.c21, &t.c22}) {
        check_shape(desc, *c);
        if (!(c->shift() == ea)) throw InputError("table entry " + format_elem(*c) + " has a nonzero shift");
    }
    return {wreath_at(desc, t.c11, pick), wreath_at(desc, t.c12, pick), wreath_at(desc, t.c21, pick),
            wreath_at(desc, t.c22, pick)};
}

}  // namespace rdpforge

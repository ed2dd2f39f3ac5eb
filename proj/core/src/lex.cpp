#include "rdpforge/lex.hpp"

#include "rdpforge/decompose.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"

namespace rdpforge {

const char* to_string(SplitCase c) {
    switch (c) {
    case SplitCase::I: return "i";
    case SplitCase::II: return "ii";
    case SplitCase::III: return "iii";
    case SplitCase::IV: return "iv";
    case SplitCase::V: return "v";
    case SplitCase::VI: return "vi";
    case SplitCase::VII: return "vii";
    case SplitCase::VIII: return "viii";
    case SplitCase::IX: return "ix";
    case SplitCase::Incomparable: return "incomparable";
    }
    return "?";
}

CaseTag classify_heads(const Descriptor& heads, const Elem& n1, const Elem& n2, const Elem& m1, const Elem& m2) {
    const Elem e = identity(heads);
    const bool z1 = n1 == e, z2 = n2 == e, w1 = m1 == e, w2 = m2 == e;
    if (z1 && z2 && w1 && w2) return {SplitCase::I};
    if (z1 && !z2 && w1 && !w2) return {SplitCase::II};
    if (!z1 && z2 && !w1 && w2) return {SplitCase::III};
    if (!z1 && z2 && w1 && !w2) return {SplitCase::IV};
    if (z1 && !z2 && !w1 && w2) return {SplitCase::IV, true};
    if (!z1 && z2 && !w1 && !w2) return {SplitCase::V};
    if (!z1 && !z2 && !w1 && w2) return {SplitCase::V, true};
    if (z1 && !z2 && !w1 && !w2) return {SplitCase::VI};
    if (!z1 && !z2 && w1 && !w2) return {SplitCase::VI, true};
    if (!z1 && !z2 && !w1 && !w2) {
        if (n1 == m1) return {SplitCase::IX};
        if (detail::leq(heads, n1, m1)) return {SplitCase::VII};
        if (detail::leq(heads, m1, n1)) return {SplitCase::VIII};
        return {SplitCase::Incomparable};
    }
    throw InputError("head pattern impossible for a positive equal-sum quadruple");
}

CaseTag classify_lex_quadruple(const Descriptor& desc, const Quadruple& q) {
    if (desc.kind() != Descriptor::Kind::Lex) throw CapabilityError("classify_lex_quadruple on " + desc.to_string());
    require_positive_equal_sums(desc, q);
    return classify_heads(desc.head(), q.a1.head(), q.a2.head(), q.b1.head(), q.b2.head());
}

namespace {

struct LexCtx {
    const Descriptor& h;
    const Descriptor& t;
    RdpKind kind;
    bool antilattice;

    Elem hadd(const Elem& x, const Elem& y) const { return detail::add(h, x, y); }
    Elem hneg(const Elem& x) const { return detail::neg(h, x); }
    Elem tadd(const Elem& x, const Elem& y) const { return detail::add(t, x, y); }
    Elem tneg(const Elem& x) const { return detail::neg(t, x); }
    // -x + y and x - y in the tail
    Elem tlsub(const Elem& x, const Elem& y) const { return tadd(tneg(x), y); }
    Elem tsub(const Elem& x, const Elem& y) const { return tadd(x, tneg(y)); }
    Elem he() const { return identity(h); }
    Elem te() const { return identity(t); }
};

Elem P(Elem head, Elem tail) { return Elem::pair(std::move(head), std::move(tail)); }

RefinementTable tail_table(const LexCtx& c, RdpKind kind, const Elem& a1, const Elem& a2, const Elem& b1,
                           const Elem& b2) {
    return decompose(c.t, kind, Quadruple{a1, a2, b1, b2});
}

// Tail element below every argument. Case IX asks for a strict bound when the
// tail has one.
Elem tail_floor(const LexCtx& c, const std::vector<Elem>& xs, bool strict) {
    if (strict && c.t.kind() != Descriptor::Kind::Trivial) return strict_lower_bound(c.t, xs);
    return lower_bound(c.t, xs);
}

RefinementTable lex_core(const LexCtx& c, const Quadruple& q) {
    const Elem &n1 = q.a1.head(), &n2 = q.a2.head(), &m1 = q.b1.head(), &m2 = q.b2.head();
    const Elem &a1 = q.a1.tail(), &a2 = q.a2.tail(), &b1 = q.b1.tail(), &b2 = q.b2.tail();
    const CaseTag tag = classify_heads(c.h, n1, n2, m1, m2);
    if (tag.mirrored || tag.split == SplitCase::VIII) return lex_core(c, q.swapped()).transposed();

    switch (tag.split) {
    case SplitCase::I: {
        const RefinementTable t = tail_table(c, c.kind, a1, a2, b1, b2);
        return {P(c.he(), t.c11), P(c.he(), t.c12), P(c.he(), t.c21), P(c.he(), t.c22)};
    }
    case SplitCase::II: {
        // (0,a1) + (n,a2) = (0,b1) + (n,b2): refine a1 + (a2 - d) = b1 + (b2 - d).
        const Elem d = tail_floor(c, {a2, b2}, false);
        const RefinementTable t = tail_table(c, c.kind, a1, c.tsub(a2, d), b1, c.tsub(b2, d));
        return {P(c.he(), t.c11), P(c.he(), t.c12), P(c.he(), t.c21), P(n2, c.tadd(t.c22, d))};
    }
    case SplitCase::III: {
        const Elem d = tail_floor(c, {a1, a2, b1, b2}, false);
        const RefinementTable t =
            tail_table(c, c.kind, c.tlsub(d, a1), c.tsub(a2, d), c.tlsub(d, b1), c.tsub(b2, d));
        return {P(n1, c.tadd(d, t.c11)), P(c.he(), t.c12), P(c.he(), t.c21), P(c.he(), c.tadd(t.c22, d))};
    }
    case SplitCase::IV:
        return {P(c.he(), b1), P(n1, c.tlsub(b1, a1)), P(c.he(), c.te()), P(c.he(), a2)};
    case SplitCase::V:
        return {P(m1, b1), P(m2, c.tlsub(b1, a1)), P(c.he(), c.te()), P(c.he(), a2)};
    case SplitCase::VI:
        return {P(c.he(), a1), P(c.he(), c.te()), P(m1, c.tlsub(a1, b1)), P(m2, b2)};
    case SplitCase::VII:
        return {P(n1, a1), P(c.he(), c.te()), P(c.hadd(c.hneg(n1), m1), c.tlsub(a1, b1)), P(m2, b2)};
    case SplitCase::IX: {
        const Elem d = tail_floor(c, {a1, a2, b1, b2}, true);
        const RefinementTable t =
            tail_table(c, c.kind, c.tlsub(d, a1), c.tsub(a2, d), c.tlsub(d, b1), c.tsub(b2, d));
        return {P(n1, c.tadd(d, t.c11)), P(c.he(), t.c12), P(c.he(), t.c21), P(n2, c.tadd(t.c22, d))};
    }
    case SplitCase::Incomparable: {
        if (!c.antilattice)
            throw CapabilityError("incomparable heads need the antilattice-head engine (head " + c.h.to_string() + ")");
        const Elem eh = c.he();
        const auto n0 = strictly_between(c.h, eh, {n1, m1});
        const auto m0 = strictly_between(c.h, eh, {n2, m2});
        if (!n0 || !m0) throw NoWitness("head group has no element strictly between 0 and the given heads");
        const Quadruple hq{c.hadd(c.hneg(*n0), n1), c.hadd(n2, c.hneg(*m0)), c.hadd(c.hneg(*n0), m1),
                           c.hadd(m2, c.hneg(*m0))};
        const RefinementTable ht = decompose(c.h, RdpKind::RDP, hq);
        const Elem N11 = c.hadd(*n0, ht.c11);
        const Elem N22 = c.hadd(ht.c22, *m0);
        const Elem d = tail_floor(c, {a1, a2, b1, b2}, false);
        const RefinementTable t =
            tail_table(c, RdpKind::RDP, c.tlsub(d, a1), c.tsub(a2, d), c.tlsub(d, b1), c.tsub(b2, d));
        return {P(N11, c.tadd(d, t.c11)), P(ht.c12, t.c12), P(ht.c21, t.c21), P(N22, c.tadd(t.c22, d))};
    }
    case SplitCase::VIII: break;
    }
    throw Error("internal: unhandled lex case");
}

}  // namespace

RefinementTable lex_rdp_decompose_linear_head(const Descriptor& desc, RdpKind kind, const Quadruple& q) {
    if (desc.kind() != Descriptor::Kind::Lex)
        throw CapabilityError("lex_rdp_decompose_linear_head on " + desc.to_string());
    if (!desc.head().is_linear())
        throw CapabilityError("head " + desc.head().to_string() +
                              " is not linear; use lex_rdp_decompose_antilattice_head");
    if (kind != RdpKind::RDP && kind != RdpKind::RDP1 && kind != RdpKind::RDP2)
        throw InputError("lex engine produces RDP, RDP1 or RDP2 tables");
    require_positive_equal_sums(desc, q);
    return lex_core(LexCtx{desc.head(), desc.tail(), kind, false}, q);
}

RefinementTable lex_rdp_decompose_antilattice_head(const Descriptor& desc, const Quadruple& q) {
    if (desc.kind() != Descriptor::Kind::Lex)
        throw CapabilityError("lex_rdp_decompose_antilattice_head on " + desc.to_string());
    const Descriptor& h = desc.head();
    if (!(h.is_antilattice() || h.is_linear()) || !h.is_directed())
        throw CapabilityError("head " + h.to_string() + " is not a directed antilattice");
    require_positive_equal_sums(desc, q);
    return lex_core(LexCtx{h, desc.tail(), RdpKind::RDP, true}, q);
}

RefinementTable project_table_to_tail(const Descriptor& desc, const RefinementTable& t) {
    if (desc.kind() != Descriptor::Kind::Lex) throw CapabilityError("project_table_to_tail on " + desc.to_string());
    const Elem e = identity(desc.head());
    for (const Elem* c : {&t.c11, &t.c12, &t.c21, &t.c22}) {
        check_shape(desc, *c);
        if (!(c->head() == e)) throw InputError("table entry " + format_elem(*c) + " has a nonzero head");
    }
    return {t.c11.tail(), t.c12.tail(), t.c21.tail(), t.c22.tail()};
}

}  // namespace rdpforge

#include "rdpforge/base_groups.hpp"

#include "rdpforge/enumerate.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"

namespace rdpforge {

using Kind = Descriptor::Kind;

namespace {

Elem scalar_min(const Elem& x, const Elem& y) {
    if (x.is_integer()) return x.as_integer() <= y.as_integer() ? x : y;
    return x.as_rational() <= y.as_rational() ? x : y;
}

Elem scalar_max(const Elem& x, const Elem& y) {
    if (x.is_integer()) return x.as_integer() >= y.as_integer() ? x : y;
    return x.as_rational() >= y.as_rational() ? x : y;
}

Elem scalar_sub(const Elem& x, const Elem& y) {
    if (x.is_integer()) return Elem(x.as_integer() - y.as_integer());
    return Elem(Rational(x.as_rational() - y.as_rational()));
}

}  // namespace

RefinementTable linear_rdp_decompose(const Descriptor& desc, const Quadruple& q) {
    if (!desc.is_linear()) throw CapabilityError("linear_rdp_decompose needs a linear group, got " + desc.to_string());
    require_positive_equal_sums(desc, q);
    const Descriptor& d = desc;
    if (detail::compare_linear(d, q.a1, q.b1) <= 0) {
        Elem c21 = detail::add(d, detail::neg(d, q.a1), q.b1);
        Elem c22 = detail::add(d, detail::neg(d, c21), q.a2);
        return {q.a1, identity(d), std::move(c21), std::move(c22)};
    }
    Elem c12 = detail::add(d, detail::neg(d, q.b1), q.a1);
    return {q.b1, std::move(c12), identity(d), q.a2};
}

RefinementTable coordwise_rdp_decompose(const Descriptor& desc, const Quadruple& q) {
    if (!desc.is_vector() || desc.cone() != ConeKind::Coordinatewise)
        throw CapabilityError("coordwise_rdp_decompose needs a coordinatewise vector group, got " + desc.to_string());
    require_positive_equal_sums(desc, q);
    const std::size_t k = static_cast<std::size_t>(desc.dim());
    Elem::Vector c11, c12, c21, c22;
    for (std::size_t i = 0; i < k; ++i) {
        const Elem& a1 = q.a1.as_vector()[i];
        const Elem& a2 = q.a2.as_vector()[i];
        const Elem& b1 = q.b1.as_vector()[i];
        Elem m = scalar_min(a1, b1);
        Elem r12 = scalar_sub(a1, m);
        Elem r21 = scalar_sub(b1, m);
        Elem r22 = scalar_sub(a2, r21);
        c11.push_back(std::move(m));
        c12.push_back(std::move(r12));
        c21.push_back(std::move(r21));
        c22.push_back(std::move(r22));
    }
    return {Elem(std::move(c11)), Elem(std::move(c12)), Elem(std::move(c21)), Elem(std::move(c22))};
}

RefinementTable strict_cone_rdp_decompose(const Descriptor& desc, const Quadruple& q) {
    if (!desc.is_vector() || desc.cone() != ConeKind::Strict)
        throw CapabilityError("strict_cone_rdp_decompose needs a strict-cone vector group, got " + desc.to_string());
    require_positive_equal_sums(desc, q);
    const Elem zero = identity(desc);
    if (q.a1 == zero) return {zero, zero, q.b1, q.b2};
    if (q.a2 == zero) return {q.b1, q.b2, zero, zero};
    if (q.b1 == zero) return {zero, q.a1, zero, q.a2};
    if (q.b2 == zero) return {q.a1, zero, q.a2, zero};

    if (desc.kind() == Kind::RatVec) {
        const Rational half(1, 2);
        Elem::Vector c;
        for (int i = 0; i < desc.dim(); ++i) {
            const Elem& a1 = q.a1.as_vector()[i];
            const Elem& a2 = q.a2.as_vector()[i];
            const Elem& b1 = q.b1.as_vector()[i];
            const Elem lo = scalar_max(Elem(Rational(0)), scalar_sub(b1, a2));
            const Elem hi = scalar_min(a1, b1);
            c.push_back(Elem(Rational((lo.as_rational() + hi.as_rational()) * half)));
        }
        auto t = complete_table(desc, q, Elem(std::move(c)));
        if (!t) throw Error("internal: strict-cone midpoint table failed to complete");
        return *t;
    }

    // Integer strict cone: the candidate set {0 <= c <= a1, b1} is finite; scan it.
    const CandidateSet cands = candidates_between(desc, {zero}, {q.a1, q.b1}, 0);
    for (const Elem& c : cands.elems)
        if (auto t = complete_table(desc, q, c)) return *t;
    throw NoTableExists("no refinement table exists in " + desc.to_string() + " for " + format_elem(q.a1) + " + " +
                        format_elem(q.a2) + " = " + format_elem(q.b1) + " + " + format_elem(q.b2) + " (" +
                        std::to_string(cands.elems.size()) + " candidates scanned)");
}

}  // namespace rdpforge

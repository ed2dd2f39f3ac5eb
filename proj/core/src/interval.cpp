#include "rdpforge/interval.hpp"

#include <chrono>
#include <random>

#include "rdpforge/enumerate.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"

namespace rdpforge {

UnitIntervalContext::UnitIntervalContext(Descriptor desc, Elem u) : desc_(std::move(desc)), u_(std::move(u)) {
    check_shape(desc_, u_, "u");
    if (!strictly_positive(desc_, u_)) throw InputError("unit " + format_elem(u_) + " is not strictly positive");
}

bool UnitIntervalContext::contains(const Elem& x) const {
    return detail::positive(desc_, x) && detail::leq(desc_, x, u_);
}

IntervalElem::IntervalElem(const UnitIntervalContext& ctx, Elem value) : value_(std::move(value)) {
    check_shape(ctx.desc(), value_, "value");
    if (!ctx.contains(value_))
        throw InputError(format_elem(value_) + " is not in [0, " + format_elem(ctx.unit()) + "]");
}

std::optional<IntervalElem> pea_add(const UnitIntervalContext& ctx, const IntervalElem& a, const IntervalElem& b) {
    Elem s = detail::add(ctx.desc(), a.value(), b.value());
    if (!detail::leq(ctx.desc(), s, ctx.unit())) return std::nullopt;
    return IntervalElem(ctx, std::move(s));
}

IntervalElem pea_lneg(const UnitIntervalContext& ctx, const IntervalElem& a) {
    return IntervalElem(ctx, sub(ctx.desc(), ctx.unit(), a.value()));
}

IntervalElem pea_rneg(const UnitIntervalContext& ctx, const IntervalElem& a) {
    return IntervalElem(ctx, left_sub(ctx.desc(), a.value(), ctx.unit()));
}

IntervalElem pea_minus_left(const UnitIntervalContext& ctx, const IntervalElem& b, const IntervalElem& a) {
    if (!leq(ctx.desc(), a.value(), b.value()))
        throw InputError(format_elem(a.value()) + " is not below " + format_elem(b.value()));
    return IntervalElem(ctx, sub(ctx.desc(), b.value(), a.value()));
}

IntervalElem pea_minus_right(const UnitIntervalContext& ctx, const IntervalElem& a, const IntervalElem& b) {
    if (!leq(ctx.desc(), a.value(), b.value()))
        throw InputError(format_elem(a.value()) + " is not below " + format_elem(b.value()));
    return IntervalElem(ctx, left_sub(ctx.desc(), a.value(), b.value()));
}

namespace {

void require_lattice(const UnitIntervalContext& ctx) {
    if (!ctx.desc().has_lattice_ops())
        throw CapabilityError("pseudo MV operations need lattice ops; " + ctx.desc().to_string() + " has none");
}

}  // namespace

IntervalElem pmv_oplus(const UnitIntervalContext& ctx, const IntervalElem& x, const IntervalElem& y) {
    require_lattice(ctx);
    const Descriptor& d = ctx.desc();
    return IntervalElem(ctx, lattice_meet(d, add(d, x.value(), y.value()), ctx.unit()));
}

IntervalElem pmv_odot(const UnitIntervalContext& ctx, const IntervalElem& x, const IntervalElem& y) {
    require_lattice(ctx);
    const Descriptor& d = ctx.desc();
    const Elem s = add(d, sub(d, x.value(), ctx.unit()), y.value());
    return IntervalElem(ctx, lattice_join(d, s, identity(d)));
}

IntervalElem pea_to_pmv_oplus(const UnitIntervalContext& ctx, const IntervalElem& a, const IntervalElem& b) {
    require_lattice(ctx);
    const IntervalElem bl = pea_lneg(ctx, b);
    const IntervalElem m(ctx, lattice_meet(ctx.desc(), a.value(), bl.value()));
    return pea_rneg(ctx, pea_minus_left(ctx, bl, m));
}

std::optional<IntervalElem> pmv_to_pea_add(const UnitIntervalContext& ctx, const IntervalElem& a,
                                           const IntervalElem& b) {
    if (!(pmv_odot(ctx, a, b).value() == identity(ctx.desc()))) return std::nullopt;
    return pmv_oplus(ctx, a, b);
}

namespace {

bool dominated(const Descriptor& d, const Elem& g, const Elem& u, int nmax) {
    Elem nu = u;
    for (int n = 1; n <= nmax; ++n) {
        if (detail::leq(d, g, nu)) return true;
        nu = detail::add(d, nu, u);
    }
    return false;
}

}  // namespace

VerdictReport is_strong_unit_probe(const UnitIntervalContext& ctx, int radius, int nmax, const CheckBudget& budget) {
    const auto start = std::chrono::steady_clock::now();
    const Descriptor& d = ctx.desc();
    VerdictReport r;
    r.stats.radius = radius;
    r.stats.seed = budget.seed;
    auto visit = [&](const Elem& g) {
        ++r.stats.checked;
        if (!dominated(d, g, ctx.unit(), nmax)) {
            r.fail({"not below n*u for n <= " + std::to_string(nmax), {g}});
            return r.counterexamples.size() < 256;
        }
        return true;
    };
    if (d.is_enumerable()) {
        for (const Elem& g : enumerate_box(d, radius))
            if (!visit(g)) break;
        if (r.passed()) r.note = "boxed: every element of the radius box is dominated";
    } else {
        r.mode = Mode::Sampled;
        std::mt19937_64 rng(budget.seed);
        for (std::int64_t i = 0; i < budget.samples; ++i)
            if (!visit(random_elem(d, radius, rng))) break;
        r.weaken();
    }
    r.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

IntervalCarrier interval_carrier(const UnitIntervalContext& ctx, int radius) {
    const Descriptor& d = ctx.desc();
    CandidateSet c = candidates_between(d, {identity(d)}, {ctx.unit()}, radius);
    return {std::move(c.elems), c.complete};
}

}  // namespace rdpforge

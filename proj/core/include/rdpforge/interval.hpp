#pragma once

#include <optional>

#include "rdpforge/descriptor.hpp"
#include "rdpforge/elem.hpp"
#include "rdpforge/verdict.hpp"

namespace rdpforge {

// Interval [0, u] of a po-group with u strictly positive.
class UnitIntervalContext {
public:
    // InputError unless u is strictly positive.
    UnitIntervalContext(Descriptor desc, Elem u);
    const Descriptor& desc() const { return desc_; }
    const Elem& unit() const { return u_; }
    bool contains(const Elem& x) const;

private:
    Descriptor desc_;
    Elem u_;
};

// An element known to lie in [0, u].
class IntervalElem {
public:
    // InputError unless 0 <= value <= u.
    IntervalElem(const UnitIntervalContext& ctx, Elem value);
    const Elem& value() const { return value_; }
    friend bool operator==(const IntervalElem&, const IntervalElem&) = default;

private:
    Elem value_;
};

// Pseudo effect algebra: a + b is defined iff a + b <= u.
std::optional<IntervalElem> pea_add(const UnitIntervalContext& ctx, const IntervalElem& a, const IntervalElem& b);
// a^- = u - a, a^~ = -a + u
IntervalElem pea_lneg(const UnitIntervalContext& ctx, const IntervalElem& a);
IntervalElem pea_rneg(const UnitIntervalContext& ctx, const IntervalElem& a);
// b -l a = b - a and a -r b = -a + b, for a <= b. InputError otherwise.
IntervalElem pea_minus_left(const UnitIntervalContext& ctx, const IntervalElem& b, const IntervalElem& a);
IntervalElem pea_minus_right(const UnitIntervalContext& ctx, const IntervalElem& a, const IntervalElem& b);

// Pseudo MV-algebra; CapabilityError without lattice ops.
//   x (+) y = (x + y) meet u,  x (.) y = (x - u + y) join 0
IntervalElem pmv_oplus(const UnitIntervalContext& ctx, const IntervalElem& x, const IntervalElem& y);
IntervalElem pmv_odot(const UnitIntervalContext& ctx, const IntervalElem& x, const IntervalElem& y);

// (+) rebuilt from the partial structure: (b^- -l (a meet b^-))^~
IntervalElem pea_to_pmv_oplus(const UnitIntervalContext& ctx, const IntervalElem& a, const IntervalElem& b);
// Defined iff a (.) b = 0, then a (+) b.
std::optional<IntervalElem> pmv_to_pea_add(const UnitIntervalContext& ctx, const IntervalElem& a,
                                           const IntervalElem& b);

// Every g in the radius box satisfies g <= n u for some 1 <= n <= nmax.
// Non-enumerable descriptors are sampled with random_elem (inconclusive on
// pass).
VerdictReport is_strong_unit_probe(const UnitIntervalContext& ctx, int radius, int nmax,
                                   const CheckBudget& budget = {});

// Elements of [0, u] in the radius box, in enumeration order; `complete`
// when the interval is finite and fully listed.
struct IntervalCarrier {
    std::vector<Elem> elems;
    bool complete = true;
};
IntervalCarrier interval_carrier(const UnitIntervalContext& ctx, int radius);

}  // namespace rdpforge

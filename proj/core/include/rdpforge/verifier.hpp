#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "rdpforge/descriptor.hpp"
#include "rdpforge/interval.hpp"
#include "rdpforge/table.hpp"
#include "rdpforge/verdict.hpp"

namespace rdpforge {

// Brute-force table search over c11 in [0, a1] meet [0, b1].
enum class SearchOutcome { Found, NoneExists, Unknown };
const char* to_string(SearchOutcome o);

struct BruteSearch {
    SearchOutcome outcome = SearchOutcome::Unknown;
    std::optional<RefinementTable> table;
    std::uint64_t scanned = 0;
};

// Scans e, a1, b1 first, then every candidate c11 in enumeration order,
// completing each table by subtraction. NoneExists only after a complete
// scan. RDP1 candidates need a conclusive com check; RDP2 needs lattice ops.
// CapabilityError on non-enumerable descriptors.
BruteSearch brute_rdp_search(const Descriptor& desc, RdpKind kind, const Quadruple& q);

// RDP0: a <= b + c with a, b, c positive splits as a = b1 + c1 with
// 0 <= b1 <= b, 0 <= c1 <= c. RDP/RDP1/RDP2: every positive equal-sum
// quadruple of the box has a table. Engines are cross-checked against the
// brute search; any disagreement is a fail. RIP dispatches to check_rip.
// Non-enumerable descriptors are sampled (never better than inconclusive).
VerdictReport check_rdp(const Descriptor& desc, RdpKind kind, const CheckBudget& budget = {});

// Every a1, a2 <= b1, b2 of the box has an interpolant; cross-checked
// against the interpolation engine when one exists.
VerdictReport check_rip(const Descriptor& desc, const CheckBudget& budget = {});

// Partial-algebra axioms on the boxed carrier of [0, u]: associativity (i),
// unique complements (ii), the conjugation law (iii), unit absorption (iv),
// the derived order and double complements. Tags: "i".."iv", "order",
// "complement".
VerdictReport check_pea_axioms(const UnitIntervalContext& ctx, const CheckBudget& budget = {});

// Operations under test; (.) is derived as y (.) x = (x^- (+) y^-)^~.
struct PmvOps {
    std::function<IntervalElem(const IntervalElem&, const IntervalElem&)> oplus;
    std::function<IntervalElem(const IntervalElem&)> lneg;  // x^-
    std::function<IntervalElem(const IntervalElem&)> rneg;  // x^~
};
PmvOps default_pmv_ops(const UnitIntervalContext& ctx);

// A1..A8 over all triples of the carrier. CapabilityError without lattice ops.
VerdictReport check_pmv_axioms(const UnitIntervalContext& ctx, const CheckBudget& budget = {});
VerdictReport check_pmv_axioms(const UnitIntervalContext& ctx, const PmvOps& ops, const CheckBudget& budget = {});

// Boxed poset scan. Pass with note "lattice evidence" when every pair has a
// boxed meet and join; fail with note "antilattice evidence" when no
// incomparable pair has one, or "neither" otherwise. Z-wreaths over a
// non-linear fiber report "non-lattice evidence" through no_meet_witness.
VerdictReport check_lattice_or_antilattice(const Descriptor& desc, const CheckBudget& budget = {});

// Zero-shift z with z <= x and z <= y whose support keys and values lie in
// the radius box, greatest index first (rwz/lwz only). Stops when visit
// returns false; returns the number visited.
std::uint64_t for_each_zero_shift_lower_bound(const Descriptor& desc, const Elem& x, const Elem& y, int radius,
                                              const std::function<bool(const Elem&)>& visit);

}  // namespace rdpforge

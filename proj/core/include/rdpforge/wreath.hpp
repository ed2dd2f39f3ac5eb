#pragma once

#include "rdpforge/descriptor.hpp"
#include "rdpforge/lex.hpp"
#include "rdpforge/table.hpp"

namespace rdpforge {

// (n, g) * (m, h) = (n + m, a -> g_a . h_{a+n}); also used by the Z-wreath variants.
Elem wreath_mul(const Descriptor& desc, const Elem& x, const Elem& y);
// (n, g)^-1 = (-n, a -> (g_{a-n})^-1)
Elem wreath_inv(const Descriptor& desc, const Elem& x);

// Case by shifts; the shift group is linear so Incomparable never occurs.
CaseTag classify_wreath_quadruple(const Descriptor& desc, const Quadruple& q);

// Index group linear, fiber with an engine at `kind`. The quadruple equality
// is re-checked with wreath_mul before anything else.
RefinementTable wreath_rdp_decompose(const Descriptor& desc, RdpKind kind, const Quadruple& q);

// Fiber table at index `pick` of a table whose entries all have zero shift.
RefinementTable project_table_to_fiber(const Descriptor& desc, const RefinementTable& t, const Elem& pick);

namespace detail {
// Shared by the Wreath and Z-wreath engines. Handles equal first shifts
// (n1 = m1): entries are refined index by index with the fiber engine after
// moving the a1/b1 values down by `low` and the a2/b2 values down by `high`.
// `use_low` = false keeps c11 unshifted (the II pattern).
RefinementTable wreath_aligned_table(const Descriptor& desc, RdpKind kind, const Quadruple& q, bool use_low,
                                     bool use_high);
}  // namespace detail

}  // namespace rdpforge

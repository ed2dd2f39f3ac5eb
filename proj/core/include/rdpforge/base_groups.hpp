#pragma once

#include "rdpforge/descriptor.hpp"
#include "rdpforge/table.hpp"

namespace rdpforge {

// Any linearly ordered group: c11 = min(a1, b1) and the rest by subtraction.
// One of c12, c21 is the identity, so the table also satisfies RDP1 and RDP2.
RefinementTable linear_rdp_decompose(const Descriptor& desc, const Quadruple& q);

// Per-coordinate linear refinement for coordinatewise vectors.
RefinementTable coordwise_rdp_decompose(const Descriptor& desc, const Quadruple& q);

// Strict-cone vectors. Zero inputs force the table; otherwise c11 is the
// coordinatewise midpoint of (max(0, b1 - a2), min(a1, b1)). Integer vectors
// fall back to an exhaustive scan and throw NoTableExists when it is empty.
RefinementTable strict_cone_rdp_decompose(const Descriptor& desc, const Quadruple& q);

}  // namespace rdpforge

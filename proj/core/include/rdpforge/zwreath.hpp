#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rdpforge/descriptor.hpp"
#include "rdpforge/table.hpp"

namespace rdpforge {

// Right (rwz) and left (lwz) wreath products Z x| G^(Z). Both share the wreath
// multiplication; rwz reads the sign of a zero-shift element at its greatest
// support index, lwz at its least.

struct SignedSupportStats {
    std::vector<std::int64_t> supp;
    std::optional<std::int64_t> i0_max;
    std::optional<std::int64_t> i0_min;
};

SignedSupportStats signed_support_stats(const Descriptor& desc, const Elem& x);

bool rw_positive(const Descriptor& desc, const Elem& x);
bool lw_positive(const Descriptor& desc, const Elem& x);

// Index reflection i -> -i on the support; the shift is kept. An order
// isomorphism between rwz(G) and lwz(G) (not a group map once shifts are
// nonzero).
Elem reflect(const Elem& x);

// Which interpolation branch produced the interpolant.
enum class InterpCase {
    Coincide,       // two of the four inputs are equal
    ShiftSeparated, // (a): n2 < m1
    ShiftTouching,  // (b): n2 = m1 with some shifts different
    C1, C3, C4, C8, C10, C11, C12, C13,
};
const char* to_string(InterpCase c);

struct InterpResult {
    Elem c;
    InterpCase which;
    // Inside C1: "strict" (c' strictly between), "a-coincide", "b-coincide",
    // "a-step", "b-step". Empty elsewhere.
    std::string detail;
};

// Fiber needs an interpolation engine and strict bounds. InputError unless
// a1, a2 <= b1, b2.
InterpResult rw_interpolate_traced(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1,
                                   const Elem& b2);
InterpResult lw_interpolate_traced(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1,
                                   const Elem& b2);
Elem rw_interpolate(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1, const Elem& b2);
Elem lw_interpolate(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1, const Elem& b2);

// Abelian, directed, non-atomistic fiber with an RDP engine. Output validates
// at RDP.
RefinementTable rw_rdp_decompose_abelian(const Descriptor& desc, const Quadruple& q);
RefinementTable lw_rdp_decompose_abelian(const Descriptor& desc, const Quadruple& q);

// For x = (0,{0:a}), y = (0,{0:b}) and a lower bound z of both with zero
// shift: z with c added at index -1 (rwz) or +1 (lwz). The result lies
// strictly above z and still below x and y, so z is not a meet.
Elem no_meet_witness(const Descriptor& desc, const Elem& a, const Elem& b, const Elem& c, const Elem& z);

enum class Tristate { False, True, Unknown };
const char* to_string(Tristate t);

// RDP2 holds iff the fiber is linear.
bool rw_rdp2_gate(const Descriptor& desc);
bool lw_rdp2_gate(const Descriptor& desc);
// RDP1: linear fiber -> True; non-abelian non-linear -> False; abelian
// non-linear -> Unknown.
Tristate rw_rdp1_gate(const Descriptor& desc);
Tristate lw_rdp1_gate(const Descriptor& desc);

// Fiber entries at index 0 of a zero-shift table.
RefinementTable extract_fiber_table(const Descriptor& desc, const RefinementTable& t);

}  // namespace rdpforge

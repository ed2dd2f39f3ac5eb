#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rdpforge/descriptor.hpp"
#include "rdpforge/elem.hpp"
#include "rdpforge/verdict.hpp"

namespace rdpforge {

enum class RdpKind { RIP, RDP0, RDP, RDP1, RDP2 };

const char* to_string(RdpKind k);
// Case-insensitive "rip", "rdp0", "rdp", "rdp1", "rdp2"; InputError otherwise.
RdpKind parse_rdp_kind(std::string_view text);
// RIP and RDP0 share strength 0; RDP 1; RDP1 2; RDP2 3.
int strength(RdpKind k);

// a1 + a2 = b1 + b2.
struct Quadruple {
    Elem a1, a2, b1, b2;
    friend bool operator==(const Quadruple&, const Quadruple&) = default;
    Quadruple swapped() const { return {b1, b2, a1, a2}; }
};

// Rows refine (a1, a2), columns refine (b1, b2):
//   a1 = c11 + c12, a2 = c21 + c22, b1 = c11 + c21, b2 = c12 + c22.
struct RefinementTable {
    Elem c11, c12, c21, c22;
    friend bool operator==(const RefinementTable&, const RefinementTable&) = default;
    RefinementTable transposed() const { return {c11, c21, c12, c22}; }
};

// Throws InputError unless the quadruple is positive with equal sums.
void require_positive_equal_sums(const Descriptor& desc, const Quadruple& q);

// Completes the unique table with the given c11 (c12 = -c11 + a1,
// c21 = -c11 + b1, c22 = -c21 + a2) when all entries are positive and the
// second column sums to b2.
std::optional<RefinementTable> complete_table(const Descriptor& desc, const Quadruple& q, const Elem& c11);

// Row/column sums and cone membership only (no side conditions).
bool table_sums_hold(const Descriptor& desc, const Quadruple& q, const RefinementTable& t);

VerdictReport validate_table(const Descriptor& desc, const Quadruple& q, const RefinementTable& t, RdpKind kind,
                             const CheckBudget& budget = {});

// Every 0 <= x <= a commutes with every 0 <= y <= b.
VerdictReport com_probe(const Descriptor& desc, const Elem& a, const Elem& b, const CheckBudget& budget = {});

}  // namespace rdpforge

#pragma once

#include "rdpforge/descriptor.hpp"
#include "rdpforge/table.hpp"

namespace rdpforge {

// Shape of a positive equal-sum quadruple by its head (or shift) components
// n1, n2 (a-side) and m1, m2 (b-side).
//   I      all heads zero
//   II     a = (0, n), b = (0, n)
//   III    a = (n, 0), b = (n, 0)
//   IV     a = (n, 0), b = (0, n)
//   V      a = (n, 0), b both nonzero
//   VI     a = (0, n), b both nonzero
//   VII    all nonzero, m1 > n1
//   VIII   all nonzero, n1 > m1
//   IX     all nonzero, n1 = m1
//   Incomparable  all nonzero, n1 and m1 incomparable (non-linear heads)
// `mirrored` marks IV-VI with the roles of a and b exchanged.
enum class SplitCase { I, II, III, IV, V, VI, VII, VIII, IX, Incomparable };

struct CaseTag {
    SplitCase split;
    bool mirrored = false;
    friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

const char* to_string(SplitCase c);

// heads: descriptor of n1, n2, m1, m2. Throws InputError on a pattern that no
// positive equal-sum quadruple can have.
CaseTag classify_heads(const Descriptor& heads, const Elem& n1, const Elem& n2, const Elem& m1, const Elem& m2);

CaseTag classify_lex_quadruple(const Descriptor& desc, const Quadruple& q);

// Linear head; the tail needs an engine at `kind`.
RefinementTable lex_rdp_decompose_linear_head(const Descriptor& desc, RdpKind kind, const Quadruple& q);

// Directed antilattice head with an RDP engine and strictly_between.
// Incomparable heads go through the head engine with strictly positive
// corners; comparable heads use the linear-head cases.
RefinementTable lex_rdp_decompose_antilattice_head(const Descriptor& desc, const Quadruple& q);

// Drops the (zero) heads of every entry. InputError on a nonzero head.
RefinementTable project_table_to_tail(const Descriptor& desc, const RefinementTable& t);

}  // namespace rdpforge

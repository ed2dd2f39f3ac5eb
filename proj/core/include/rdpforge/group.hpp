#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdpforge/descriptor.hpp"
#include "rdpforge/elem.hpp"

namespace rdpforge {

// Throws ShapeError unless x has exactly the shape (and normal form) desc requires.
void check_shape(const Descriptor& desc, const Elem& x, const std::string& path = "root");
bool has_shape(const Descriptor& desc, const Elem& x);

Elem identity(const Descriptor& desc);
bool is_identity(const Descriptor& desc, const Elem& x);

// Group operation, written additively even for non-abelian groups.
Elem add(const Descriptor& desc, const Elem& x, const Elem& y);
Elem neg(const Descriptor& desc, const Elem& x);
// x - y := x + (-y)
Elem sub(const Descriptor& desc, const Elem& x, const Elem& y);
// -x + y
Elem left_sub(const Descriptor& desc, const Elem& x, const Elem& y);
// n copies of x added together (n >= 0).
Elem multiple(const Descriptor& desc, const Elem& x, int n);

bool leq(const Descriptor& desc, const Elem& x, const Elem& y);
bool less(const Descriptor& desc, const Elem& x, const Elem& y);
bool comparable(const Descriptor& desc, const Elem& x, const Elem& y);
bool in_positive_cone(const Descriptor& desc, const Elem& x);
bool strictly_positive(const Descriptor& desc, const Elem& x);

// -1, 0, 1 for a linear descriptor.
int compare_linear(const Descriptor& desc, const Elem& x, const Elem& y);

// Directedness witnesses: d with x, y <= d (resp. d <= x, y). Deterministic.
Elem upper_bound(const Descriptor& desc, const Elem& x, const Elem& y);
Elem lower_bound(const Descriptor& desc, const Elem& x, const Elem& y);
Elem upper_bound(const Descriptor& desc, const std::vector<Elem>& xs);
Elem lower_bound(const Descriptor& desc, const std::vector<Elem>& xs);

// A fixed strictly positive element. Throws CapabilityError on Trivial.
Elem positive_generator(const Descriptor& desc);
// d with x < d for every x in xs.
Elem strict_upper_bound(const Descriptor& desc, const std::vector<Elem>& xs);
// d with d < x for every x in xs.
Elem strict_lower_bound(const Descriptor& desc, const std::vector<Elem>& xs);

// Some d with lo < d < h for every h in highs, if the descriptor can produce
// one (dense rational leaves only). Throws CapabilityError elsewhere.
std::optional<Elem> strictly_between(const Descriptor& desc, const Elem& lo, const std::vector<Elem>& highs);

// Lattice operations; CapabilityError unless desc.has_lattice_ops().
Elem lattice_meet(const Descriptor& desc, const Elem& x, const Elem& y);
Elem lattice_join(const Descriptor& desc, const Elem& x, const Elem& y);

// Largest absolute integer appearing anywhere in x (numerators and
// denominators for rationals, keys and shifts for wreaths).
Elem::Integer max_abs_coordinate(const Elem& x);

// Rebuilds a wreath support from unsorted entries: sorts keys by the index
// order, merges duplicates with the fiber operation and drops identities.
Elem make_wreath(const Descriptor& desc, Elem shift, std::vector<std::pair<Elem, Elem>> entries);
// Fiber value at index key (identity when absent).
Elem wreath_at(const Descriptor& desc, const Elem& x, const Elem& key);

namespace detail {
// Unchecked variants used inside engines after inputs were validated once.
Elem add(const Descriptor& desc, const Elem& x, const Elem& y);
Elem neg(const Descriptor& desc, const Elem& x);
bool leq(const Descriptor& desc, const Elem& x, const Elem& y);
bool positive(const Descriptor& desc, const Elem& x);
int compare_linear(const Descriptor& desc, const Elem& x, const Elem& y);
}  // namespace detail

}  // namespace rdpforge

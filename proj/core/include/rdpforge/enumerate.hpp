#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "rdpforge/descriptor.hpp"
#include "rdpforge/elem.hpp"

namespace rdpforge {

// Every element whose integer coordinates (including wreath shifts and support
// keys) have absolute value <= radius, in a fixed deterministic order. Lex
// products and vectors vary the last component fastest. Throws
// CapabilityError on non-enumerable descriptors and InputError if the box is
// larger than max_box_elements.
std::vector<Elem> enumerate_box(const Descriptor& desc, int radius);
double box_size(const Descriptor& desc, int radius);
bool in_box(const Descriptor& desc, const Elem& x, int radius);

inline constexpr double max_box_elements = 5e7;

// Elements x with low <= x for every low and x <= high for every high.
// `complete` is true when the list provably contains every such element of
// the group; otherwise unconstrained coordinates were boxed by `radius` (or
// the list was cut at `limit`).
struct CandidateSet {
    std::vector<Elem> elems;
    bool complete = true;
};

CandidateSet candidates_between(const Descriptor& desc, const std::vector<Elem>& lows,
                                const std::vector<Elem>& highs, int radius, std::size_t limit = 2'000'000);

// Random element with integer coordinates (shifts, keys, numerators) in
// [-radius, radius]; rational denominators in [1, radius]; wreath supports of
// at most 3 keys. Works for every descriptor.
Elem random_elem(const Descriptor& desc, int radius, std::mt19937_64& rng);

}  // namespace rdpforge

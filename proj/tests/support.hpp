#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rdpforge/descriptor.hpp"
#include "rdpforge/elem.hpp"
#include "rdpforge/enumerate.hpp"
#include "rdpforge/group.hpp"
#include "rdpforge/syntax.hpp"
#include "rdpforge/table.hpp"

namespace rdpforge::testing {

inline Descriptor D(std::string_view text) { return parse_descriptor(text); }
inline Elem E(const Descriptor& d, std::string_view text) { return parse_elem(d, text); }

inline Quadruple Q(const Descriptor& d, std::string_view text) {
    const std::vector<Elem> xs = parse_elem_list(d, text);
    return {xs.at(0), xs.at(1), xs.at(2), xs.at(3)};
}

inline RefinementTable T(const Descriptor& d, std::string_view text) {
    const std::vector<Elem> xs = parse_elem_list(d, text);
    return {xs.at(0), xs.at(1), xs.at(2), xs.at(3)};
}

inline std::string show(const RefinementTable& t) {
    return format_elem(t.c11) + " " + format_elem(t.c12) + " " + format_elem(t.c21) + " " + format_elem(t.c22);
}

inline std::string show(const Quadruple& q) {
    return format_elem(q.a1) + " " + format_elem(q.a2) + " " + format_elem(q.b1) + " " + format_elem(q.b2);
}

// Positive elements of the box, in enumeration order.
inline std::vector<Elem> positives(const Descriptor& d, int radius) {
    std::vector<Elem> out;
    for (Elem& x : enumerate_box(d, radius))
        if (in_positive_cone(d, x)) out.push_back(std::move(x));
    return out;
}

// Calls f on every positive quadruple (a1, a2, b1, b2 = -b1 + a1 + a2) whose
// entries all lie in `box`.
template <class F>
void for_each_box_quadruple(const Descriptor& d, const std::vector<Elem>& pos, int radius, F&& f) {
    for (const Elem& a1 : pos)
        for (const Elem& a2 : pos) {
            const Elem s = add(d, a1, a2);
            for (const Elem& b1 : pos) {
                Elem b2 = left_sub(d, b1, s);
                if (!in_positive_cone(d, b2) || !in_box(d, b2, radius)) continue;
                f(Quadruple{a1, a2, b1, std::move(b2)});
            }
        }
}

// Random strictly positive-or-zero element from rejection sampling.
inline Elem random_positive(const Descriptor& d, int radius, std::mt19937_64& rng) {
    for (;;) {
        Elem x = random_elem(d, radius, rng);
        if (in_positive_cone(d, x)) return x;
    }
}

// Random positive equal-sum quadruple: b2 is completed from a1 + a2 - b1.
inline Quadruple random_quadruple(const Descriptor& d, int radius, std::mt19937_64& rng) {
    for (;;) {
        Elem a1 = random_positive(d, radius, rng), a2 = random_positive(d, radius, rng);
        Elem b1 = random_positive(d, radius, rng);
        Elem b2 = left_sub(d, b1, add(d, a1, a2));
        if (in_positive_cone(d, b2)) return {std::move(a1), std::move(a2), std::move(b1), std::move(b2)};
    }
}

}  // namespace rdpforge::testing

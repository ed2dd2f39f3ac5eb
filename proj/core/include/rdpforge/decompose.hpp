#pragma once

#include <string>

#include "rdpforge/descriptor.hpp"
#include "rdpforge/table.hpp"

namespace rdpforge {

// Which construction engine handles a descriptor at a given kind.
enum class Engine {
    None,
    Trivial,
    Linear,
    Coordinatewise,
    StrictCone,
    LexLinearHead,
    LexAntilatticeHead,
    Wreath,
    ZWreathAbelian,
};

const char* to_string(Engine e);

// Engine able to produce tables of the requested kind (RDP, RDP1 or RDP2),
// or Engine::None.
Engine engine_for(const Descriptor& desc, RdpKind kind);

// Runs engine_for(desc, kind). Throws CapabilityError when there is no
// engine and NoTableExists when a complete scan proves no table exists.
RefinementTable decompose(const Descriptor& desc, RdpKind kind, const Quadruple& q);

// Interpolant c with a1, a2 <= c <= b1, b2.
bool has_interpolation_engine(const Descriptor& desc);
Elem interpolate(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1, const Elem& b2);

}  // namespace rdpforge

#include "rdpforge/decompose.hpp"

#include "rdpforge/base_groups.hpp"
#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"
#include "rdpforge/lex.hpp"
#include "rdpforge/wreath.hpp"
#include "rdpforge/zwreath.hpp"

namespace rdpforge {

using Kind = Descriptor::Kind;

const char* to_string(Engine e) {
    switch (e) {
    case Engine::None: return "none";
    case Engine::Trivial: return "trivial";
    case Engine::Linear: return "linear";
    case Engine::Coordinatewise: return "coordinatewise";
    case Engine::StrictCone: return "strict-cone";
    case Engine::LexLinearHead: return "lex-linear-head";
    case Engine::LexAntilatticeHead: return "lex-antilattice-head";
    case Engine::Wreath: return "wreath";
    case Engine::ZWreathAbelian: return "zwreath-abelian";
    }
    return "?";
}

Engine engine_for(const Descriptor& desc, RdpKind kind) {
    if (kind == RdpKind::RIP || kind == RdpKind::RDP0) return Engine::None;
    if (desc.kind() == Kind::Trivial) return Engine::Trivial;
    if (desc.is_linear()) return Engine::Linear;
    switch (desc.kind()) {
    case Kind::IntVec:
    case Kind::RatVec:
        if (desc.cone() == ConeKind::Coordinatewise) return Engine::Coordinatewise;
        if (desc.cone() == ConeKind::Strict && kind != RdpKind::RDP2) return Engine::StrictCone;
        return Engine::None;
    case Kind::Lex: {
        const Descriptor& h = desc.head();
        if (h.is_linear()) return engine_for(desc.tail(), kind) != Engine::None ? Engine::LexLinearHead : Engine::None;
        const bool kind_ok = kind == RdpKind::RDP || (kind == RdpKind::RDP1 && desc.is_abelian());
        if (kind_ok && h.is_antilattice() && h.is_directed() && h.kind() == Kind::RatVec &&
            engine_for(h, RdpKind::RDP) != Engine::None && engine_for(desc.tail(), RdpKind::RDP) != Engine::None)
            return Engine::LexAntilatticeHead;
        return Engine::None;
    }
    case Kind::Wreath: return engine_for(desc.fiber(), kind) != Engine::None ? Engine::Wreath : Engine::None;
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: {
        const Descriptor& g = desc.fiber();
        const bool kind_ok = kind == RdpKind::RDP || (kind == RdpKind::RDP1 && desc.is_abelian());
        if (kind_ok && g.is_abelian() && g.is_non_atomistic() && g.is_directed() &&
            engine_for(g, RdpKind::RDP) != Engine::None && has_interpolation_engine(g))
            return Engine::ZWreathAbelian;
        return Engine::None;
    }
    default: return Engine::None;
    }
}

RefinementTable decompose(const Descriptor& desc, RdpKind kind, const Quadruple& q) {
    switch (engine_for(desc, kind)) {
    case Engine::None:
        throw CapabilityError(std::string("no ") + to_string(kind) + " engine for " + desc.to_string());
    case Engine::Trivial: {
        require_positive_equal_sums(desc, q);
        const Elem e = identity(desc);
        return {e, e, e, e};
    }
    case Engine::Linear: return linear_rdp_decompose(desc, q);
    case Engine::Coordinatewise: return coordwise_rdp_decompose(desc, q);
    case Engine::StrictCone: return strict_cone_rdp_decompose(desc, q);
    case Engine::LexLinearHead: return lex_rdp_decompose_linear_head(desc, kind, q);
    case Engine::LexAntilatticeHead: return lex_rdp_decompose_antilattice_head(desc, q);
    case Engine::Wreath: return wreath_rdp_decompose(desc, kind, q);
    case Engine::ZWreathAbelian:
        return desc.kind() == Kind::RightWreathZ ? rw_rdp_decompose_abelian(desc, q)
                                                 : lw_rdp_decompose_abelian(desc, q);
    }
    throw Error("internal: unknown engine");
}

bool has_interpolation_engine(const Descriptor& desc) {
    if (desc.is_linear() || desc.has_lattice_ops()) return true;
    if (desc.is_z_wreath()) return desc.fiber().kind() != Kind::Trivial && has_interpolation_engine(desc.fiber());
    return desc.is_abelian() && engine_for(desc, RdpKind::RDP) != Engine::None;
}

Elem interpolate(const Descriptor& desc, const Elem& a1, const Elem& a2, const Elem& b1, const Elem& b2) {
    for (const Elem* a : {&a1, &a2})
        for (const Elem* b : {&b1, &b2})
            if (!leq(desc, *a, *b))
                throw InputError("interpolation needs a1, a2 <= b1, b2; " + format_elem(*a) + " is not below " +
                                 format_elem(*b));
    if (desc.is_linear()) return detail::compare_linear(desc, a1, a2) >= 0 ? a1 : a2;
    if (desc.kind() == Kind::RightWreathZ) return rw_interpolate(desc, a1, a2, b1, b2);
    if (desc.kind() == Kind::LeftWreathZ) return lw_interpolate(desc, a1, a2, b1, b2);
    if (desc.has_lattice_ops()) return lattice_join(desc, a1, a2);
    if (desc.is_abelian() && engine_for(desc, RdpKind::RDP) != Engine::None) {
        const Quadruple q{sub(desc, b1, a1), sub(desc, b2, a2), sub(desc, b1, a2), sub(desc, b2, a1)};
        const RefinementTable t = decompose(desc, RdpKind::RDP, q);
        return sub(desc, b1, t.c11);
    }
    throw CapabilityError("no interpolation engine for " + desc.to_string());
}

}  // namespace rdpforge

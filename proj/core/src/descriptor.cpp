#include "rdpforge/descriptor.hpp"

#include "rdpforge/errors.hpp"

namespace rdpforge {

Descriptor Descriptor::make(Kind kind, int dim, ConeKind cone, const Descriptor* left, const Descriptor* right) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->dim = dim;
    node->cone = cone;
    if (left) node->left = std::make_shared<const Descriptor>(*left);
    if (right) node->right = std::make_shared<const Descriptor>(*right);

    Flags& f = node->flags;
    switch (kind) {
    case Kind::Trivial:
        f = {true, true, true, true, true, false, false};
        break;
    case Kind::Int:
        f = {true, true, true, true, true, false, false};
        break;
    case Kind::Rat:
        f = {true, true, true, false, true, true, false};
        break;
    case Kind::IntVec:
    case Kind::RatVec: {
        const bool linear = dim == 1 || cone == ConeKind::Lexicographic;
        f.linear = linear;
        f.abelian = true;
        f.directed = true;
        f.enumerable = kind == Kind::IntVec;
        f.lattice = linear || cone == ConeKind::Coordinatewise;
        f.non_atomistic = kind == Kind::RatVec;
        f.antilattice = cone == ConeKind::Strict;
        break;
    }
    case Kind::Lex: {
        const Flags& h = left->node_->flags;
        const Flags& t = right->node_->flags;
        f.linear = h.linear && t.linear;
        f.abelian = h.abelian && t.abelian;
        f.directed = h.directed && t.directed;
        f.enumerable = h.enumerable && t.enumerable;
        f.lattice = h.linear && t.lattice;
        f.non_atomistic = t.non_atomistic;
        break;
    }
    case Kind::Wreath: {
        const Flags& a = left->node_->flags;
        const Flags& g = right->node_->flags;
        const bool trivial_fiber = right->kind() == Kind::Trivial;
        const bool trivial_index = left->kind() == Kind::Trivial;
        f.linear = trivial_fiber;
        f.abelian = trivial_fiber ? a.abelian : (trivial_index && g.abelian);
        f.directed = a.directed && g.directed;
        f.enumerable = a.enumerable && g.enumerable;
        f.lattice = g.lattice;
        f.non_atomistic = g.non_atomistic;
        break;
    }
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: {
        const Flags& g = right->node_->flags;
        f.linear = g.linear;
        f.abelian = right->kind() == Kind::Trivial;
        f.directed = g.directed;
        f.enumerable = g.enumerable;
        f.lattice = g.linear;
        f.non_atomistic = g.non_atomistic;
        break;
    }
    }
    return Descriptor(std::move(node));
}

Descriptor Descriptor::trivial() { return make(Kind::Trivial, 0, ConeKind::Coordinatewise, nullptr, nullptr); }
Descriptor Descriptor::integers() { return make(Kind::Int, 1, ConeKind::Coordinatewise, nullptr, nullptr); }
Descriptor Descriptor::rationals() { return make(Kind::Rat, 1, ConeKind::Coordinatewise, nullptr, nullptr); }

Descriptor Descriptor::int_vec(int dim, ConeKind cone) {
    if (dim < 1) throw InputError("vector dimension must be positive");
    return make(Kind::IntVec, dim, cone, nullptr, nullptr);
}

Descriptor Descriptor::rat_vec(int dim, ConeKind cone) {
    if (dim < 1) throw InputError("vector dimension must be positive");
    return make(Kind::RatVec, dim, cone, nullptr, nullptr);
}

Descriptor Descriptor::lex(const Descriptor& head, const Descriptor& tail) {
    return make(Kind::Lex, 0, ConeKind::Coordinatewise, &head, &tail);
}

Descriptor Descriptor::wreath(const Descriptor& index, const Descriptor& fiber) {
    if (!index.is_linear())
        throw CapabilityError("wreath index group must be linearly ordered, got " + index.to_string());
    return make(Kind::Wreath, 0, ConeKind::Coordinatewise, &index, &fiber);
}

// The index slot of the Z-wreath variants holds Z so that index() works
// uniformly across wreath kinds.
Descriptor Descriptor::right_wreath_z(const Descriptor& fiber) {
    const Descriptor z = integers();
    return make(Kind::RightWreathZ, 0, ConeKind::Coordinatewise, &z, &fiber);
}

Descriptor Descriptor::left_wreath_z(const Descriptor& fiber) {
    const Descriptor z = integers();
    return make(Kind::LeftWreathZ, 0, ConeKind::Coordinatewise, &z, &fiber);
}

const Descriptor& Descriptor::head() const {
    if (!node_->left) throw CapabilityError(to_string() + " has no head/index component");
    return *node_->left;
}

const Descriptor& Descriptor::tail() const {
    if (!node_->right) throw CapabilityError(to_string() + " has no tail/fiber component");
    return *node_->right;
}

const char* to_string(ConeKind cone) {
    switch (cone) {
    case ConeKind::Coordinatewise: return "cw";
    case ConeKind::Strict: return "strict";
    case ConeKind::Lexicographic: return "lex";
    }
    return "?";
}

std::string Descriptor::to_string() const {
    switch (kind()) {
    case Kind::Trivial: return "trivial";
    case Kind::Int: return "Z";
    case Kind::Rat: return "Q";
    case Kind::IntVec:
        return "Zvec(" + std::to_string(dim()) + "," + rdpforge::to_string(cone()) + ")";
    case Kind::RatVec:
        return "Qvec(" + std::to_string(dim()) + "," + rdpforge::to_string(cone()) + ")";
    case Kind::Lex: return "lex(" + head().to_string() + "," + tail().to_string() + ")";
    case Kind::Wreath: return "wr(" + head().to_string() + "," + tail().to_string() + ")";
    case Kind::RightWreathZ: return "rwz(" + tail().to_string() + ")";
    case Kind::LeftWreathZ: return "lwz(" + tail().to_string() + ")";
    }
    return "?";
}

bool operator==(const Descriptor& a, const Descriptor& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.dim() != b.dim() || a.cone() != b.cone()) return false;
    switch (a.kind()) {
    case Descriptor::Kind::Lex:
    case Descriptor::Kind::Wreath:
        return a.head() == b.head() && a.tail() == b.tail();
    case Descriptor::Kind::RightWreathZ:
    case Descriptor::Kind::LeftWreathZ:
        return a.tail() == b.tail();
    default:
        return true;
    }
}

}  // namespace rdpforge

#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace rdpforge {

enum class ConeKind : std::uint8_t { Coordinatewise, Strict, Lexicographic };

// Immutable tree describing a tower of po-group constructions. Copies share
// the underlying nodes. Capability flags are computed once at construction.
class Descriptor {
public:
    enum class Kind : std::uint8_t {
        Trivial,
        Int,
        Rat,
        IntVec,
        RatVec,
        Lex,
        Wreath,
        RightWreathZ,
        LeftWreathZ,
    };

    static Descriptor trivial();
    static Descriptor integers();
    static Descriptor rationals();
    static Descriptor int_vec(int dim, ConeKind cone);
    static Descriptor rat_vec(int dim, ConeKind cone);
    static Descriptor lex(const Descriptor& head, const Descriptor& tail);
    // Throws CapabilityError unless index.is_linear().
    static Descriptor wreath(const Descriptor& index, const Descriptor& fiber);
    static Descriptor right_wreath_z(const Descriptor& fiber);
    static Descriptor left_wreath_z(const Descriptor& fiber);

    Kind kind() const { return node_->kind; }
    int dim() const { return node_->dim; }
    ConeKind cone() const { return node_->cone; }

    // Lex head / Wreath index.
    const Descriptor& head() const;
    // Lex tail / fiber of every wreath variant.
    const Descriptor& tail() const;
    const Descriptor& index() const { return head(); }
    const Descriptor& fiber() const { return tail(); }

    bool is_vector() const { return kind() == Kind::IntVec || kind() == Kind::RatVec; }
    bool is_wreath_like() const {
        return kind() == Kind::Wreath || kind() == Kind::RightWreathZ || kind() == Kind::LeftWreathZ;
    }
    bool is_z_wreath() const { return kind() == Kind::RightWreathZ || kind() == Kind::LeftWreathZ; }

    bool is_linear() const { return node_->flags.linear; }
    bool is_abelian() const { return node_->flags.abelian; }
    bool is_directed() const { return node_->flags.directed; }
    bool is_enumerable() const { return node_->flags.enumerable; }
    bool has_lattice_ops() const { return node_->flags.lattice; }
    bool is_non_atomistic() const { return node_->flags.non_atomistic; }
    bool is_antilattice() const { return node_->flags.antilattice; }

    // Tower expression in the CLI grammar, e.g. "lex(Z,Zvec(2,cw))".
    std::string to_string() const;

    friend bool operator==(const Descriptor& a, const Descriptor& b);

private:
    struct Flags {
        bool linear = false;
        bool abelian = false;
        bool directed = false;
        bool enumerable = false;
        bool lattice = false;
        bool non_atomistic = false;
        bool antilattice = false;
    };
    struct Node {
        Kind kind = Kind::Trivial;
        int dim = 0;
        ConeKind cone = ConeKind::Coordinatewise;
        std::shared_ptr<const Descriptor> left;
        std::shared_ptr<const Descriptor> right;
        Flags flags;
    };

    explicit Descriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Descriptor make(Kind kind, int dim, ConeKind cone, const Descriptor* left, const Descriptor* right);

    std::shared_ptr<const Node> node_;
};

const char* to_string(ConeKind cone);

}  // namespace rdpforge

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace rdpforge {

using Rational = mpq_class;

// Owning pointer with value semantics (deep copy, structural equality).
template <class T>
class Box {
public:
    Box() : p_(std::make_unique<T>()) {}
    Box(T value) : p_(std::make_unique<T>(std::move(value))) {}
    Box(const Box& other) : p_(std::make_unique<T>(*other.p_)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& other) {
        if (this != &other) p_ = std::make_unique<T>(*other.p_);
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;

    const T& operator*() const { return *p_; }
    T& operator*() { return *p_; }
    const T* operator->() const { return p_.get(); }
    T* operator->() { return p_.get(); }

    friend bool operator==(const Box& a, const Box& b) { return *a.p_ == *b.p_; }

private:
    std::unique_ptr<T> p_;
};

// Exact element value. Its shape mirrors a Descriptor:
//   Trivial -> Unit, Int -> Integer, Rat -> Rational, vectors -> Vector,
//   Lex -> Pair, wreath variants -> Wreath.
// Wreath supports are kept as parallel key/value arrays sorted by the index
// order, without identity values.
class Elem {
public:
    using Unit = std::monostate;
    using Integer = std::int64_t;
    using Vector = std::vector<Elem>;
    struct Pair {
        Box<Elem> head;
        Box<Elem> tail;
        friend bool operator==(const Pair&, const Pair&) = default;
    };
    struct Wreath {
        Box<Elem> shift;
        std::vector<Elem> keys;
        std::vector<Elem> values;
        friend bool operator==(const Wreath&, const Wreath&) = default;
    };
    using Value = std::variant<Unit, Integer, Rational, Vector, Pair, Wreath>;

    Elem() = default;
    Elem(Integer v) : v_(v) {}
    Elem(Rational v) : v_(std::move(v)) {}
    Elem(Vector v) : v_(std::move(v)) {}
    Elem(Pair v) : v_(std::move(v)) {}
    Elem(Wreath v) : v_(std::move(v)) {}

    static Elem unit() { return Elem(); }
    static Elem integer(Integer v) { return Elem(v); }
    static Elem rational(Rational v) {
        v.canonicalize();
        return Elem(std::move(v));
    }
    static Elem vector(Vector v) { return Elem(std::move(v)); }
    static Elem pair(Elem head, Elem tail) { return Elem(Pair{Box<Elem>(std::move(head)), Box<Elem>(std::move(tail))}); }
    // Keys must already be sorted and values non-identity; see make_wreath in group.hpp.
    static Elem wreath(Elem shift, std::vector<Elem> keys, std::vector<Elem> values) {
        return Elem(Wreath{Box<Elem>(std::move(shift)), std::move(keys), std::move(values)});
    }

    const Value& value() const { return v_; }
    Value& value() { return v_; }

    bool is_unit() const { return std::holds_alternative<Unit>(v_); }
    bool is_integer() const { return std::holds_alternative<Integer>(v_); }
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_vector() const { return std::holds_alternative<Vector>(v_); }
    bool is_pair() const { return std::holds_alternative<Pair>(v_); }
    bool is_wreath() const { return std::holds_alternative<Wreath>(v_); }

    Integer as_integer() const { return std::get<Integer>(v_); }
    const Rational& as_rational() const { return std::get<Rational>(v_); }
    const Vector& as_vector() const { return std::get<Vector>(v_); }
    const Pair& as_pair() const { return std::get<Pair>(v_); }
    const Wreath& as_wreath() const { return std::get<Wreath>(v_); }

    const Elem& head() const { return *as_pair().head; }
    const Elem& tail() const { return *as_pair().tail; }
    const Elem& shift() const { return *as_wreath().shift; }

    friend bool operator==(const Elem& a, const Elem& b) { return a.v_ == b.v_; }

private:
    Value v_;
};

// Literal form: -3, 2/3, (1,2), (h;t), (n;{k:v,...}); the unit is "e".
std::string format_elem(const Elem& x);

}  // namespace rdpforge

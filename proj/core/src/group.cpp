#include "rdpforge/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "rdpforge/errors.hpp"

namespace rdpforge {

using Kind = Descriptor::Kind;
using Integer = Elem::Integer;

namespace {

Integer checked_add(Integer a, Integer b) {
    Integer r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in group operation");
    return r;
}

Integer checked_neg(Integer a) {
    if (a == std::numeric_limits<Integer>::min()) throw Error("integer overflow in negation");
    return -a;
}

bool is_zero(const Elem& x) {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Elem::Unit>) {
                return true;
            } else if constexpr (std::is_same_v<T, Integer>) {
                return v == 0;
            } else if constexpr (std::is_same_v<T, Rational>) {
                return sgn(v) == 0;
            } else if constexpr (std::is_same_v<T, Elem::Vector>) {
                return std::all_of(v.begin(), v.end(), [](const Elem& c) { return is_zero(c); });
            } else if constexpr (std::is_same_v<T, Elem::Pair>) {
                return is_zero(*v.head) && is_zero(*v.tail);
            } else {
                return is_zero(*v.shift) && v.keys.empty();
            }
        },
        x.value());
}

// Sign of a scalar leaf (Integer or Rational).
int scalar_sign(const Elem& x) {
    if (x.is_integer()) return (x.as_integer() > 0) - (x.as_integer() < 0);
    return sgn(x.as_rational());
}

int scalar_compare(const Elem& x, const Elem& y) {
    if (x.is_integer()) return (x.as_integer() > y.as_integer()) - (x.as_integer() < y.as_integer());
    return cmp(x.as_rational(), y.as_rational());
}

Elem scalar_add(const Elem& x, const Elem& y) {
    if (x.is_integer()) return Elem(checked_add(x.as_integer(), y.as_integer()));
    return Elem(Rational(x.as_rational() + y.as_rational()));
}

Elem scalar_neg(const Elem& x) {
    if (x.is_integer()) return Elem(checked_neg(x.as_integer()));
    return Elem(Rational(-x.as_rational()));
}

int key_compare(const Descriptor& index, const Elem& a, const Elem& b) {
    if (a.is_integer() && b.is_integer())
        return (a.as_integer() > b.as_integer()) - (a.as_integer() < b.as_integer());
    return detail::compare_linear(index, a, b);
}

// Cone test for vectors given the per-coordinate differences y - x.
bool vector_cone_leq(ConeKind cone, const Elem::Vector& x, const Elem::Vector& y) {
    const std::size_t k = x.size();
    switch (cone) {
    case ConeKind::Coordinatewise:
        for (std::size_t i = 0; i < k; ++i)
            if (scalar_compare(x[i], y[i]) > 0) return false;
        return true;
    case ConeKind::Strict: {
        bool all_equal = true;
        bool all_less = true;
        for (std::size_t i = 0; i < k; ++i) {
            const int c = scalar_compare(x[i], y[i]);
            if (c != 0) all_equal = false;
            if (c >= 0) all_less = false;
        }
        return all_equal || all_less;
    }
    case ConeKind::Lexicographic:
        for (std::size_t i = 0; i < k; ++i) {
            const int c = scalar_compare(x[i], y[i]);
            if (c != 0) return c < 0;
        }
        return true;
    }
    return false;
}

// Walks the union of two sorted supports, calling f(key, x_value_or_null, y_value_or_null)
// in increasing key order.
template <class F>
void merge_supports(const Descriptor& index, const Elem::Wreath& x, const Elem::Wreath& y, F&& f) {
    std::size_t i = 0, j = 0;
    while (i < x.keys.size() || j < y.keys.size()) {
        if (j == y.keys.size()) {
            f(x.keys[i], &x.values[i], nullptr);
            ++i;
        } else if (i == x.keys.size()) {
            f(y.keys[j], nullptr, &y.values[j]);
            ++j;
        } else {
            const int c = key_compare(index, x.keys[i], y.keys[j]);
            if (c < 0) {
                f(x.keys[i], &x.values[i], nullptr);
                ++i;
            } else if (c > 0) {
                f(y.keys[j], nullptr, &y.values[j]);
                ++j;
            } else {
                f(x.keys[i], &x.values[i], &y.values[j]);
                ++i;
                ++j;
            }
        }
    }
}

// Pointwise combination over the union of supports with a binary fiber map.
template <class F>
Elem pointwise(const Descriptor& desc, const Elem& shift, const Elem::Wreath& x, const Elem::Wreath& y, F&& op) {
    const Descriptor& a = desc.index();
    const Descriptor& g = desc.fiber();
    const Elem e = identity(g);
    std::vector<Elem> keys, values;
    merge_supports(a, x, y, [&](const Elem& k, const Elem* u, const Elem* v) {
        Elem r = op(u ? *u : e, v ? *v : e);
        if (!is_zero(r)) {
            keys.push_back(k);
            values.push_back(std::move(r));
        }
    });
    return Elem::wreath(shift, std::move(keys), std::move(values));
}

Elem wreath_mul(const Descriptor& desc, const Elem& xe, const Elem& ye) {
    const Descriptor& a = desc.index();
    const Descriptor& g = desc.fiber();
    const Elem::Wreath& x = xe.as_wreath();
    const Elem::Wreath& y = ye.as_wreath();
    const Elem& n = *x.shift;
    Elem shift = detail::add(a, n, *y.shift);

    // (g * h)_a = g_a . h_{a+n}; the h-entry stored at key b lands at a = b - n.
    Elem::Wreath moved;
    if (is_zero(n)) {
        moved.keys = y.keys;
    } else {
        const Elem minus_n = detail::neg(a, n);
        moved.keys.reserve(y.keys.size());
        for (const Elem& b : y.keys) moved.keys.push_back(detail::add(a, b, minus_n));
    }
    moved.values = y.values;
    return pointwise(desc, shift, x, moved, [&](const Elem& u, const Elem& v) { return detail::add(g, u, v); });
}

Elem wreath_inv(const Descriptor& desc, const Elem& xe) {
    const Descriptor& a = desc.index();
    const Descriptor& g = desc.fiber();
    const Elem::Wreath& x = xe.as_wreath();
    const Elem& n = *x.shift;
    // (x^-1)_a = (x_{a-n})^-1, so the entry at key b moves to b + n.
    std::vector<Elem> keys, values;
    keys.reserve(x.keys.size());
    values.reserve(x.keys.size());
    const bool zero_shift = is_zero(n);
    for (std::size_t i = 0; i < x.keys.size(); ++i) {
        keys.push_back(zero_shift ? x.keys[i] : detail::add(a, x.keys[i], n));
        values.push_back(detail::neg(g, x.values[i]));
    }
    return Elem::wreath(detail::neg(a, n), std::move(keys), std::move(values));
}

// Right/left Z-wreath comparison of equal-shift elements: sign at the
// greatest (right) or least (left) differing index.
bool zwreath_leq_same_shift(const Descriptor& desc, const Elem::Wreath& x, const Elem::Wreath& y) {
    const Descriptor& g = desc.fiber();
    const bool right = desc.kind() == Kind::RightWreathZ;
    const std::size_t nx = x.keys.size(), ny = y.keys.size();
    const Elem e = identity(g);
    auto decide = [&](const Elem& u, const Elem& v) {
        // u != v here
        return detail::leq(g, u, v);
    };
    if (right) {
        std::size_t i = nx, j = ny;
        while (i > 0 || j > 0) {
            if (i == 0) return decide(e, y.values[j - 1]);
            if (j == 0) return decide(x.values[i - 1], e);
            const Integer ki = x.keys[i - 1].as_integer();
            const Integer kj = y.keys[j - 1].as_integer();
            if (ki > kj) return decide(x.values[i - 1], e);
            if (kj > ki) return decide(e, y.values[j - 1]);
            if (!(x.values[i - 1] == y.values[j - 1])) return decide(x.values[i - 1], y.values[j - 1]);
            --i;
            --j;
        }
        return true;
    }
    std::size_t i = 0, j = 0;
    while (i < nx || j < ny) {
        if (i == nx) return decide(e, y.values[j]);
        if (j == ny) return decide(x.values[i], e);
        const Integer ki = x.keys[i].as_integer();
        const Integer kj = y.keys[j].as_integer();
        if (ki < kj) return decide(x.values[i], e);
        if (kj < ki) return decide(e, y.values[j]);
        if (!(x.values[i] == y.values[j])) return decide(x.values[i], y.values[j]);
        ++i;
        ++j;
    }
    return true;
}

void shape_fail(const std::string& path, const std::string& what) { throw ShapeError(path, what); }

bool rational_canonical(const Rational& q) {
    if (sgn(q.get_den()) <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Shape checking

namespace {

// Path to the checked node, rendered only when a check fails.
struct ShapePath {
    const ShapePath* parent;
    const char* label;
    std::int64_t index;  // -1 when unused

    std::string render(const std::string& root) const {
        std::string out = parent ? parent->render(root) : root;
        if (label) out += label;
        if (index >= 0) out += "[" + std::to_string(index) + "]";
        return out;
    }
};

void shape_check(const Descriptor& desc, const Elem& x, const std::string& root, const ShapePath* at) {
    auto fail = [&](const std::string& what) { shape_fail(at ? at->render(root) : root, what); };
    switch (desc.kind()) {
    case Kind::Trivial:
        if (!x.is_unit()) fail("expected the trivial element");
        return;
    case Kind::Int:
        if (!x.is_integer()) fail("expected an integer");
        return;
    case Kind::Rat:
        if (!x.is_rational()) fail("expected a rational");
        if (!rational_canonical(x.as_rational())) fail("rational not in lowest terms");
        return;
    case Kind::IntVec:
    case Kind::RatVec: {
        if (!x.is_vector()) fail("expected a vector");
        const auto& v = x.as_vector();
        if (static_cast<int>(v.size()) != desc.dim())
            fail("expected " + std::to_string(desc.dim()) + " components, got " + std::to_string(v.size()));
        static const Descriptor z = Descriptor::integers(), q = Descriptor::rationals();
        const Descriptor& leaf = desc.kind() == Kind::IntVec ? z : q;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const ShapePath p{at, nullptr, static_cast<std::int64_t>(i)};
            shape_check(leaf, v[i], root, &p);
        }
        return;
    }
    case Kind::Lex: {
        if (!x.is_pair()) fail("expected a lex pair");
        const ShapePath h{at, ".head", -1}, t{at, ".tail", -1};
        shape_check(desc.head(), x.head(), root, &h);
        shape_check(desc.tail(), x.tail(), root, &t);
        return;
    }
    case Kind::Wreath:
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: {
        if (!x.is_wreath()) fail("expected a wreath element");
        const auto& w = x.as_wreath();
        const ShapePath sp{at, ".shift", -1};
        shape_check(desc.index(), *w.shift, root, &sp);
        if (w.keys.size() != w.values.size()) fail("support keys and values differ in length");
        for (std::size_t i = 0; i < w.keys.size(); ++i) {
            const ShapePath p{at, ".support", static_cast<std::int64_t>(i)};
            const ShapePath pk{&p, ".key", -1}, pv{&p, ".value", -1};
            shape_check(desc.index(), w.keys[i], root, &pk);
            shape_check(desc.fiber(), w.values[i], root, &pv);
            if (is_zero(w.values[i])) shape_fail(p.render(root), "support holds an identity value");
            if (i > 0 && key_compare(desc.index(), w.keys[i - 1], w.keys[i]) >= 0)
                shape_fail(p.render(root), "support keys not strictly increasing");
        }
        return;
    }
    }
}

}  // namespace

void check_shape(const Descriptor& desc, const Elem& x, const std::string& path) {
    shape_check(desc, x, path, nullptr);
}

bool has_shape(const Descriptor& desc, const Elem& x) {
    try {
        check_shape(desc, x);
        return true;
    } catch (const ShapeError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Unchecked core

namespace detail {

Elem add(const Descriptor& desc, const Elem& x, const Elem& y) {
    switch (desc.kind()) {
    case Kind::Trivial: return Elem();
    case Kind::Int: return Elem(checked_add(x.as_integer(), y.as_integer()));
    case Kind::Rat: return Elem(Rational(x.as_rational() + y.as_rational()));
    case Kind::IntVec:
    case Kind::RatVec: {
        const auto& u = x.as_vector();
        const auto& v = y.as_vector();
        Elem::Vector r;
        r.reserve(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) r.push_back(scalar_add(u[i], v[i]));
        return Elem(std::move(r));
    }
    case Kind::Lex:
        return Elem::pair(detail::add(desc.head(), x.head(), y.head()), detail::add(desc.tail(), x.tail(), y.tail()));
    case Kind::Wreath:
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ:
        return wreath_mul(desc, x, y);
    }
    return Elem();
}

Elem neg(const Descriptor& desc, const Elem& x) {
    switch (desc.kind()) {
    case Kind::Trivial: return Elem();
    case Kind::Int: return Elem(checked_neg(x.as_integer()));
    case Kind::Rat: return Elem(Rational(-x.as_rational()));
    case Kind::IntVec:
    case Kind::RatVec: {
        Elem::Vector r;
        r.reserve(x.as_vector().size());
        for (const Elem& c : x.as_vector()) r.push_back(scalar_neg(c));
        return Elem(std::move(r));
    }
    case Kind::Lex: return Elem::pair(detail::neg(desc.head(), x.head()), detail::neg(desc.tail(), x.tail()));
    case Kind::Wreath:
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ:
        return wreath_inv(desc, x);
    }
    return Elem();
}

bool positive(const Descriptor& desc, const Elem& x) {
    switch (desc.kind()) {
    case Kind::Trivial: return true;
    case Kind::Int: return x.as_integer() >= 0;
    case Kind::Rat: return sgn(x.as_rational()) >= 0;
    case Kind::IntVec:
    case Kind::RatVec: {
        const auto& v = x.as_vector();
        switch (desc.cone()) {
        case ConeKind::Coordinatewise:
            return std::all_of(v.begin(), v.end(), [](const Elem& c) { return scalar_sign(c) >= 0; });
        case ConeKind::Strict:
            return std::all_of(v.begin(), v.end(), [](const Elem& c) { return scalar_sign(c) > 0; }) ||
                   std::all_of(v.begin(), v.end(), [](const Elem& c) { return scalar_sign(c) == 0; });
        case ConeKind::Lexicographic:
            for (const Elem& c : v) {
                const int s = scalar_sign(c);
                if (s != 0) return s > 0;
            }
            return true;
        }
        return false;
    }
    case Kind::Lex:
        if (is_zero(x.head())) return detail::positive(desc.tail(), x.tail());
        return detail::positive(desc.head(), x.head());
    case Kind::Wreath: {
        const auto& w = x.as_wreath();
        if (!is_zero(*w.shift)) return detail::positive(desc.index(), *w.shift);
        return std::all_of(w.values.begin(), w.values.end(), [&](const Elem& v) { return detail::positive(desc.fiber(), v); });
    }
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: {
        const auto& w = x.as_wreath();
        const Integer s = w.shift->as_integer();
        if (s != 0) return s > 0;
        if (w.keys.empty()) return true;
        const Elem& v = desc.kind() == Kind::RightWreathZ ? w.values.back() : w.values.front();
        return detail::positive(desc.fiber(), v);
    }
    }
    return false;
}

bool leq(const Descriptor& desc, const Elem& x, const Elem& y) {
    switch (desc.kind()) {
    case Kind::Trivial: return true;
    case Kind::Int: return x.as_integer() <= y.as_integer();
    case Kind::Rat: return x.as_rational() <= y.as_rational();
    case Kind::IntVec:
    case Kind::RatVec: return vector_cone_leq(desc.cone(), x.as_vector(), y.as_vector());
    case Kind::Lex:
        if (x.head() == y.head()) return detail::leq(desc.tail(), x.tail(), y.tail());
        return detail::leq(desc.head(), x.head(), y.head());
    case Kind::Wreath: {
        const auto& u = x.as_wreath();
        const auto& v = y.as_wreath();
        const int c = key_compare(desc.index(), *u.shift, *v.shift);
        if (c != 0) return c < 0;
        const Descriptor& g = desc.fiber();
        const Elem e = identity(g);
        bool ok = true;
        merge_supports(desc.index(), u, v, [&](const Elem&, const Elem* p, const Elem* q) {
            if (ok && !detail::leq(g, p ? *p : e, q ? *q : e)) ok = false;
        });
        return ok;
    }
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: {
        const auto& u = x.as_wreath();
        const auto& v = y.as_wreath();
        const Integer su = u.shift->as_integer(), sv = v.shift->as_integer();
        if (su != sv) return su < sv;
        return zwreath_leq_same_shift(desc, u, v);
    }
    }
    return false;
}

int compare_linear(const Descriptor& desc, const Elem& x, const Elem& y) {
    switch (desc.kind()) {
    case Kind::Trivial: return 0;
    case Kind::Int:
    case Kind::Rat: return scalar_compare(x, y);
    case Kind::IntVec:
    case Kind::RatVec: {
        const auto& u = x.as_vector();
        const auto& v = y.as_vector();
        for (std::size_t i = 0; i < u.size(); ++i) {
            const int c = scalar_compare(u[i], v[i]);
            if (c != 0) return c;
        }
        return 0;
    }
    case Kind::Lex: {
        const int c = detail::compare_linear(desc.head(), x.head(), y.head());
        return c != 0 ? c : detail::compare_linear(desc.tail(), x.tail(), y.tail());
    }
    default:
        if (x == y) return 0;
        return detail::leq(desc, x, y) ? -1 : 1;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public checked interface

Elem identity(const Descriptor& desc) {
    switch (desc.kind()) {
    case Kind::Trivial: return Elem();
    case Kind::Int: return Elem(Integer{0});
    case Kind::Rat: return Elem(Rational(0));
    case Kind::IntVec: return Elem(Elem::Vector(desc.dim(), Elem(Integer{0})));
    case Kind::RatVec: return Elem(Elem::Vector(desc.dim(), Elem(Rational(0))));
    case Kind::Lex: return Elem::pair(identity(desc.head()), identity(desc.tail()));
    case Kind::Wreath:
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ:
        return Elem::wreath(identity(desc.index()), {}, {});
    }
    return Elem();
}

bool is_identity(const Descriptor& desc, const Elem& x) {
    check_shape(desc, x);
    return is_zero(x);
}

Elem add(const Descriptor& desc, const Elem& x, const Elem& y) {
    check_shape(desc, x, "lhs");
    check_shape(desc, y, "rhs");
    return detail::add(desc, x, y);
}

Elem neg(const Descriptor& desc, const Elem& x) {
    check_shape(desc, x);
    return detail::neg(desc, x);
}

Elem sub(const Descriptor& desc, const Elem& x, const Elem& y) { return add(desc, x, neg(desc, y)); }

Elem left_sub(const Descriptor& desc, const Elem& x, const Elem& y) { return add(desc, neg(desc, x), y); }

Elem multiple(const Descriptor& desc, const Elem& x, int n) {
    if (n < 0) throw InputError("multiple: n must be non-negative");
    check_shape(desc, x);
    Elem r = identity(desc);
    for (int i = 0; i < n; ++i) r = detail::add(desc, r, x);
    return r;
}

bool leq(const Descriptor& desc, const Elem& x, const Elem& y) {
    check_shape(desc, x, "lhs");
    check_shape(desc, y, "rhs");
    return detail::leq(desc, x, y);
}

bool less(const Descriptor& desc, const Elem& x, const Elem& y) { return leq(desc, x, y) && !(x == y); }

bool comparable(const Descriptor& desc, const Elem& x, const Elem& y) {
    return leq(desc, x, y) || detail::leq(desc, y, x);
}

bool in_positive_cone(const Descriptor& desc, const Elem& x) {
    check_shape(desc, x);
    return detail::positive(desc, x);
}

bool strictly_positive(const Descriptor& desc, const Elem& x) { return in_positive_cone(desc, x) && !is_zero(x); }

int compare_linear(const Descriptor& desc, const Elem& x, const Elem& y) {
    if (!desc.is_linear()) throw CapabilityError("compare_linear on non-linear " + desc.to_string());
    check_shape(desc, x, "lhs");
    check_shape(desc, y, "rhs");
    return detail::compare_linear(desc, x, y);
}

namespace {

Elem upper_bound_impl(const Descriptor& desc, const Elem& x, const Elem& y) {
    switch (desc.kind()) {
    case Kind::Trivial: return Elem();
    case Kind::Int:
    case Kind::Rat: return scalar_compare(x, y) >= 0 ? x : y;
    case Kind::IntVec:
    case Kind::RatVec: {
        if (desc.is_linear()) return detail::compare_linear(desc, x, y) >= 0 ? x : y;
        const auto& u = x.as_vector();
        const auto& v = y.as_vector();
        Elem::Vector m;
        m.reserve(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) m.push_back(scalar_compare(u[i], v[i]) >= 0 ? u[i] : v[i]);
        Elem r(std::move(m));
        if (desc.cone() == ConeKind::Strict && !(detail::leq(desc, x, r) && detail::leq(desc, y, r)))
            r = detail::add(desc, r, positive_generator(desc));
        return r;
    }
    case Kind::Lex: {
        const Descriptor& h = desc.head();
        if (x.head() == y.head())
            return Elem::pair(x.head(), upper_bound_impl(desc.tail(), x.tail(), y.tail()));
        if (detail::leq(h, x.head(), y.head())) return y;
        if (detail::leq(h, y.head(), x.head())) return x;
        return Elem::pair(upper_bound_impl(h, x.head(), y.head()), identity(desc.tail()));
    }
    case Kind::Wreath: {
        const auto& u = x.as_wreath();
        const auto& v = y.as_wreath();
        const int c = key_compare(desc.index(), *u.shift, *v.shift);
        if (c != 0) return c > 0 ? x : y;
        const Descriptor& g = desc.fiber();
        return pointwise(desc, *u.shift, u, v, [&](const Elem& p, const Elem& q) { return upper_bound_impl(g, p, q); });
    }
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: {
        const Integer su = x.shift().as_integer(), sv = y.shift().as_integer();
        if (su != sv) return su > sv ? x : y;
        if (detail::leq(desc, x, y)) return y;
        if (detail::leq(desc, y, x)) return x;
        return Elem::wreath(Elem(checked_add(su, 1)), {}, {});
    }
    }
    return Elem();
}

}  // namespace

Elem upper_bound(const Descriptor& desc, const Elem& x, const Elem& y) {
    check_shape(desc, x, "lhs");
    check_shape(desc, y, "rhs");
    return upper_bound_impl(desc, x, y);
}

Elem lower_bound(const Descriptor& desc, const Elem& x, const Elem& y) {
    check_shape(desc, x, "lhs");
    check_shape(desc, y, "rhs");
    return detail::neg(desc, upper_bound_impl(desc, detail::neg(desc, x), detail::neg(desc, y)));
}

Elem upper_bound(const Descriptor& desc, const std::vector<Elem>& xs) {
    if (xs.empty()) return identity(desc);
    for (const Elem& x : xs) check_shape(desc, x);
    Elem r = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) r = upper_bound_impl(desc, r, xs[i]);
    return r;
}

Elem lower_bound(const Descriptor& desc, const std::vector<Elem>& xs) {
    std::vector<Elem> negs;
    negs.reserve(xs.size());
    for (const Elem& x : xs) negs.push_back(neg(desc, x));
    return detail::neg(desc, upper_bound(desc, negs));
}

Elem positive_generator(const Descriptor& desc) {
    switch (desc.kind()) {
    case Kind::Trivial: throw CapabilityError("the trivial group has no strictly positive element");
    case Kind::Int: return Elem(Integer{1});
    case Kind::Rat: return Elem(Rational(1));
    case Kind::IntVec: return Elem(Elem::Vector(desc.dim(), Elem(Integer{1})));
    case Kind::RatVec: return Elem(Elem::Vector(desc.dim(), Elem(Rational(1))));
    case Kind::Lex:
        if (desc.head().kind() != Kind::Trivial) return Elem::pair(positive_generator(desc.head()), identity(desc.tail()));
        return Elem::pair(identity(desc.head()), positive_generator(desc.tail()));
    case Kind::Wreath:
        if (desc.index().kind() != Kind::Trivial) return Elem::wreath(positive_generator(desc.index()), {}, {});
        return Elem::wreath(identity(desc.index()), {identity(desc.index())}, {positive_generator(desc.fiber())});
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ:
        return Elem::wreath(Elem(Integer{1}), {}, {});
    }
    return Elem();
}

Elem strict_upper_bound(const Descriptor& desc, const std::vector<Elem>& xs) {
    const Elem p = positive_generator(desc);
    return detail::add(desc, upper_bound(desc, xs), p);
}

Elem strict_lower_bound(const Descriptor& desc, const std::vector<Elem>& xs) {
    std::vector<Elem> negs;
    negs.reserve(xs.size());
    for (const Elem& x : xs) negs.push_back(neg(desc, x));
    return detail::neg(desc, strict_upper_bound(desc, negs));
}

std::optional<Elem> strictly_between(const Descriptor& desc, const Elem& lo, const std::vector<Elem>& highs) {
    check_shape(desc, lo);
    for (const Elem& h : highs) check_shape(desc, h);
    if (highs.empty()) throw InputError("strictly_between needs at least one upper element");
    const bool dense_leaf = desc.kind() == Kind::Rat || desc.kind() == Kind::RatVec;
    if (!dense_leaf) throw CapabilityError("strictly_between needs a rational leaf, got " + desc.to_string());
    for (const Elem& h : highs)
        if (!detail::leq(desc, lo, h) || lo == h) return std::nullopt;

    const Rational half(1, 2);
    if (desc.kind() == Kind::Rat) {
        Rational m = highs.front().as_rational();
        for (const Elem& h : highs) m = std::min(m, Rational(h.as_rational()));
        return Elem(Rational((lo.as_rational() + m) * half));
    }

    const auto& l = lo.as_vector();
    const std::size_t k = l.size();
    Elem::Vector d;
    d.reserve(k);
    if (desc.cone() == ConeKind::Strict && k > 1) {
        // lo + (mu/2)(1,...,1) with mu the least coordinate gap.
        Rational mu = highs.front().as_vector()[0].as_rational() - l[0].as_rational();
        for (const Elem& h : highs)
            for (std::size_t i = 0; i < k; ++i)
                mu = std::min(mu, Rational(h.as_vector()[i].as_rational() - l[i].as_rational()));
        for (std::size_t i = 0; i < k; ++i) d.push_back(Elem(Rational(l[i].as_rational() + mu * half)));
    } else {
        Elem m = highs.front();
        if (desc.is_linear()) {
            for (const Elem& h : highs)
                if (detail::compare_linear(desc, h, m) < 0) m = h;
        } else {
            for (const Elem& h : highs) m = lattice_meet(desc, m, h);
        }
        for (std::size_t i = 0; i < k; ++i)
            d.push_back(Elem(Rational((l[i].as_rational() + m.as_vector()[i].as_rational()) * half)));
    }
    Elem r(std::move(d));
    if (r == lo || !detail::leq(desc, lo, r)) return std::nullopt;
    for (const Elem& h : highs)
        if (r == h || !detail::leq(desc, r, h)) return std::nullopt;
    return r;
}

namespace {

Elem meet_join(const Descriptor& desc, const Elem& x, const Elem& y, bool meet) {
    if (!desc.has_lattice_ops())
        throw CapabilityError(std::string(meet ? "meet" : "join") + " unavailable: " + desc.to_string() +
                              " is not lattice-ordered");
    if (desc.is_linear()) {
        const int c = detail::compare_linear(desc, x, y);
        return (c <= 0) == meet ? x : y;
    }
    switch (desc.kind()) {
    case Kind::IntVec:
    case Kind::RatVec: {
        const auto& u = x.as_vector();
        const auto& v = y.as_vector();
        Elem::Vector r;
        r.reserve(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            const int c = scalar_compare(u[i], v[i]);
            r.push_back((c <= 0) == meet ? u[i] : v[i]);
        }
        return Elem(std::move(r));
    }
    case Kind::Lex: {
        const int c = detail::compare_linear(desc.head(), x.head(), y.head());
        if (c == 0) return Elem::pair(x.head(), meet_join(desc.tail(), x.tail(), y.tail(), meet));
        return (c < 0) == meet ? x : y;
    }
    case Kind::Wreath: {
        const auto& u = x.as_wreath();
        const auto& v = y.as_wreath();
        const int c = key_compare(desc.index(), *u.shift, *v.shift);
        if (c != 0) return (c < 0) == meet ? x : y;
        const Descriptor& g = desc.fiber();
        return pointwise(desc, *u.shift, u, v, [&](const Elem& p, const Elem& q) { return meet_join(g, p, q, meet); });
    }
    default:
        throw CapabilityError("lattice operations unavailable for " + desc.to_string());
    }
}

}  // namespace

Elem lattice_meet(const Descriptor& desc, const Elem& x, const Elem& y) {
    check_shape(desc, x, "lhs");
    check_shape(desc, y, "rhs");
    return meet_join(desc, x, y, true);
}

Elem lattice_join(const Descriptor& desc, const Elem& x, const Elem& y) {
    check_shape(desc, x, "lhs");
    check_shape(desc, y, "rhs");
    return meet_join(desc, x, y, false);
}

Integer max_abs_coordinate(const Elem& x) {
    auto abs64 = [](Integer v) { return v == std::numeric_limits<Integer>::min() ? std::numeric_limits<Integer>::max() : (v < 0 ? -v : v); };
    return std::visit(
        [&](const auto& v) -> Integer {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Elem::Unit>) {
                return 0;
            } else if constexpr (std::is_same_v<T, Integer>) {
                return abs64(v);
            } else if constexpr (std::is_same_v<T, Rational>) {
                mpz_class m = abs(v.get_num());
                if (v.get_den() > m) m = v.get_den();
                return m.fits_slong_p() ? m.get_si() : std::numeric_limits<Integer>::max();
            } else if constexpr (std::is_same_v<T, Elem::Vector>) {
                Integer m = 0;
                for (const Elem& c : v) m = std::max(m, max_abs_coordinate(c));
                return m;
            } else if constexpr (std::is_same_v<T, Elem::Pair>) {
                return std::max(max_abs_coordinate(*v.head), max_abs_coordinate(*v.tail));
            } else {
                Integer m = max_abs_coordinate(*v.shift);
                for (const Elem& k : v.keys) m = std::max(m, max_abs_coordinate(k));
                for (const Elem& c : v.values) m = std::max(m, max_abs_coordinate(c));
                return m;
            }
        },
        x.value());
}

Elem make_wreath(const Descriptor& desc, Elem shift, std::vector<std::pair<Elem, Elem>> entries) {
    if (!desc.is_wreath_like()) throw CapabilityError("make_wreath on " + desc.to_string());
    const Descriptor& a = desc.index();
    const Descriptor& g = desc.fiber();
    check_shape(a, shift, "shift");
    for (const auto& [k, v] : entries) {
        check_shape(a, k, "key");
        check_shape(g, v, "value");
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [&](const auto& p, const auto& q) { return key_compare(a, p.first, q.first) < 0; });
    std::vector<Elem> keys, values;
    for (std::size_t i = 0; i < entries.size();) {
        Elem acc = entries[i].second;
        std::size_t j = i + 1;
        while (j < entries.size() && key_compare(a, entries[i].first, entries[j].first) == 0) {
            acc = detail::add(g, acc, entries[j].second);
            ++j;
        }
        if (!is_zero(acc)) {
            keys.push_back(entries[i].first);
            values.push_back(std::move(acc));
        }
        i = j;
    }
    return Elem::wreath(std::move(shift), std::move(keys), std::move(values));
}

Elem wreath_at(const Descriptor& desc, const Elem& x, const Elem& key) {
    const auto& w = x.as_wreath();
    const Descriptor& a = desc.index();
    auto it = std::lower_bound(w.keys.begin(), w.keys.end(), key,
                               [&](const Elem& k, const Elem& q) { return key_compare(a, k, q) < 0; });
    if (it != w.keys.end() && key_compare(a, *it, key) == 0) return w.values[it - w.keys.begin()];
    return identity(desc.fiber());
}

}  // namespace rdpforge

#include "rdpforge/enumerate.hpp"

#include <algorithm>
#include <cmath>

#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"

namespace rdpforge {

using Kind = Descriptor::Kind;
using Integer = Elem::Integer;

namespace {

void require_enumerable(const Descriptor& desc) {
    if (!desc.is_enumerable())
        throw CapabilityError("enumeration needs integer-based leaves, got " + desc.to_string());
}

// Odometer over lists; the first list varies slowest. Stops early when emit
// returns false. Returns false if stopped.
template <class F>
bool for_each_product(const std::vector<std::vector<Elem>>& lists, F&& emit) {
    for (const auto& l : lists)
        if (l.empty()) return true;
    std::vector<std::size_t> idx(lists.size(), 0);
    std::vector<const Elem*> cur(lists.size());
    while (true) {
        for (std::size_t i = 0; i < lists.size(); ++i) cur[i] = &lists[i][idx[i]];
        if (!emit(cur)) return false;
        std::size_t k = lists.size();
        while (k > 0) {
            --k;
            if (++idx[k] < lists[k].size()) break;
            idx[k] = 0;
            if (k == 0) return true;
        }
        if (lists.empty()) return true;
    }
}

bool within_all(const Descriptor& desc, const Elem& x, const std::vector<Elem>& lows, const std::vector<Elem>& highs) {
    for (const Elem& l : lows)
        if (!detail::leq(desc, l, x)) return false;
    for (const Elem& h : highs)
        if (!detail::leq(desc, x, h)) return false;
    return true;
}

struct Ctx {
    int radius;
    std::size_t limit;
};

CandidateSet between(const Descriptor& desc, const std::vector<Elem>& lows, const std::vector<Elem>& highs,
                     const Ctx& ctx);

CandidateSet between_int(const std::vector<Elem>& lows, const std::vector<Elem>& highs, const Ctx& ctx) {
    CandidateSet out;
    Integer lo = -ctx.radius, hi = ctx.radius;
    if (!lows.empty()) {
        lo = lows.front().as_integer();
        for (const Elem& l : lows) lo = std::max(lo, l.as_integer());
    }
    if (!highs.empty()) {
        hi = highs.front().as_integer();
        for (const Elem& h : highs) hi = std::min(hi, h.as_integer());
    }
    out.complete = !lows.empty() && !highs.empty();
    for (Integer v = lo; v <= hi; ++v) {
        if (out.elems.size() >= ctx.limit) {
            out.complete = false;
            break;
        }
        out.elems.emplace_back(v);
    }
    return out;
}

CandidateSet between_vec(const Descriptor& desc, const std::vector<Elem>& lows, const std::vector<Elem>& highs,
                         const Ctx& ctx) {
    const int k = desc.dim();
    const bool lex_tail_free = desc.cone() == ConeKind::Lexicographic && k > 1;
    std::vector<std::vector<Elem>> coords(k);
    CandidateSet out;
    out.complete = !lows.empty() && !highs.empty() && !lex_tail_free;
    for (int i = 0; i < k; ++i) {
        std::vector<Elem> lo_i, hi_i;
        if (!lex_tail_free || i == 0) {
            for (const Elem& l : lows) lo_i.push_back(l.as_vector()[i]);
            for (const Elem& h : highs) hi_i.push_back(h.as_vector()[i]);
        }
        coords[i] = between_int(lo_i, hi_i, ctx).elems;
    }
    for_each_product(coords, [&](const std::vector<const Elem*>& cur) {
        Elem::Vector v;
        v.reserve(k);
        for (const Elem* c : cur) v.push_back(*c);
        Elem x(std::move(v));
        if (within_all(desc, x, lows, highs)) {
            if (out.elems.size() >= ctx.limit) {
                out.complete = false;
                return false;
            }
            out.elems.push_back(std::move(x));
        }
        return true;
    });
    return out;
}

CandidateSet between_lex(const Descriptor& desc, const std::vector<Elem>& lows, const std::vector<Elem>& highs,
                         const Ctx& ctx) {
    std::vector<Elem> hl, hh;
    for (const Elem& l : lows) hl.push_back(l.head());
    for (const Elem& h : highs) hh.push_back(h.head());
    CandidateSet heads = between(desc.head(), hl, hh, ctx);
    CandidateSet out;
    out.complete = heads.complete;
    for (const Elem& h : heads.elems) {
        std::vector<Elem> tl, th;
        for (const Elem& l : lows)
            if (l.head() == h) tl.push_back(l.tail());
        for (const Elem& u : highs)
            if (u.head() == h) th.push_back(u.tail());
        CandidateSet tails = between(desc.tail(), tl, th, ctx);
        out.complete = out.complete && tails.complete;
        for (const Elem& t : tails.elems) {
            if (out.elems.size() >= ctx.limit) {
                out.complete = false;
                return out;
            }
            out.elems.push_back(Elem::pair(h, t));
        }
    }
    return out;
}

std::vector<Elem> sorted_index_box(const Descriptor& index, int radius) {
    std::vector<Elem> w = enumerate_box(index, radius);
    std::stable_sort(w.begin(), w.end(),
                     [&](const Elem& p, const Elem& q) { return detail::compare_linear(index, p, q) < 0; });
    return w;
}

CandidateSet between_wreath(const Descriptor& desc, const std::vector<Elem>& lows, const std::vector<Elem>& highs,
                            const Ctx& ctx) {
    const Descriptor& a = desc.index();
    const Descriptor& g = desc.fiber();
    std::vector<Elem> sl, sh;
    for (const Elem& l : lows) sl.push_back(l.shift());
    for (const Elem& h : highs) sh.push_back(h.shift());
    CandidateSet shifts = between(a, sl, sh, ctx);
    CandidateSet out;
    out.complete = shifts.complete;
    const std::vector<Elem> index_box = sorted_index_box(a, ctx.radius);
    const Elem eg = identity(g);

    for (const Elem& s : shifts.elems) {
        std::vector<const Elem*> L, U;
        for (const Elem& l : lows)
            if (l.shift() == s) L.push_back(&l);
        for (const Elem& h : highs)
            if (h.shift() == s) U.push_back(&h);

        std::vector<Elem> window;
        auto add_keys = [&](const Elem& x) {
            for (const Elem& key : x.as_wreath().keys) window.push_back(key);
        };
        for (const Elem* l : L) add_keys(*l);
        for (const Elem* h : U) add_keys(*h);
        const bool bounded = !L.empty() && !U.empty();
        if (!bounded) {
            out.complete = false;
            window.insert(window.end(), index_box.begin(), index_box.end());
        }
        std::sort(window.begin(), window.end(),
                  [&](const Elem& p, const Elem& q) { return detail::compare_linear(a, p, q) < 0; });
        window.erase(std::unique(window.begin(), window.end()), window.end());

        std::vector<std::vector<Elem>> per_index;
        per_index.reserve(window.size());
        for (const Elem& key : window) {
            std::vector<Elem> fl, fh;
            for (const Elem* l : L) fl.push_back(wreath_at(desc, *l, key));
            for (const Elem* h : U) fh.push_back(wreath_at(desc, *h, key));
            CandidateSet c = between(g, fl, fh, ctx);
            out.complete = out.complete && c.complete;
            per_index.push_back(std::move(c.elems));
        }
        const bool cont = for_each_product(per_index, [&](const std::vector<const Elem*>& cur) {
            if (out.elems.size() >= ctx.limit) {
                out.complete = false;
                return false;
            }
            std::vector<Elem> keys, values;
            for (std::size_t i = 0; i < cur.size(); ++i) {
                if (*cur[i] == eg) continue;
                keys.push_back(window[i]);
                values.push_back(*cur[i]);
            }
            out.elems.push_back(Elem::wreath(s, std::move(keys), std::move(values)));
            return true;
        });
        if (!cont) break;
    }
    return out;
}

CandidateSet between_zwreath(const Descriptor& desc, const std::vector<Elem>& lows, const std::vector<Elem>& highs,
                             const Ctx& ctx) {
    const Descriptor& g = desc.fiber();
    std::vector<Elem> sl, sh;
    for (const Elem& l : lows) sl.push_back(l.shift());
    for (const Elem& h : highs) sh.push_back(h.shift());
    // Shift bounds only, then the full boxed support filtered by the order.
    CandidateSet shifts = between_int(sl, sh, ctx);
    CandidateSet out;
    out.complete = false;
    const std::vector<Elem> fiber_box = enumerate_box(g, ctx.radius);
    const int width = 2 * ctx.radius + 1;
    std::vector<std::vector<Elem>> per_index(width, fiber_box);
    const Elem e = identity(g);
    for (const Elem& s : shifts.elems) {
        const bool cont = for_each_product(per_index, [&](const std::vector<const Elem*>& cur) {
            std::vector<Elem> keys, values;
            for (int i = 0; i < width; ++i) {
                if (*cur[i] == e) continue;
                keys.emplace_back(Integer{i - ctx.radius});
                values.push_back(*cur[i]);
            }
            Elem x = Elem::wreath(s, std::move(keys), std::move(values));
            if (within_all(desc, x, lows, highs)) {
                if (out.elems.size() >= ctx.limit) return false;
                out.elems.push_back(std::move(x));
            }
            return true;
        });
        if (!cont) break;
    }
    return out;
}

CandidateSet between(const Descriptor& desc, const std::vector<Elem>& lows, const std::vector<Elem>& highs,
                     const Ctx& ctx) {
    switch (desc.kind()) {
    case Kind::Trivial: return {{Elem()}, true};
    case Kind::Int: return between_int(lows, highs, ctx);
    case Kind::IntVec: return between_vec(desc, lows, highs, ctx);
    case Kind::Lex: return between_lex(desc, lows, highs, ctx);
    case Kind::Wreath: return between_wreath(desc, lows, highs, ctx);
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: return between_zwreath(desc, lows, highs, ctx);
    case Kind::Rat:
    case Kind::RatVec: break;
    }
    throw CapabilityError("enumeration needs integer-based leaves, got " + desc.to_string());
}

bool in_box_impl(const Descriptor& desc, const Elem& x, int r) {
    switch (desc.kind()) {
    case Kind::Trivial: return true;
    case Kind::Int: return x.as_integer() >= -r && x.as_integer() <= r;
    case Kind::IntVec:
        return std::all_of(x.as_vector().begin(), x.as_vector().end(),
                           [&](const Elem& c) { return c.as_integer() >= -r && c.as_integer() <= r; });
    case Kind::Lex: return in_box_impl(desc.head(), x.head(), r) && in_box_impl(desc.tail(), x.tail(), r);
    case Kind::Wreath:
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: {
        const auto& w = x.as_wreath();
        if (!in_box_impl(desc.index(), *w.shift, r)) return false;
        for (std::size_t i = 0; i < w.keys.size(); ++i)
            if (!in_box_impl(desc.index(), w.keys[i], r) || !in_box_impl(desc.fiber(), w.values[i], r)) return false;
        return true;
    }
    default: break;
    }
    throw CapabilityError("box membership needs integer-based leaves, got " + desc.to_string());
}

}  // namespace

double box_size(const Descriptor& desc, int radius) {
    require_enumerable(desc);
    const double side = 2.0 * radius + 1.0;
    switch (desc.kind()) {
    case Kind::Trivial: return 1;
    case Kind::Int: return side;
    case Kind::IntVec: return std::pow(side, desc.dim());
    case Kind::Lex: return box_size(desc.head(), radius) * box_size(desc.tail(), radius);
    case Kind::Wreath:
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: {
        const double idx = box_size(desc.index(), radius);
        return idx * std::pow(box_size(desc.fiber(), radius), idx);
    }
    default: return 0;
    }
}

std::vector<Elem> enumerate_box(const Descriptor& desc, int radius) {
    require_enumerable(desc);
    if (radius < 0) throw InputError("radius must be non-negative");
    const double n = box_size(desc, radius);
    if (n > max_box_elements)
        throw InputError("box of radius " + std::to_string(radius) + " for " + desc.to_string() + " has about " +
                         std::to_string(static_cast<long long>(n)) + " elements; too large to enumerate");
    Ctx ctx{radius, static_cast<std::size_t>(max_box_elements)};
    return between(desc, {}, {}, ctx).elems;
}

bool in_box(const Descriptor& desc, const Elem& x, int radius) {
    check_shape(desc, x);
    return in_box_impl(desc, x, radius);
}

CandidateSet candidates_between(const Descriptor& desc, const std::vector<Elem>& lows,
                                const std::vector<Elem>& highs, int radius, std::size_t limit) {
    require_enumerable(desc);
    for (const Elem& l : lows) check_shape(desc, l, "low");
    for (const Elem& h : highs) check_shape(desc, h, "high");
    Ctx ctx{radius, limit};
    CandidateSet c = between(desc, lows, highs, ctx);
    if (desc.kind() != Kind::IntVec && desc.kind() != Kind::RightWreathZ && desc.kind() != Kind::LeftWreathZ) {
        // Components were bounded independently; keep only true members.
        std::vector<Elem> kept;
        kept.reserve(c.elems.size());
        for (Elem& x : c.elems)
            if (within_all(desc, x, lows, highs)) kept.push_back(std::move(x));
        c.elems = std::move(kept);
    }
    return c;
}

Elem random_elem(const Descriptor& desc, int radius, std::mt19937_64& rng) {
    const int r = std::max(radius, 1);
    std::uniform_int_distribution<Elem::Integer> coord(-r, r);
    std::uniform_int_distribution<Elem::Integer> den(1, r);
    auto scalar = [&](bool rational) {
        const Elem::Integer n = coord(rng);
        if (!rational) return Elem(n);
        const Elem::Integer d = den(rng);
        return Elem::rational(Rational(static_cast<long>(n), static_cast<unsigned long>(d)));
    };
    switch (desc.kind()) {
    case Kind::Trivial: return Elem();
    case Kind::Int: return scalar(false);
    case Kind::Rat: return scalar(true);
    case Kind::IntVec:
    case Kind::RatVec: {
        Elem::Vector v;
        for (int i = 0; i < desc.dim(); ++i) v.push_back(scalar(desc.kind() == Kind::RatVec));
        return Elem(std::move(v));
    }
    case Kind::Lex: {
        Elem h = random_elem(desc.head(), radius, rng);
        return Elem::pair(std::move(h), random_elem(desc.tail(), radius, rng));
    }
    case Kind::Wreath:
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: {
        Elem shift = random_elem(desc.index(), radius, rng);
        std::uniform_int_distribution<int> size(0, 3);
        std::vector<std::pair<Elem, Elem>> entries;
        const int n = size(rng);
        for (int i = 0; i < n; ++i) {
            Elem k = random_elem(desc.index(), radius, rng);
            bool dup = false;
            for (const auto& e : entries) dup = dup || e.first == k;
            if (!dup) entries.emplace_back(std::move(k), random_elem(desc.fiber(), radius, rng));
        }
        return make_wreath(desc, std::move(shift), std::move(entries));
    }
    }
    return Elem();
}

}  // namespace rdpforge

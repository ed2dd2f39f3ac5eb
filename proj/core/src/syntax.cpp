#include "rdpforge/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "rdpforge/errors.hpp"
#include "rdpforge/group.hpp"

namespace rdpforge {

using Kind = Descriptor::Kind;

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
    }
    std::string word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    // Optional sign followed by digits.
    std::string_view number_token() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer" + found());
        }
        return s_.substr(start, pos_ - start);
    }
    std::int64_t integer() {
        const std::size_t start = pos_;
        std::string_view tok = number_token();
        if (tok.front() == '+') tok.remove_prefix(1);
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size()) {
            pos_ = start;
            skip_ws();
            fail("integer out of range");
        }
        return v;
    }
    [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(what, line, col);
    }
    std::string found() {
        if (at_end()) return ", found end of input";
        return std::string(", found '") + s_[pos_] + "'";
    }
    std::size_t pos() const { return pos_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

Descriptor parse_desc(Cursor& c) {
    c.skip_ws();
    const std::size_t start = c.pos();
    const std::string w = c.word();
    if (w == "Z") return Descriptor::integers();
    if (w == "Q") return Descriptor::rationals();
    if (w == "trivial") return Descriptor::trivial();
    if (w == "Zvec" || w == "Qvec") {
        c.expect('(');
        const std::int64_t k = c.integer();
        if (k < 1 || k > 64) c.fail("vector dimension must be between 1 and 64");
        c.expect(',');
        c.skip_ws();
        const std::size_t cone_at = c.pos();
        const std::string cone = c.word();
        ConeKind ck;
        if (cone == "cw") ck = ConeKind::Coordinatewise;
        else if (cone == "strict") ck = ConeKind::Strict;
        else if (cone == "lex") ck = ConeKind::Lexicographic;
        else c.fail_at(cone_at, "unknown cone '" + cone + "' (expected cw, strict or lex)");
        c.expect(')');
        return w == "Zvec" ? Descriptor::int_vec(static_cast<int>(k), ck) : Descriptor::rat_vec(static_cast<int>(k), ck);
    }
    if (w == "lex" || w == "wr") {
        c.expect('(');
        Descriptor left = parse_desc(c);
        c.expect(',');
        Descriptor right = parse_desc(c);
        c.expect(')');
        return w == "lex" ? Descriptor::lex(left, right) : Descriptor::wreath(left, right);
    }
    if (w == "rwz" || w == "lwz") {
        c.expect('(');
        Descriptor fiber = parse_desc(c);
        c.expect(')');
        return w == "rwz" ? Descriptor::right_wreath_z(fiber) : Descriptor::left_wreath_z(fiber);
    }
    if (w.empty()) c.fail("expected a group expression" + c.found());
    c.fail_at(start, "unknown group '" + w + "'");
}

Elem parse_value(Cursor& c, const Descriptor& d);

Elem parse_scalar(Cursor& c, const Descriptor& d) {
    if (d.kind() == Kind::Int || d.kind() == Kind::IntVec) return Elem(c.integer());
    const std::string_view num = c.number_token();
    std::string text(num.front() == '+' ? num.substr(1) : num);
    if (c.accept('/')) {
        const std::string_view den = c.number_token();
        if (den.front() == '-' || den.front() == '+') c.fail("denominator must be unsigned");
        if (std::all_of(den.begin(), den.end(), [](char ch) { return ch == '0'; })) c.fail("zero denominator");
        text += "/";
        text += den;
    }
    Rational r(text, 10);
    return Elem::rational(std::move(r));
}

Elem parse_value(Cursor& c, const Descriptor& d) {
    switch (d.kind()) {
    case Kind::Trivial:
        if (c.accept('e')) return Elem();
        if (c.peek() == '0') {
            c.integer();
            return Elem();
        }
        c.fail("expected 'e' for the trivial group" + c.found());
    case Kind::Int:
    case Kind::Rat: return parse_scalar(c, d);
    case Kind::IntVec:
    case Kind::RatVec: {
        c.expect('(');
        Elem::Vector v;
        for (int i = 0; i < d.dim(); ++i) {
            if (i > 0) c.expect(',');
            v.push_back(parse_scalar(c, d));
        }
        c.expect(')');
        return Elem(std::move(v));
    }
    case Kind::Lex: {
        c.expect('(');
        Elem h = parse_value(c, d.head());
        if (!c.accept(';')) c.expect(',');
        Elem t = parse_value(c, d.tail());
        c.expect(')');
        return Elem::pair(std::move(h), std::move(t));
    }
    case Kind::Wreath:
    case Kind::RightWreathZ:
    case Kind::LeftWreathZ: {
        const Descriptor& a = d.index();
        const Descriptor& g = d.fiber();
        c.expect('(');
        Elem shift = parse_value(c, a);
        if (!c.accept(';')) c.expect(',');
        c.expect('{');
        std::vector<std::pair<Elem, Elem>> entries;
        if (!c.accept('}')) {
            do {
                Elem k = parse_value(c, a);
                c.expect(':');
                Elem v = parse_value(c, g);
                for (const auto& kv : entries)
                    if (kv.first == k) c.fail("duplicate support key " + format_elem(k));
                entries.emplace_back(std::move(k), std::move(v));
            } while (c.accept(','));
            c.expect('}');
        }
        c.expect(')');
        return make_wreath(d, std::move(shift), std::move(entries));
    }
    }
    c.fail("unsupported descriptor");
}

void format_into(std::string& out, const Elem& x) {
    if (x.is_unit()) {
        out += 'e';
    } else if (x.is_integer()) {
        out += std::to_string(x.as_integer());
    } else if (x.is_rational()) {
        out += x.as_rational().get_str();
    } else if (x.is_vector()) {
        out += '(';
        bool first = true;
        for (const Elem& v : x.as_vector()) {
            if (!first) out += ',';
            first = false;
            format_into(out, v);
        }
        out += ')';
    } else if (x.is_pair()) {
        out += '(';
        format_into(out, x.head());
        out += ';';
        format_into(out, x.tail());
        out += ')';
    } else {
        const auto& w = x.as_wreath();
        out += '(';
        format_into(out, *w.shift);
        out += ";{";
        for (std::size_t i = 0; i < w.keys.size(); ++i) {
            if (i > 0) out += ',';
            format_into(out, w.keys[i]);
            out += ':';
            format_into(out, w.values[i]);
        }
        out += "})";
    }
}

}  // namespace

Descriptor parse_descriptor(std::string_view text) {
    Cursor c(text);
    Descriptor d = parse_desc(c);
    if (!c.at_end()) c.fail("trailing input" + c.found());
    return d;
}

Elem parse_elem(const Descriptor& desc, std::string_view text) {
    Cursor c(text);
    Elem x = parse_value(c, desc);
    if (!c.at_end()) c.fail("trailing input" + c.found());
    return x;
}

std::vector<Elem> parse_elem_list(const Descriptor& desc, std::string_view text) {
    std::vector<Elem> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const char ch = i < text.size() ? text[i] : ';';
        if (ch == '(' || ch == '{') ++depth;
        else if (ch == ')' || ch == '}') --depth;
        else if (ch == ';' && depth == 0) {
            const std::string_view piece = text.substr(start, i - start);
            try {
                out.push_back(parse_elem(desc, piece));
            } catch (const ParseError& e) {
                // Re-anchor the column to the whole list.
                throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at line")), e.line(),
                                 e.line() == 1 ? e.column() + static_cast<int>(start) : e.column());
            }
            start = i + 1;
        }
    }
    return out;
}

std::string format_elem(const Elem& x) {
    std::string out;
    format_into(out, x);
    return out;
}

}  // namespace rdpforge

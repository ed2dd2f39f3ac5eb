#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rdpforge/descriptor.hpp"
#include "rdpforge/elem.hpp"

namespace rdpforge {

// Tower expressions:
//   Z | Q | Zvec(k,cw|strict|lex) | Qvec(k,cw|strict|lex) | trivial
//   | lex(E,E) | wr(E,E) | rwz(E) | lwz(E)
// Whitespace is ignored. Errors are ParseError with a line/column, or
// CapabilityError for a non-linear wr index.
Descriptor parse_descriptor(std::string_view text);

// Element literals, typed by the descriptor:
//   trivial  e
//   Z        -3
//   Q        2/3 (normalized on parse)
//   vectors  (1,2)
//   lex      (h;t)   a comma is accepted in place of the semicolon
//   wreath   (n;{0:2,1:-3})   keys in any order; identity values dropped
Elem parse_elem(const Descriptor& desc, std::string_view text);

// Splits on ';' outside brackets and parses each piece.
std::vector<Elem> parse_elem_list(const Descriptor& desc, std::string_view text);

// Printing; parse_elem(desc, format_elem(x)) == x.
std::string format_elem(const Elem& x);

}  // namespace rdpforge

#pragma once

#include <string>
#include <variant>

#include "superband/supermatrix.hpp"

namespace superband {

using Value = std::variant<GrassmannElement, Supermatrix>;

// Grammar: rationals ("p/q" unspaced), generators g1..gN (or theta-style),
// + - * and '.' products, parentheses, matrix literals [[...],[...]] graded
// as (1|d-1), and the functions str(M), ber(M), pow(M, n).
Value parse_value(const std::string& text, int n_generators);

// Like parse_value but requires an algebra element.
GrassmannElement parse_element(const std::string& text, int n_generators);

std::string value_to_string(const Value& v, GenStyle style = GenStyle::Ascii);

}  // namespace superband

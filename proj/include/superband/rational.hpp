#pragma once

#include <gmpxx.h>

#include <string>

namespace superband {

// Exact arbitrary-precision rational scalar.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (no spaces). Throws ParseError on anything else.
Rat rat_parse(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

}  // namespace superband

#include "superband/rational.hpp"

#include <cctype>

#include "superband/errors.hpp"

namespace superband {

Rat rat_parse(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw ParseError("invalid rational: '" + text + "'");
  i = num_end;
  if (i < text.size()) {
    if (text[i] != '/') throw ParseError("invalid rational: '" + text + "'");
    std::size_t den_end = digits(i + 1);
    if (den_end == i + 1 || den_end != text.size())
      throw ParseError("invalid rational: '" + text + "'");
  }
  Rat r(text);
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace superband

#include "tsg/vertex.hpp"

#include <cctype>

#include "tsg/errors.hpp"

namespace tsg {

Point to_point(Vertex v, int n) {
  return static_cast<Point>(v.ring == Ring::Outer ? v.index : n + v.index);
}

Vertex to_vertex(Point p, int n) {
  if (p < n) return {Ring::Outer, p};
  return {Ring::Inner, p - n};
}

std::string display(Vertex v, int n) {
  int shown = v.index == 0 ? n : v.index;
  return std::string(v.ring == Ring::Outer ? "u" : "v") + std::to_string(shown);
}

Vertex parse_vertex(std::string_view text, int n) {
  auto fail = [&] { return ParseError("bad vertex label '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  Ring ring;
  switch (text.front()) {
    case 'u':
    case 'U':
      ring = Ring::Outer;
      break;
    case 'v':
    case 'V':
      ring = Ring::Inner;
      break;
    default:
      throw fail();
  }
  std::size_t i = 1;
  if (i < text.size() && text[i] == '_') ++i;
  bool braced = i < text.size() && text[i] == '{';
  if (braced) ++i;
  long long value = 0;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    value = value * 10 + (text[i] - '0');
    if (value > 1'000'000) throw fail();
    ++i;
    ++digits;
  }
  if (digits == 0) throw fail();
  if (braced) {
    if (i >= text.size() || text[i] != '}') throw fail();
    ++i;
  }
  if (i != text.size()) throw fail();
  if (value < 1 || value > n) {
    throw ParseError("vertex index out of range 1.." + std::to_string(n) + " in '" +
                     std::string(text) + "'");
  }
  return {ring, mod(value, n)};
}

}  // namespace tsg

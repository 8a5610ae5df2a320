#include "tsg/cycle_notation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "tsg/errors.hpp"

namespace tsg {
namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; }

// Splits one cycle body into vertex tokens. Labels may be written without
// separators ("u1u7v8"), so a new token starts at every 'u'/'v'.
std::vector<std::string_view> tokenize_cycle(std::string_view body) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < body.size()) {
    if (is_separator(body[i])) {
      ++i;
      continue;
    }
    std::size_t start = i++;
    while (i < body.size() && !is_separator(body[i]) && body[i] != 'u' && body[i] != 'v' &&
           body[i] != 'U' && body[i] != 'V') {
      ++i;
    }
    tokens.push_back(body.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Permutation parse_cycles(std::string_view text, int n, CycleParseOptions options) {
  const std::size_t degree = static_cast<std::size_t>(2 * n);
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::vector<std::vector<Point>> seen_cycles;

  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    if (text[i] != '(') {
      throw ParseError("expected '(' at offset " + std::to_string(i) + " in '" +
                       std::string(text) + "'");
    }
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    std::vector<Point> cyc;
    for (auto tok : tokenize_cycle(text.substr(i + 1, close - i - 1))) {
      cyc.push_back(to_point(parse_vertex(tok, n), n));
    }
    i = close + 1;
    if (cyc.size() <= 1) continue;

    if (options.drop_repeated_cycles) {
      bool repeat = false;
      for (const auto& prev : seen_cycles) repeat = repeat || prev == cyc;
      if (repeat) continue;
    }
    for (Point p : cyc) {
      if (used[p]) {
        throw ParseError("vertex " + display(to_vertex(p, n), n) +
                         " appears in more than one cycle of '" + std::string(text) + "'");
      }
      used[p] = true;
    }
    for (std::size_t j = 0; j < cyc.size(); ++j) images[cyc[j]] = cyc[(j + 1) % cyc.size()];
    seen_cycles.push_back(std::move(cyc));
  }
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p, int n) {
  if (p.degree() != static_cast<std::size_t>(2 * n)) {
    throw DomainMismatchError("permutation degree " + std::to_string(p.degree()) +
                              " does not match 2n = " + std::to_string(2 * n));
  }
  // Order by displayed label (u1..un, v1..vn) so that output reads like the
  // usual hand-written notation even though u_n is residue 0 internally.
  auto key = [n](Point x) {
    Vertex v = to_vertex(x, n);
    return std::pair{v.ring, v.index == 0 ? n : v.index};
  };
  auto cs = cycles(p);
  if (cs.empty()) return "()";
  for (auto& c : cs) {
    auto first = std::min_element(c.begin(), c.end(),
                                  [&](Point a, Point b) { return key(a) < key(b); });
    std::rotate(c.begin(), first, c.end());
  }
  std::sort(cs.begin(), cs.end(),
            [&](const auto& a, const auto& b) { return key(a.front()) < key(b.front()); });
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out << ' ';
      out << display(to_vertex(c[j], n), n);
    }
    out << ')';
  }
  return out.str();
}

}  // namespace tsg

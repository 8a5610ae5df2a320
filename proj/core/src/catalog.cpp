#include "tsg/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>

#include "tsg/errors.hpp"

namespace tsg::catalog {

namespace {

constexpr ClosureOptions kModelCap{100000};

Permutation from_images(std::vector<Point> images) { return Permutation(std::move(images)); }

PermGroup generate(std::vector<Permutation> gens, std::size_t degree) {
  return closure(gens, degree, kModelCap);
}

std::string cyclic_name(std::size_t m) { return "Z_" + std::to_string(m); }

std::string abelian_name(const std::vector<std::size_t>& ascending) {
  std::vector<std::string> parts;
  for (std::size_t i = ascending.size(); i-- > 0;) {
    std::size_t run = 1;
    while (i > 0 && ascending[i - 1] == ascending[i]) {
      --i;
      ++run;
    }
    auto part = cyclic_name(ascending[i]);
    if (run > 1) part += "^" + std::to_string(run);
    parts.push_back(part);
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " x " : "") + parts[i];
  return out;
}

void invariant_factor_lists(std::size_t remaining, std::size_t last,
                            std::vector<std::size_t>& prefix,
                            std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 1) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t f = std::max<std::size_t>(last, 2); f <= remaining; ++f) {
    if (remaining % f != 0 || f % last != 0) continue;
    prefix.push_back(f);
    invariant_factor_lists(remaining / f, f, prefix, out);
    prefix.pop_back();
  }
}

std::string multiplier_variant(const std::vector<std::size_t>& u) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) out += (i ? "," : "") + std::to_string(u[i]);
  return out;
}

// 2x2 matrices over F_3, entries a b / c d.
struct Mat {
  int a, b, c, d;
  auto operator<=>(const Mat&) const = default;
};

Mat mat_mul(const Mat& x, const Mat& y) {
  return {(x.a * y.a + x.b * y.c) % 3, (x.a * y.b + x.b * y.d) % 3,
          (x.c * y.a + x.d * y.c) % 3, (x.c * y.b + x.d * y.d) % 3};
}

int det(const Mat& x) { return ((x.a * x.d - x.b * x.c) % 3 + 3) % 3; }

Mat scale(int s, const Mat& x) { return {s * x.a % 3, s * x.b % 3, s * x.c % 3, s * x.d % 3}; }

Mat mat_inverse(const Mat& x) {
  int di = det(x);  // 1 and 2 are their own inverses mod 3
  return scale(di, {x.d, (3 - x.b) % 3, (3 - x.c) % 3, x.a});
}

std::vector<Mat> matrices_with_det(std::initializer_list<int> dets) {
  std::vector<Mat> out;
  for (int i = 0; i < 81; ++i) {
    Mat m{i / 27, i / 9 % 3, i / 3 % 3, i % 3};
    if (std::find(dets.begin(), dets.end(), det(m)) != dets.end()) out.push_back(m);
  }
  return out;
}

// Action on the eight nonzero vectors (x, y), indexed 3x + y - 1.
Permutation vector_action(const Mat& m) {
  std::vector<Point> images(8);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x == 0 && y == 0) continue;
      int nx = (m.a * x + m.b * y) % 3, ny = (m.c * x + m.d * y) % 3;
      images[3 * x + y - 1] = static_cast<Point>(3 * nx + ny - 1);
    }
  }
  return from_images(std::move(images));
}

const Mat kUpper{1, 1, 0, 1};
const Mat kLower{1, 0, 1, 1};
const Mat kDiag{2, 0, 0, 1};

// Left regular representation of K : Z_2 with (a, e)(b, f) = (a phi^e(b), e + f).
template <class Phi>
PermGroup split_extension(const std::vector<Mat>& k, const std::vector<Mat>& k_gens, Phi phi) {
  std::map<Mat, std::size_t> index;
  for (std::size_t i = 0; i < k.size(); ++i) index[k[i]] = i;
  for (const Mat& m : k) {
    if (phi(phi(m)) != m) throw ConstructionError("extension map is not an involution");
  }
  auto multiply_left = [&](const Mat& a, int e) {
    std::vector<Point> images(2 * k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      for (int f = 0; f < 2; ++f) {
        Mat prod = mat_mul(a, e ? phi(k[i]) : k[i]);
        images[2 * i + f] = static_cast<Point>(2 * index.at(prod) + (e ^ f));
      }
    }
    return from_images(std::move(images));
  };
  std::vector<Permutation> gens;
  for (const Mat& g : k_gens) gens.push_back(multiply_left(g, 0));
  gens.push_back(multiply_left(Mat{1, 0, 0, 1}, 1));
  return generate(std::move(gens), 2 * k.size());
}

}  // namespace

PermGroup cyclic(std::size_t m) {
  if (m <= 1) return PermGroup(1);
  std::vector<Point> images(m);
  for (std::size_t i = 0; i < m; ++i) images[i] = static_cast<Point>((i + 1) % m);
  return generate({from_images(std::move(images))}, m);
}

PermGroup abelian(const std::vector<std::size_t>& invariant_factors) {
  PermGroup out(1);
  for (std::size_t f : invariant_factors) out = direct_product(out, cyclic(f));
  return out;
}

PermGroup dihedral(std::size_t m) {
  if (m < 3) throw ConstructionError("dihedral model needs m >= 3");
  std::vector<Point> rot(m), ref(m);
  for (std::size_t i = 0; i < m; ++i) {
    rot[i] = static_cast<Point>((i + 1) % m);
    ref[i] = static_cast<Point>((m - i) % m);
  }
  return generate({from_images(std::move(rot)), from_images(std::move(ref))}, m);
}

PermGroup symmetric(std::size_t d) {
  if (d <= 1) return PermGroup(1);
  std::vector<Point> swap(d), cycle(d);
  std::iota(swap.begin(), swap.end(), Point{0});
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < d; ++i) cycle[i] = static_cast<Point>((i + 1) % d);
  return generate({from_images(std::move(swap)), from_images(std::move(cycle))}, d);
}

PermGroup alternating(std::size_t d) {
  if (d <= 2) return PermGroup(std::max<std::size_t>(d, 1));
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < d; ++i) {
    std::vector<Point> images(d);
    std::iota(images.begin(), images.end(), Point{0});
    images[0] = 1;
    images[1] = static_cast<Point>(i);
    images[i] = 0;
    gens.push_back(from_images(std::move(images)));
  }
  return generate(std::move(gens), d);
}

PermGroup quaternion() {
  return generate({vector_action({0, 2, 1, 0}), vector_action({1, 1, 1, 2})}, 8);
}

PermGroup special_linear_2_3() {
  return generate({vector_action(kUpper), vector_action(kLower)}, 8);
}

PermGroup general_linear_2_3() {
  return generate({vector_action(kUpper), vector_action(kLower), vector_action(kDiag)}, 8);
}

PermGroup affine(std::size_t m, const std::vector<std::size_t>& multipliers) {
  std::vector<Permutation> gens;
  std::vector<Point> shift(m);
  for (std::size_t i = 0; i < m; ++i) shift[i] = static_cast<Point>((i + 1) % m);
  gens.push_back(from_images(std::move(shift)));
  for (std::size_t u : multipliers) {
    std::vector<Point> images(m);
    for (std::size_t i = 0; i < m; ++i) images[i] = static_cast<Point>(u * i % m);
    gens.push_back(from_images(std::move(images)));
  }
  return generate(std::move(gens), m);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> images(da + db);
    for (std::size_t i = 0; i < da; ++i) images[i] = g[i];
    for (std::size_t i = 0; i < db; ++i) images[da + i] = static_cast<Point>(da + i);
    gens.push_back(from_images(std::move(images)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> images(da + db);
    for (std::size_t i = 0; i < da; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) images[da + i] = static_cast<Point>(da + g[i]);
    gens.push_back(from_images(std::move(images)));
  }
  return generate(std::move(gens), da + db);
}

PermGroup special_linear_2_3_ext() {
  const Mat w{0, 1, 2, 0};
  const Mat w_inv = mat_inverse(w);
  return split_extension(matrices_with_det({1}), {kUpper, kLower},
                         [&](const Mat& x) { return mat_mul(mat_mul(w, x), w_inv); });
}

PermGroup general_linear_2_3_ext() {
  const Mat w{0, 1, 2, 0};
  const Mat w_inv = mat_inverse(w);
  return split_extension(matrices_with_det({1, 2}), {kUpper, kLower, kDiag}, [&](const Mat& x) {
    return scale(det(x), mat_mul(mat_mul(w, x), w_inv));
  });
}

std::vector<std::vector<std::size_t>> order_four_multipliers(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 2; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    std::size_t a2 = a * a % m, a3 = a2 * a % m, a4 = a3 * a % m;
    if (a4 != 1 || a2 == 1) continue;
    std::vector<std::size_t> u{1, a, a2, a3};
    std::sort(u.begin(), u.end());
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  return out;
}

std::vector<std::vector<std::size_t>> klein_multipliers(std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m < 5) return out;
  for (std::size_t k = 2; k + 2 <= m; ++k) {
    if (k * k % m != 1) continue;
    std::vector<std::size_t> u{1, m - 1, k, m - k};
    std::sort(u.begin(), u.end());
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  return out;
}

std::vector<Candidate> candidates(std::size_t order) {
  std::vector<Candidate> out;
  const std::size_t n = order;
  if (n == 0) return out;
  if (n == 1) {
    out.push_back({"trivial", "", [] { return PermGroup(1); }});
    return out;
  }
  out.push_back({cyclic_name(n), "", [n] { return cyclic(n); }});

  std::vector<std::vector<std::size_t>> factor_lists;
  std::vector<std::size_t> prefix;
  invariant_factor_lists(n, 1, prefix, factor_lists);
  for (const auto& f : factor_lists) {
    if (f.size() < 2) continue;
    out.push_back({abelian_name(f), "", [f] { return abelian(f); }});
  }

  if (n % 2 == 0 && n >= 6) {
    std::size_t m = n / 2;
    out.push_back({m == 3 ? "S_3" : "D_" + std::to_string(m), "", [m] { return dihedral(m); }});
  }

  struct Fixed {
    std::size_t order;
    const char* name;
    PermGroup (*build)();
  };
  static const std::array<Fixed, 7> fixed{{
      {8, "Q_8", &quaternion},
      {12, "A_4", [] { return alternating(4); }},
      {24, "SL(2,3)", &special_linear_2_3},
      {24, "S_4", [] { return symmetric(4); }},
      {48, "GL(2,3)", &general_linear_2_3},
      {60, "A_5", [] { return alternating(5); }},
      {120, "S_5", [] { return symmetric(5); }},
  }};
  for (const auto& f : fixed) {
    if (f.order == n) out.push_back({f.name, "", f.build});
  }

  if (n % 4 == 0) {
    std::size_t m = n / 4;
    for (const auto& u : order_four_multipliers(m)) {
      out.push_back({cyclic_name(m) + " : Z_4", multiplier_variant(u),
                     [m, a = u[1]] { return affine(m, {a}); }});
    }
    for (const auto& u : klein_multipliers(m)) {
      out.push_back({"D_" + std::to_string(m) + " : Z_2", multiplier_variant(u),
                     [m, u] { return affine(m, {u[1], u[2]}); }});
    }
  }

  if (n % 2 == 0) {
    const std::size_t h = n / 2;
    auto with_z2 = [&out](std::string name, std::string variant, std::function<PermGroup()> f) {
      out.push_back({std::move(name) + " x Z_2", std::move(variant),
                     [f] { return direct_product(f(), cyclic(2)); }});
    };
    if (h % 2 == 0 && h >= 6) {
      std::size_t m = h / 2;
      with_z2("D_" + std::to_string(m), "", [m] { return dihedral(m); });
    }
    for (const auto& f : fixed) {
      if (f.order == h) with_z2(f.name, "", f.build);
    }
    if (h % 4 == 0) {
      std::size_t m = h / 4;
      for (const auto& u : order_four_multipliers(m)) {
        with_z2("(" + cyclic_name(m) + " : Z_4)", multiplier_variant(u),
                [m, a = u[1]] { return affine(m, {a}); });
      }
    }
  }

  if (n == 48) out.push_back({"SL(2,3) : Z_2", "", &special_linear_2_3_ext});
  if (n == 96) out.push_back({"GL(2,3) : Z_2", "", &general_linear_2_3_ext});
  return out;
}

namespace {

struct Node {
  enum class Kind { Cyclic, Dihedral, SpecialLinear, GeneralLinear, Other };
  PermGroup group;
  Kind kind = Kind::Other;
  std::size_t m = 0;
};

std::string normalize(std::string_view text) {
  static const std::array<std::pair<const char*, const char*>, 26> replacements{{
      {"\\mathbb{Z}", "Z"}, {"\\mathbb Z", "Z"}, {"\\rtimes", ":"}, {"\\times", "x"},
      {"⋊", ":"},      {"×", "x"},     {"ℤ", "Z"},   {"₀", "0"},
      {"₁", "1"},      {"₂", "2"},     {"₃", "3"},   {"₄", "4"},
      {"₅", "5"},      {"₆", "6"},     {"₇", "7"},   {"₈", "8"},
      {"₉", "9"},      {"²", "^2"},    {"³", "^3"},  {"⁴", "^4"},
      {"⁵", "^5"},     {"⁶", "^6"},    {"⁷", "^7"},  {"⁸", "^8"},
      {"⁹", "^9"},     {"¹", "^1"},
  }};
  std::string s(text);
  for (const auto& [from, to] : replacements) {
    std::string f(from);
    for (std::size_t pos = s.find(f); pos != std::string::npos; pos = s.find(f, pos)) {
      s.replace(pos, f.size(), to);
      pos += std::string_view(to).size();
    }
  }
  std::string out;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '{' || c == '}' || c == '$' || c == '\\') continue;
    out.push_back(c);
  }
  return out;
}

class Parser {
 public:
  Parser(std::string text, std::string original)
      : s_(std::move(text)), original_(std::move(original)) {}

  PermGroup parse() {
    if (s_.empty()) fail("empty label");
    Node n = product();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return n.group;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UnknownLabelError("cannot read group label '" + original_ + "': " + why);
  }

  bool eat(std::string_view token) {
    if (s_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::size_t number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 4) fail("number too large");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  Node product() {
    Node left = semi();
    while (eat("x")) {
      Node right = semi();
      left = Node{direct_product(left.group, right.group), Node::Kind::Other, 0};
    }
    return left;
  }

  Node semi() {
    Node left = power();
    if (!eat(":")) return left;
    Node right = power();
    if (right.kind != Node::Kind::Cyclic || (right.m != 2 && right.m != 4)) {
      fail("only semidirect products by Z_2 or Z_4 are supported");
    }
    if (left.kind == Node::Kind::Cyclic && right.m == 4) {
      auto u = order_four_multipliers(left.m);
      if (u.empty()) fail("Z_" + std::to_string(left.m) + " has no automorphism of order 4");
      return Node{affine(left.m, {u.front()[1]}), Node::Kind::Other, 0};
    }
    if (left.kind == Node::Kind::Cyclic && right.m == 2 && left.m >= 3) {
      return Node{dihedral(left.m), Node::Kind::Dihedral, left.m};
    }
    if (left.kind == Node::Kind::Dihedral && right.m == 2) {
      auto u = klein_multipliers(left.m);
      if (u.empty()) fail("no catalog model for D_" + std::to_string(left.m) + " : Z_2");
      return Node{affine(left.m, {u.front()[1], u.front()[2]}), Node::Kind::Other, 0};
    }
    if (left.kind == Node::Kind::SpecialLinear && right.m == 2) {
      return Node{special_linear_2_3_ext(), Node::Kind::Other, 0};
    }
    if (left.kind == Node::Kind::GeneralLinear && right.m == 2) {
      return Node{general_linear_2_3_ext(), Node::Kind::Other, 0};
    }
    fail("unsupported semidirect product");
  }

  Node power() {
    Node base = atom();
    if (!eat("^")) return base;
    std::size_t e = number();
    if (e == 0) fail("zero exponent");
    if (e == 1) return base;
    PermGroup g = base.group;
    for (std::size_t i = 1; i < e; ++i) g = direct_product(g, base.group);
    return Node{std::move(g), Node::Kind::Other, 0};
  }

  Node atom() {
    if (eat("(")) {
      Node inner = product();
      if (!eat(")")) fail("missing ')'");
      return inner;
    }
    if (eat("SL(2,3)")) return Node{special_linear_2_3(), Node::Kind::SpecialLinear, 0};
    if (eat("GL(2,3)")) return Node{general_linear_2_3(), Node::Kind::GeneralLinear, 0};
    if (eat("trivial") || eat("1")) return Node{PermGroup(1), Node::Kind::Cyclic, 1};
    if (pos_ >= s_.size()) fail("unexpected end");
    char letter = s_[pos_++];
    eat("_");
    std::size_t m = number();
    if (m == 0) fail("zero index");
    switch (letter) {
      case 'Z':
      case 'C':
        return Node{cyclic(m), Node::Kind::Cyclic, m};
      case 'D':
        if (m == 1) return Node{cyclic(2), Node::Kind::Cyclic, 2};
        if (m == 2) return Node{abelian({2, 2}), Node::Kind::Other, 0};
        return Node{dihedral(m), Node::Kind::Dihedral, m};
      case 'S':
        if (m > 7) fail("symmetric group too large");
        if (m == 3) return Node{dihedral(3), Node::Kind::Dihedral, 3};
        return Node{symmetric(m), Node::Kind::Other, 0};
      case 'A':
        if (m > 7) fail("alternating group too large");
        return Node{alternating(m), Node::Kind::Other, 0};
      case 'Q':
        if (m != 8) fail("only Q_8 is supported");
        return Node{quaternion(), Node::Kind::Other, 0};
      default:
        fail(std::string("unknown group symbol '") + letter + "'");
    }
  }

  std::string s_;
  std::string original_;
  std::size_t pos_ = 0;
};

}  // namespace

PermGroup parse_expression(std::string_view text) {
  return Parser(normalize(text), std::string(text)).parse();
}

}  // namespace tsg::catalog

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tsg/perm_group.hpp"
#include "tsg/permutation.hpp"

namespace oracle {

using Perm = std::vector<int>;
using Graph = std::vector<std::vector<int>>;

// u_i -> i, v_i -> n + i, indices mod n
inline Graph petersen(int n, int k) {
  Graph g(2 * n);
  auto link = [&](int a, int b) {
    g[a].push_back(b);
    g[b].push_back(a);
  };
  for (int i = 0; i < n; ++i) {
    link(i, (i + 1) % n);
    link(n + i, n + (i + k) % n);
    link(i, n + i);
  }
  for (auto& row : g) std::sort(row.begin(), row.end());
  return g;
}

inline bool adjacent(const Graph& g, int a, int b) { return std::binary_search(g[a].begin(), g[a].end(), b); }

inline std::size_t edge_count(const Graph& g) {
  std::size_t d = 0;
  for (const auto& row : g) d += row.size();
  return d / 2;
}

// every vertex map preserving adjacency and non-adjacency, by plain backtracking
inline std::vector<Perm> automorphisms(const Graph& g) {
  int v = static_cast<int>(g.size());
  std::vector<int> order;
  std::vector<bool> seen(v, false);
  for (int s = 0; s < v; ++s) {
    if (seen[s]) continue;
    std::vector<int> queue{s};
    seen[s] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      for (int w : g[queue[i]])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }
  std::vector<Perm> out;
  Perm image(v, -1);
  std::vector<bool> used(v, false);
  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == order.size()) {
      out.push_back(image);
      return;
    }
    int x = order[depth];
    for (int y = 0; y < v; ++y) {
      if (used[y] || g[x].size() != g[y].size()) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        int w = order[d];
        ok = adjacent(g, x, w) == adjacent(g, y, image[w]);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      extend(depth + 1);
      used[y] = false;
      image[x] = -1;
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline Perm identity(std::size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

inline int order(const Perm& p) {
  Perm id = identity(p.size());
  Perm q = p;
  int m = 1;
  while (q != id) {
    q = compose(p, q);
    ++m;
  }
  return m;
}

// cycle-length -> count, fixed points included
inline std::map<int, int> cycle_type(const Perm& p) {
  std::map<int, int> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    ++out[len];
  }
  return out;
}

inline std::set<Perm> generate(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> group{identity(degree)};
  std::vector<Perm> frontier{identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        Perm y = compose(s, x);
        if (group.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return group;
}

// all subsets closed under the product; feasible up to about 16 elements
inline std::size_t subgroup_count_exhaustive(const std::vector<Perm>& elements) {
  std::size_t m = elements.size();
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[elements[i]] = i;
  std::vector<std::vector<std::size_t>> mul(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mul[i][j] = index.at(compose(elements[i], elements[j]));
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < m && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = 0; j < m && closed; ++j)
        if ((mask >> j & 1) && !(mask >> mul[i][j] & 1)) closed = false;
    }
    count += closed;
  }
  return count;
}

// subgroups generated by at most two elements
inline std::set<std::set<Perm>> two_generated_subgroups(const std::vector<Perm>& elements) {
  std::set<std::set<Perm>> out;
  std::size_t degree = elements.front().size();
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i; j < elements.size(); ++j) out.insert(generate({elements[i], elements[j]}, degree));
  return out;
}

inline Perm from(const tsg::Permutation& p) {
  Perm r(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) r[i] = p[i];
  return r;
}

inline tsg::Permutation to(const Perm& p) {
  std::vector<tsg::Point> images(p.begin(), p.end());
  return tsg::Permutation(std::move(images));
}

inline std::vector<Perm> elements_of(const tsg::PermGroup& g) {
  std::vector<Perm> out;
  for (const auto& p : g.elements()) out.push_back(from(p));
  std::sort(out.begin(), out.end());
  return out;
}

inline Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  Perm p = identity(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline int gcd(int a, int b) { return b == 0 ? a : gcd(b, a % b); }

}  // namespace oracle

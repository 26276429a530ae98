#pragma once

// Deliberately slow reference implementations used to cross-check the
// library. Dense boolean matrices, plain loops, no shared code with src/.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace naive {

struct Mat {
  int n = 0;
  std::vector<std::vector<bool>> a;

  explicit Mat(int n_ = 0) : n(n_), a(static_cast<std::size_t>(n_), std::vector<bool>(static_cast<std::size_t>(n_))) {}

  void add(int u, int v) { a[u][v] = a[v][u] = true; }
  bool adj(int u, int v) const { return a[u][v]; }

  int edge_count() const {
    int m = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) m += a[u][v];
    return m;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (a[u][v]) out.emplace_back(u, v);
    return out;
  }
};

// Graph number `code` on n vertices: bit i of code toggles the i-th pair in
// (0,1), (0,2), ..., (n-2,n-1) order.
inline Mat from_code(int n, std::uint64_t code) {
  Mat m(n);
  int i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++i)
      if ((code >> i) & 1U) m.add(u, v);
  return m;
}

inline bool is_clique(const Mat& m, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!m.adj(s[i], s[j])) return false;
  return true;
}

// k-cliques containing u and v, by brute force over all vertex subsets.
inline int cliques_on_edge(const Mat& m, int u, int v, int k) {
  int count = 0;
  for (std::uint32_t mask = 0; mask < (1U << m.n); ++mask) {
    if (!((mask >> u) & 1U) || !((mask >> v) & 1U)) continue;
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> s;
    for (int x = 0; x < m.n; ++x)
      if ((mask >> x) & 1U) s.push_back(x);
    count += is_clique(m, s);
  }
  return count;
}

inline bool cover(const Mat& m, int k, int l) {
  for (auto [u, v] : m.edges())
    if (cliques_on_edge(m, u, v, k) < l) return false;
  return true;
}

inline bool vertex_cover(const Mat& m, int k) {
  for (int x = 0; x < m.n; ++x) {
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1U << m.n) && !found; ++mask) {
      if (!((mask >> x) & 1U) || __builtin_popcount(mask) != k) continue;
      std::vector<int> s;
      for (int y = 0; y < m.n; ++y)
        if ((mask >> y) & 1U) s.push_back(y);
      found = is_clique(m, s);
    }
    if (!found) return false;
  }
  return true;
}

inline int component_count(const Mat& m) {
  std::vector<int> label(static_cast<std::size_t>(m.n), -1);
  int c = 0;
  for (int s = 0; s < m.n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = c;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < m.n; ++y)
        if (m.adj(x, y) && label[y] < 0) {
          label[y] = c;
          stack.push_back(y);
        }
    }
    ++c;
  }
  return c;
}

inline bool connected(const Mat& m) { return m.n <= 1 || component_count(m) == 1; }

// Upper triangle read column by column, as in graph6, under every
// permutation; the lexicographically largest string wins. Different rule
// from the library (which minimizes) so agreement is not by construction.
inline std::string invariant_key(const Mat& m) {
  std::vector<int> p(static_cast<std::size_t>(m.n));
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int v = 1; v < m.n; ++v)
      for (int u = 0; u < v; ++u) s.push_back(m.adj(p[u], p[v]) ? '1' : '0');
    best = std::max(best, s);
  } while (std::next_permutation(p.begin(), p.end()));
  return std::to_string(m.n) + ":" + best;
}

// Every labeled graph on n vertices whose key is new: one per isomorphism
// class.
inline std::map<std::string, Mat> classes(int n) {
  std::map<std::string, Mat> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    Mat m = from_code(n, code);
    out.emplace(invariant_key(m), m);
  }
  return out;
}

struct MinResult {
  int minimum = -1;
  std::map<std::string, Mat> minimizers;  // one representative per class
};

// Smallest edge count over all labeled graphs satisfying pred.
template <typename Pred>
MinResult minimum(int n, Pred pred) {
  MinResult r;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const int m = __builtin_popcountll(code);
    if (r.minimum >= 0 && m > r.minimum) continue;
    Mat g = from_code(n, code);
    if (!pred(g)) continue;
    if (r.minimum < 0 || m < r.minimum) {
      r.minimum = m;
      r.minimizers.clear();
    }
    r.minimizers.emplace(invariant_key(g), g);
  }
  return r;
}

// Repeatedly deletes any edge in fewer than l triangles of what is left.
inline Mat truss(Mat m, int l) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : m.edges()) {
      int t = 0;
      for (int w = 0; w < m.n; ++w) t += m.adj(u, w) && m.adj(v, w);
      if (t < l) {
        m.a[u][v] = m.a[v][u] = false;
        changed = true;
      }
    }
  }
  return m;
}

// Identify u and v; the merged vertex takes the smaller label and the rest
// keep their relative order.
inline Mat contract(const Mat& m, int u, int v) {
  if (u > v) std::swap(u, v);
  std::vector<int> img(static_cast<std::size_t>(m.n));
  for (int x = 0, next = 0; x < m.n; ++x) img[x] = x == v ? img[u] : next++;
  Mat out(m.n - 1);
  for (auto [a, b] : m.edges())
    if (img[a] != img[b]) out.add(img[a], img[b]);
  return out;
}

inline Mat random_graph(std::mt19937_64& rng, int n, double p) {
  Mat m(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) m.add(u, v);
  return m;
}

}  // namespace naive

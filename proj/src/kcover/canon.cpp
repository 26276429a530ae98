#include "kcover/canon.hpp"

#include <array>
#include <cstdint>
#include <string>

#include "kcover/error.hpp"
#include "kcover/io.hpp"

namespace kcover {
namespace {

// Branch and bound over placements. After positions 0..p are fixed, column p
// of the bit string (pairs (i, p), i < p) is fixed too, so prefixes can be
// compared column by column against the best complete labeling found so far.
// Only strictly larger prefixes are cut, so the result is the exact minimum
// over all n! permutations.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.n()) {}

  std::vector<int> run() {
    if (n_ > 0) descend(0, 0, false);
    return {best_order_.begin(), best_order_.begin() + n_};
  }

 private:
  std::uint32_t column(int pos, int candidate) const {
    std::uint32_t col = 0;
    const VertexSet row = g_.neighbors(candidate);
    for (int i = 0; i < pos; ++i)
      col = (col << 1) | static_cast<std::uint32_t>(bits::test(row, order_[static_cast<std::size_t>(i)]));
    return col;
  }

  // `prefix_less`: the placed prefix is already strictly below the incumbent.
  void descend(int pos, VertexSet used, bool prefix_less) {
    if (pos == n_) {
      if (!have_best_ || prefix_less) {
        best_order_ = order_;
        best_cols_ = cols_;
        have_best_ = true;
        ++generation_;
      }
      return;
    }
    for (VertexSet free = g_.vertices() & ~used; free != 0; free &= free - 1) {
      const int c = bits::lowest(free);
      const std::uint32_t col = column(pos, c);
      bool child_less = true;
      if (have_best_ && !prefix_less) {
        if (col > best_cols_[static_cast<std::size_t>(pos)]) continue;
        child_less = col < best_cols_[static_cast<std::size_t>(pos)];
      }
      order_[static_cast<std::size_t>(pos)] = c;
      cols_[static_cast<std::size_t>(pos)] = col;
      const std::uint64_t before = generation_;
      descend(pos + 1, used | bits::bit(c), child_less);
      // A new incumbent found below shares this prefix exactly.
      if (generation_ != before) prefix_less = false;
    }
  }

  const Graph& g_;
  int n_;
  std::array<int, kMaxCanonicalOrder> order_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> cols_{};
  std::array<int, kMaxCanonicalOrder> best_order_{};
  std::array<std::uint32_t, kMaxCanonicalOrder> best_cols_{};
  bool have_best_ = false;
  std::uint64_t generation_ = 0;
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
  if (g.n() > kMaxCanonicalOrder)
    throw Error(Errc::unsupported_size, "canonical form supports at most " +
                                            std::to_string(kMaxCanonicalOrder) +
                                            " vertices, got " + std::to_string(g.n()));
  return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph& g) {
  const std::vector<int> order = canonical_order(g);
  std::vector<int> perm(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    perm[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return permute(g, perm);
}

std::string canonical_form(const Graph& g) { return encode_graph6(canonical_graph(g)); }

}  // namespace kcover

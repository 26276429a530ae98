#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

// Bitset primitives over adjacency rows. A row is one 64-bit word, bit w set
// iff w is a neighbour. Everything here is header-only because the oracle's
// inner loop calls it billions of times.
namespace kcover::bits {

using Row = std::uint64_t;

inline constexpr Row bit(int v) { return Row{1} << v; }
inline constexpr bool test(Row s, int v) { return (s >> v) & 1U; }
inline constexpr int count(Row s) { return std::popcount(s); }
inline constexpr int lowest(Row s) { return std::countr_zero(s); }
inline constexpr Row prefix(int n) { return n >= 64 ? ~Row{0} : bit(n) - 1; }

inline std::vector<int> members(Row s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count(s)));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

inline Row from_members(std::span<const int> vs) {
  Row s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

// Number of `size`-cliques inside `candidates`, stopping once `limit` is hit.
inline int count_cliques(std::span<const Row> rows, Row candidates, int size,
                         int limit) {
  if (size == 0) return 1;
  if (count(candidates) < size) return 0;
  if (size == 1) return count(candidates) < limit ? count(candidates) : limit;
  int found = 0;
  while (candidates != 0 && found < limit) {
    const int v = lowest(candidates);
    candidates &= candidates - 1;
    found += count_cliques(rows, candidates & rows[static_cast<std::size_t>(v)],
                           size - 1, limit - found);
  }
  return found;
}

inline bool has_clique(std::span<const Row> rows, Row candidates, int size) {
  return count_cliques(rows, candidates, size, 1) > 0;
}

// Vertices reachable from `start` using only vertices in `within`.
inline Row reach(std::span<const Row> rows, int start, Row within) {
  Row seen = bit(start);
  Row frontier = seen;
  while (frontier != 0) {
    Row next = 0;
    for (Row f = frontier; f != 0; f &= f - 1)
      next |= rows[static_cast<std::size_t>(lowest(f))];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace kcover::bits

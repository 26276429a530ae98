#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kcover/graph.hpp"

namespace kcover::extremal {

/// Block shape glued into a hypertree: K_k, or L(k,r) = two K_k sharing k-r
/// vertices.
///
/// Local numbering of L(k,r) with s = k-r: 0..s-1 are the shared vertices,
/// s..k-1 the private part of the first copy, k..k+r-1 the private part of
/// the second copy.
struct BlockTemplate {
  enum class Kind { clique, lblock };

  Kind kind = Kind::clique;
  int k = 3;
  int r = 0;  // only for lblock

  static BlockTemplate clique(int k) { return {Kind::clique, k, 0}; }
  static BlockTemplate lblock(int k, int r) { return {Kind::lblock, k, r}; }

  int vertex_count() const;
  long long edge_count() const;
  std::vector<Edge> local_edges() const;
  void validate() const;

  bool operator==(const BlockTemplate&) const = default;
};

/// Identifies this block's local vertex `self_vertex` with the parent block's
/// local vertex `parent_vertex`.
struct Glue {
  int parent_vertex = 0;
  int self_vertex = 0;

  bool operator==(const Glue&) const = default;
};

struct Attachment {
  std::size_t parent = 0;
  std::vector<Glue> glue;  // exactly one entry keeps the hypertree linear

  bool operator==(const Attachment&) const = default;
};

struct Block {
  BlockTemplate shape;
  std::optional<Attachment> attach;  // absent only for the first block

  bool operator==(const Block&) const = default;
};

/// Member of G_tree(F_1, ..., F_m) described block by block.
///
/// Text form, one block per line ('#' starts a comment):
///
///     K 4
///     L 4 2 @ 0: 3
///     K 4 @ 1: 5=2
///
/// `@ p: a` glues local vertex 0 of the new block onto local vertex a of
/// block p; `a=b` glues local vertex b instead.
struct HypertreeSpec {
  std::vector<Block> blocks;

  static HypertreeSpec parse(std::string_view text);
  std::string to_text() const;

  // Throws spec_error on a missing/extra attachment, forward or dangling
  // references, or a glue list that shares more than one vertex.
  void validate() const;

  int vertex_count() const;
  long long edge_count() const;

  bool operator==(const HypertreeSpec&) const = default;
};

/// Glued graph. Blocks are laid out in order; each block reuses its glue
/// vertex and numbers its remaining vertices consecutively.
Graph build_gtree(const HypertreeSpec& spec);

enum class Shape { path, star };

/// Spec of a member of G_tree(qK_k, L) on n vertices, L = two K_k sharing
/// k-r vertices. When r = k-1 the L block is emitted as two K_k blocks; n = k
/// gives K_k alone.
HypertreeSpec extremal_spec(int n, int k, Shape shape);
Graph build_extremal(int n, int k, Shape shape);

inline constexpr std::size_t kDefaultEnumerationCap = 10'000;

/// Every member of G_tree(qK_k, L) on n vertices up to isomorphism, sorted by
/// canonical form. Throws cap_exceeded if more than `cap` classes appear.
std::vector<Graph> enumerate_extremal(int n, int k, std::size_t cap = kDefaultEnumerationCap);

}  // namespace kcover::extremal

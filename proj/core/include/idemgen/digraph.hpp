#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace idemgen {

using IndexPair = std::pair<std::size_t, std::size_t>;
using PairSet = std::set<IndexPair>;

//! Simple directed graph without loops, order at most 64 (adjacency bitsets).
class Digraph {
 public:
  static constexpr std::size_t max_order = 64;

  explicit Digraph(std::size_t order);

  std::size_t order() const noexcept { return out_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<IndexPair> edges() const;  // lexicographic

  //! True iff every unordered pair carries at least one edge.
  bool is_complete() const;

 private:
  std::vector<std::uint64_t> out_;
};

//! The graph on {0..n-1} with an edge i -> j for every pair (i, j) in the set.
Digraph graph_of_pairs(const PairSet& pairs, std::size_t n);

bool is_strongly_connected(const Digraph& g);

//! Strongly connected components (Tarjan), vertices sorted within each.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const Digraph& g);

//! Components ordered maximal-first: edges between distinct components all
//! point from earlier to later entries. Throws if some pair of components
//! has no edge between them (possible only for non-complete graphs).
std::vector<std::vector<std::size_t>> scc_order(const Digraph& g);

//! One edge state per unordered pair: a complete digraph on {0..order-1}.
enum class PairState : std::uint8_t {
  forward = 0,   // u -> v for the pair (u, v) with u < v
  backward = 1,  // v -> u
  both = 2,      // the double edge
};

class CompleteDigraph {
 public:
  CompleteDigraph(std::size_t order, std::vector<PairState> states);

  static std::size_t pair_count(std::size_t order) {
    return order * (order - 1) / 2;
  }

  std::size_t order() const noexcept { return order_; }
  const std::vector<PairState>& states() const noexcept { return states_; }
  //! State of the unordered pair {u, v}, u < v required.
  PairState state(std::size_t u, std::size_t v) const;
  std::size_t double_edge_count() const;
  Digraph to_digraph() const;

  bool operator==(const CompleteDigraph&) const = default;

 private:
  std::size_t order_;
  std::vector<PairState> states_;
};

//! Visit all complete digraphs on n vertices, optionally only those with the
//! given number of double edges. Pairs vary in lexicographic order, states in
//! order forward < backward < both; 3^C(n,2) graphs total. Guarded to n <= 5.
void for_each_complete_digraph(
    std::size_t n, std::optional<std::size_t> double_edges,
    const std::function<void(const CompleteDigraph&)>& fn);

//! Exhaustive census of strongly connected complete digraphs on n vertices
//! with exactly k double edges. Oracle-grade; n <= 5.
std::uint64_t census_sc_complete_digraphs(std::size_t n, std::size_t k);

//! Exhaustive census of strongly connected tournaments on n vertices.
std::uint64_t census_sc_tournaments(std::size_t n);

//! Repeatedly drop one direction of a double edge while preserving strong
//! connectivity (lexicographically first double pair; forward direction
//! tried first). Reaches zero double edges for order != 2; the order-2
//! double edge is the unique strongly connected complete digraph on two
//! vertices and is returned unchanged.
CompleteDigraph reduce_to_minimal_scc(const CompleteDigraph& g);

}  // namespace idemgen

#include <doctest.h>

#include <idemgen/counting.hpp>
#include <idemgen/digraph.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

using idemgen::CompleteDigraph;
using idemgen::Digraph;
using idemgen::PairSet;
using idemgen::PairState;

TEST_SUITE("digraph") {

TEST_CASE("edges, completeness, bad input") {
  Digraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 0));
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.is_complete());
  g.add_edge(0, 2);
  CHECK(g.is_complete());
  CHECK(g.edges() == std::vector<idemgen::IndexPair>{{0, 1}, {0, 2}, {1, 2}});

  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Digraph(65), std::invalid_argument);
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(Digraph(0)));
  CHECK(is_strongly_connected(Digraph(1)));
  CHECK_FALSE(is_strongly_connected(Digraph(2)));

  Digraph cycle(3);
  cycle.add_edge(0, 1);
  cycle.add_edge(1, 2);
  cycle.add_edge(2, 0);
  CHECK(is_strongly_connected(cycle));

  Digraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_FALSE(is_strongly_connected(path));
}

TEST_CASE("strongly connected components") {
  Digraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 3);
  auto comps = strongly_connected_components(g);
  // Normalise for comparison regardless of component order.
  std::vector<std::vector<std::size_t>> expect{{0, 1}, {2}, {3, 4}};
  REQUIRE(comps.size() == 3);
  for (const auto& c : expect) {
    CHECK(std::count(comps.begin(), comps.end(), c) == 1);
  }
}

TEST_CASE("component order, maximal first") {
  Digraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 1);
  const auto order = scc_order(g);
  REQUIRE(order.size() == 2);
  CHECK(order[0] == std::vector<std::size_t>{0});
  CHECK(order[1] == std::vector<std::size_t>{1, 2});

  CHECK_THROWS_AS(scc_order(Digraph(2)), std::domain_error);
}

TEST_CASE("pair sets to graphs") {
  const PairSet u{{0, 1}, {1, 0}, {1, 2}};
  const auto g = idemgen::graph_of_pairs(u, 3);
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 2));
  CHECK_THROWS_AS(idemgen::graph_of_pairs(PairSet{{0, 3}}, 3),
                  std::invalid_argument);
}

TEST_CASE("complete digraph states and digraph view") {
  const CompleteDigraph g(3, {PairState::forward, PairState::both,
                              PairState::backward});
  CHECK(g.state(0, 1) == PairState::forward);
  CHECK(g.state(0, 2) == PairState::both);
  CHECK(g.state(1, 2) == PairState::backward);
  CHECK(g.double_edge_count() == 1);

  const auto d = g.to_digraph();
  CHECK(d.has_edge(0, 1));
  CHECK_FALSE(d.has_edge(1, 0));
  CHECK(d.has_edge(0, 2));
  CHECK(d.has_edge(2, 0));
  CHECK(d.has_edge(2, 1));
  CHECK_FALSE(d.has_edge(1, 2));
  CHECK(d.is_complete());
}

TEST_CASE("enumeration covers all state vectors") {
  std::size_t total = 0;
  idemgen::for_each_complete_digraph(3, std::nullopt,
                                     [&](const CompleteDigraph&) { ++total; });
  CHECK(total == 27);

  for (std::size_t k = 0; k <= 3; ++k) {
    std::size_t with_k = 0;
    idemgen::for_each_complete_digraph(3, k, [&](const CompleteDigraph& g) {
      CHECK(g.double_edge_count() == k);
      ++with_k;
    });
    // C(3,k) choices of double pairs, 2 orientations for the rest.
    const std::size_t expect[] = {8, 12, 6, 1};
    CHECK(with_k == expect[k]);
  }
}

TEST_CASE("census of strongly connected complete digraphs") {
  // Small values, cross-checked against the closed-form recurrence.
  const std::vector<std::vector<std::uint64_t>> expect{
      {1}, {1}, {0, 1}, {2, 6, 6, 1}, {24, 108, 186, 152, 60, 12, 1}};
  for (std::size_t n = 0; n < expect.size(); ++n) {
    for (std::size_t k = 0; k < expect[n].size(); ++k) {
      CHECK(idemgen::census_sc_complete_digraphs(n, k) == expect[n][k]);
      CHECK(idemgen::counting::sc_complete_digraph_count(n, k) ==
            idemgen::counting::BigCount(expect[n][k]));
    }
  }
  CHECK(idemgen::census_sc_tournaments(0) == 1);
  CHECK(idemgen::census_sc_tournaments(1) == 1);
  CHECK(idemgen::census_sc_tournaments(2) == 0);
  CHECK(idemgen::census_sc_tournaments(3) == 2);
  CHECK(idemgen::census_sc_tournaments(4) == 24);
}

TEST_CASE("reduction keeps strong connectivity and removes doubles") {
  // Exhaustive over orders 3 and 4: every strongly connected complete
  // digraph reduces to a strongly connected tournament using only edges
  // it already had.
  for (std::size_t n : {3u, 4u}) {
    idemgen::for_each_complete_digraph(n, std::nullopt,
                                       [&](const CompleteDigraph& g) {
      if (!is_strongly_connected(g.to_digraph())) return;
      const auto r = idemgen::reduce_to_minimal_scc(g);
      CHECK(r.double_edge_count() == 0);
      CHECK(is_strongly_connected(r.to_digraph()));
      for (std::size_t u = 0; u + 1 < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
          if (g.state(u, v) != PairState::both) {
            CHECK(r.state(u, v) == g.state(u, v));
          }
        }
      }
    });
  }

  // Two vertices: the double edge is already minimal.
  const CompleteDigraph two(2, {PairState::both});
  CHECK(idemgen::reduce_to_minimal_scc(two) == two);

  // A tournament is untouched.
  const CompleteDigraph t(3, {PairState::forward, PairState::backward,
                              PairState::forward});
  CHECK(idemgen::reduce_to_minimal_scc(t) == t);
}

}  // TEST_SUITE

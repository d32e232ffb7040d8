#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "idemgen/partition_map.hpp"

namespace idemgen {

enum class GenMode {
  monoid,     // closure of all products, empty product included
  semigroup,  // products of length at least one
};

struct ClosureOptions {
  GenMode mode = GenMode::monoid;
  std::size_t budget = 10'000'000;  // maximum number of stored elements
  unsigned workers = 1;
};

template <typename Element>
struct ClosureResult {
  std::vector<Element> elements;        // deduplicated, discovery order
  std::vector<std::size_t> round_sizes; // new elements per expansion round
  bool budget_exceeded = false;

  std::size_t size() const noexcept { return elements.size(); }
};

//! Breadth-first closure of `gens` under right multiplication. `one` pins
//! the ambient structure (and seeds the closure in monoid mode); every
//! generator must be compatible with it. The element set, the discovery
//! order, and the budget cutoff point are independent of `workers`.
template <typename Element>
ClosureResult<Element> generate(const std::vector<Element>& gens,
                                const Element& one,
                                const ClosureOptions& opts = {}) {
  for (const Element& g : gens) {
    if (!compatible(g, one)) {
      throw std::invalid_argument("generator has mismatched ambient structure");
    }
  }
  if (opts.budget == 0) {
    throw std::invalid_argument("budget must be positive");
  }
  const unsigned workers = std::max(1u, opts.workers);

  ClosureResult<Element> result;
  std::unordered_set<std::string> known;
  std::vector<Element> frontier;

  auto admit = [&](const Element& x) -> bool {
    if (result.budget_exceeded) {
      return false;
    }
    if (known.size() == opts.budget) {
      result.budget_exceeded = true;
      return false;
    }
    if (known.insert(x.encode()).second) {
      result.elements.push_back(x);
      frontier.push_back(x);
      return true;
    }
    return false;
  };

  if (opts.mode == GenMode::monoid) {
    admit(one);
  } else {
    for (const Element& g : gens) {
      admit(g);
    }
  }
  result.round_sizes.push_back(frontier.size());

  std::vector<Element> previous;
  while (!frontier.empty() && !result.budget_exceeded && !gens.empty()) {
    previous.swap(frontier);
    frontier.clear();

    // Workers fill disjoint slices of one product buffer laid out in
    // (frontier index, generator index) order; admission then scans the
    // buffer sequentially, so the discovery order matches a serial run.
    std::vector<Element> products(previous.size() * gens.size(), one);
    if (workers == 1 || previous.size() < 2 * workers) {
      for (std::size_t i = 0; i < previous.size(); ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          products[i * gens.size() + j] = previous[i] * gens[j];
        }
      }
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      const std::size_t chunk = (previous.size() + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(previous.size(), w * chunk);
        const std::size_t hi = std::min(previous.size(), lo + chunk);
        pool.emplace_back([&, lo, hi]() {
          for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = 0; j < gens.size(); ++j) {
              products[i * gens.size() + j] = previous[i] * gens[j];
            }
          }
        });
      }
      for (std::thread& t : pool) {
        t.join();
      }
    }

    for (const Element& x : products) {
      admit(x);
      if (result.budget_exceeded) {
        break;
      }
    }
    result.round_sizes.push_back(frontier.size());
  }
  if (result.round_sizes.size() > 1 && result.round_sizes.back() == 0) {
    result.round_sizes.pop_back();
  }
  return result;
}

//! True iff the monoid closure of `gens` is exactly the idempotent-generated
//! subsemigroup (plus the identity) of the m x n block-respecting monoid.
//! Throws if the closure exceeds its budget.
bool generates_idempotent_part(const std::vector<PartitionMap>& gens,
                               std::size_t m, std::size_t n,
                               ClosureOptions opts = {});

}  // namespace idemgen

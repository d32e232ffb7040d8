#include "idemgen/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace idemgen {

namespace {

void check_vertex(const Digraph& g, std::size_t v) {
  if (v >= g.order()) {
    throw std::invalid_argument("vertex out of range");
  }
}

std::uint64_t reach_mask(const std::vector<std::uint64_t>& out,
                         std::size_t start) {
  std::uint64_t seen = 1ULL << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f != 0) {
      const int u = __builtin_ctzll(f);
      f &= f - 1;
      next |= out[static_cast<std::size_t>(u)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

Digraph::Digraph(std::size_t order) : out_(order, 0) {
  if (order > max_order) {
    throw std::invalid_argument("digraph order exceeds 64");
  }
}

void Digraph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) {
    throw std::invalid_argument("loops are not allowed");
  }
  out_[u] |= 1ULL << v;
}

bool Digraph::has_edge(std::size_t u, std::size_t v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  return (out_[u] >> v) & 1ULL;
}

std::size_t Digraph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t row : out_) {
    total += static_cast<std::size_t>(__builtin_popcountll(row));
  }
  return total;
}

std::vector<IndexPair> Digraph::edges() const {
  std::vector<IndexPair> out;
  for (std::size_t u = 0; u < order(); ++u) {
    std::uint64_t row = out_[u];
    while (row != 0) {
      const int v = __builtin_ctzll(row);
      row &= row - 1;
      out.emplace_back(u, static_cast<std::size_t>(v));
    }
  }
  return out;
}

bool Digraph::is_complete() const {
  for (std::size_t u = 0; u < order(); ++u) {
    for (std::size_t v = u + 1; v < order(); ++v) {
      if (!has_edge(u, v) && !has_edge(v, u)) {
        return false;
      }
    }
  }
  return true;
}

Digraph graph_of_pairs(const PairSet& pairs, std::size_t n) {
  Digraph g(n);
  for (const auto& [u, v] : pairs) {
    g.add_edge(u, v);
  }
  return g;
}

bool is_strongly_connected(const Digraph& g) {
  const std::size_t n = g.order();
  if (n <= 1) {
    return true;
  }
  std::vector<std::uint64_t> out(n, 0), in(n, 0);
  for (const auto& [u, v] : g.edges()) {
    out[u] |= 1ULL << v;
    in[v] |= 1ULL << u;
  }
  const std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  return reach_mask(out, 0) == all && reach_mask(in, 0) == all;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const Digraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.order();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int next_index = 0;

  struct Frame {
    std::size_t v;
    std::size_t next_child;
  };
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [u, v] : g.edges()) {
    succ[u].push_back(v);
  }

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != -1) {
      continue;
    }
    std::vector<Frame> call;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& top = call.back();
      if (top.next_child < succ[top.v].size()) {
        const std::size_t w = succ[top.v][top.next_child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[top.v] = std::min(low[top.v], index[w]);
        }
      } else {
        if (low[top.v] == index[top.v]) {
          std::vector<std::size_t> comp;
          while (true) {
            const std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
            if (w == top.v) {
              break;
            }
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        const std::size_t finished = top.v;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().v] = std::min(low[call.back().v], low[finished]);
        }
      }
    }
  }
  return comps;
}

std::vector<std::vector<std::size_t>> scc_order(const Digraph& g) {
  auto comps = strongly_connected_components(g);
  const std::size_t k = comps.size();
  std::vector<std::size_t> comp_of(g.order(), 0);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t v : comps[c]) {
      comp_of[v] = c;
    }
  }
  // Between two distinct components edges can point only one way; require at
  // least one edge per component pair so the order is total.
  std::vector<std::vector<bool>> beats(k, std::vector<bool>(k, false));
  for (const auto& [u, v] : g.edges()) {
    if (comp_of[u] != comp_of[v]) {
      beats[comp_of[u]][comp_of[v]] = true;
    }
  }
  std::vector<std::size_t> wins(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (!beats[a][b] && !beats[b][a]) {
        throw std::domain_error("components are not totally ordered");
      }
      ++wins[beats[a][b] ? a : b];
    }
  }
  // A loop-free total order: sort by number of dominated components.
  std::vector<std::size_t> order(k);
  for (std::size_t c = 0; c < k; ++c) {
    order[wins[c]] = c;
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(k);
  for (std::size_t r = k; r-- > 0;) {
    out.push_back(std::move(comps[order[r]]));
  }
  return out;
}

CompleteDigraph::CompleteDigraph(std::size_t order,
                                 std::vector<PairState> states)
    : order_(order), states_(std::move(states)) {
  if (order > Digraph::max_order) {
    throw std::invalid_argument("order exceeds 64");
  }
  if (states_.size() != pair_count(order)) {
    throw std::invalid_argument("need one state per unordered pair");
  }
}

PairState CompleteDigraph::state(std::size_t u, std::size_t v) const {
  if (u >= v || v >= order_) {
    throw std::invalid_argument("need u < v < order");
  }
  // Lexicographic position of (u, v) among pairs with first < second.
  const std::size_t before_u = u * (2 * order_ - u - 1) / 2;
  return states_[before_u + (v - u - 1)];
}

std::size_t CompleteDigraph::double_edge_count() const {
  return static_cast<std::size_t>(
      std::count(states_.begin(), states_.end(), PairState::both));
}

Digraph CompleteDigraph::to_digraph() const {
  Digraph g(order_);
  std::size_t idx = 0;
  for (std::size_t u = 0; u < order_; ++u) {
    for (std::size_t v = u + 1; v < order_; ++v, ++idx) {
      switch (states_[idx]) {
        case PairState::forward:
          g.add_edge(u, v);
          break;
        case PairState::backward:
          g.add_edge(v, u);
          break;
        case PairState::both:
          g.add_edge(u, v);
          g.add_edge(v, u);
          break;
      }
    }
  }
  return g;
}

void for_each_complete_digraph(
    std::size_t n, std::optional<std::size_t> double_edges,
    const std::function<void(const CompleteDigraph&)>& fn) {
  if (n > 5) {
    throw std::invalid_argument(
        "for_each_complete_digraph: n too large (max 5)");
  }
  const std::size_t pairs = CompleteDigraph::pair_count(n);
  std::vector<PairState> states(pairs, PairState::forward);
  std::size_t doubles = 0;
  while (true) {
    if (!double_edges || doubles == *double_edges) {
      fn(CompleteDigraph(n, states));
    }
    std::size_t pos = pairs;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (states[pos] != PairState::both) {
        states[pos] = static_cast<PairState>(
            static_cast<std::uint8_t>(states[pos]) + 1);
        if (states[pos] == PairState::both) {
          ++doubles;
        }
        for (std::size_t rest = pos + 1; rest < pairs; ++rest) {
          if (states[rest] == PairState::both) {
            --doubles;
          }
          states[rest] = PairState::forward;
        }
        done = false;
        break;
      }
    }
    if (done) {
      break;
    }
  }
}

std::uint64_t census_sc_complete_digraphs(std::size_t n, std::size_t k) {
  std::uint64_t count = 0;
  for_each_complete_digraph(n, k, [&](const CompleteDigraph& g) {
    if (is_strongly_connected(g.to_digraph())) {
      ++count;
    }
  });
  return count;
}

std::uint64_t census_sc_tournaments(std::size_t n) {
  return census_sc_complete_digraphs(n, 0);
}

CompleteDigraph reduce_to_minimal_scc(const CompleteDigraph& g) {
  if (!is_strongly_connected(g.to_digraph())) {
    throw std::invalid_argument("input must be strongly connected");
  }
  std::vector<PairState> states = g.states();
  if (g.order() == 2) {
    return g;  // the double edge is already minimal
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t idx = 0; idx < states.size(); ++idx) {
      if (states[idx] != PairState::both) {
        continue;
      }
      for (PairState keep : {PairState::backward, PairState::forward}) {
        // backward first: dropping u -> v leaves v -> u.
        states[idx] = keep;
        if (is_strongly_connected(
                CompleteDigraph(g.order(), states).to_digraph())) {
          changed = true;
          break;
        }
        states[idx] = PairState::both;
      }
      if (!changed) {
        throw std::logic_error(
            "no single removal preserves strong connectivity");
      }
      break;
    }
  }
  return CompleteDigraph(g.order(), states);
}

}  // namespace idemgen

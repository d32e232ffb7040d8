#include "idemgen/genset.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "idemgen/closure.hpp"
#include "idemgen/counting.hpp"

namespace idemgen {

namespace {

std::size_t small(const counting::BigCount& v) {
  return v.convert_to<std::size_t>();
}

PairSet pair_set_of(const CompleteDigraph& g) {
  PairSet out;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      switch (g.state(u, v)) {
        case PairState::forward:
          out.emplace(u, v);
          break;
        case PairState::backward:
          out.emplace(v, u);
          break;
        case PairState::both:
          out.emplace(u, v);
          out.emplace(v, u);
          break;
      }
    }
  }
  return out;
}

CompleteDigraph complete_digraph_of(const PairSet& pairs, std::size_t n) {
  std::vector<PairState> states;
  states.reserve(CompleteDigraph::pair_count(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool fwd = pairs.count({u, v}) > 0;
      const bool bwd = pairs.count({v, u}) > 0;
      if (fwd && bwd) {
        states.push_back(PairState::both);
      } else if (fwd) {
        states.push_back(PairState::forward);
      } else if (bwd) {
        states.push_back(PairState::backward);
      } else {
        throw std::invalid_argument("pair set is not complete");
      }
    }
  }
  return CompleteDigraph(n, states);
}

std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

//! The unique non-fixed point of t, if t moves exactly one point.
std::optional<IndexPair> single_moved_point(const Transformation& t) {
  std::optional<IndexPair> found;  // (image, point)
  for (std::size_t x = 0; x < t.degree(); ++x) {
    if (t[x] != x) {
      if (found) {
        return std::nullopt;
      }
      found = IndexPair{t[x], x};
    }
  }
  return found;
}

struct ElementShape {
  enum Kind { identity, local_merge, carrier, other } kind = other;
  std::size_t block = 0;   // local_merge: which block
  IndexPair pair{0, 0};    // local_merge: (r, s); carrier: (i, j)
  Transformation perm = Transformation::identity(1);  // carrier only
};

ElementShape shape_of(const PartitionMap& f) {
  ElementShape s;
  if (f.base().is_identity()) {
    std::optional<std::size_t> nontrivial;
    for (std::size_t i = 0; i < f.block_count(); ++i) {
      if (!f.block(i).is_identity()) {
        if (nontrivial) {
          return s;  // two moving blocks: unsupported shape
        }
        nontrivial = i;
      }
    }
    if (!nontrivial) {
      s.kind = ElementShape::identity;
      return s;
    }
    const auto moved = single_moved_point(f.block(*nontrivial));
    if (!moved) {
      return s;
    }
    s.kind = ElementShape::local_merge;
    s.block = *nontrivial;
    s.pair = *moved;
    return s;
  }
  const auto base_moved = single_moved_point(f.base());
  if (!base_moved) {
    return s;
  }
  const auto [i, j] = *base_moved;
  if (!f.block(j).is_permutation()) {
    return s;
  }
  for (std::size_t b = 0; b < f.block_count(); ++b) {
    if (b != j && !f.block(b).is_identity()) {
      return s;
    }
  }
  s.kind = ElementShape::carrier;
  s.pair = {i, j};
  s.perm = f.block(j);
  return s;
}

std::string pair_text(const IndexPair& p) {
  // 1-based in messages, matching the serialized forms.
  return "(" + std::to_string(p.first + 1) + ", " +
         std::to_string(p.second + 1) + ")";
}

}  // namespace

bool howie_check(const PairSet& u, std::size_t n) {
  const Digraph g = graph_of_pairs(u, n);
  return g.is_complete() && is_strongly_connected(g);
}

std::vector<PairSet> all_howie_sets(std::size_t n) {
  std::vector<PairSet> out;
  for_each_complete_digraph(n, std::nullopt, [&](const CompleteDigraph& g) {
    if (is_strongly_connected(g.to_digraph())) {
      out.push_back(pair_set_of(g));
    }
  });
  return out;
}

std::vector<PairSet> minimal_howie_sets(std::size_t n) {
  // Minimal sets have rank_singular(n) pairs: complete digraphs whose
  // double-edge count is rank_singular(n) - C(n,2). One code path covers
  // 0 doubles (tournaments, n >= 3), 1 double (n == 2), and n <= 1.
  const std::size_t pairs = n >= 2 ? n * (n - 1) / 2 : 0;
  const std::size_t doubles = small(counting::rank_singular(n)) - pairs;
  std::vector<PairSet> out;
  for_each_complete_digraph(n, doubles, [&](const CompleteDigraph& g) {
    if (is_strongly_connected(g.to_digraph())) {
      out.push_back(pair_set_of(g));
    }
  });
  return out;
}

XiPhi xi_phi_of(const PairSet& v, std::size_t m) {
  if (!howie_check(v, m)) {
    throw std::invalid_argument("pair set fails the Howie criterion");
  }
  XiPhi out;
  for (const auto& [i, j] : v) {
    if (v.count({j, i}) > 0) {
      if (i < j) {
        out.xi.emplace_back(i, j);
      }
    } else {
      out.phi.emplace_back(i, j);
    }
  }
  return out;
}

void validate_spec(const MinGenSetSpec& spec) {
  if (spec.m == 0 || spec.n == 0) {
    throw std::invalid_argument("spec needs m, n >= 1");
  }
  if (spec.locals.size() != spec.m) {
    throw std::invalid_argument("spec needs one local pair set per block");
  }
  const std::size_t rho = small(counting::rank_singular(spec.n));
  for (std::size_t i = 0; i < spec.m; ++i) {
    if (spec.locals[i].size() != rho || !howie_check(spec.locals[i], spec.n)) {
      throw std::invalid_argument("local pairs of block " +
                                  std::to_string(i + 1) +
                                  " are not a minimal Howie set");
    }
  }
  if (!howie_check(spec.base_pairs, spec.m)) {
    throw std::invalid_argument("base pairs fail the Howie criterion");
  }
  const XiPhi classes = xi_phi_of(spec.base_pairs, spec.m);
  if (spec.splits.size() != classes.xi.size()) {
    throw std::invalid_argument("spec needs exactly one split per two-way pair");
  }
  const std::size_t group = small(counting::factorial(spec.n));
  for (const auto& pair : classes.xi) {
    const auto it = spec.splits.find(pair);
    if (it == spec.splits.end()) {
      throw std::invalid_argument("missing split for base pair " +
                                  pair_text(pair));
    }
    const auto& a = it->second;
    if (a.empty() || a.size() >= group) {
      throw std::invalid_argument("split for base pair " + pair_text(pair) +
                                  " must be a proper nonempty subset");
    }
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (!a[t].is_permutation() || a[t].degree() != spec.n) {
        throw std::invalid_argument("split for base pair " + pair_text(pair) +
                                    " contains a non-permutation");
      }
      if (t > 0 && !(a[t - 1] < a[t])) {
        throw std::invalid_argument("split for base pair " + pair_text(pair) +
                                    " is not sorted and duplicate-free");
      }
    }
  }
}

std::vector<PartitionMap> build_carriers(const MinGenSetSpec& spec) {
  validate_spec(spec);
  const std::vector<Transformation> group = symmetric_group(spec.n);
  std::vector<PartitionMap> out;
  for (std::size_t i = 0; i < spec.m; ++i) {
    for (std::size_t j = i + 1; j < spec.m; ++j) {
      const auto split = spec.splits.find({i, j});
      if (split != spec.splits.end()) {
        const auto& a = split->second;
        for (const Transformation& f : a) {
          out.push_back(PartitionMap::eijf(spec.m, spec.n, i, j, f));
        }
        for (const Transformation& f : group) {
          if (!std::binary_search(a.begin(), a.end(), f)) {
            out.push_back(
                PartitionMap::eijf(spec.m, spec.n, j, i, f.inverse()));
          }
        }
      } else if (spec.base_pairs.count({i, j}) > 0) {
        for (const Transformation& f : group) {
          out.push_back(PartitionMap::eijf(spec.m, spec.n, i, j, f));
        }
      } else {
        for (const Transformation& f : group) {
          out.push_back(PartitionMap::eijf(spec.m, spec.n, j, i, f));
        }
      }
    }
  }
  return out;
}

std::vector<PartitionMap> build_min_genset(const MinGenSetSpec& spec) {
  validate_spec(spec);
  std::vector<PartitionMap> out;
  for (std::size_t i = 0; i < spec.m; ++i) {
    for (const auto& [r, s] : spec.locals[i]) {
      out.push_back(PartitionMap::block_embed(
          spec.m, spec.n, i, Transformation::eij(spec.n, r, s)));
    }
  }
  const std::vector<PartitionMap> carriers = build_carriers(spec);
  out.insert(out.end(), carriers.begin(), carriers.end());
  return out;
}

ValidationResult validate_min_genset(const std::vector<PartitionMap>& gens) {
  ValidationResult result;
  auto reject = [&result](std::string reason) {
    result.accepted = false;
    result.reason = std::move(reason);
    return result;
  };

  if (gens.empty()) {
    return reject("empty input");
  }
  const std::size_t m = gens.front().block_count();
  const std::size_t n = gens.front().block_size();
  for (const PartitionMap& f : gens) {
    if (!compatible(f, gens.front())) {
      return reject("mixed ambient structure");
    }
  }
  const std::size_t expected =
      small(counting::idempotent_generated_rank(m, n));
  if (gens.size() != expected) {
    return reject("wrong size: expected " + std::to_string(expected) +
                  ", got " + std::to_string(gens.size()));
  }
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (gens[a] == gens[b]) {
        return reject("duplicate element");
      }
    }
  }

  MinGenSetSpec spec;
  spec.m = m;
  spec.n = n;
  spec.locals.resize(m);
  std::map<IndexPair, std::set<Transformation>> families;
  for (const PartitionMap& f : gens) {
    if (!f.is_idempotent()) {
      return reject("element is not idempotent");
    }
    const ElementShape s = shape_of(f);
    switch (s.kind) {
      case ElementShape::identity:
        return reject("identity cannot occur in a minimal generating set");
      case ElementShape::local_merge:
        spec.locals[s.block].insert(s.pair);
        break;
      case ElementShape::carrier:
        spec.base_pairs.insert(s.pair);
        families[s.pair].insert(s.perm);
        break;
      case ElementShape::other:
        return reject(
            "element is neither a block-local point merge nor a base-pair "
            "carrier");
    }
  }

  const std::size_t rho = small(counting::rank_singular(n));
  for (std::size_t i = 0; i < m; ++i) {
    if (spec.locals[i].size() != rho || !howie_check(spec.locals[i], n)) {
      return reject("local pairs of block " + std::to_string(i + 1) +
                    " are not a minimal Howie set");
    }
  }
  if (!howie_check(spec.base_pairs, m)) {
    return reject("base pairs fail the Howie criterion");
  }

  const XiPhi classes = xi_phi_of(spec.base_pairs, m);
  const std::size_t group_order = small(counting::factorial(n));
  for (const IndexPair& pair : classes.phi) {
    if (families[pair].size() != group_order) {
      return reject("carriers on base pair " + pair_text(pair) +
                    " do not cover all permutations");
    }
  }
  for (const IndexPair& pair : classes.xi) {
    const std::set<Transformation>& a = families[pair];
    std::set<Transformation> b;
    for (const Transformation& f : families[{pair.second, pair.first}]) {
      b.insert(f.inverse());
    }
    for (const Transformation& f : a) {
      if (b.count(f) > 0) {
        return reject("split on base pair " + pair_text(pair) +
                      " covers a permutation twice");
      }
    }
    if (a.size() + b.size() != group_order) {
      return reject("split on base pair " + pair_text(pair) +
                    " does not cover all permutations");
    }
    spec.splits[pair] = std::vector<Transformation>(a.begin(), a.end());
  }

  result.accepted = true;
  result.spec = std::move(spec);
  return result;
}

std::vector<MinGenSetSpec> enumerate_min_gensets(std::size_t m, std::size_t n,
                                                 std::size_t budget) {
  const counting::BigCount total = counting::min_genset_count(m, n);
  if (total > budget) {
    throw std::invalid_argument("enumeration budget exceeded: " +
                                total.str() + " specs");
  }
  const std::vector<PairSet> local_choices = minimal_howie_sets(n);
  const std::vector<PairSet> base_choices = all_howie_sets(m);
  const std::vector<Transformation> group = symmetric_group(n);

  std::vector<MinGenSetSpec> out;
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    for (const PairSet& v : base_choices) {
      MinGenSetSpec spec;
      spec.m = m;
      spec.n = n;
      for (std::size_t i = 0; i < m; ++i) {
        spec.locals.push_back(local_choices[pick[i]]);
      }
      spec.base_pairs = v;
      const XiPhi classes = xi_phi_of(v, m);

      // Odometer over the split masks, one per two-way pair; masks run over
      // proper nonempty subsets of the permutation list.
      const std::size_t k = classes.xi.size();
      if (group.size() > 24 && k > 0) {
        throw std::invalid_argument("split enumeration needs n <= 4");
      }
      const std::uint64_t full =
          k == 0 ? 1 : (1ULL << group.size()) - 1;
      if (k > 0 && full <= 1) {
        continue;  // one-element group: no proper nonempty split exists
      }
      std::vector<std::uint64_t> masks(k, 1);
      while (true) {
        MinGenSetSpec complete = spec;
        for (std::size_t t = 0; t < k; ++t) {
          std::vector<Transformation> a;
          for (std::size_t g = 0; g < group.size(); ++g) {
            if ((masks[t] >> g) & 1ULL) {
              a.push_back(group[g]);
            }
          }
          complete.splits[classes.xi[t]] = std::move(a);
        }
        out.push_back(std::move(complete));

        std::size_t pos = k;
        bool rolled = true;
        while (pos > 0) {
          --pos;
          if (masks[pos] + 1 < full) {
            ++masks[pos];
            for (std::size_t rest = pos + 1; rest < k; ++rest) {
              masks[rest] = 1;
            }
            rolled = false;
            break;
          }
        }
        if (rolled) {
          break;
        }
      }
    }
    std::size_t pos = m;
    bool rolled = true;
    while (pos > 0) {
      --pos;
      if (pick[pos] + 1 < local_choices.size()) {
        ++pick[pos];
        for (std::size_t rest = pos + 1; rest < m; ++rest) {
          pick[rest] = 0;
        }
        rolled = false;
        break;
      }
    }
    if (rolled) {
      break;
    }
  }
  return out;
}

MinGenSetSpec random_min_genset_spec(std::size_t m, std::size_t n,
                                     std::mt19937_64& rng) {
  const std::vector<PairSet> local_choices = minimal_howie_sets(n);
  const std::vector<PairSet> base_choices = all_howie_sets(m);
  const std::vector<Transformation> group = symmetric_group(n);

  MinGenSetSpec spec;
  spec.m = m;
  spec.n = n;
  for (std::size_t i = 0; i < m; ++i) {
    spec.locals.push_back(local_choices[draw(rng, local_choices.size())]);
  }
  spec.base_pairs = base_choices[draw(rng, base_choices.size())];
  for (const IndexPair& pair : xi_phi_of(spec.base_pairs, m).xi) {
    if (group.size() < 2) {
      throw std::invalid_argument(
          "no proper nonempty split exists for blocks of size 1");
    }
    std::vector<Transformation> a;
    while (a.empty() || a.size() == group.size()) {
      a.clear();
      for (const Transformation& f : group) {
        if (rng() & 1ULL) {
          a.push_back(f);
        }
      }
    }
    spec.splits[pair] = std::move(a);
  }
  validate_spec(spec);
  return spec;
}

std::vector<PartitionMap> local_generators(std::size_t m, std::size_t n) {
  std::vector<PartitionMap> out;
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          out.push_back(PartitionMap::block_embed(
              m, n, b, Transformation::eij(n, i, j)));
        }
      }
    }
  }
  return out;
}

std::vector<PartitionMap> carrier_generators(std::size_t m, std::size_t n) {
  std::vector<PartitionMap> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) {
        continue;
      }
      for (const Transformation& f : symmetric_group(n)) {
        out.push_back(PartitionMap::eijf(m, n, i, j, f));
      }
    }
  }
  return out;
}

namespace {

//! Minimal-length factorization of target over gens (semigroup products),
//! by breadth-first search; returns generator indices.
std::vector<std::size_t> factorize(const std::vector<PartitionMap>& gens,
                                   const PartitionMap& target,
                                   std::size_t budget) {
  struct Node {
    PartitionMap element;
    std::size_t parent;   // index into nodes; npos for roots
    std::size_t gen;      // generator applied last
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> queue;

  auto admit = [&](PartitionMap x, std::size_t parent, std::size_t gen) {
    if (nodes.size() >= budget) {
      throw std::runtime_error("factorization budget exceeded");
    }
    const auto [it, fresh] = seen.emplace(x.encode(), nodes.size());
    if (!fresh) {
      return npos;
    }
    nodes.push_back({std::move(x), parent, gen});
    queue.push_back(nodes.size() - 1);
    return nodes.size() - 1;
  };

  auto unwind = [&](std::size_t at) {
    std::vector<std::size_t> word;
    for (; at != npos; at = nodes[at].parent) {
      word.push_back(nodes[at].gen);
    }
    std::reverse(word.begin(), word.end());
    return word;
  };

  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::size_t id = admit(gens[g], npos, g);
    if (id != npos && nodes[id].element == target) {
      return unwind(id);
    }
  }
  while (!queue.empty()) {
    const std::size_t at = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::size_t id = admit(nodes[at].element * gens[g], at, g);
      if (id != npos && nodes[id].element == target) {
        return unwind(id);
      }
    }
  }
  throw std::logic_error("target is not a product of the given elements");
}

}  // namespace

std::vector<PartitionMap> extract_minimal_from(
    const std::vector<PartitionMap>& gens, std::size_t budget) {
  if (gens.empty()) {
    throw std::invalid_argument("empty generating set");
  }
  const std::size_t m = gens.front().block_count();
  const std::size_t n = gens.front().block_size();
  for (const PartitionMap& f : gens) {
    if (!compatible(f, gens.front())) {
      throw std::invalid_argument("mixed ambient structure");
    }
    if (!f.is_idempotent()) {
      throw std::invalid_argument("input contains a non-idempotent");
    }
  }
  ClosureOptions opts;
  opts.budget = budget;
  if (!generates_idempotent_part(gens, m, n, opts)) {
    throw std::invalid_argument(
        "input does not generate the idempotent-generated part");
  }

  // Classify the usable generators once.
  std::vector<PairSet> local_pairs(m);
  std::map<IndexPair, std::set<Transformation>> available;  // carriers
  for (const PartitionMap& f : gens) {
    const ElementShape s = shape_of(f);
    if (s.kind == ElementShape::local_merge) {
      local_pairs[s.block].insert(s.pair);
    } else if (s.kind == ElementShape::carrier) {
      available[s.pair].insert(s.perm);
    }
  }

  std::vector<PartitionMap> result;

  // Per block: only same-block point merges can participate in factoring a
  // point merge, so each block's pair set must already pass the Howie check;
  // shrink it to a minimal one.
  for (std::size_t i = 0; i < m; ++i) {
    if (!howie_check(local_pairs[i], n)) {
      throw std::logic_error("generating set lacks block-local coverage");
    }
    const PairSet reduced =
        pair_set_of(reduce_to_minimal_scc(complete_digraph_of(local_pairs[i], n)));
    for (const auto& [r, s] : reduced) {
      result.push_back(PartitionMap::block_embed(
          m, n, i, Transformation::eij(n, r, s)));
    }
  }

  if (m == 2 && n == 1) {
    // Unit blocks with two of them: the unique minimal set is both carriers;
    // no one-way orientation is strongly connected.
    for (const auto& pair : {IndexPair{0, 1}, IndexPair{1, 0}}) {
      if (available[pair].empty()) {
        throw std::logic_error("generating set lacks a carrier");
      }
      result.push_back(
          PartitionMap::eijf(m, n, pair.first, pair.second,
                             Transformation::identity(n)));
    }
    return result;
  }

  // Greedy carrier choice: each (unordered pair, permutation) slot is served
  // by the forward carrier if present, otherwise by the backward inverse.
  const std::vector<Transformation> group = symmetric_group(n);
  std::map<IndexPair, std::set<Transformation>> chosen;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (const Transformation& f : group) {
        if (available[{i, j}].count(f) > 0) {
          chosen[{i, j}].insert(f);
        } else if (available[{j, i}].count(f.inverse()) > 0) {
          chosen[{j, i}].insert(f.inverse());
        } else {
          throw std::logic_error("generating set lacks a carrier");
        }
      }
    }
  }

  auto carrier_list = [&]() {
    std::vector<PartitionMap> out;
    for (const auto& [pair, family] : chosen) {
      for (const Transformation& f : family) {
        out.push_back(PartitionMap::eijf(m, n, pair.first, pair.second, f));
      }
    }
    return out;
  };
  auto unreachable_pairs = [&]() {
    Digraph g(m);
    for (const auto& [pair, family] : chosen) {
      if (!family.empty()) {
        g.add_edge(pair.first, pair.second);
      }
    }
    std::vector<IndexPair> bad;
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<bool> seen(m, false);
      std::deque<std::size_t> queue{r};
      seen[r] = true;
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < m; ++v) {
          if (!seen[v] && g.has_edge(u, v)) {
            seen[v] = true;
            queue.push_back(v);
          }
        }
      }
      for (std::size_t s = 0; s < m; ++s) {
        if (s != r && !seen[s]) {
          bad.emplace_back(r, s);
        }
      }
    }
    return bad;
  };

  // While some block cannot reach another through the chosen carriers,
  // refactor one missing carrier over the whole input; a minimal-length
  // word consists of carriers, and flipping the chosen side of each factor
  // that rides an unchosen direction strictly shrinks the unreachable set.
  std::vector<IndexPair> bad = unreachable_pairs();
  while (!bad.empty()) {
    const auto [r, s] = bad.front();
    const PartitionMap target =
        PartitionMap::eijf(m, n, r, s, Transformation::identity(n));
    const std::vector<std::size_t> word = factorize(gens, target, budget);
    for (const std::size_t g : word) {
      const ElementShape fs = shape_of(gens[g]);
      if (fs.kind != ElementShape::carrier) {
        throw std::logic_error(
            "minimal factorization left the carrier layer");
      }
      if (chosen[fs.pair].count(fs.perm) > 0) {
        continue;
      }
      const IndexPair reverse{fs.pair.second, fs.pair.first};
      chosen[reverse].erase(fs.perm.inverse());
      chosen[fs.pair].insert(fs.perm);
    }
    const std::vector<IndexPair> next = unreachable_pairs();
    if (next.size() >= bad.size()) {
      throw std::logic_error("carrier repair failed to make progress");
    }
    bad = next;
  }

  const std::vector<PartitionMap> carriers = carrier_list();
  result.insert(result.end(), carriers.begin(), carriers.end());

  const ValidationResult check = validate_min_genset(result);
  if (!check.accepted) {
    throw std::logic_error("extraction produced an invalid set: " +
                           check.reason);
  }
  return result;
}

}  // namespace idemgen

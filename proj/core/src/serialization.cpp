#include "idemgen/serialization.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace idemgen {

namespace {

using nlohmann::json;

json transformation_json(const Transformation& t) {
  json out = json::array();
  for (auto v : t.images()) {
    out.push_back(static_cast<unsigned>(v) + 1);
  }
  return out;
}

Transformation transformation_of(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("transformation must be an array of points");
  }
  std::vector<Transformation::point_type> images;
  images.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0 ||
        v.get<std::uint64_t>() > j.size()) {
      throw std::invalid_argument("transformation points must lie in 1..n");
    }
    images.push_back(
        static_cast<Transformation::point_type>(v.get<std::uint64_t>() - 1));
  }
  return Transformation(std::move(images));
}

json partition_map_json(const PartitionMap& f) {
  json blocks = json::array();
  for (const Transformation& b : f.blocks()) {
    blocks.push_back(transformation_json(b));
  }
  return json{{"m", f.block_count()},
              {"n", f.block_size()},
              {"base", transformation_json(f.base())},
              {"blocks", std::move(blocks)}};
}

PartitionMap partition_map_of(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n") ||
      !j.contains("base") || !j.contains("blocks")) {
    throw std::invalid_argument(
        "partition map needs fields m, n, base, blocks");
  }
  const auto m = j.at("m").get<std::size_t>();
  const auto n = j.at("n").get<std::size_t>();
  Transformation base = transformation_of(j.at("base"));
  if (base.degree() != m) {
    throw std::invalid_argument("base degree must equal m");
  }
  std::vector<Transformation> blocks;
  for (const json& b : j.at("blocks")) {
    blocks.push_back(transformation_of(b));
    if (blocks.back().degree() != n) {
      throw std::invalid_argument("every block must have degree n");
    }
  }
  return PartitionMap(std::move(base), std::move(blocks));
}

json pair_json(const IndexPair& p) {
  return json::array({p.first + 1, p.second + 1});
}

IndexPair pair_of(const json& j, std::size_t bound) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("pair must be a two-element array");
  }
  const auto a = j.at(0).get<std::size_t>();
  const auto b = j.at(1).get<std::size_t>();
  if (a == 0 || b == 0 || a > bound || b > bound || a == b) {
    throw std::invalid_argument("pair entries must be distinct and in range");
  }
  return {a - 1, b - 1};
}

std::string pair_key(std::size_t u, std::size_t v) {
  return std::to_string(u + 1) + "-" + std::to_string(v + 1);
}

}  // namespace

std::string to_json_string(const Transformation& t) {
  return transformation_json(t).dump();
}

std::string to_json_string(const PartitionMap& f) {
  return partition_map_json(f).dump();
}

std::string to_json_string(const Digraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back(json::array({u + 1, v + 1}));
  }
  return json{{"order", g.order()}, {"edges", std::move(edges)}}.dump();
}

std::string to_json_string(const CompleteDigraph& g) {
  json pairs = json::object();
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      const char* name = nullptr;
      switch (g.state(u, v)) {
        case PairState::forward:
          name = "forward";
          break;
        case PairState::backward:
          name = "backward";
          break;
        case PairState::both:
          name = "double";
          break;
      }
      pairs[pair_key(u, v)] = name;
    }
  }
  return json{{"order", g.order()}, {"pairs", std::move(pairs)}}.dump();
}

std::string to_json_string(const MinGenSetSpec& spec) {
  json locals = json::array();
  for (const PairSet& u : spec.locals) {
    json one = json::array();
    for (const IndexPair& p : u) {
      one.push_back(pair_json(p));
    }
    locals.push_back(std::move(one));
  }
  json base = json::array();
  for (const IndexPair& p : spec.base_pairs) {
    base.push_back(pair_json(p));
  }
  json splits = json::array();
  for (const auto& [pair, a] : spec.splits) {
    json perms = json::array();
    for (const Transformation& f : a) {
      perms.push_back(transformation_json(f));
    }
    splits.push_back(json{{"pair", pair_json(pair)}, {"a", std::move(perms)}});
  }
  return json{{"m", spec.m},
              {"n", spec.n},
              {"locals", std::move(locals)},
              {"base_pairs", std::move(base)},
              {"splits", std::move(splits)}}
      .dump();
}

std::string to_json_string(const std::vector<PartitionMap>& gens) {
  json out = json::array();
  for (const PartitionMap& f : gens) {
    out.push_back(partition_map_json(f));
  }
  return out.dump();
}

Transformation transformation_from_json(const std::string& text) {
  return transformation_of(json::parse(text));
}

PartitionMap partition_map_from_json(const std::string& text) {
  return partition_map_of(json::parse(text));
}

Digraph digraph_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_object() || !j.contains("order") || !j.contains("edges")) {
    throw std::invalid_argument("digraph needs fields order, edges");
  }
  Digraph g(j.at("order").get<std::size_t>());
  for (const json& e : j.at("edges")) {
    const IndexPair p = pair_of(e, g.order());
    g.add_edge(p.first, p.second);
  }
  return g;
}

CompleteDigraph complete_digraph_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_object() || !j.contains("order") || !j.contains("pairs")) {
    throw std::invalid_argument("complete digraph needs fields order, pairs");
  }
  const auto order = j.at("order").get<std::size_t>();
  const json& pairs = j.at("pairs");
  std::vector<PairState> states;
  states.reserve(CompleteDigraph::pair_count(order));
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = u + 1; v < order; ++v) {
      const std::string key = pair_key(u, v);
      if (!pairs.contains(key)) {
        throw std::invalid_argument("missing state for pair " + key);
      }
      const std::string name = pairs.at(key).get<std::string>();
      if (name == "forward") {
        states.push_back(PairState::forward);
      } else if (name == "backward") {
        states.push_back(PairState::backward);
      } else if (name == "double") {
        states.push_back(PairState::both);
      } else {
        throw std::invalid_argument("unknown pair state: " + name);
      }
    }
  }
  return CompleteDigraph(order, std::move(states));
}

MinGenSetSpec min_genset_spec_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_object() || !j.contains("m") || !j.contains("n") ||
      !j.contains("locals") || !j.contains("base_pairs") ||
      !j.contains("splits")) {
    throw std::invalid_argument(
        "spec needs fields m, n, locals, base_pairs, splits");
  }
  MinGenSetSpec spec;
  spec.m = j.at("m").get<std::size_t>();
  spec.n = j.at("n").get<std::size_t>();
  for (const json& u : j.at("locals")) {
    PairSet one;
    for (const json& p : u) {
      one.insert(pair_of(p, spec.n));
    }
    spec.locals.push_back(std::move(one));
  }
  for (const json& p : j.at("base_pairs")) {
    spec.base_pairs.insert(pair_of(p, spec.m));
  }
  for (const json& s : j.at("splits")) {
    if (!s.is_object() || !s.contains("pair") || !s.contains("a")) {
      throw std::invalid_argument("split needs fields pair, a");
    }
    const IndexPair pair = pair_of(s.at("pair"), spec.m);
    std::vector<Transformation> a;
    for (const json& f : s.at("a")) {
      a.push_back(transformation_of(f));
    }
    spec.splits[pair] = std::move(a);
  }
  return spec;
}

std::vector<PartitionMap> genset_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_array()) {
    throw std::invalid_argument("generating set must be an array");
  }
  std::vector<PartitionMap> out;
  out.reserve(j.size());
  for (const json& f : j) {
    out.push_back(partition_map_of(f));
  }
  return out;
}

namespace {

template <typename Element>
std::string dump_lines(const std::vector<Element>& elements) {
  std::vector<std::string> lines;
  lines.reserve(elements.size());
  for (const Element& e : elements) {
    lines.push_back(to_json_string(e));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string closure_dump_lines(const std::vector<PartitionMap>& elements) {
  return dump_lines(elements);
}

std::string closure_dump_lines(const std::vector<Transformation>& elements) {
  return dump_lines(elements);
}

}  // namespace idemgen

#pragma once

#include <string>
#include <vector>

#include "idemgen/digraph.hpp"
#include "idemgen/genset.hpp"
#include "idemgen/partition_map.hpp"
#include "idemgen/transformation.hpp"

namespace idemgen {

//! JSON wire forms. Points, block indices and vertices are 1-based on the
//! wire and 0-based in memory.
//!
//!   Transformation   [1,1,3]
//!   PartitionMap     {"m":2,"n":2,"base":[1,1],"blocks":[[1,2],[2,1]]}
//!   Digraph          {"order":3,"edges":[[1,2],[2,3],[3,1]]}
//!   CompleteDigraph  {"order":3,"pairs":{"1-2":"forward","1-3":"double",...}}
//!   MinGenSetSpec    {"m":..,"n":..,"locals":[[[r,s],..],..],
//!                     "base_pairs":[[i,j],..],
//!                     "splits":[{"pair":[i,j],"a":[[..],..]},..]}
//!   generating set   [PartitionMap, ...]
//!
//! Parsers throw std::invalid_argument (or the underlying parse error,
//! which carries the byte offset) on malformed input.

std::string to_json_string(const Transformation& t);
std::string to_json_string(const PartitionMap& f);
std::string to_json_string(const Digraph& g);
std::string to_json_string(const CompleteDigraph& g);
std::string to_json_string(const MinGenSetSpec& spec);
std::string to_json_string(const std::vector<PartitionMap>& gens);

Transformation transformation_from_json(const std::string& text);
PartitionMap partition_map_from_json(const std::string& text);
Digraph digraph_from_json(const std::string& text);
CompleteDigraph complete_digraph_from_json(const std::string& text);
MinGenSetSpec min_genset_spec_from_json(const std::string& text);
std::vector<PartitionMap> genset_from_json(const std::string& text);

//! One serialized element per line, sorted; byte-identical for equal sets.
std::string closure_dump_lines(const std::vector<PartitionMap>& elements);
std::string closure_dump_lines(const std::vector<Transformation>& elements);

}  // namespace idemgen

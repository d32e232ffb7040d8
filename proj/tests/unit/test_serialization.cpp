#include <doctest.h>

#include <idemgen/digraph.hpp>
#include <idemgen/genset.hpp>
#include <idemgen/partition_map.hpp>
#include <idemgen/serialization.hpp>
#include <idemgen/transformation.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using idemgen::PartitionMap;
using idemgen::Transformation;

TEST_SUITE("serialization") {

TEST_CASE("transformations use one-based image lists") {
  CHECK(idemgen::to_json_string(Transformation::eij(3, 0, 1)) == "[1,1,3]");
  CHECK(idemgen::to_json_string(Transformation::identity(2)) == "[1,2]");
  CHECK(idemgen::to_json_string(Transformation({})) == "[]");

  for (const auto& f : idemgen::all_transformations(3)) {
    CHECK(idemgen::transformation_from_json(idemgen::to_json_string(f)) == f);
  }

  CHECK_THROWS_AS(idemgen::transformation_from_json("[0,1]"),
                  std::invalid_argument);
  CHECK_THROWS_AS(idemgen::transformation_from_json("[1,3]"),
                  std::invalid_argument);
  CHECK_THROWS_AS(idemgen::transformation_from_json("{}"),
                  std::invalid_argument);
  CHECK_THROWS(idemgen::transformation_from_json("[1,"));
}

TEST_CASE("partition maps carry shape, base and blocks") {
  CHECK(idemgen::to_json_string(PartitionMap::identity(2, 2)) ==
        R"({"base":[1,2],"blocks":[[1,2],[1,2]],"m":2,"n":2})");

  for (const auto& f : idemgen::all_partition_maps(2, 2)) {
    CHECK(idemgen::partition_map_from_json(idemgen::to_json_string(f)) == f);
  }

  CHECK_THROWS_AS(idemgen::partition_map_from_json(R"({"m":2,"n":2})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      idemgen::partition_map_from_json(
          R"({"base":[1,1],"blocks":[[1,2]],"m":2,"n":2})"),
      std::invalid_argument);
}

TEST_CASE("digraphs list edges one-based") {
  idemgen::Digraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  CHECK(idemgen::to_json_string(g) ==
        R"({"edges":[[1,2],[2,3],[3,1]],"order":3})");
  const auto back = idemgen::digraph_from_json(idemgen::to_json_string(g));
  CHECK(back.order() == 3);
  CHECK(back.edges() == g.edges());

  CHECK_THROWS_AS(idemgen::digraph_from_json(R"({"edges":[[1,4]],"order":3})"),
                  std::invalid_argument);
}

TEST_CASE("complete digraphs name their pair states") {
  const idemgen::CompleteDigraph g(
      3, {idemgen::PairState::forward, idemgen::PairState::both,
          idemgen::PairState::backward});
  const std::string text = idemgen::to_json_string(g);
  CHECK(text ==
        R"({"order":3,"pairs":{"1-2":"forward","1-3":"double","2-3":"backward"}})");
  CHECK(idemgen::complete_digraph_from_json(text) == g);

  CHECK_THROWS_AS(idemgen::complete_digraph_from_json(
                      R"({"order":2,"pairs":{"1-2":"sideways"}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(idemgen::complete_digraph_from_json(
                      R"({"order":3,"pairs":{"1-2":"forward"}})"),
                  std::invalid_argument);
}

TEST_CASE("specs and generating sets round-trip") {
  std::mt19937_64 rng(5);
  const auto spec = idemgen::random_min_genset_spec(3, 2, rng);
  const auto parsed =
      idemgen::min_genset_spec_from_json(idemgen::to_json_string(spec));
  CHECK(parsed == spec);

  const auto gens = idemgen::build_min_genset(spec);
  const auto gens_back = idemgen::genset_from_json(idemgen::to_json_string(gens));
  CHECK(gens_back == gens);

  CHECK_THROWS_AS(idemgen::genset_from_json("{}"), std::invalid_argument);
}

TEST_CASE("closure dumps are sorted and order-insensitive") {
  auto elements = idemgen::all_partition_idempotents(2, 2);
  const std::string dump = idemgen::closure_dump_lines(elements);

  std::vector<std::string> lines;
  std::istringstream in(dump);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  CHECK(lines.size() == elements.size());
  CHECK(std::is_sorted(lines.begin(), lines.end()));
  CHECK(dump.back() == '\n');

  auto shuffled = elements;
  std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937_64(99));
  CHECK(idemgen::closure_dump_lines(shuffled) == dump);

  for (const auto& line : lines) {
    CHECK_NOTHROW(idemgen::partition_map_from_json(line));
  }
}

}  // TEST_SUITE

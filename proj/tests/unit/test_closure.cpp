#include <doctest.h>

#include <idemgen/closure.hpp>
#include <idemgen/counting.hpp>
#include <idemgen/genset.hpp>
#include <idemgen/partition_map.hpp>
#include <idemgen/serialization.hpp>
#include <idemgen/transformation.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using idemgen::ClosureOptions;
using idemgen::GenMode;
using idemgen::PartitionMap;
using idemgen::Transformation;
namespace cnt = idemgen::counting;

TEST_SUITE("closure") {

TEST_CASE("empty generating set") {
  const auto id = Transformation::identity(3);
  ClosureOptions opts;
  opts.mode = GenMode::monoid;
  const auto mon = idemgen::generate(std::vector<Transformation>{}, id, opts);
  CHECK(mon.size() == 1);
  CHECK(mon.elements[0] == id);

  opts.mode = GenMode::semigroup;
  const auto sem = idemgen::generate(std::vector<Transformation>{}, id, opts);
  CHECK(sem.size() == 0);
}

TEST_CASE("the degree-n idempotents generate the singular part") {
  // Semigroup closure of the non-identity idempotents: n^n - n!.
  // Monoid closure adds the identity.
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Transformation> gens;
    for (const auto& f : idemgen::all_idempotents(n)) {
      if (!f.is_identity()) gens.push_back(f);
    }
    const auto id = Transformation::identity(n);

    ClosureOptions opts;
    opts.mode = GenMode::semigroup;
    const auto sem = idemgen::generate(gens, id, opts);
    CHECK(cnt::BigCount(sem.size()) ==
          cnt::ipow(n, n) - cnt::factorial(n));
    for (const auto& f : sem.elements) CHECK_FALSE(f.is_permutation());

    opts.mode = GenMode::monoid;
    const auto mon = idemgen::generate(gens, id, opts);
    CHECK(mon.size() == sem.size() + 1);
    CHECK(mon.elements[0] == id);
  }
}

TEST_CASE("block-respecting idempotents generate the expected order") {
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{
      {2, 2}, {3, 2}, {2, 3}};
  for (const auto& shape : shapes) {
    const std::size_t m = shape.first;
    const std::size_t n = shape.second;
    std::vector<PartitionMap> gens;
    for (const auto& f : idemgen::all_partition_idempotents(m, n)) {
      if (!(f == PartitionMap::identity(m, n))) gens.push_back(f);
    }
    const auto result =
        idemgen::generate(gens, PartitionMap::identity(m, n), ClosureOptions{});
    CHECK(cnt::BigCount(result.size()) == cnt::idempotent_generated_size(m, n));
    for (const auto& f : result.elements) {
      CHECK(idemgen::classify(f).generated);
    }
    CHECK(idemgen::generates_idempotent_part(gens, m, n));
  }
}

TEST_CASE("local generators alone reach only the blockwise part") {
  const auto locals = idemgen::local_generators(2, 2);
  const auto result =
      idemgen::generate(locals, PartitionMap::identity(2, 2), ClosureOptions{});
  CHECK(result.size() == 9);  // (2^2 - 2 + 1)^2
  for (const auto& f : result.elements) {
    CHECK(idemgen::classify(f).local);
  }
  CHECK_FALSE(idemgen::generates_idempotent_part(locals, 2, 2));
}

TEST_CASE("carrier generators generate the permutational part and identity") {
  const auto carriers = idemgen::carrier_generators(2, 2);
  REQUIRE(carriers.size() == 4);  // 2 base pairs, 2! permutations each
  ClosureOptions opts;
  opts.mode = GenMode::semigroup;
  const auto result =
      idemgen::generate(carriers, PartitionMap::identity(2, 2), opts);
  CHECK(result.size() == 8);
  for (const auto& f : result.elements) {
    CHECK(idemgen::classify(f).permutational);
  }
}

TEST_CASE("membership classes are closed under products") {
  // The generated part is a subsemigroup, and a collapsed base can never
  // be un-collapsed by further multiplication.
  const auto all = idemgen::all_partition_maps(2, 2);
  for (const auto& f : all) {
    for (const auto& g : all) {
      const auto mf = idemgen::classify(f);
      const auto mg = idemgen::classify(g);
      if (mf.generated && mg.generated) {
        CHECK(idemgen::classify(f * g).generated);
      }
      if (mg.collapsing) CHECK(idemgen::classify(f * g).collapsing);
    }
  }
}

TEST_CASE("budget cuts off deterministically") {
  std::vector<Transformation> gens;
  for (const auto& f : idemgen::all_idempotents(3)) {
    if (!f.is_identity()) gens.push_back(f);
  }
  ClosureOptions opts;
  opts.budget = 5;
  const auto r = idemgen::generate(gens, Transformation::identity(3), opts);
  CHECK(r.budget_exceeded);
  CHECK(r.size() == 5);

  opts.budget = 0;
  CHECK_THROWS_AS(idemgen::generate(gens, Transformation::identity(3), opts),
                  std::invalid_argument);
}

TEST_CASE("worker count changes neither the set nor the order") {
  std::vector<PartitionMap> gens;
  for (const auto& f : idemgen::all_partition_idempotents(3, 2)) {
    if (!(f == PartitionMap::identity(3, 2))) gens.push_back(f);
  }
  ClosureOptions serial;
  serial.workers = 1;
  ClosureOptions wide;
  wide.workers = 4;
  const auto a = idemgen::generate(gens, PartitionMap::identity(3, 2), serial);
  const auto b = idemgen::generate(gens, PartitionMap::identity(3, 2), wide);
  CHECK(a.elements == b.elements);
  CHECK(a.round_sizes == b.round_sizes);
  CHECK(idemgen::closure_dump_lines(a.elements) ==
        idemgen::closure_dump_lines(b.elements));
}

TEST_CASE("mismatched ambient structure is rejected") {
  const std::vector<PartitionMap> gens{PartitionMap::identity(2, 3)};
  CHECK_THROWS_AS(
      idemgen::generate(gens, PartitionMap::identity(2, 2), ClosureOptions{}),
      std::invalid_argument);
}

TEST_CASE("census of idempotent generating sets of the degree-3 part") {
  // All 1024 subsets of the 10 idempotents of degree 3, closed exhaustively:
  // the number whose monoid closure is the full idempotent-generated part
  // (22 elements) matches the closed-form count, and exactly the subsets
  // containing the identity work in the semigroup sense.
  const auto idems = idemgen::all_idempotents(3);
  REQUIRE(idems.size() == 10);
  const auto id = Transformation::identity(3);

  std::size_t monoid_hits = 0;
  std::size_t semigroup_hits = 0;
  for (std::size_t mask = 0; mask < (1u << idems.size()); ++mask) {
    std::vector<Transformation> gens;
    for (std::size_t i = 0; i < idems.size(); ++i) {
      if (mask & (1u << i)) gens.push_back(idems[i]);
    }
    ClosureOptions opts;
    opts.mode = GenMode::monoid;
    if (idemgen::generate(gens, id, opts).size() == 22) ++monoid_hits;
    opts.mode = GenMode::semigroup;
    if (idemgen::generate(gens, id, opts).size() == 22) ++semigroup_hits;
  }
  CHECK(cnt::BigCount(monoid_hits) == cnt::idempotent_genset_count(3));
  CHECK(cnt::BigCount(semigroup_hits) ==
        cnt::idempotent_genset_count(3, true));
}

}  // TEST_SUITE

#include <doctest.h>

#include <idemgen/counting.hpp>
#include <idemgen/partition_map.hpp>
#include <idemgen/transformation.hpp>

#include <set>
#include <stdexcept>
#include <vector>

using idemgen::PartitionMap;
using idemgen::Transformation;

TEST_SUITE("partition_map") {

TEST_CASE("construction and accessors") {
  const auto id = PartitionMap::identity(2, 3);
  CHECK(id.block_count() == 2);
  CHECK(id.block_size() == 3);
  CHECK(id.base().is_identity());
  CHECK(id.block(0).is_identity());
  CHECK(id.is_idempotent());

  CHECK_THROWS_AS(PartitionMap(Transformation::identity(2),
                               {Transformation::identity(3),
                                Transformation::identity(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PartitionMap(Transformation::identity(2),
                               {Transformation::identity(3)}),
                  std::invalid_argument);
}

TEST_CASE("product works blockwise through the base map") {
  // Base maps in one-line notation (zero-based): the block that lands on
  // position i contributes its own local map composed with g's local map at
  // the image block.
  const Transformation fbar({1, 1, 3, 1, 4});
  const Transformation gbar({0, 2, 0, 3, 3});
  std::vector<Transformation> fblocks, gblocks;
  for (std::size_t i = 0; i < 5; ++i) {
    fblocks.push_back(Transformation::constant(5, i));
    gblocks.push_back(Transformation::constant(5, (i + 1) % 5));
  }
  const PartitionMap f(fbar, fblocks);
  const PartitionMap g(gbar, gblocks);
  const auto fg = f * g;

  CHECK(fg.base() == fbar * gbar);
  CHECK(fg.base().images() ==
        std::vector<Transformation::point_type>{2, 2, 3, 2, 3});
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(fg.block(i) == f.block(i) * g.block(fbar[i]));
  }
}

TEST_CASE("flatten is a product-preserving bijection") {
  const auto all = idemgen::all_partition_maps(2, 2);
  REQUIRE(all.size() == 64);  // (2^2)^2 * 2^2

  std::set<std::string> flat_keys;
  for (const auto& f : all) {
    const auto t = f.flatten();
    CHECK(t.degree() == 4);
    flat_keys.insert(t.encode());
    CHECK(idemgen::unflatten(t, 2, 2) == f);
  }
  CHECK(flat_keys.size() == all.size());

  for (const auto& f : all)
    for (const auto& g : all)
      CHECK((f * g).flatten() == f.flatten() * g.flatten());
}

TEST_CASE("unflatten rejects maps that break blocks apart") {
  // 0 and 1 form one block; sending them to different blocks is not allowed.
  const Transformation t({0, 2, 0, 0});
  CHECK_THROWS_AS(idemgen::unflatten(t, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(idemgen::unflatten(Transformation::identity(3), 2, 2),
                  std::invalid_argument);
}

TEST_CASE("idempotents are exactly the solutions of f*f == f") {
  for (const auto& shape :
       std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 2}, {2, 3}}) {
    const std::size_t m = shape.first;
    const std::size_t n = shape.second;
    std::size_t count = 0;
    idemgen::for_each_partition_map(m, n, [&](const PartitionMap& f) {
      CHECK(f.is_idempotent() == (f * f == f));
      if (f.is_idempotent()) ++count;
    });
    CHECK(idemgen::counting::BigCount(count) ==
          idemgen::counting::partition_idempotent_count(m, n));
    CHECK(idemgen::all_partition_idempotents(m, n).size() == count);
  }
}

TEST_CASE("pair carriers are idempotent for every permutation") {
  for (const auto& p : idemgen::symmetric_group(3)) {
    const auto e = PartitionMap::eijf(4, 3, 1, 2, p);
    CHECK(e.is_idempotent());
    CHECK(e.base() == Transformation::eij(4, 1, 2));
    CHECK(e.block(2) == p);
    CHECK(e.block(0).is_identity());
    CHECK(e.block(1).is_identity());
    CHECK(e.block(3).is_identity());
  }
  CHECK_THROWS_AS(PartitionMap::eijf(4, 3, 1, 1, Transformation::identity(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(PartitionMap::eijf(4, 3, 1, 2, Transformation({0, 0, 1})),
                  std::invalid_argument);
}

TEST_CASE("block embedding places a local map in one block") {
  const auto g = Transformation({1, 1, 0});
  const auto f = idemgen::PartitionMap::block_embed(3, 3, 1, g);
  CHECK(f.base().is_identity());
  CHECK(f.block(0).is_identity());
  CHECK(f.block(1) == g);
  CHECK(f.block(2).is_identity());
}

TEST_CASE("membership classification at two blocks of size two") {
  std::size_t local = 0, collapsing = 0, permutational = 0, generated = 0;
  idemgen::for_each_partition_map(2, 2, [&](const PartitionMap& f) {
    const auto mem = idemgen::classify(f);
    CHECK(mem.generated == (mem.local || mem.collapsing));
    if (mem.permutational) CHECK(mem.collapsing);
    local += mem.local;
    collapsing += mem.collapsing;
    permutational += mem.permutational;
    generated += mem.generated;
  });
  // Blockwise maps over {identity} + singular: (2^2 - 2 + 1)^2 = 9.
  CHECK(local == 9);
  // Non-injective bases: (2^2 - 2) choices, each with all 2^2 block pairs.
  CHECK(collapsing == 32);
  CHECK(permutational == 8);
  CHECK(idemgen::counting::BigCount(generated) ==
        idemgen::counting::idempotent_generated_size(2, 2));

  const auto id = PartitionMap::identity(2, 2);
  CHECK(idemgen::classify(id).local);
  CHECK(idemgen::classify(id).generated);
  CHECK_FALSE(idemgen::classify(id).collapsing);
}

TEST_CASE("encode separates distinct maps") {
  std::set<std::string> keys;
  idemgen::for_each_partition_map(2, 3,
                                  [&](const PartitionMap& f) { keys.insert(f.encode()); });
  CHECK(keys.size() == 4 * 27 * 27);  // 2^2 bases, 3^3 maps per block
}

}  // TEST_SUITE

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "idemgen/transformation.hpp"

namespace idemgen {

//! A transformation of an m*n point set that respects a fixed uniform
//! partition into m blocks of size n, in block coordinates:
//! a base map on the m block indices plus one degree-n map per block.
//!
//! Block i of the flat point set is the range [i*n, (i+1)*n). The product
//! follows the right action on points: (f * g) has base f.base * g.base and
//! block i equal to f.block(i) * g.block(i f.base).
class PartitionMap {
 public:
  PartitionMap(Transformation base, std::vector<Transformation> blocks);

  static PartitionMap identity(std::size_t m, std::size_t n);
  //! Base eij(m, i, j); block j carries the permutation f; all other blocks
  //! are identities. Idempotent for every permutation f.
  static PartitionMap eijf(std::size_t m, std::size_t n, std::size_t i,
                           std::size_t j, Transformation f);
  //! Identity base; block i carries g; all other blocks are identities.
  static PartitionMap block_embed(std::size_t m, std::size_t n, std::size_t i,
                                  Transformation g);

  std::size_t block_count() const noexcept { return base_.degree(); }
  std::size_t block_size() const noexcept { return block_size_; }
  const Transformation& base() const noexcept { return base_; }
  const Transformation& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<Transformation>& blocks() const noexcept { return blocks_; }

  //! Structural test, equivalent to f * f == f: the base is idempotent,
  //! blocks at base-fixed indices are idempotent, and each remaining block's
  //! image is contained in the image of the block it lands on.
  bool is_idempotent() const;

  PartitionMap operator*(const PartitionMap& rhs) const;

  bool operator==(const PartitionMap&) const = default;
  auto operator<=>(const PartitionMap&) const = default;

  std::string encode() const;

  //! The underlying degree m*n transformation of the flat point set.
  Transformation flatten() const;

 private:
  Transformation base_;
  std::vector<Transformation> blocks_;
  std::size_t block_size_;
};

//! Inverse of PartitionMap::flatten. Throws if t does not map each block
//! into a single block.
PartitionMap unflatten(const Transformation& t, std::size_t m, std::size_t n);

//! Where an element sits relative to the idempotent-generated submonoid.
struct Membership {
  //! Identity base and every block either an identity or a non-permutation.
  bool local = false;
  //! Non-injective base (any blocks).
  bool collapsing = false;
  //! Non-injective base and every block a permutation.
  bool permutational = false;
  //! Member of the subsemigroup generated by the non-identity idempotents:
  //! local or collapsing.
  bool generated = false;
};

Membership classify(const PartitionMap& f);

//! Visit all m^m * n^(m*n) partition-respecting maps in lexicographic order
//! of (base, blocks). Guarded to desk scale.
void for_each_partition_map(std::size_t m, std::size_t n,
                            const std::function<void(const PartitionMap&)>& fn);

std::vector<PartitionMap> all_partition_maps(std::size_t m, std::size_t n);

//! The idempotents of the partition-respecting monoid, by exhaustive scan.
std::vector<PartitionMap> all_partition_idempotents(std::size_t m,
                                                    std::size_t n);

inline PartitionMap identity_of(const PartitionMap& f) {
  return PartitionMap::identity(f.block_count(), f.block_size());
}

inline bool compatible(const PartitionMap& a, const PartitionMap& b) {
  return a.block_count() == b.block_count() &&
         a.block_size() == b.block_size();
}

struct PartitionMapHash {
  std::size_t operator()(const PartitionMap& f) const noexcept;
};

}  // namespace idemgen

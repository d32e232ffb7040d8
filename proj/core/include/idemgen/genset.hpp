#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "idemgen/digraph.hpp"
#include "idemgen/partition_map.hpp"

namespace idemgen {

//! Howie's criterion: the pair set U (each (i, j) standing for the idempotent
//! that sends j to i) generates the singular part of the degree-n full
//! transformation monoid iff its graph is strongly connected and complete.
bool howie_check(const PairSet& u, std::size_t n);

//! All pair sets on {0..n-1} passing howie_check, i.e. all strongly
//! connected complete digraphs, in enumeration order. Guarded to n <= 5.
std::vector<PairSet> all_howie_sets(std::size_t n);

//! The minimal ones: size rank_singular(n). Strongly connected tournaments
//! for n >= 3; the double pair for n == 2; the empty set for n <= 1.
std::vector<PairSet> minimal_howie_sets(std::size_t n);

//! Unordered pairs carrying both directions (xi) and ordered pairs carrying
//! exactly one (phi). Requires howie_check(v, m).
struct XiPhi {
  std::vector<IndexPair> xi;   // (i, j) with i < j, both edges present
  std::vector<IndexPair> phi;  // (i, j) present, (j, i) absent
};
XiPhi xi_phi_of(const PairSet& v, std::size_t m);

//! Canonical description of a minimal idempotent generating set:
//! one minimal local pair set per block, a base pair set passing
//! howie_check, and for every two-way base pair a proper nonempty set of
//! permutations riding the (i, j) direction (the (j, i) direction carries
//! the inverses of the complement).
struct MinGenSetSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<PairSet> locals;  // size m, pairs over {0..n-1}
  PairSet base_pairs;           // pairs over {0..m-1}
  std::map<IndexPair, std::vector<Transformation>> splits;  // keys = xi pairs

  bool operator==(const MinGenSetSpec&) const = default;
};

//! Throws (naming the failed condition) unless the spec is well-formed.
void validate_spec(const MinGenSetSpec& spec);

//! The base-pair carrier elements of the spec: for a one-way pair (i, j) all
//! n! permutations ride it; for a two-way pair the split decides direction.
//! Size n! * C(m,2).
std::vector<PartitionMap> build_carriers(const MinGenSetSpec& spec);

//! The full minimal generating set: block-local idempotents plus carriers.
//! Size m * rank_singular(n) + n! * C(m,2).
std::vector<PartitionMap> build_min_genset(const MinGenSetSpec& spec);

struct ValidationResult {
  bool accepted = false;
  std::string reason;  // empty iff accepted
  std::optional<MinGenSetSpec> spec;
};

//! Decide whether the given elements form a minimal idempotent generating
//! set, by structure alone (no closure run); on acceptance returns the
//! canonical spec, which round-trips through build_min_genset.
ValidationResult validate_min_genset(const std::vector<PartitionMap>& gens);

//! All canonical specs at (m, n), enumeration-ordered and duplicate-free.
//! Refuses if min_genset_count(m, n) exceeds the budget.
std::vector<MinGenSetSpec> enumerate_min_gensets(std::size_t m, std::size_t n,
                                                 std::size_t budget = 1'000'000);

//! Seeded uniform draw of a canonical spec (locals, base pairs, splits).
MinGenSetSpec random_min_genset_spec(std::size_t m, std::size_t n,
                                     std::mt19937_64& rng);

//! The block-local idempotent generators: every (i, j) idempotent embedded
//! into every block. 2 C(n,2) m elements.
std::vector<PartitionMap> local_generators(std::size_t m, std::size_t n);

//! The carrier generators: every base pair with every permutation.
//! 2 C(m,2) n! elements.
std::vector<PartitionMap> carrier_generators(std::size_t m, std::size_t n);

//! Shrink an idempotent generating set to a minimal one contained in it:
//! per-block reduction to a minimal Howie set, greedy carrier selection,
//! then repair via minimal-length refactoring while the base graph is not
//! strongly connected. Throws if the input does not generate.
std::vector<PartitionMap> extract_minimal_from(
    const std::vector<PartitionMap>& gens, std::size_t budget = 10'000'000);

}  // namespace idemgen

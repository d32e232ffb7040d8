#include "idemgen/closure.hpp"

#include "idemgen/counting.hpp"

namespace idemgen {

bool generates_idempotent_part(const std::vector<PartitionMap>& gens,
                               std::size_t m, std::size_t n,
                               ClosureOptions opts) {
  opts.mode = GenMode::monoid;
  const auto result = generate(gens, PartitionMap::identity(m, n), opts);
  if (result.budget_exceeded) {
    throw std::runtime_error("closure budget exceeded; raise the budget");
  }
  const counting::BigCount expected = counting::idempotent_generated_size(m, n);
  if (counting::BigCount(result.size()) != expected) {
    return false;
  }
  for (const PartitionMap& f : result.elements) {
    if (!classify(f).generated) {
      return false;
    }
  }
  return true;
}

}  // namespace idemgen

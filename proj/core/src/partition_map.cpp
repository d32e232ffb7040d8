#include "idemgen/partition_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace idemgen {

PartitionMap::PartitionMap(Transformation base,
                           std::vector<Transformation> blocks)
    : base_(std::move(base)), blocks_(std::move(blocks)), block_size_(0) {
  if (base_.degree() == 0 || blocks_.size() != base_.degree()) {
    throw std::invalid_argument("need one block map per block index");
  }
  block_size_ = blocks_.front().degree();
  if (block_size_ == 0) {
    throw std::invalid_argument("block size must be positive");
  }
  for (const Transformation& b : blocks_) {
    if (b.degree() != block_size_) {
      throw std::invalid_argument("block maps must share one degree");
    }
  }
  if (base_.degree() * block_size_ > Transformation::max_degree) {
    throw std::invalid_argument("flattened degree exceeds limit");
  }
}

PartitionMap PartitionMap::identity(std::size_t m, std::size_t n) {
  return PartitionMap(
      Transformation::identity(m),
      std::vector<Transformation>(m, Transformation::identity(n)));
}

PartitionMap PartitionMap::eijf(std::size_t m, std::size_t n, std::size_t i,
                                std::size_t j, Transformation f) {
  if (!f.is_permutation() || f.degree() != n) {
    throw std::invalid_argument("eijf needs a degree-n permutation");
  }
  std::vector<Transformation> blocks(m, Transformation::identity(n));
  blocks.at(j) = std::move(f);
  return PartitionMap(Transformation::eij(m, i, j), std::move(blocks));
}

PartitionMap PartitionMap::block_embed(std::size_t m, std::size_t n,
                                       std::size_t i, Transformation g) {
  if (g.degree() != n) {
    throw std::invalid_argument("block_embed needs a degree-n map");
  }
  std::vector<Transformation> blocks(m, Transformation::identity(n));
  blocks.at(i) = std::move(g);
  return PartitionMap(Transformation::identity(m), std::move(blocks));
}

bool PartitionMap::is_idempotent() const {
  if (!base_.is_idempotent()) {
    return false;
  }
  const std::vector<bool> in_image = base_.image_mask();
  for (std::size_t i = 0; i < block_count(); ++i) {
    if (in_image[i]) {
      if (!blocks_[i].is_idempotent()) {
        return false;
      }
    } else {
      // Block i lands on block (i)base; its image must sit inside that
      // block's image for squaring to reproduce the same point map.
      const Transformation& target = blocks_[base_[i]];
      const std::vector<bool> target_image = target.image_mask();
      for (auto v : blocks_[i].images()) {
        if (!target_image[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

PartitionMap PartitionMap::operator*(const PartitionMap& rhs) const {
  if (!compatible(*this, rhs)) {
    throw std::invalid_argument("block structure mismatch in product");
  }
  std::vector<Transformation> blocks;
  blocks.reserve(block_count());
  for (std::size_t i = 0; i < block_count(); ++i) {
    blocks.push_back(blocks_[i] * rhs.blocks_[base_[i]]);
  }
  return PartitionMap(base_ * rhs.base_, std::move(blocks));
}

std::string PartitionMap::encode() const {
  std::string key = base_.encode();
  for (const Transformation& b : blocks_) {
    key += b.encode();
  }
  return key;
}

Transformation PartitionMap::flatten() const {
  const std::size_t m = block_count();
  const std::size_t n = block_size();
  std::vector<Transformation::point_type> im(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      im[i * n + j] =
          static_cast<Transformation::point_type>(base_[i] * n + blocks_[i][j]);
    }
  }
  return Transformation(std::move(im));
}

PartitionMap unflatten(const Transformation& t, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0 || t.degree() != m * n) {
    throw std::invalid_argument("degree is not m*n");
  }
  std::vector<Transformation::point_type> base(m);
  std::vector<Transformation> blocks;
  blocks.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t target = t[i * n] / n;
    std::vector<Transformation::point_type> local(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t image = t[i * n + j];
      if (image / n != target) {
        throw std::invalid_argument("map does not respect the partition");
      }
      local[j] = static_cast<Transformation::point_type>(image % n);
    }
    base[i] = static_cast<Transformation::point_type>(target);
    blocks.emplace_back(std::move(local));
  }
  return PartitionMap(Transformation(std::move(base)), std::move(blocks));
}

Membership classify(const PartitionMap& f) {
  Membership out;
  const bool base_identity = f.base().is_identity();
  const bool base_permutation = f.base().is_permutation();

  bool blocks_tame = true;       // every block identity or non-permutation
  bool blocks_permute = true;    // every block a permutation
  for (std::size_t i = 0; i < f.block_count(); ++i) {
    const Transformation& b = f.block(i);
    const bool perm = b.is_permutation();
    if (perm && !b.is_identity()) {
      blocks_tame = false;
    }
    if (!perm) {
      blocks_permute = false;
    }
  }

  out.local = base_identity && blocks_tame;
  out.collapsing = !base_permutation;
  out.permutational = !base_permutation && blocks_permute;
  out.generated = out.local || out.collapsing;
  return out;
}

void for_each_partition_map(
    std::size_t m, std::size_t n,
    const std::function<void(const PartitionMap&)>& fn) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("need m, n >= 1");
  }
  // m^m * n^(m*n) elements; keep the scan at desk scale.
  long double size =
      std::pow(static_cast<long double>(m), static_cast<long double>(m)) *
      std::pow(static_cast<long double>(n),
               static_cast<long double>(m) * static_cast<long double>(n));
  if (size > 2e7L) {
    throw std::invalid_argument("for_each_partition_map: ambient too large");
  }

  const std::vector<Transformation> bases = all_transformations(m);
  const std::vector<Transformation> locals = all_transformations(n);
  std::vector<std::size_t> pick(m, 0);
  std::vector<Transformation> blocks(m, locals.front());
  for (const Transformation& base : bases) {
    std::fill(pick.begin(), pick.end(), 0);
    std::fill(blocks.begin(), blocks.end(), locals.front());
    while (true) {
      fn(PartitionMap(base, blocks));
      std::size_t pos = m;
      bool rolled_over = true;
      while (pos > 0) {
        --pos;
        if (pick[pos] + 1 < locals.size()) {
          ++pick[pos];
          blocks[pos] = locals[pick[pos]];
          for (std::size_t k = pos + 1; k < m; ++k) {
            pick[k] = 0;
            blocks[k] = locals.front();
          }
          rolled_over = false;
          break;
        }
      }
      if (rolled_over) {
        break;
      }
    }
  }
}

std::vector<PartitionMap> all_partition_maps(std::size_t m, std::size_t n) {
  std::vector<PartitionMap> out;
  for_each_partition_map(m, n,
                         [&](const PartitionMap& f) { out.push_back(f); });
  return out;
}

std::vector<PartitionMap> all_partition_idempotents(std::size_t m,
                                                    std::size_t n) {
  std::vector<PartitionMap> out;
  for_each_partition_map(m, n, [&](const PartitionMap& f) {
    if (f.is_idempotent()) {
      out.push_back(f);
    }
  });
  return out;
}

std::size_t PartitionMapHash::operator()(
    const PartitionMap& f) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](const Transformation& t) {
    for (auto v : t.images()) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    h ^= 0xffU;
    h *= 1099511628211ULL;
  };
  mix(f.base());
  for (const Transformation& b : f.blocks()) {
    mix(b);
  }
  return h;
}

}  // namespace idemgen

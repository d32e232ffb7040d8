#include "idemgen/transformation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace idemgen {

namespace {

void check_degree(std::size_t n) {
  if (n > Transformation::max_degree) {
    throw std::invalid_argument("transformation degree exceeds " +
                                std::to_string(Transformation::max_degree));
  }
}

void check_point(std::size_t n, std::size_t x, const char* what) {
  if (x >= n) {
    throw std::invalid_argument(std::string(what) + " out of range for degree " +
                                std::to_string(n));
  }
}

}  // namespace

Transformation::Transformation(std::vector<point_type> images)
    : images_(std::move(images)) {
  check_degree(images_.size());
  for (point_type v : images_) {
    if (v >= images_.size()) {
      throw std::invalid_argument("image value out of range");
    }
  }
}

Transformation Transformation::identity(std::size_t degree) {
  check_degree(degree);
  std::vector<point_type> im(degree);
  std::iota(im.begin(), im.end(), point_type{0});
  return Transformation(std::move(im));
}

Transformation Transformation::eij(std::size_t degree, std::size_t i,
                                   std::size_t j) {
  check_point(degree, i, "point i");
  check_point(degree, j, "point j");
  if (i == j) {
    throw std::invalid_argument("eij requires i != j");
  }
  Transformation t = identity(degree);
  t.images_[j] = static_cast<point_type>(i);
  return t;
}

Transformation Transformation::constant(std::size_t degree, std::size_t value) {
  check_degree(degree);
  check_point(degree, value, "constant value");
  return Transformation(
      std::vector<point_type>(degree, static_cast<point_type>(value)));
}

std::size_t Transformation::rank() const {
  std::vector<bool> seen(degree(), false);
  std::size_t r = 0;
  for (point_type v : images_) {
    if (!seen[v]) {
      seen[v] = true;
      ++r;
    }
  }
  return r;
}

std::vector<bool> Transformation::image_mask() const {
  std::vector<bool> mask(degree(), false);
  for (point_type v : images_) {
    mask[v] = true;
  }
  return mask;
}

bool Transformation::is_idempotent() const {
  for (point_type v : images_) {
    if (images_[v] != v) {
      return false;
    }
  }
  return true;
}

bool Transformation::is_permutation() const { return rank() == degree(); }

bool Transformation::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x) {
    if (images_[x] != x) {
      return false;
    }
  }
  return true;
}

Transformation Transformation::inverse() const {
  if (!is_permutation()) {
    throw std::domain_error("inverse of a non-permutation");
  }
  std::vector<point_type> inv(degree());
  for (std::size_t x = 0; x < degree(); ++x) {
    inv[images_[x]] = static_cast<point_type>(x);
  }
  return Transformation(std::move(inv));
}

Transformation Transformation::operator*(const Transformation& rhs) const {
  if (degree() != rhs.degree()) {
    throw std::invalid_argument("degree mismatch in product");
  }
  std::vector<point_type> im(degree());
  for (std::size_t x = 0; x < degree(); ++x) {
    im[x] = rhs.images_[images_[x]];
  }
  return Transformation(std::move(im));
}

std::string Transformation::encode() const {
  return std::string(reinterpret_cast<const char*>(images_.data()),
                     images_.size());
}

std::vector<Transformation> all_transformations(std::size_t n) {
  if (n > 7) {
    throw std::invalid_argument("all_transformations: n too large (max 7)");
  }
  std::vector<Transformation> out;
  if (n == 0) {
    out.push_back(Transformation(std::vector<Transformation::point_type>{}));
    return out;
  }
  std::vector<Transformation::point_type> im(n, 0);
  while (true) {
    out.push_back(Transformation(im));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (static_cast<std::size_t>(im[pos]) + 1 < n) {
        ++im[pos];
        std::fill(im.begin() + static_cast<std::ptrdiff_t>(pos) + 1, im.end(),
                  Transformation::point_type{0});
        break;
      }
      if (pos == 0) {
        return out;
      }
    }
  }
}

std::vector<Transformation> all_idempotents(std::size_t n,
                                            std::optional<std::size_t> rank) {
  std::vector<Transformation> out;
  for (const Transformation& t : all_transformations(n)) {
    if (t.is_idempotent() && (!rank || t.rank() == *rank)) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<Transformation> symmetric_group(std::size_t n) {
  if (n > 8) {
    throw std::invalid_argument("symmetric_group: n too large (max 8)");
  }
  std::vector<Transformation::point_type> im(n);
  std::iota(im.begin(), im.end(), Transformation::point_type{0});
  std::vector<Transformation> out;
  do {
    out.push_back(Transformation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::size_t TransformationHash::operator()(
    const Transformation& t) const noexcept {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ULL;
  for (auto v : t.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace idemgen

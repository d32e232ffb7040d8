#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace idemgen {

//! A total map on {0, ..., degree - 1}, stored as its image list (0-based).
//!
//! Maps act on the right and compose left to right: x(f * g) = (x f) g.
//! Human-facing serialization renders points 1-based; see serialization.hpp.
class Transformation {
 public:
  using point_type = std::uint8_t;
  static constexpr std::size_t max_degree = 255;

  explicit Transformation(std::vector<point_type> images);

  static Transformation identity(std::size_t degree);
  //! The idempotent sending j to i and fixing every other point (i != j).
  static Transformation eij(std::size_t degree, std::size_t i, std::size_t j);
  static Transformation constant(std::size_t degree, std::size_t value);

  std::size_t degree() const noexcept { return images_.size(); }
  point_type operator[](std::size_t x) const { return images_[x]; }
  const std::vector<point_type>& images() const noexcept { return images_; }

  std::size_t rank() const;
  std::vector<bool> image_mask() const;

  //! True iff the map fixes its image pointwise (equivalently f * f == f).
  bool is_idempotent() const;
  bool is_permutation() const;
  bool is_identity() const;
  Transformation inverse() const;  // requires is_permutation()

  Transformation operator*(const Transformation& rhs) const;

  bool operator==(const Transformation&) const = default;
  auto operator<=>(const Transformation&) const = default;

  //! Compact byte key, injective among maps of equal degree.
  std::string encode() const;

 private:
  std::vector<point_type> images_;
};

//! All n^n maps of degree n, ordered by image list. Guarded to small n.
std::vector<Transformation> all_transformations(std::size_t n);

//! All idempotents of degree n, optionally restricted to a given rank.
std::vector<Transformation> all_idempotents(std::size_t n,
                                            std::optional<std::size_t> rank = {});

//! All n! permutations of degree n, ordered by image list.
std::vector<Transformation> symmetric_group(std::size_t n);

inline Transformation identity_of(const Transformation& t) {
  return Transformation::identity(t.degree());
}

inline bool compatible(const Transformation& a, const Transformation& b) {
  return a.degree() == b.degree();
}

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

}  // namespace idemgen

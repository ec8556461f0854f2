#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "coverforge/errors.hpp"

namespace coverforge {

using Point = std::uint16_t;

constexpr unsigned kMaxDegree = 4096;

// A permutation of {0,...,degree-1} in image-array form.
class Perm {
 public:
  Perm() = default;

  static Perm identity(unsigned degree);

  // Takes the image array; validates that it is a bijection.
  explicit Perm(std::vector<Point> images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  Point operator[](Point x) const { return images_[x]; }

  std::span<const Point> images() const { return images_; }

  bool is_identity() const;

  // x^(a*b) = (x^a)^b: apply *this first, then rhs.
  Perm operator*(const Perm& rhs) const;

  Perm inverse() const;

  // Conjugate g^h = h^-1 g h.
  Perm conjugated_by(const Perm& h) const;

  // Order as an element of the symmetric group (lcm of cycle lengths).
  unsigned long long order() const;

  bool operator==(const Perm& rhs) const { return images_ == rhs.images_; }
  std::strong_ordering operator<=>(const Perm& rhs) const {
    return images_ <=> rhs.images_;
  }

  std::size_t hash() const;

  // Same permutation acting on a larger domain (new points are fixed).
  Perm extended(unsigned new_degree) const;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace coverforge

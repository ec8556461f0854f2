#include "coverforge/perm.hpp"

#include <numeric>

namespace coverforge {

Perm Perm::identity(unsigned degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw InvalidParameter("permutation degree out of range");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Perm(std::move(img));
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxDegree)
    throw InvalidParameter("permutation degree out of range");
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw InvalidParameter("image array is not a bijection");
    seen[y] = true;
  }
}

bool Perm::is_identity() const {
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw DegreeMismatch("cannot compose permutations of different degree");
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[x] = rhs.images_[images_[x]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (Point x = 0; x < images_.size(); ++x) out.images_[images_[x]] = x;
  return out;
}

Perm Perm::conjugated_by(const Perm& h) const {
  return h.inverse() * (*this) * h;
}

unsigned long long Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  unsigned long long ord = 1;
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    unsigned long long len = 0;
    Point y = x;
    do {
      seen[y] = true;
      y = images_[y];
      ++len;
    } while (y != x);
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t Perm::hash() const {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (Point y : images_) {
    h ^= static_cast<std::size_t>(y);
    h *= 1099511628211ull;
  }
  return h;
}

Perm Perm::extended(unsigned new_degree) const {
  if (new_degree < degree())
    throw InvalidParameter("cannot shrink permutation domain");
  std::vector<Point> img(images_.begin(), images_.end());
  img.resize(new_degree);
  for (unsigned x = degree(); x < new_degree; ++x) img[x] = static_cast<Point>(x);
  return Perm(std::move(img));
}

}  // namespace coverforge

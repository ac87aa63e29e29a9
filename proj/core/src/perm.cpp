#include "skewmaps/perm.hpp"

#include <numeric>

#include "skewmaps/error.hpp"

namespace skewmaps {

bool is_bijection(std::span<const Elem> images) {
  std::vector<char> seen(images.size(), 0);
  for (Elem e : images) {
    if (e < 0 || static_cast<std::size_t>(e) >= images.size() || seen[e]) return false;
    seen[e] = 1;
  }
  return true;
}

Perm::Perm(std::vector<Elem> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) throw InvalidArgument("permutation images are not a bijection");
}

Perm Perm::identity(int size) {
  std::vector<Elem> img(static_cast<std::size_t>(size));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img), Unchecked{});
}

Perm operator*(const Perm& f, const Perm& g) {
  std::vector<Elem> img(g.images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = f.images_[g.images_[i]];
  return Perm(std::move(img), Perm::Unchecked{});
}

Perm Perm::inverse() const {
  std::vector<Elem> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[images_[i]] = static_cast<Elem>(i);
  return Perm(std::move(img), Unchecked{});
}

Perm Perm::pow(long long k) const {
  const long long ord = order();
  k %= ord;
  if (k < 0) k += ord;
  std::vector<Elem> img(images_.size());
  // Walk each cycle once instead of repeated squaring.
  for (const auto& cyc : cycles()) {
    const auto len = static_cast<long long>(cyc.size());
    for (long long i = 0; i < len; ++i) img[cyc[i]] = cyc[(i + k) % len];
  }
  return Perm(std::move(img), Unchecked{});
}

long long Perm::order() const {
  long long ord = 1;
  for (const auto& cyc : cycles()) ord = std::lcm(ord, static_cast<long long>(cyc.size()));
  return ord;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<Elem>(i)) return false;
  return true;
}

std::vector<std::vector<Elem>> Perm::cycles() const {
  std::vector<std::vector<Elem>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Elem> cyc;
    for (Elem x = static_cast<Elem>(s); !seen[x]; x = images_[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace skewmaps

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace skewmaps {

// Element index into a specific group; index 0 is always the identity.
using Elem = std::int32_t;
inline constexpr Elem kIdentity = 0;

// A permutation of {0, ..., size-1}. Composition follows function notation:
// (f * g)(x) = f(g(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Elem> images);  // throws InvalidArgument unless bijective

  static Perm identity(int size);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  Elem operator()(Elem x) const { return images_[static_cast<std::size_t>(x)]; }
  std::span<const Elem> images() const noexcept { return images_; }

  Perm inverse() const;
  Perm pow(long long k) const;
  // Order in the symmetric group (lcm of cycle lengths).
  long long order() const;
  bool is_identity() const;
  std::vector<std::vector<Elem>> cycles() const;

  friend Perm operator*(const Perm& f, const Perm& g);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  struct Unchecked {};
  Perm(std::vector<Elem> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Elem> images_;
};

bool is_bijection(std::span<const Elem> images);

}  // namespace skewmaps

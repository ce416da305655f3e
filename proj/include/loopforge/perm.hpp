#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace loopforge {

/// A permutation of {0, ..., degree-1}, acting on the right: the image of a
/// point p is g[p], and (g * h)[p] = h[g[p]] (apply g first, then h).  This
/// matches the translation convention y R_x = y*x used throughout.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<int> images);

  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int p) const { return img_[static_cast<std::size_t>(p)]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;

  bool is_identity() const;
  /// Smallest moved point, or -1 for the identity.
  int first_moved() const;
  /// Order as lcm of cycle lengths.
  std::uint64_t order() const;

  std::string to_cycle_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

inline Perm conjugate(const Perm& g, const Perm& h) { return h.inverse() * g * h; }
inline Perm commutator(const Perm& a, const Perm& b) {
  return a.inverse() * b.inverse() * a * b;
}

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace loopforge

#include "loopforge/perm.hpp"

#include <algorithm>
#include <numeric>

#include "loopforge/errors.hpp"

namespace loopforge {

Perm::Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      fail(Errc::internal_inconsistency, "permutation images are not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree)
        fail(Errc::internal_inconsistency, "cycle point out of range");
      p.img_[static_cast<std::size_t>(from)] = to;
    }
  }
  return Perm(std::move(p.img_));  // re-validate
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    fail(Errc::degree_mismatch, "composing permutations of different degree");
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out[i] = rhs.img_[static_cast<std::size_t>(img_[i])];
  Perm p;
  p.img_ = std::move(out);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  Perm p;
  p.img_ = std::move(out);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

int Perm::first_moved() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return static_cast<int>(i);
  return -1;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace loopforge

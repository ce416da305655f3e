#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "loopforge/perm.hpp"

namespace loopforge {

/// Global cap on loop orders accepted by LoopTable construction.  Defaults to
/// 1024; override with the LOOPFORGE_MAX_ORDER environment variable.
int max_loop_order();

/// A finite loop given by its Cayley table.  Elements are 0-based indices;
/// the 1-based labelling of table files is converted at the I/O boundary.
/// Immutable after construction; all member functions are const and safe to
/// call concurrently.
class LoopTable {
 public:
  /// Validates that every row and column is a permutation (Latin square) and
  /// that a two-sided identity exists; the identity is located by scanning,
  /// not assumed to be element 0.
  static LoopTable from_cells(int n, std::vector<int> cells);
  static LoopTable from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int identity() const { return identity_; }

  int mul(int x, int y) const { return cells_[idx(x, y)]; }
  /// Unique z with x*z = y.
  int ldiv(int x, int y) const { return ldiv_[idx(x, y)]; }
  /// Unique z with z*y = x.
  int rdiv(int x, int y) const { return rdiv_[idx(x, y)]; }

  /// y -> y*x (column x of the table).
  Perm right_translation(int x) const;
  /// y -> x*y (row x of the table).
  Perm left_translation(int x) const;

  /// x^k = identity * R_x^k; negative k uses the inverse translation.
  int power(int x, std::int64_t k) const;
  int inverse_of(int x) const { return power(x, -1); }
  int element_order(int x) const;
  /// lcm of all element orders.
  int exponent() const;

  /// Unique square root; requires the squaring map to be a bijection.
  /// Throws not_uniquely_2_divisible otherwise.
  int sqrt_of(int x) const;

  /// Transposed table (swaps left and right Bol).
  LoopTable opposite() const;

  std::span<const int> row(int x) const {
    return {cells_.data() + static_cast<std::size_t>(x) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const LoopTable&, const LoopTable&) = default;

 private:
  LoopTable() = default;
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(y);
  }

  int n_ = 0;
  int identity_ = 0;
  std::vector<int> cells_;
  std::vector<int> ldiv_;
  std::vector<int> rdiv_;
};

bool is_right_bol(const LoopTable& L);
bool is_left_bol(const LoopTable& L);
bool has_aip(const LoopTable& L);
bool has_aaip(const LoopTable& L);
bool is_moufang(const LoopTable& L);       // right Bol + AAIP
bool is_bruck(const LoopTable& L);         // right Bol + AIP
bool is_associative(const LoopTable& L);
bool is_commutative(const LoopTable& L);
bool is_power_associative(const LoopTable& L);
bool is_right_power_alternative(const LoopTable& L);
bool is_uniquely_2_divisible(const LoopTable& L);

struct PropertyFlags {
  bool right_bol = false;
  bool left_bol = false;
  bool moufang = false;
  bool bruck = false;
  bool aip = false;
  bool aaip = false;
  bool associative = false;
  bool commutative = false;
  bool power_associative = false;
  bool right_power_alternative = false;
  bool uniquely_2_divisible = false;
  int exponent = 1;

  static PropertyFlags of(const LoopTable& L);
};

LoopTable direct_product(const LoopTable& a, const LoopTable& b);

}  // namespace loopforge

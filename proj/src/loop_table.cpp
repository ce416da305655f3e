#include "loopforge/loop_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "loopforge/errors.hpp"

namespace loopforge {

int max_loop_order() {
  static const int cap = [] {
    if (const char* env = std::getenv("LOOPFORGE_MAX_ORDER")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 1024;
  }();
  return cap;
}

LoopTable LoopTable::from_cells(int n, std::vector<int> cells) {
  if (n <= 0) fail(Errc::bad_dimensions, "loop order must be positive");
  if (n > max_loop_order())
    fail(Errc::order_cap_exceeded,
         "order " + std::to_string(n) + " exceeds cap " + std::to_string(max_loop_order()));
  if (cells.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    fail(Errc::bad_dimensions, "table is not n x n");

  LoopTable L;
  L.n_ = n;
  L.cells_ = std::move(cells);

  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      int v = L.cells_[L.idx(x, y)];
      if (v < 0 || v >= n)
        fail(Errc::not_latin_square, "entry out of range in row " + std::to_string(x + 1));
      if (seen[static_cast<std::size_t>(v)])
        fail(Errc::not_latin_square, "repeated symbol in row " + std::to_string(x + 1));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n; ++x) {
      int v = L.cells_[L.idx(x, y)];
      if (seen[static_cast<std::size_t>(v)])
        fail(Errc::not_latin_square, "repeated symbol in column " + std::to_string(y + 1));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  int ident = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = L.cells_[L.idx(e, x)] == x && L.cells_[L.idx(x, e)] == x;
    if (ok) {
      ident = e;
      break;
    }
  }
  if (ident < 0) fail(Errc::no_identity, "no two-sided identity element");
  L.identity_ = ident;

  L.ldiv_.resize(L.cells_.size());
  L.rdiv_.resize(L.cells_.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int z = L.cells_[L.idx(x, y)];
      L.ldiv_[L.idx(x, z)] = y;  // x*y = z  =>  x \ z = y
      L.rdiv_[L.idx(z, y)] = x;  //          =>  z / y = x
    }
  return L;
}

LoopTable LoopTable::from_rows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      fail(Errc::bad_dimensions, "row length does not match number of rows");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return from_cells(n, std::move(cells));
}

Perm LoopTable::right_translation(int x) const {
  std::vector<int> img(static_cast<std::size_t>(n_));
  for (int y = 0; y < n_; ++y) img[static_cast<std::size_t>(y)] = mul(y, x);
  return Perm(std::move(img));
}

Perm LoopTable::left_translation(int x) const {
  std::vector<int> img(static_cast<std::size_t>(n_));
  for (int y = 0; y < n_; ++y) img[static_cast<std::size_t>(y)] = mul(x, y);
  return Perm(std::move(img));
}

int LoopTable::power(int x, std::int64_t k) const {
  int v = identity_;
  if (k >= 0) {
    for (std::int64_t i = 0; i < k; ++i) v = mul(v, x);
  } else {
    for (std::int64_t i = 0; i < -k; ++i) v = rdiv(v, x);  // apply R_x^{-1}
  }
  return v;
}

int LoopTable::element_order(int x) const {
  int k = 1;
  int v = x;
  while (v != identity_) {
    v = mul(v, x);
    ++k;
  }
  return k;
}

int LoopTable::exponent() const {
  std::int64_t e = 1;
  for (int x = 0; x < n_; ++x) e = std::lcm(e, static_cast<std::int64_t>(element_order(x)));
  return static_cast<int>(e);
}

int LoopTable::sqrt_of(int x) const {
  if (!is_uniquely_2_divisible(*this))
    fail(Errc::not_uniquely_2_divisible, "squaring map is not a bijection");
  for (int y = 0; y < n_; ++y)
    if (mul(y, y) == x) return y;
  fail(Errc::internal_inconsistency, "bijective squaring map missed a preimage");
}

LoopTable LoopTable::opposite() const {
  std::vector<int> cells(cells_.size());
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) cells[idx(y, x)] = cells_[idx(x, y)];
  return from_cells(n_, std::move(cells));
}

std::vector<std::vector<int>> LoopTable::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) out[static_cast<std::size_t>(x)].assign(row(x).begin(), row(x).end());
  return out;
}

bool is_right_bol(const LoopTable& L) {
  int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.mul(L.mul(L.mul(x, y), z), y) != L.mul(x, L.mul(L.mul(y, z), y)))
          return false;
  return true;
}

bool is_left_bol(const LoopTable& L) {
  int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.mul(x, L.mul(y, L.mul(x, z))) != L.mul(L.mul(x, L.mul(y, x)), z))
          return false;
  return true;
}

namespace {

std::vector<int> inverse_map(const LoopTable& L) {
  std::vector<int> inv(static_cast<std::size_t>(L.size()));
  for (int x = 0; x < L.size(); ++x) inv[static_cast<std::size_t>(x)] = L.inverse_of(x);
  return inv;
}

}  // namespace

bool has_aip(const LoopTable& L) {
  auto inv = inverse_map(L);
  int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (inv[static_cast<std::size_t>(L.mul(x, y))] !=
          L.mul(inv[static_cast<std::size_t>(x)], inv[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

bool has_aaip(const LoopTable& L) {
  auto inv = inverse_map(L);
  int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (inv[static_cast<std::size_t>(L.mul(x, y))] !=
          L.mul(inv[static_cast<std::size_t>(y)], inv[static_cast<std::size_t>(x)]))
        return false;
  return true;
}

bool is_moufang(const LoopTable& L) { return is_right_bol(L) && has_aaip(L); }
bool is_bruck(const LoopTable& L) { return is_right_bol(L) && has_aip(L); }

bool is_associative(const LoopTable& L) {
  int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.mul(L.mul(x, y), z) != L.mul(x, L.mul(y, z))) return false;
  return true;
}

bool is_commutative(const LoopTable& L) {
  int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (L.mul(x, y) != L.mul(y, x)) return false;
  return true;
}

bool is_power_associative(const LoopTable& L) {
  // x^m x^n = x^{m+n} for all integers m, n.  e*R_x^k is periodic in k with
  // period ord(x), so every integer power (negatives included) equals some
  // pw[a] with a in [0, ord), and it suffices to scan that range.
  int n = L.size();
  for (int x = 0; x < n; ++x) {
    int ord = L.element_order(x);
    std::vector<int> pw(static_cast<std::size_t>(2 * ord));
    pw[0] = L.identity();
    for (int k = 1; k < 2 * ord; ++k)
      pw[static_cast<std::size_t>(k)] = L.mul(pw[static_cast<std::size_t>(k - 1)], x);
    for (int m = 0; m < ord; ++m)
      for (int k = 0; k < ord; ++k)
        if (L.mul(pw[static_cast<std::size_t>(m)], pw[static_cast<std::size_t>(k)]) !=
            pw[static_cast<std::size_t>(m + k)])
          return false;
  }
  return true;
}

bool is_right_power_alternative(const LoopTable& L) {
  // R_x^n = R_{x^n} for all n; powers of R_x cycle with period ord(x), and
  // negative n follow from positive ones, so scan n in 0..ord.
  int n = L.size();
  for (int x = 0; x < n; ++x) {
    int ord = L.element_order(x);
    Perm rx = L.right_translation(x);
    Perm acc(n);
    for (int k = 0; k <= ord; ++k) {
      if (acc != L.right_translation(L.power(x, k))) return false;
      acc = acc * rx;
    }
  }
  return true;
}

bool is_uniquely_2_divisible(const LoopTable& L) {
  int n = L.size();
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int sq = L.mul(x, x);
    if (hit[static_cast<std::size_t>(sq)]) return false;
    hit[static_cast<std::size_t>(sq)] = 1;
  }
  return true;
}

PropertyFlags PropertyFlags::of(const LoopTable& L) {
  PropertyFlags f;
  f.right_bol = is_right_bol(L);
  f.left_bol = is_left_bol(L);
  f.aip = has_aip(L);
  f.aaip = has_aaip(L);
  f.moufang = f.right_bol && f.aaip;
  f.bruck = f.right_bol && f.aip;
  f.associative = is_associative(L);
  f.commutative = is_commutative(L);
  f.power_associative = is_power_associative(L);
  f.right_power_alternative = is_right_power_alternative(L);
  f.uniquely_2_divisible = is_uniquely_2_divisible(L);
  f.exponent = L.exponent();
  if (f.right_bol) {
    // In a Bol loop the two one-sided inverses coincide; certify rather
    // than assume.
    for (int x = 0; x < L.size(); ++x)
      if (L.mul(x, L.power(x, -1)) != L.identity() ||
          L.mul(L.power(x, -1), x) != L.identity())
        fail(Errc::internal_inconsistency, "one-sided inverses differ in a Bol loop");
  }
  return f;
}

LoopTable direct_product(const LoopTable& a, const LoopTable& b) {
  int na = a.size(), nb = b.size();
  int n = na * nb;
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  auto pack = [nb](int x, int y) { return x * nb + y; };
  for (int xa = 0; xa < na; ++xa)
    for (int xb = 0; xb < nb; ++xb)
      for (int ya = 0; ya < na; ++ya)
        for (int yb = 0; yb < nb; ++yb)
          cells[static_cast<std::size_t>(pack(xa, xb)) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(pack(ya, yb))] =
              pack(a.mul(xa, ya), b.mul(xb, yb));
  return LoopTable::from_cells(n, std::move(cells));
}

}  // namespace loopforge

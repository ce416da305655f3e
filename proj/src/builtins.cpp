#include "loopforge/builtins.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>

#include "loopforge/errors.hpp"
#include "loopforge/perm.hpp"

namespace loopforge {

namespace {

LoopTable from_1based(int n, const int* cells) {
  std::vector<int> c(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = cells[i] - 1;
  return LoopTable::from_cells(n, std::move(c));
}

LoopTable alternating4() {
  // All even permutations of 4 points, in lexicographic order of their image
  // vectors; cell (i,j) is the composition "apply i, then j".
  std::vector<Perm> elems;
  std::vector<int> im{0, 1, 2, 3};
  do {
    Perm p{std::vector<int>(im)};
    int inv = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (im[static_cast<std::size_t>(a)] > im[static_cast<std::size_t>(b)]) ++inv;
    if (inv % 2 == 0) elems.push_back(std::move(p));
  } while (std::next_permutation(im.begin(), im.end()));

  int n = static_cast<int>(elems.size());
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Perm prod = elems[static_cast<std::size_t>(i)] * elems[static_cast<std::size_t>(j)];
      auto it = std::find(elems.begin(), elems.end(), prod);
      cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
          static_cast<int>(it - elems.begin());
    }
  return LoopTable::from_cells(n, std::move(cells));
}

}  // namespace

LoopTable cyclic_group(int n) {
  if (n < 1) fail(Errc::bad_dimensions, "cyclic group order must be positive");
  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = (i + j) % n;
  return LoopTable::from_cells(n, std::move(cells));
}

LoopTable abelian_group(const std::vector<int>& factors) {
  if (factors.empty()) return cyclic_group(1);  // the empty product
  LoopTable L = cyclic_group(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) L = direct_product(L, cyclic_group(factors[i]));
  return L;
}

LoopTable metacyclic_group(int q, int p, int r) {
  if (q < 1 || p < 1 || r < 0) fail(Errc::bad_dimensions, "bad metacyclic parameters");
  // r^p must be 1 mod q, otherwise the multiplication below is not associative.
  long long rp = 1;
  for (int k = 0; k < p; ++k) rp = (rp * r) % q;
  if (rp % q != 1 % q) fail(Errc::construction_failed, "metacyclic parameters violate r^p = 1 (mod q)");

  int n = q * p;
  std::vector<long long> rpow(static_cast<std::size_t>(p));
  rpow[0] = 1 % q;
  for (int j = 1; j < p; ++j) rpow[static_cast<std::size_t>(j)] = (rpow[static_cast<std::size_t>(j - 1)] * r) % q;

  std::vector<int> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < q; ++k)
        for (int l = 0; l < p; ++l) {
          // (a^i b^j)(a^k b^l) = a^{i + k r^j} b^{j+l}
          int a = static_cast<int>((i + k * rpow[static_cast<std::size_t>(j)]) % q);
          int b = (j + l) % p;
          int x = i + q * j, y = k + q * l;
          cells[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] = a + q * b;
        }
  return LoopTable::from_cells(n, std::move(cells));
}

LoopTable heisenberg3() {
  int n = 27;
  auto idx = [](int a, int b, int c) { return 9 * a + 3 * b + c; };
  std::vector<int> cells(27 * 27);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2)
              cells[static_cast<std::size_t>(idx(a, b, c)) * 27 + static_cast<std::size_t>(idx(a2, b2, c2))] =
                  idx((a + a2) % 3, (b + b2) % 3, (c + c2 + a * b2) % 3);
  return LoopTable::from_cells(n, std::move(cells));
}

std::vector<std::vector<int>> abelian_factorizations(int n) {
  if (n < 1) fail(Errc::bad_dimensions, "order must be positive");
  // Prime factorization, then one exponent partition per prime.
  std::map<int, int> pe;
  int m = n;
  for (int p = 2; p * p <= m; ++p)
    while (m % p == 0) {
      ++pe[p];
      m /= p;
    }
  if (m > 1) ++pe[m];

  std::vector<std::vector<int>> lists{{}};
  for (auto [p, e] : pe) {
    // Partitions of e, descending parts, lexicographically.
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
      if (left == 0) {
        parts.push_back(cur);
        return;
      }
      for (int k = std::min(left, maxpart); k >= 1; --k) {
        cur.push_back(k);
        self(self, left - k, k);
        cur.pop_back();
      }
    };
    rec(rec, e, e);

    std::vector<std::vector<int>> next;
    for (const auto& base : lists)
      for (const auto& part : parts) {
        std::vector<int> ext = base;
        for (int k : part) {
          int f = 1;
          for (int t = 0; t < k; ++t) f *= p;
          ext.push_back(f);
        }
        next.push_back(std::move(ext));
      }
    lists = std::move(next);
  }
  return lists;
}

std::vector<std::string> builtin_names() {
  return {"a4",  "c2",  "c2c2", "c3",  "c3c3", "c4",  "c5",     "c6",     "c7",
          "c8",  "c9",  "c27",  "d4",  "g21",  "g39", "g55",    "heis27", "s3",
          "table1", "table2"};
}

LoopTable builtin_table(const std::string& name) {
  if (name == "table1") return from_1based(27, detail::kTable1Cells);
  if (name == "table2") return from_1based(27, detail::kTable2Cells);
  if (name == "c2") return cyclic_group(2);
  if (name == "c3") return cyclic_group(3);
  if (name == "c4") return cyclic_group(4);
  if (name == "c5") return cyclic_group(5);
  if (name == "c6") return cyclic_group(6);
  if (name == "c7") return cyclic_group(7);
  if (name == "c8") return cyclic_group(8);
  if (name == "c9") return cyclic_group(9);
  if (name == "c27") return cyclic_group(27);
  if (name == "c2c2") return abelian_group({2, 2});
  if (name == "c3c3") return abelian_group({3, 3});
  if (name == "s3") return metacyclic_group(3, 2, 2);
  if (name == "d4") return metacyclic_group(4, 2, 3);
  if (name == "a4") return alternating4();
  if (name == "g21") return metacyclic_group(7, 3, 2);
  if (name == "g39") return metacyclic_group(13, 3, 3);
  if (name == "g55") return metacyclic_group(11, 5, 3);
  if (name == "heis27") return heisenberg3();
  fail(Errc::unknown_dataset, "no builtin named '" + name + "'");
}

}  // namespace loopforge

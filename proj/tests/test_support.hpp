#pragma once

#include <algorithm>
#include <vector>

#include <doctest.h>

#include "loopforge/errors.hpp"
#include "loopforge/loop_table.hpp"

// Checks that `expr` throws LoopError carrying exactly `errc`.
#define CHECK_LOOP_ERROR(expr, errc)                                   \
  do {                                                                 \
    bool caught_ = false;                                              \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const loopforge::LoopError& e_) {                         \
      caught_ = true;                                                  \
      CHECK_MESSAGE(e_.code() == (errc), #expr " threw ", e_.what());  \
    }                                                                  \
    CHECK_MESSAGE(caught_, #expr " did not throw");                    \
  } while (0)

namespace testutil {

// A hand-made order-5 loop: nonassociative, noncommutative, neither Bol
// identity holds, every element squares to the identity (exponent 2).
inline loopforge::LoopTable order5_loop() {
  return loopforge::LoopTable::from_rows({{0, 1, 2, 3, 4},
                                          {1, 0, 3, 4, 2},
                                          {2, 4, 0, 1, 3},
                                          {3, 2, 4, 0, 1},
                                          {4, 3, 1, 2, 0}});
}

inline std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<int> iota_n(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace testutil

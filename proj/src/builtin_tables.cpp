#include "loopforge/builtins.hpp"

namespace loopforge {
namespace detail {

// 27 x 27 Cayley tables, 1-based entries, row-major.

const int kTable1Cells[27 * 27] = {
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27,
    2, 3, 1, 5, 6, 4, 8, 9, 7, 15, 13, 14, 18, 16, 17, 12, 10, 11, 22, 23, 24, 25, 26, 27, 19, 20, 21,
    3, 1, 2, 6, 4, 5, 9, 7, 8, 17, 18, 16, 11, 12, 10, 14, 15, 13, 25, 26, 27, 19, 20, 21, 22, 23, 24,
    4, 5, 6, 7, 8, 9, 1, 2, 3, 14, 15, 13, 17, 18, 16, 11, 12, 10, 26, 27, 25, 20, 21, 19, 23, 24, 22,
    5, 6, 4, 8, 9, 7, 2, 3, 1, 16, 17, 18, 10, 11, 12, 13, 14, 15, 20, 21, 19, 23, 24, 22, 26, 27, 25,
    6, 4, 5, 9, 7, 8, 3, 1, 2, 12, 10, 11, 15, 13, 14, 18, 16, 17, 23, 24, 22, 26, 27, 25, 20, 21, 19,
    7, 8, 9, 1, 2, 3, 4, 5, 6, 18, 16, 17, 12, 10, 11, 15, 13, 14, 24, 22, 23, 27, 25, 26, 21, 19, 20,
    8, 9, 7, 2, 3, 1, 5, 6, 4, 11, 12, 10, 14, 15, 13, 17, 18, 16, 27, 25, 26, 21, 19, 20, 24, 22, 23,
    9, 7, 8, 3, 1, 2, 6, 4, 5, 13, 14, 15, 16, 17, 18, 10, 11, 12, 21, 19, 20, 24, 22, 23, 27, 25, 26,
    10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 21, 20, 25, 27, 26, 22, 24, 23, 1, 3, 2, 7, 9, 8, 4, 6, 5,
    11, 12, 10, 14, 15, 13, 17, 18, 16, 27, 26, 25, 24, 23, 22, 21, 20, 19, 8, 7, 9, 5, 4, 6, 2, 1, 3,
    12, 10, 11, 15, 13, 14, 18, 16, 17, 23, 22, 24, 20, 19, 21, 26, 25, 27, 6, 5, 4, 3, 2, 1, 9, 8, 7,
    13, 14, 15, 16, 17, 18, 10, 11, 12, 21, 20, 19, 27, 26, 25, 24, 23, 22, 9, 8, 7, 6, 5, 4, 3, 2, 1,
    14, 15, 13, 17, 18, 16, 11, 12, 10, 26, 25, 27, 23, 22, 24, 20, 19, 21, 4, 6, 5, 1, 3, 2, 7, 9, 8,
    15, 13, 14, 18, 16, 17, 12, 10, 11, 22, 24, 23, 19, 21, 20, 25, 27, 26, 2, 1, 3, 8, 7, 9, 5, 4, 6,
    16, 17, 18, 10, 11, 12, 13, 14, 15, 20, 19, 21, 26, 25, 27, 23, 22, 24, 5, 4, 6, 2, 1, 3, 8, 7, 9,
    17, 18, 16, 11, 12, 10, 14, 15, 13, 25, 27, 26, 22, 24, 23, 19, 21, 20, 3, 2, 1, 9, 8, 7, 6, 5, 4,
    18, 16, 17, 12, 10, 11, 15, 13, 14, 24, 23, 22, 21, 20, 19, 27, 26, 25, 7, 9, 8, 4, 6, 5, 1, 3, 2,
    19, 20, 21, 22, 23, 24, 25, 26, 27, 1, 7, 4, 6, 3, 9, 8, 5, 2, 10, 18, 14, 12, 17, 13, 11, 16, 15,
    20, 21, 19, 23, 24, 22, 26, 27, 25, 5, 2, 8, 7, 4, 1, 3, 9, 6, 16, 15, 11, 18, 14, 10, 17, 13, 12,
    21, 19, 20, 24, 22, 23, 27, 25, 26, 9, 6, 3, 2, 8, 5, 4, 1, 7, 13, 12, 17, 15, 11, 16, 14, 10, 18,
    22, 23, 24, 25, 26, 27, 19, 20, 21, 2, 8, 5, 4, 1, 7, 9, 6, 3, 15, 11, 16, 14, 10, 18, 13, 12, 17,
    23, 24, 22, 26, 27, 25, 20, 21, 19, 6, 3, 9, 8, 5, 2, 1, 7, 4, 12, 17, 13, 11, 16, 15, 10, 18, 14,
    24, 22, 23, 27, 25, 26, 21, 19, 20, 7, 4, 1, 3, 9, 6, 5, 2, 8, 18, 14, 10, 17, 13, 12, 16, 15, 11,
    25, 26, 27, 19, 20, 21, 22, 23, 24, 3, 9, 6, 5, 2, 8, 7, 4, 1, 17, 13, 12, 16, 15, 11, 18, 14, 10,
    26, 27, 25, 20, 21, 19, 23, 24, 22, 4, 1, 7, 9, 6, 3, 2, 8, 5, 14, 10, 18, 13, 12, 17, 15, 11, 16,
    27, 25, 26, 21, 19, 20, 24, 22, 23, 8, 5, 2, 1, 7, 4, 6, 3, 9, 11, 16, 15, 10, 18, 14, 12, 17, 13,
};

const int kTable2Cells[27 * 27] = {
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27,
    2, 3, 1, 5, 6, 4, 8, 9, 7, 15, 13, 14, 18, 16, 17, 12, 10, 11, 22, 23, 24, 25, 26, 27, 19, 20, 21,
    3, 1, 2, 6, 4, 5, 9, 7, 8, 17, 18, 16, 11, 12, 10, 14, 15, 13, 25, 26, 27, 19, 20, 21, 22, 23, 24,
    4, 5, 6, 7, 8, 9, 1, 2, 3, 14, 15, 13, 17, 18, 16, 11, 12, 10, 26, 27, 25, 20, 21, 19, 23, 24, 22,
    5, 6, 4, 8, 9, 7, 2, 3, 1, 16, 17, 18, 10, 11, 12, 13, 14, 15, 20, 21, 19, 23, 24, 22, 26, 27, 25,
    6, 4, 5, 9, 7, 8, 3, 1, 2, 12, 10, 11, 15, 13, 14, 18, 16, 17, 23, 24, 22, 26, 27, 25, 20, 21, 19,
    7, 8, 9, 1, 2, 3, 4, 5, 6, 18, 16, 17, 12, 10, 11, 15, 13, 14, 24, 22, 23, 27, 25, 26, 21, 19, 20,
    8, 9, 7, 2, 3, 1, 5, 6, 4, 11, 12, 10, 14, 15, 13, 17, 18, 16, 27, 25, 26, 21, 19, 20, 24, 22, 23,
    9, 7, 8, 3, 1, 2, 6, 4, 5, 13, 14, 15, 16, 17, 18, 10, 11, 12, 21, 19, 20, 24, 22, 23, 27, 25, 26,
    10, 14, 18, 11, 15, 16, 12, 13, 17, 19, 20, 21, 22, 23, 24, 25, 26, 27, 1, 4, 7, 8, 2, 5, 6, 9, 3,
    11, 15, 16, 12, 13, 17, 10, 14, 18, 27, 25, 26, 21, 19, 20, 24, 22, 23, 8, 2, 5, 6, 9, 3, 1, 4, 7,
    12, 13, 17, 10, 14, 18, 11, 15, 16, 23, 24, 22, 26, 27, 25, 20, 21, 19, 6, 9, 3, 1, 4, 7, 8, 2, 5,
    13, 17, 12, 14, 18, 10, 15, 16, 11, 21, 19, 20, 24, 22, 23, 27, 25, 26, 9, 3, 6, 4, 7, 1, 2, 5, 8,
    14, 18, 10, 15, 16, 11, 13, 17, 12, 26, 27, 25, 20, 21, 19, 23, 24, 22, 4, 7, 1, 2, 5, 8, 9, 3, 6,
    15, 16, 11, 13, 17, 12, 14, 18, 10, 22, 23, 24, 25, 26, 27, 19, 20, 21, 2, 5, 8, 9, 3, 6, 4, 7, 1,
    16, 11, 15, 17, 12, 13, 18, 10, 14, 20, 21, 19, 23, 24, 22, 26, 27, 25, 5, 8, 2, 3, 6, 9, 7, 1, 4,
    17, 12, 13, 18, 10, 14, 16, 11, 15, 25, 26, 27, 19, 20, 21, 22, 23, 24, 3, 6, 9, 7, 1, 4, 5, 8, 2,
    18, 10, 14, 16, 11, 15, 17, 12, 13, 24, 22, 23, 27, 25, 26, 21, 19, 20, 7, 1, 4, 5, 8, 2, 3, 6, 9,
    19, 21, 20, 25, 27, 26, 22, 24, 23, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 11, 16, 18, 17, 13, 15, 14,
    20, 19, 21, 26, 25, 27, 23, 22, 24, 5, 6, 4, 8, 9, 7, 2, 3, 1, 16, 18, 17, 13, 15, 14, 10, 12, 11,
    21, 20, 19, 27, 26, 25, 24, 23, 22, 9, 7, 8, 3, 1, 2, 6, 4, 5, 13, 15, 14, 10, 12, 11, 16, 18, 17,
    22, 24, 23, 19, 21, 20, 25, 27, 26, 2, 3, 1, 5, 6, 4, 8, 9, 7, 15, 14, 13, 12, 11, 10, 18, 17, 16,
    23, 22, 24, 20, 19, 21, 26, 25, 27, 6, 4, 5, 9, 7, 8, 3, 1, 2, 12, 11, 10, 18, 17, 16, 15, 14, 13,
    24, 23, 22, 21, 20, 19, 27, 26, 25, 7, 8, 9, 1, 2, 3, 4, 5, 6, 18, 17, 16, 15, 14, 13, 12, 11, 10,
    25, 27, 26, 22, 24, 23, 19, 21, 20, 3, 1, 2, 6, 4, 5, 9, 7, 8, 17, 16, 18, 14, 13, 15, 11, 10, 12,
    26, 25, 27, 23, 22, 24, 20, 19, 21, 4, 5, 6, 7, 8, 9, 1, 2, 3, 14, 13, 15, 11, 10, 12, 17, 16, 18,
    27, 26, 25, 24, 23, 22, 21, 20, 19, 8, 9, 7, 2, 3, 1, 5, 6, 4, 11, 10, 12, 17, 16, 18, 14, 13, 15,
};

}  // namespace detail
}  // namespace loopforge

#pragma once
// sigma(k,15,q), rows q = 1..14, columns k = 0..15. -1 marks an empty cell.
#include <array>

namespace cyccov::testdata {

inline constexpr std::array<std::array<int, 16>, 14> kSigmaTable15 = {{
    {-1, 0, 0, 1, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 9},
    {-1, -1, 0, 0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 9},
    {-1, -1, -1, 0, 0, 1, 2, 3, 3, 4, 5, 6, 6, 7, 8, 9},
    {-1, -1, -1, -1, 0, 0, 1, 2, 3, 4, 4, 5, 6, 7, 8, 8},
    {-1, -1, -1, -1, -1, 0, 0, 1, 2, 3, 4, 5, 5, 6, 7, 8},
    {-1, -1, -1, -1, -1, -1, 0, 0, 1, 2, 3, 4, 5, 6, 6, 7},
    {-1, -1, -1, -1, -1, -1, -1, 0, 0, 1, 2, 3, 4, 5, 6, 7},
    {-1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 1, 2, 3, 4, 5, 6},
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 1, 2, 3, 4, 5},
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 1, 2, 3, 4},
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 1, 2, 3},
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 1, 2},
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0, 1},
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 0},
}};

}  // namespace cyccov::testdata

#pragma once

// Cell counts produced by a standalone brute-force search that shares no code
// with the library. Families are listed by weight n up to 12.

namespace oracle {

struct Cell3 {
    int n, m, k;
    long long count;
};

struct Cell2 {
    int n, k;
    long long count;
};

inline constexpr int max_n = 12;

inline constexpr long long ped_totals[] = {1, 1, 2, 3, 4, 6, 9, 12, 16, 22, 29, 38, 50, 64, 82, 105, 132, 166, 208, 258, 320, 395, 484, 592, 722, 876, 1060, 1280, 1539, 1846, 2210};

inline constexpr Cell3 ped_cells[] = {
    {0, 0, 0, 1},
    {1, 1, 0, 1},
    {2, 1, 1, 1},
    {2, 2, 0, 1},
    {3, 1, 0, 1},
    {3, 2, 1, 1},
    {3, 3, 0, 1},
    {4, 1, 1, 1},
    {4, 2, 0, 1},
    {4, 3, 1, 1},
    {4, 4, 0, 1},
    {5, 1, 0, 1},
    {5, 2, 1, 2},
    {5, 3, 0, 1},
    {5, 4, 1, 1},
    {5, 5, 0, 1},
    {6, 1, 1, 1},
    {6, 2, 0, 2},
    {6, 2, 2, 1},
    {6, 3, 1, 2},
    {6, 4, 0, 1},
    {6, 5, 1, 1},
    {6, 6, 0, 1},
    {7, 1, 0, 1},
    {7, 2, 1, 3},
    {7, 3, 0, 2},
    {7, 3, 2, 1},
    {7, 4, 1, 2},
    {7, 5, 0, 1},
    {7, 6, 1, 1},
    {7, 7, 0, 1},
    {8, 1, 1, 1},
    {8, 2, 0, 2},
    {8, 2, 2, 1},
    {8, 3, 1, 4},
    {8, 4, 0, 2},
    {8, 4, 2, 1},
    {8, 5, 1, 2},
    {8, 6, 0, 1},
    {8, 7, 1, 1},
    {8, 8, 0, 1},
    {9, 1, 0, 1},
    {9, 2, 1, 4},
    {9, 3, 0, 3},
    {9, 3, 2, 2},
    {9, 4, 1, 4},
    {9, 5, 0, 2},
    {9, 5, 2, 1},
    {9, 6, 1, 2},
    {9, 7, 0, 1},
    {9, 8, 1, 1},
    {9, 9, 0, 1},
    {10, 1, 1, 1},
    {10, 2, 0, 3},
    {10, 2, 2, 2},
    {10, 3, 1, 6},
    {10, 4, 0, 3},
    {10, 4, 2, 2},
    {10, 5, 1, 4},
    {10, 6, 0, 2},
    {10, 6, 2, 1},
    {10, 7, 1, 2},
    {10, 8, 0, 1},
    {10, 9, 1, 1},
    {10, 10, 0, 1},
    {11, 1, 0, 1},
    {11, 2, 1, 5},
    {11, 3, 0, 4},
    {11, 3, 2, 4},
    {11, 4, 1, 7},
    {11, 5, 0, 3},
    {11, 5, 2, 2},
    {11, 6, 1, 4},
    {11, 7, 0, 2},
    {11, 7, 2, 1},
    {11, 8, 1, 2},
    {11, 9, 0, 1},
    {11, 10, 1, 1},
    {11, 11, 0, 1},
    {12, 1, 1, 1},
    {12, 2, 0, 3},
    {12, 2, 2, 2},
    {12, 3, 1, 9},
    {12, 3, 3, 1},
    {12, 4, 0, 5},
    {12, 4, 2, 5},
    {12, 5, 1, 7},
    {12, 6, 0, 3},
    {12, 6, 2, 2},
    {12, 7, 1, 4},
    {12, 8, 0, 2},
    {12, 8, 2, 1},
    {12, 9, 1, 2},
    {12, 10, 0, 1},
    {12, 11, 1, 1},
    {12, 12, 0, 1}};

inline constexpr Cell3 f_cells[] = {
    {0, 0, 0, 1},
    {1, 1, 0, 1},
    {2, 1, 1, 1},
    {2, 2, 0, 1},
    {3, 1, 0, 1},
    {3, 2, 1, 1},
    {3, 3, 0, 1},
    {4, 1, 1, 1},
    {4, 2, 0, 1},
    {4, 3, 1, 1},
    {4, 4, 0, 1},
    {5, 1, 0, 1},
    {5, 2, 1, 2},
    {5, 3, 0, 1},
    {5, 4, 1, 1},
    {5, 5, 0, 1},
    {6, 1, 1, 1},
    {6, 2, 0, 2},
    {6, 2, 2, 1},
    {6, 3, 1, 2},
    {6, 4, 0, 1},
    {6, 5, 1, 1},
    {6, 6, 0, 1},
    {7, 1, 0, 1},
    {7, 2, 1, 3},
    {7, 3, 0, 2},
    {7, 3, 2, 1},
    {7, 4, 1, 2},
    {7, 5, 0, 1},
    {7, 6, 1, 1},
    {7, 7, 0, 1},
    {8, 1, 1, 1},
    {8, 2, 0, 2},
    {8, 2, 2, 1},
    {8, 3, 1, 4},
    {8, 4, 0, 2},
    {8, 4, 2, 1},
    {8, 5, 1, 2},
    {8, 6, 0, 1},
    {8, 7, 1, 1},
    {8, 8, 0, 1},
    {9, 1, 0, 1},
    {9, 2, 1, 4},
    {9, 3, 0, 3},
    {9, 3, 2, 2},
    {9, 4, 1, 4},
    {9, 5, 0, 2},
    {9, 5, 2, 1},
    {9, 6, 1, 2},
    {9, 7, 0, 1},
    {9, 8, 1, 1},
    {9, 9, 0, 1},
    {10, 1, 1, 1},
    {10, 2, 0, 3},
    {10, 2, 2, 2},
    {10, 3, 1, 6},
    {10, 4, 0, 3},
    {10, 4, 2, 2},
    {10, 5, 1, 4},
    {10, 6, 0, 2},
    {10, 6, 2, 1},
    {10, 7, 1, 2},
    {10, 8, 0, 1},
    {10, 9, 1, 1},
    {10, 10, 0, 1},
    {11, 1, 0, 1},
    {11, 2, 1, 5},
    {11, 3, 0, 4},
    {11, 3, 2, 4},
    {11, 4, 1, 7},
    {11, 5, 0, 3},
    {11, 5, 2, 2},
    {11, 6, 1, 4},
    {11, 7, 0, 2},
    {11, 7, 2, 1},
    {11, 8, 1, 2},
    {11, 9, 0, 1},
    {11, 10, 1, 1},
    {11, 11, 0, 1},
    {12, 1, 1, 1},
    {12, 2, 0, 3},
    {12, 2, 2, 2},
    {12, 3, 1, 9},
    {12, 3, 3, 1},
    {12, 4, 0, 5},
    {12, 4, 2, 5},
    {12, 5, 1, 7},
    {12, 6, 0, 3},
    {12, 6, 2, 2},
    {12, 7, 1, 4},
    {12, 8, 0, 2},
    {12, 8, 2, 1},
    {12, 9, 1, 2},
    {12, 10, 0, 1},
    {12, 11, 1, 1},
    {12, 12, 0, 1}};

inline constexpr Cell3 f_signed_cells[] = {
    {0, 0, 0, 1},
    {1, 1, 0, 1},
    {2, 1, 1, 1},
    {2, 2, 0, 1},
    {3, 1, 0, 1},
    {3, 2, 1, 1},
    {3, 3, 0, 1},
    {4, 1, 1, 1},
    {4, 2, 0, 1},
    {4, 3, 1, 1},
    {4, 4, 0, 1},
    {5, 1, 0, 1},
    {5, 2, 1, 2},
    {5, 3, 0, 1},
    {5, 4, 1, 1},
    {5, 5, 0, 1},
    {6, 1, 1, 1},
    {6, 2, 0, 2},
    {6, 2, 2, 1},
    {6, 3, 1, 2},
    {6, 4, 0, 1},
    {6, 5, 1, 1},
    {6, 6, 0, 1},
    {7, 1, 0, 1},
    {7, 2, 1, 3},
    {7, 3, 0, 2},
    {7, 3, 2, 1},
    {7, 4, 1, 2},
    {7, 5, 0, 1},
    {7, 6, 1, 1},
    {7, 7, 0, 1},
    {8, 1, 1, 1},
    {8, 2, 0, 2},
    {8, 2, 2, 1},
    {8, 3, 1, 4},
    {8, 4, 0, 2},
    {8, 4, 2, 1},
    {8, 5, 1, 2},
    {8, 6, 0, 1},
    {8, 7, 1, 1},
    {8, 8, 0, 1},
    {9, 1, 0, 1},
    {9, 2, 1, 4},
    {9, 3, 0, 3},
    {9, 3, 2, 2},
    {9, 4, 1, 4},
    {9, 5, 0, 2},
    {9, 5, 2, 1},
    {9, 6, 1, 2},
    {9, 7, 0, 1},
    {9, 8, 1, 1},
    {9, 9, 0, 1},
    {10, 1, 1, 1},
    {10, 2, 0, 3},
    {10, 2, 2, 2},
    {10, 3, 1, 6},
    {10, 4, 0, 3},
    {10, 4, 2, 2},
    {10, 5, 1, 4},
    {10, 6, 0, 2},
    {10, 6, 2, 1},
    {10, 7, 1, 2},
    {10, 8, 0, 1},
    {10, 9, 1, 1},
    {10, 10, 0, 1},
    {11, 1, 0, 1},
    {11, 2, 1, 5},
    {11, 3, 0, 4},
    {11, 3, 2, 4},
    {11, 4, 1, 7},
    {11, 5, 0, 3},
    {11, 5, 2, 2},
    {11, 6, 1, 4},
    {11, 7, 0, 2},
    {11, 7, 2, 1},
    {11, 8, 1, 2},
    {11, 9, 0, 1},
    {11, 10, 1, 1},
    {11, 11, 0, 1},
    {12, 1, 1, 1},
    {12, 2, 0, 3},
    {12, 2, 2, 2},
    {12, 3, 1, 9},
    {12, 3, 3, 1},
    {12, 4, 0, 5},
    {12, 4, 2, 5},
    {12, 5, 1, 7},
    {12, 6, 0, 3},
    {12, 6, 2, 2},
    {12, 7, 1, 4},
    {12, 8, 0, 2},
    {12, 8, 2, 1},
    {12, 9, 1, 2},
    {12, 10, 0, 1},
    {12, 11, 1, 1},
    {12, 12, 0, 1}};

inline constexpr Cell2 v_cells[] = {
    {0, 0, 1},
    {1, 0, 1},
    {2, 0, 1},
    {2, 1, 1},
    {3, 0, 2},
    {3, 1, 1},
    {4, 0, 2},
    {4, 1, 2},
    {5, 0, 3},
    {5, 1, 3},
    {6, 0, 4},
    {6, 1, 4},
    {6, 2, 1},
    {7, 0, 5},
    {7, 1, 6},
    {7, 2, 1},
    {8, 0, 6},
    {8, 1, 8},
    {8, 2, 2},
    {9, 0, 8},
    {9, 1, 11},
    {9, 2, 3},
    {10, 0, 10},
    {10, 1, 14},
    {10, 2, 5},
    {11, 0, 12},
    {11, 1, 19},
    {11, 2, 7},
    {12, 0, 15},
    {12, 1, 24},
    {12, 2, 10},
    {12, 3, 1}};

inline constexpr Cell2 a_cells[] = {
    {0, 0, 1},
    {1, 0, 1},
    {2, 0, 1},
    {2, 1, 1},
    {3, 0, 2},
    {3, 1, 1},
    {4, 0, 2},
    {4, 1, 2},
    {5, 0, 3},
    {5, 1, 3},
    {6, 0, 4},
    {6, 1, 4},
    {6, 2, 1},
    {7, 0, 5},
    {7, 1, 6},
    {7, 2, 1},
    {8, 0, 6},
    {8, 1, 8},
    {8, 2, 2},
    {9, 0, 8},
    {9, 1, 11},
    {9, 2, 3},
    {10, 0, 10},
    {10, 1, 14},
    {10, 2, 5},
    {11, 0, 12},
    {11, 1, 19},
    {11, 2, 7},
    {12, 0, 15},
    {12, 1, 24},
    {12, 2, 10},
    {12, 3, 1}};

inline constexpr Cell2 a_signed_cells[] = {
    {0, 0, 1},
    {1, 0, 1},
    {2, 0, 1},
    {2, 1, 1},
    {3, 0, 2},
    {3, 1, 1},
    {4, 0, 2},
    {4, 1, 2},
    {5, 0, 3},
    {5, 1, 3},
    {6, 0, 4},
    {6, 1, 4},
    {6, 2, 1},
    {7, 0, 5},
    {7, 1, 6},
    {7, 2, 1},
    {8, 0, 6},
    {8, 1, 8},
    {8, 2, 2},
    {9, 0, 8},
    {9, 1, 11},
    {9, 2, 3},
    {10, 0, 10},
    {10, 1, 14},
    {10, 2, 5},
    {11, 0, 12},
    {11, 1, 19},
    {11, 2, 7},
    {12, 0, 15},
    {12, 1, 24},
    {12, 2, 10},
    {12, 3, 1}};

inline constexpr Cell2 b_cells[] = {
    {0, 0, 1},
    {1, 0, 1},
    {2, 0, 1},
    {2, 1, 1},
    {3, 0, 2},
    {3, 1, 1},
    {4, 0, 2},
    {4, 1, 2},
    {5, 0, 3},
    {5, 1, 3},
    {6, 0, 4},
    {6, 1, 4},
    {6, 2, 1},
    {7, 0, 5},
    {7, 1, 6},
    {7, 2, 1},
    {8, 0, 6},
    {8, 1, 8},
    {8, 2, 2},
    {9, 0, 8},
    {9, 1, 11},
    {9, 2, 3},
    {10, 0, 10},
    {10, 1, 14},
    {10, 2, 5},
    {11, 0, 12},
    {11, 1, 19},
    {11, 2, 7},
    {12, 0, 15},
    {12, 1, 24},
    {12, 2, 10},
    {12, 3, 1}};

inline constexpr Cell2 c_cells[] = {
    {0, 0, 1},
    {1, 0, 1},
    {2, 0, 1},
    {2, 1, 1},
    {3, 0, 2},
    {3, 1, 1},
    {4, 0, 2},
    {4, 1, 2},
    {5, 0, 3},
    {5, 1, 3},
    {6, 0, 4},
    {6, 1, 4},
    {6, 2, 1},
    {7, 0, 5},
    {7, 1, 6},
    {7, 2, 1},
    {8, 0, 6},
    {8, 1, 8},
    {8, 2, 2},
    {9, 0, 8},
    {9, 1, 11},
    {9, 2, 3},
    {10, 0, 10},
    {10, 1, 14},
    {10, 2, 5},
    {11, 0, 12},
    {11, 1, 19},
    {11, 2, 7},
    {12, 0, 15},
    {12, 1, 24},
    {12, 2, 10},
    {12, 3, 1}};

} // namespace oracle

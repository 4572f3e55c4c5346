// Integer coefficient tables for the closed-form quintic invariants.
// Each Term is c * p^a q^b r^c s^d t^e; tables are evaluated exactly over
// the rationals. kD3Scaled carries 390625 * D3 so the entries stay integral.

#pragma once

#include <cstdint>

namespace quintic::detail {

struct Term {
    std::uint8_t p, q, r, s, t;
    std::int32_t coeff;
};

// discriminant of the monic quintic (59 terms)
inline constexpr Term kD[] = {
    {5, 0, 0, 0, 3, 256}, {4, 1, 0, 1, 2, -192}, {4, 0, 2, 0, 2, -128},
    {4, 0, 1, 2, 1, 144}, {3, 2, 1, 0, 2, 144}, {3, 2, 0, 2, 1, -6},
    {3, 1, 2, 1, 1, -80}, {3, 0, 4, 0, 1, 16}, {2, 4, 0, 0, 2, -27},
    {2, 3, 1, 1, 1, 18}, {2, 2, 3, 0, 1, -4}, {3, 1, 0, 0, 3, -1600},
    {3, 0, 1, 1, 2, 160}, {3, 0, 0, 3, 1, -36}, {2, 2, 0, 1, 2, 1020},
    {2, 1, 2, 0, 2, 560}, {2, 1, 1, 2, 1, -746}, {2, 0, 3, 1, 1, 24},
    {1, 3, 1, 0, 2, -630}, {1, 3, 0, 2, 1, 24}, {1, 2, 2, 1, 1, 356},
    {1, 1, 4, 0, 1, -72}, {0, 5, 0, 0, 2, 108}, {0, 4, 1, 1, 1, -72},
    {0, 3, 3, 0, 1, 16}, {2, 0, 1, 0, 3, 2000}, {2, 0, 0, 2, 2, -50},
    {1, 2, 0, 0, 3, 2250}, {1, 1, 1, 1, 2, -2050}, {1, 1, 0, 3, 1, 160},
    {1, 0, 3, 0, 2, -900}, {1, 0, 2, 2, 1, 1020}, {0, 3, 0, 1, 2, -900},
    {0, 2, 2, 0, 2, 825}, {0, 2, 1, 2, 1, 560}, {0, 1, 3, 1, 1, -630},
    {1, 0, 0, 1, 3, -2500}, {0, 1, 1, 0, 3, -3750}, {0, 1, 0, 2, 2, 2000},
    {0, 0, 5, 0, 1, 108}, {0, 0, 4, 2, 0, -27}, {0, 0, 2, 1, 2, 2250},
    {0, 0, 1, 3, 1, -1600}, {0, 0, 0, 5, 0, 256}, {0, 0, 0, 0, 4, 3125},
    {4, 0, 0, 4, 0, -27}, {3, 1, 1, 3, 0, 18}, {3, 0, 3, 2, 0, -4},
    {2, 3, 0, 3, 0, -4}, {2, 2, 2, 2, 0, 1}, {2, 1, 0, 4, 0, 144},
    {2, 0, 2, 3, 0, -6}, {1, 2, 1, 3, 0, -80}, {1, 1, 3, 2, 0, 18},
    {0, 4, 0, 3, 0, 16}, {0, 3, 2, 2, 0, -4}, {1, 0, 1, 4, 0, -192},
    {0, 2, 0, 4, 0, -128}, {0, 1, 2, 3, 0, 144},
};

// sign factor of the leading coefficient of the degree-3 Sturm remainder
inline constexpr Term kL3[] = {
    {2, 0, 0, 0, 0, 2}, {0, 1, 0, 0, 0, -5},
};

inline constexpr Term kL2[] = {
    {0, 1, 0, 1, 0, 40}, {2, 0, 0, 1, 0, -16}, {3, 0, 1, 0, 0, -8},
    {1, 1, 1, 0, 0, 38}, {2, 2, 0, 0, 0, 3}, {0, 3, 0, 0, 0, -12},
    {0, 0, 2, 0, 0, -45},
};

inline constexpr Term kL1[] = {
    {1, 0, 1, 2, 0, -264}, {3, 2, 0, 0, 1, -12}, {1, 1, 3, 0, 0, 36},
    {1, 2, 1, 1, 0, -124}, {3, 1, 1, 1, 0, 28}, {1, 1, 0, 1, 1, 260},
    {2, 1, 1, 0, 1, -132}, {1, 0, 2, 0, 1, 240}, {0, 1, 2, 1, 0, 234},
    {4, 0, 1, 0, 1, 32}, {1, 3, 0, 0, 1, 48}, {3, 0, 0, 1, 1, -56},
    {0, 2, 1, 0, 1, -80}, {2, 1, 0, 2, 0, 194}, {0, 0, 1, 1, 1, -600},
    {2, 3, 0, 1, 0, -6}, {2, 2, 2, 0, 0, 2}, {2, 0, 2, 1, 0, -12},
    {0, 0, 4, 0, 0, -54}, {0, 0, 0, 3, 0, 320}, {0, 3, 2, 0, 0, -8},
    {3, 0, 3, 0, 0, -8}, {0, 1, 0, 0, 2, 250}, {0, 2, 0, 2, 0, -176},
    {0, 4, 0, 1, 0, 24}, {4, 0, 0, 2, 0, -36}, {2, 0, 0, 0, 2, -100},
};

// discriminant factor of the degree-2 Sturm remainder
inline constexpr Term kD2[] = {
    {2, 4, 0, 1, 0, 24}, {0, 3, 1, 0, 1, -1100}, {3, 1, 0, 1, 1, 800},
    {2, 2, 1, 0, 1, -1735}, {2, 1, 2, 1, 0, -3}, {1, 3, 1, 1, 0, 20},
    {2, 0, 1, 1, 1, -600}, {1, 2, 0, 1, 1, -1150}, {1, 1, 2, 0, 1, 5475},
    {1, 1, 1, 2, 0, -1380}, {0, 1, 1, 1, 1, 1500}, {3, 1, 3, 0, 0, 6},
    {4, 2, 2, 0, 0, 1}, {6, 0, 1, 0, 1, -128}, {1, 4, 0, 0, 1, 660},
    {5, 0, 0, 1, 1, -136}, {4, 3, 0, 1, 0, -3}, {4, 1, 0, 2, 0, -236},
    {2, 2, 0, 2, 0, 337}, {5, 2, 0, 0, 1, 48}, {3, 3, 0, 0, 1, -357},
    {4, 0, 2, 1, 0, -12}, {1, 0, 3, 1, 0, -45}, {0, 2, 2, 1, 0, 60},
    {2, 3, 2, 0, 0, -8}, {2, 1, 0, 0, 2, -500}, {1, 2, 3, 0, 0, -24},
    {3, 0, 2, 0, 1, -1380}, {3, 0, 1, 2, 0, 408}, {5, 1, 1, 1, 0, -4},
    {4, 1, 1, 0, 1, 1028}, {3, 2, 1, 1, 0, 11}, {6, 0, 0, 2, 0, 36},
    {4, 0, 0, 0, 2, 100}, {2, 0, 4, 0, 0, 9}, {0, 5, 0, 1, 0, -48},
    {0, 4, 2, 0, 0, 16}, {0, 3, 0, 2, 0, 160}, {0, 2, 0, 0, 2, 625},
    {0, 0, 3, 0, 1, -3375}, {0, 0, 2, 2, 0, 900},
};

inline constexpr Term kM1[] = {
    {3, 0, 1, 0, 0, 8}, {2, 0, 0, 1, 0, -80}, {2, 2, 0, 0, 0, -3},
    {1, 1, 1, 0, 0, 10}, {0, 1, 0, 1, 0, 200}, {0, 0, 2, 0, 0, -75},
};

// constant-term companion of kM1 in the subchain of the degree-3 remainder
inline constexpr Term kM0[] = {
    {3, 0, 0, 1, 0, 6}, {2, 0, 0, 0, 1, -150}, {2, 1, 1, 0, 0, -1},
    {1, 1, 0, 1, 0, -5}, {1, 0, 2, 0, 0, 5}, {0, 1, 0, 0, 1, 375},
    {0, 0, 1, 1, 0, -50},
};

// numerator/denominator factors of the double root
inline constexpr Term kC0[] = {
    {4, 0, 0, 1, 1, 48}, {3, 0, 2, 1, 0, 4}, {3, 0, 0, 0, 2, 80},
    {3, 1, 1, 0, 1, -32}, {3, 1, 0, 2, 0, -3}, {2, 0, 1, 2, 0, 7},
    {2, 2, 1, 1, 0, -1}, {2, 0, 2, 0, 1, -4}, {2, 3, 0, 0, 1, 9},
    {2, 1, 0, 1, 1, -266}, {1, 0, 0, 3, 0, 16}, {1, 2, 1, 0, 1, 146},
    {1, 1, 2, 1, 0, -18}, {1, 0, 1, 1, 1, 290}, {1, 1, 0, 0, 2, -275},
    {1, 2, 0, 2, 0, 12}, {0, 3, 1, 1, 0, 4}, {0, 1, 2, 0, 1, -195},
    {0, 2, 0, 1, 1, 260}, {0, 0, 3, 1, 0, 27}, {0, 0, 1, 0, 2, 375},
    {0, 4, 0, 0, 1, -36}, {0, 1, 1, 2, 0, -48}, {0, 0, 0, 2, 1, -400},
};

inline constexpr Term kC1[] = {
    {3, 0, 0, 1, 1, -56}, {2, 0, 0, 0, 2, -100}, {1, 0, 2, 0, 1, 240},
    {1, 0, 1, 2, 0, -264}, {3, 2, 0, 0, 1, -12}, {3, 1, 1, 1, 0, 28},
    {1, 2, 1, 1, 0, -124}, {3, 0, 3, 0, 0, -8}, {4, 0, 0, 2, 0, -36},
    {0, 2, 0, 2, 0, -176}, {0, 4, 0, 1, 0, 24}, {0, 3, 2, 0, 0, -8},
    {0, 1, 0, 0, 2, 250}, {2, 1, 0, 2, 0, 194}, {2, 0, 2, 1, 0, -12},
    {2, 3, 0, 1, 0, -6}, {2, 2, 2, 0, 0, 2}, {1, 1, 3, 0, 0, 36},
    {0, 1, 2, 1, 0, 234}, {0, 2, 1, 0, 1, -80}, {0, 0, 1, 1, 1, -600},
    {0, 0, 4, 0, 0, -54}, {0, 0, 0, 3, 0, 320}, {1, 1, 0, 1, 1, 260},
    {2, 1, 1, 0, 1, -132}, {1, 3, 0, 0, 1, 48}, {4, 0, 1, 0, 1, 32},
};

// numerator of the triple root (denominator is L2)
inline constexpr Term kC21[] = {
    {3, 0, 0, 1, 0, 6}, {0, 2, 1, 0, 0, 4}, {1, 0, 2, 0, 0, -3},
    {1, 1, 0, 1, 0, -21}, {0, 0, 1, 1, 0, 30}, {2, 0, 0, 0, 1, 10},
    {0, 1, 0, 0, 1, -25}, {2, 1, 1, 0, 0, -1},
};

inline constexpr Term kC20[] = {
    {3, 0, 0, 0, 1, -16}, {0, 0, 1, 0, 1, -75}, {1, 0, 1, 1, 0, 3},
    {0, 2, 0, 1, 0, -4}, {1, 1, 0, 0, 1, 55}, {2, 1, 0, 1, 0, 1},
};

// numerator of the single root in the two-double-roots case
inline constexpr Term kC3[] = {
    {2, 1, 1, 0, 0, -34}, {4, 0, 1, 0, 0, 8}, {1, 1, 0, 1, 0, 44},
    {3, 2, 0, 0, 0, -3}, {3, 0, 0, 1, 0, -8}, {1, 3, 0, 0, 0, 12},
    {1, 0, 2, 0, 0, 57}, {0, 2, 1, 0, 0, -16}, {0, 1, 0, 0, 1, 100},
    {0, 0, 1, 1, 0, -120}, {2, 0, 0, 0, 1, -40},
};

// 390625 * D3, the discriminant of the degree-3 Sturm remainder
inline constexpr Term kD3Scaled[] = {
    {5, 0, 0, 1, 1, 21600}, {5, 1, 1, 1, 0, 432}, {4, 1, 1, 0, 1, -10800},
    {3, 2, 1, 1, 0, -180}, {2, 0, 1, 1, 1, -540000}, {2, 0, 0, 3, 0, 128000},
    {6, 0, 0, 2, 0, -432}, {4, 0, 0, 0, 2, -270000}, {2, 1, 0, 0, 2, 1350000},
    {1, 2, 0, 1, 1, -135000}, {1, 1, 2, 0, 1, 67500}, {0, 1, 1, 1, 1, 1350000},
    {2, 1, 2, 1, 0, -5100}, {2, 2, 1, 0, 1, -13500}, {1, 1, 1, 2, 0, 6000},
    {0, 1, 0, 3, 0, -320000}, {0, 0, 2, 2, 0, 90000}, {0, 0, 3, 0, 1, -337500},
    {0, 2, 0, 0, 2, -1687500}, {3, 1, 3, 0, 0, -40}, {4, 0, 2, 1, 0, 1680},
    {4, 1, 0, 2, 0, -2160}, {4, 3, 0, 1, 0, -108}, {4, 2, 2, 0, 0, 36},
    {3, 3, 0, 0, 1, 2700}, {3, 0, 2, 0, 1, 54000}, {3, 0, 1, 2, 0, -16800},
    {2, 2, 0, 2, 0, 11700}, {1, 0, 3, 1, 0, -4500}, {5, 0, 3, 0, 0, -128},
    {2, 0, 4, 0, 0, 900},
};

// numerator whose square controls L1 on the slice L2 = 0
inline constexpr Term kSliceL2Num[] = {
    {0, 3, 1, 0, 0, 520}, {3, 3, 0, 0, 0, 135}, {5, 2, 0, 0, 0, -18},
    {2, 1, 0, 0, 1, 800}, {1, 4, 0, 0, 0, -252}, {0, 2, 0, 0, 1, -1000},
    {4, 0, 0, 0, 1, -160}, {0, 0, 3, 0, 0, 1350}, {2, 2, 1, 0, 0, 604},
    {4, 1, 1, 0, 0, -380}, {1, 1, 2, 0, 0, -2205}, {3, 0, 2, 0, 0, 558},
    {6, 0, 1, 0, 0, 48},
};

}  // namespace quintic::detail


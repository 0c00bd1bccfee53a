// Frozen reference data for the regression suites: closed dimension formulas
// for N <= 42, the trace identities for T(2) and T(3), the large-gcd trace
// list, and the split-dimension grids. Values here are asserted exactly
// against the library.
#pragma once

#include <cstdint>
#include <vector>

#include "newtrace/arith.hpp"
#include "newtrace/hecke_trace.hpp"
#include "newtrace/rational.hpp"

namespace golden {

using newtrace::Int;
using newtrace::Rat;

inline Rat R(long long n, long long d = 1) { return Rat(n, d); }

inline Rat pow_neg(std::int64_t base, int e) {
    return Rat(newtrace::int_pow(Int(base), unsigned(e)));
}

inline int delta_k2(int k) { return k == 2 ? 1 : 0; }

// ---------------------------------------------------------------------------
// dim S^0_k(N) = alpha (k-1) + beta (-1)^(k/2) + gamma (k-1 | 3)
//                + constant + delta [k == 2]
struct DimFormula {
    int level;
    Rat alpha, beta, gamma, constant, delta;
};

inline Rat eval(const DimFormula& f, int k) {
    const int sign = (k / 2) % 2 == 0 ? 1 : -1;
    return f.alpha * (k - 1) + f.beta * sign +
           f.gamma * newtrace::kronecker(k - 1, 3) + f.constant +
           f.delta * delta_k2(k);
}

inline const std::vector<DimFormula>& dim_formulas() {
    static const std::vector<DimFormula> rows = {
        {1, R(1, 12), R(1, 4), R(-1, 3), R(-1, 2), R(1)},
        {2, R(1, 12), R(-1, 4), R(2, 3), R(0), R(-1)},
        {3, R(1, 6), R(-1, 2), R(1, 3), R(0), R(-1)},
        {4, R(1, 12), R(-1, 4), R(-1, 3), R(0), R(0)},
        {5, R(1, 3), R(0), R(2, 3), R(0), R(-1)},
        {6, R(1, 6), R(1, 2), R(-2, 3), R(0), R(1)},
        {7, R(1, 2), R(-1, 2), R(0), R(0), R(-1)},
        {8, R(1, 4), R(1, 4), R(0), R(0), R(0)},
        {9, R(5, 12), R(1, 4), R(1, 3), R(-1, 2), R(0)},
        {10, R(1, 3), R(0), R(-4, 3), R(0), R(1)},
        {11, R(5, 6), R(-1, 2), R(2, 3), R(0), R(-1)},
        {12, R(1, 6), R(1, 2), R(1, 3), R(0), R(0)},
        {13, R(1), R(0), R(0), R(0), R(-1)},
        {14, R(1, 2), R(1, 2), R(0), R(0), R(1)},
        {15, R(2, 3), R(0), R(-2, 3), R(0), R(1)},
        {16, R(1, 2), R(0), R(0), R(-1, 2), R(0)},
        {17, R(4, 3), R(0), R(2, 3), R(0), R(-1)},
        {18, R(5, 12), R(-1, 4), R(-2, 3), R(0), R(0)},
        {19, R(3, 2), R(-1, 2), R(0), R(0), R(-1)},
        {20, R(1, 3), R(0), R(2, 3), R(0), R(0)},
        {21, R(1), R(1), R(0), R(0), R(1)},
        {22, R(5, 6), R(1, 2), R(-4, 3), R(0), R(1)},
        // The (k-1|3) coefficient at level 23 is +2/3: K_{-3}(23) = -2, and
        // integrality of the dimension forces the sign.
        {23, R(11, 6), R(-1, 2), R(2, 3), R(0), R(-1)},
        {24, R(1, 2), R(-1, 2), R(0), R(0), R(0)},
        {25, R(19, 12), R(-1, 4), R(-1, 3), R(-3, 2), R(0)},
        {26, R(1), R(0), R(0), R(0), R(1)},
        {27, R(4, 3), R(0), R(-1, 3), R(0), R(0)},
        {28, R(1, 2), R(1, 2), R(0), R(0), R(0)},
        {29, R(7, 3), R(0), R(2, 3), R(0), R(-1)},
        {30, R(2, 3), R(0), R(4, 3), R(0), R(-1)},
        {31, R(5, 2), R(-1, 2), R(0), R(0), R(-1)},
        {32, R(1), R(0), R(0), R(0), R(0)},
        {33, R(5, 3), R(1), R(-2, 3), R(0), R(1)},
        {34, R(4, 3), R(0), R(-4, 3), R(0), R(1)},
        {35, R(2), R(0), R(0), R(0), R(1)},
        {36, R(5, 12), R(-1, 4), R(1, 3), R(0), R(0)},
        {37, R(3), R(0), R(0), R(0), R(-1)},
        {38, R(3, 2), R(1, 2), R(0), R(0), R(1)},
        {39, R(2), R(0), R(0), R(0), R(1)},
        {40, R(1), R(0), R(0), R(0), R(0)},
        {41, R(10, 3), R(0), R(2, 3), R(0), R(-1)},
        {42, R(1), R(-1), R(0), R(0), R(-1)},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// tr(T(2) | S^0_k(N)) = c_pow (-2)^kappa + c_pow_sign (-2)^kappa A_k
//                       + c_a a_{1,2,k} + c_const + c_delta [k == 2]
struct Trace2Formula {
    int level;
    Rat c_pow, c_pow_sign, c_a, c_const, c_delta;
};

inline Rat eval(const Trace2Formula& f, int k) {
    const int kappa = k / 2 - 1;
    const Rat p = pow_neg(-2, kappa);
    return f.c_pow * p + f.c_pow_sign * p * newtrace::A_k(k) +
           f.c_a * newtrace::a_coeff(1, newtrace::factor(2), k) + f.c_const +
           f.c_delta * delta_k2(k);
}

inline const std::vector<Trace2Formula>& trace2_formulas() {
    static const std::vector<Trace2Formula> rows = {
        {1, R(-1, 2), R(-1, 2), R(-1), R(-1), R(3)},
        {2, R(1, 2), R(1, 2), R(0), R(0), R(-1)},
        {3, R(0), R(1), R(2), R(0), R(-3)},
        {5, R(1), R(0), R(2), R(0), R(-3)},
        {6, R(0), R(-1), R(0), R(0), R(1)},
        {7, R(1), R(1), R(1), R(0), R(-3)},
        {9, R(1, 2), R(-1, 2), R(-1), R(1), R(0)},
        {10, R(-1), R(0), R(0), R(0), R(1)},
        {11, R(0), R(1), R(0), R(0), R(-3)},
        {13, R(1), R(0), R(2), R(0), R(-3)},
        {14, R(-1), R(-1), R(0), R(0), R(1)},
        {15, R(0), R(0), R(-4), R(0), R(3)},
        {17, R(0), R(0), R(2), R(0), R(-3)},
        {18, R(-1, 2), R(1, 2), R(0), R(0), R(0)},
        {19, R(0), R(1), R(2), R(0), R(-3)},
        {21, R(0), R(-2), R(-2), R(0), R(3)},
        {22, R(0), R(-1), R(0), R(0), R(1)},
        {23, R(1), R(1), R(0), R(0), R(-3)},
        {25, R(-1, 2), R(1, 2), R(-1), R(1), R(0)},
        {26, R(-1), R(0), R(0), R(0), R(1)},
        {27, R(0), R(0), R(0), R(0), R(0)},
        {29, R(1), R(0), R(0), R(0), R(-3)},
        {30, R(0), R(0), R(0), R(0), R(-1)},
        {31, R(1), R(1), R(2), R(0), R(-3)},
        {33, R(0), R(-2), R(0), R(0), R(3)},
        {34, R(0), R(0), R(0), R(0), R(1)},
        {35, R(-2), R(0), R(-2), R(0), R(3)},
        {38, R(0), R(-1), R(0), R(0), R(1)},
        {42, R(0), R(2), R(0), R(0), R(-1)},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// tr(T(3) | S^0_k(N)) = c_pow (-3)^kappa + c_pow_sign (-3)^kappa B_k
//                       + c_a1 a_{1,3,k} + c_a2 a_{2,3,k}
//                       + c_const + c_delta [k == 2]
// The N = 11 row carries the corrected delta coefficient -4 (the direct
// evaluation of the trace formula; the weight-2 eigenvalue a_3 = -1 on the
// one-dimensional space confirms it).
struct Trace3Formula {
    int level;
    Rat c_pow, c_pow_sign, c_a1, c_a2, c_const, c_delta;
};

inline Rat eval(const Trace3Formula& f, int k) {
    const int kappa = k / 2 - 1;
    const Rat p = pow_neg(-3, kappa);
    const newtrace::Factored three = newtrace::factor(3);
    return f.c_pow * p + f.c_pow_sign * p * newtrace::B_k(k) +
           f.c_a1 * newtrace::a_coeff(1, three, k) +
           f.c_a2 * newtrace::a_coeff(2, three, k) + f.c_const +
           f.c_delta * delta_k2(k);
}

inline const std::vector<Trace3Formula>& trace3_formulas() {
    static const std::vector<Trace3Formula> rows = {
        {1, R(-2, 3), R(-1, 3), R(-1), R(-1), R(-1), R(4)},
        {2, R(1, 3), R(2, 3), R(2), R(1), R(0), R(-4)},
        {3, R(2, 3), R(1, 3), R(0), R(0), R(0), R(-1)},
        {4, R(1, 3), R(-1, 3), R(-1), R(1), R(0), R(0)},
        {5, R(4, 3), R(2, 3), R(0), R(2), R(0), R(-4)},
        {6, R(-1, 3), R(-2, 3), R(0), R(0), R(0), R(1)},
        {7, R(0), R(0), R(2), R(2), R(0), R(-4)},
        {8, R(1), R(0), R(0), R(-1), R(0), R(0)},
        {10, R(-2, 3), R(-4, 3), R(0), R(-2), R(0), R(4)},
        {11, R(4, 3), R(2, 3), R(1), R(0), R(0), R(-4)},
        {12, R(-1, 3), R(1, 3), R(0), R(0), R(0), R(0)},
        {13, R(0), R(0), R(2), R(2), R(0), R(-4)},
        {14, R(0), R(0), R(-4), R(-2), R(0), R(4)},
        {15, R(-4, 3), R(-2, 3), R(0), R(0), R(0), R(1)},
        {16, R(-1), R(0), R(0), R(0), R(1), R(0)},
        {17, R(4, 3), R(2, 3), R(2), R(0), R(0), R(-4)},
        {19, R(0), R(0), R(2), R(0), R(0), R(-4)},
        {20, R(-2, 3), R(2, 3), R(0), R(-2), R(0), R(0)},
        {21, R(0), R(0), R(0), R(0), R(0), R(1)},
        {22, R(-2, 3), R(-4, 3), R(-2), R(0), R(0), R(4)},
        {23, R(4, 3), R(2, 3), R(0), R(2), R(0), R(-4)},
        {24, R(-1), R(0), R(0), R(0), R(0), R(0)},
        {25, R(-2, 3), R(-1, 3), R(1), R(-1), R(1), R(0)},
        {26, R(0), R(0), R(-4), R(-2), R(0), R(4)},
        {28, R(0), R(0), R(2), R(-2), R(0), R(0)},
        {29, R(4, 3), R(2, 3), R(2), R(2), R(0), R(-4)},
        {30, R(2, 3), R(4, 3), R(0), R(0), R(0), R(-1)},
        {31, R(0), R(0), R(0), R(2), R(0), R(-4)},
        {32, R(0), R(0), R(0), R(0), R(0), R(0)},
        {33, R(-4, 3), R(-2, 3), R(0), R(0), R(0), R(1)},
        {34, R(-2, 3), R(-4, 3), R(-4), R(0), R(0), R(4)},
        {35, R(0), R(0), R(0), R(-4), R(0), R(4)},
        {39, R(0), R(0), R(0), R(0), R(0), R(1)},
        {42, R(0), R(0), R(0), R(0), R(0), R(-1)},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// tr(T(l) | S^0_k(N)) = c_pow (-l)^kappa + c_delta [k == 2]
// over the pairs with (l, N) > 2 sqrt(l).
struct TraceLFormula {
    int hecke;
    int level;
    int c_pow;
    int c_delta;
};

inline Rat eval(const TraceLFormula& f, int k) {
    return f.c_pow * pow_neg(-f.hecke, k / 2 - 1) +
           Rat(f.c_delta * delta_k2(k));
}

inline const std::vector<TraceLFormula>& traceL_formulas() {
    static const std::vector<TraceLFormula> rows = {
        {5, 5, 1, -1},    {5, 10, -1, 1},  {5, 15, 0, 1},   {5, 20, -1, 0},
        {5, 30, 0, -1},   {5, 35, 0, 1},   {5, 40, 1, 0},   {6, 6, -1, 1},
        {6, 30, 0, -1},   {6, 42, 0, -1},  {7, 7, 1, -1},   {7, 14, 0, 1},
        {7, 21, -2, 1},   {7, 28, 0, 0},   {7, 35, -2, 1},  {7, 42, 0, -1},
        {10, 10, -1, 1},  {10, 30, 2, -1}, {11, 11, 2, -1}, {11, 22, -1, 1},
        {11, 33, 0, 1},   {13, 13, 1, -1}, {13, 26, -1, 1}, {13, 39, -2, 1},
        {14, 14, -2, 1},  {14, 42, 0, -1}, {15, 15, -2, 1}, {15, 30, 0, -1},
        {17, 17, 2, -1},  {17, 34, -2, 1}, {19, 19, 2, -1}, {19, 38, -1, 1},
        {21, 21, -2, 1},  {21, 42, 2, -1}, {22, 11, 1, -3}, {22, 22, -1, 1},
        {22, 33, -2, 3},  {23, 23, 3, -1}, {26, 13, 3, -3}, {26, 26, -3, 1},
        {26, 39, 0, -1},  {29, 29, 3, -1}, {30, 15, -2, 3}, {30, 30, 2, -1},
        {31, 31, 3, -1},  {33, 33, -2, 1}, {34, 17, 2, -3}, {34, 34, -2, 1},
        {35, 35, -4, 1},  {37, 37, 1, -1}, {38, 19, 3, -3}, {38, 38, -3, 1},
        {39, 13, 4, -4},  {39, 26, 0, 4},  {39, 39, -4, 1}, {41, 41, 4, -1},
        {42, 14, -2, 4},  {42, 21, -2, 3}, {42, 42, 2, -1},
    };
    return rows;
}

// ---------------------------------------------------------------------------
// Split-dimension grids: d_k(N; i) = base + slope * n for k = k0 + period * n.
// Columns may group several i that share a formula; the suite asserts every
// member of the group.
struct SplitCell {
    int base;
    int slope;
};

struct SplitRow {
    int k0;
    std::vector<SplitCell> cells;  // one per column group
};

struct SplitBlock {
    int level;
    int period;
    std::vector<std::vector<std::int64_t>> groups;
    std::vector<SplitRow> rows;
};

inline const std::vector<SplitBlock>& split_blocks() {
    static const std::vector<SplitBlock> blocks = {
        // primes
        {2, 24, {{1}, {2}},
         {{2, {{1, 1}, {0, 1}}},   {4, {{0, 1}, {0, 1}}},
          {6, {{0, 1}, {0, 1}}},   {8, {{0, 1}, {1, 1}}},
          {10, {{1, 1}, {0, 1}}},  {12, {{0, 1}, {0, 1}}},
          {14, {{1, 1}, {1, 1}}},  {16, {{0, 1}, {1, 1}}},
          {18, {{1, 1}, {0, 1}}},  {20, {{1, 1}, {1, 1}}},
          {22, {{1, 1}, {1, 1}}},  {24, {{0, 1}, {1, 1}}}}},
        {3, 12, {{1}, {3}},
         {{2, {{1, 1}, {0, 1}}},  {4, {{0, 1}, {0, 1}}},
          {6, {{1, 1}, {0, 1}}},  {8, {{0, 1}, {1, 1}}},
          {10, {{1, 1}, {1, 1}}}, {12, {{0, 1}, {1, 1}}}}},
        {5, 12, {{1}, {5}},
         {{2, {{1, 2}, {0, 2}}},  {4, {{0, 2}, {1, 2}}},
          {6, {{1, 2}, {0, 2}}},  {8, {{1, 2}, {2, 2}}},
          {10, {{2, 2}, {1, 2}}}, {12, {{1, 2}, {2, 2}}}}},
        {11, 12, {{1}, {11}},
         {{2, {{2, 5}, {0, 5}}},  {4, {{0, 5}, {2, 5}}},
          {6, {{3, 5}, {1, 5}}},  {8, {{2, 5}, {4, 5}}},
          {10, {{5, 5}, {3, 5}}}, {12, {{3, 5}, {5, 5}}}}},
        {17, 12, {{1}, {17}},
         {{2, {{2, 8}, {0, 8}}},  {4, {{1, 8}, {3, 8}}},
          {6, {{4, 8}, {2, 8}}},  {8, {{4, 8}, {6, 8}}},
          {10, {{7, 8}, {5, 8}}}, {12, {{6, 8}, {8, 8}}}}},
        {23, 12, {{1}, {23}},
         {{2, {{3, 11}, {0, 11}}},   {4, {{1, 11}, {4, 11}}},
          {6, {{6, 11}, {3, 11}}},   {8, {{5, 11}, {8, 11}}},
          {10, {{10, 11}, {7, 11}}}, {12, {{8, 11}, {11, 11}}}}},
        {29, 12, {{1}, {29}},
         {{2, {{3, 14}, {0, 14}}},   {4, {{2, 14}, {5, 14}}},
          {6, {{7, 14}, {4, 14}}},   {8, {{7, 14}, {10, 14}}},
          {10, {{12, 14}, {9, 14}}}, {12, {{11, 14}, {14, 14}}}}},
        {41, 12, {{1}, {41}},
         {{2, {{4, 20}, {0, 20}}},    {4, {{3, 20}, {7, 20}}},
          {6, {{10, 20}, {6, 20}}},   {8, {{10, 20}, {14, 20}}},
          {10, {{17, 20}, {13, 20}}}, {12, {{16, 20}, {20, 20}}}}},
        {7, 4, {{1}, {7}}, {{2, {{1, 1}, {0, 1}}}, {4, {{0, 1}, {1, 1}}}}},
        {13, 4, {{1}, {13}}, {{2, {{1, 2}, {0, 2}}}, {4, {{1, 2}, {2, 2}}}}},
        {19, 4, {{1}, {19}}, {{2, {{2, 3}, {0, 3}}}, {4, {{1, 3}, {3, 3}}}}},
        {31, 4, {{1}, {31}}, {{2, {{3, 5}, {0, 5}}}, {4, {{2, 5}, {5, 5}}}}},
        {37, 4, {{1}, {37}}, {{2, {{2, 6}, {1, 6}}}, {4, {{4, 6}, {5, 6}}}}},
        // squarefree composites
        {6, 24, {{1}, {2}, {3}, {6}},
         {{2, {{-1, 1}, {0, 1}, {0, 1}, {0, 1}}},
          {4, {{0, 1}, {0, 1}, {0, 1}, {1, 1}}},
          {6, {{0, 1}, {0, 1}, {1, 1}, {0, 1}}},
          {8, {{1, 1}, {0, 1}, {0, 1}, {0, 1}}},
          {10, {{0, 1}, {1, 1}, {0, 1}, {0, 1}}},
          {12, {{1, 1}, {1, 1}, {0, 1}, {1, 1}}},
          {14, {{0, 1}, {0, 1}, {1, 1}, {0, 1}}},
          {16, {{1, 1}, {0, 1}, {1, 1}, {1, 1}}},
          {18, {{0, 1}, {1, 1}, {1, 1}, {1, 1}}},
          {20, {{1, 1}, {1, 1}, {0, 1}, {1, 1}}},
          {22, {{1, 1}, {1, 1}, {1, 1}, {0, 1}}},
          {24, {{2, 1}, {1, 1}, {1, 1}, {1, 1}}}}},
        {10, 12, {{1}, {2, 5, 10}},
         {{2, {{-1, 1}, {0, 1}}}, {4, {{1, 1}, {0, 1}}},
          {6, {{0, 1}, {1, 1}}},  {8, {{1, 1}, {0, 1}}},
          {10, {{0, 1}, {1, 1}}}, {12, {{2, 1}, {1, 1}}}}},
        {14, 8, {{1}, {2}, {7}, {14}},
         {{2, {{-1, 1}, {1, 1}, {0, 1}, {0, 1}}},
          {4, {{1, 1}, {0, 1}, {0, 1}, {1, 1}}},
          {6, {{0, 1}, {1, 1}, {1, 1}, {0, 1}}},
          {8, {{2, 1}, {0, 1}, {1, 1}, {1, 1}}}}},
        {15, 12, {{1}, {3}, {5}, {15}},
         {{2, {{-1, 2}, {1, 2}, {0, 2}, {0, 2}}},
          {4, {{1, 2}, {0, 2}, {0, 2}, {1, 2}}},
          {6, {{0, 2}, {2, 2}, {1, 2}, {1, 2}}},
          {8, {{2, 2}, {0, 2}, {1, 2}, {1, 2}}},
          {10, {{1, 2}, {2, 2}, {2, 2}, {1, 2}}},
          {12, {{3, 2}, {1, 2}, {2, 2}, {2, 2}}}}},
        {21, 4, {{1}, {3, 21}, {7}},
         {{2, {{-1, 1}, {0, 1}, {1, 1}}}, {4, {{2, 1}, {1, 1}, {0, 1}}}}},
        {22, 24, {{1}, {2, 22}, {11}},
         {{2, {{-1, 5}, {0, 5}, {0, 5}}},  {4, {{1, 5}, {1, 5}, {0, 5}}},
          {6, {{1, 5}, {1, 5}, {2, 5}}},   {8, {{2, 5}, {1, 5}, {1, 5}}},
          {10, {{1, 5}, {2, 5}, {2, 5}}},  {12, {{3, 5}, {3, 5}, {2, 5}}},
          {14, {{2, 5}, {2, 5}, {3, 5}}},  {16, {{4, 5}, {3, 5}, {3, 5}}},
          {18, {{3, 5}, {4, 5}, {4, 5}}},  {20, {{4, 5}, {4, 5}, {3, 5}}},
          {22, {{4, 5}, {4, 5}, {5, 5}}},  {24, {{6, 5}, {5, 5}, {5, 5}}}}},
        {26, 4, {{1}, {2, 13}, {26}},
         {{2, {{-1, 1}, {1, 1}, {0, 1}}}, {4, {{2, 1}, {0, 1}, {1, 1}}}}},
        {33, 12, {{1}, {3}, {11}, {33}},
         {{2, {{-1, 5}, {1, 5}, {0, 5}, {0, 5}}},
          {4, {{2, 5}, {1, 5}, {1, 5}, {2, 5}}},
          {6, {{1, 5}, {3, 5}, {2, 5}, {2, 5}}},
          {8, {{4, 5}, {2, 5}, {3, 5}, {3, 5}}},
          {10, {{3, 5}, {4, 5}, {4, 5}, {3, 5}}},
          {12, {{6, 5}, {4, 5}, {5, 5}, {5, 5}}}}},
        {34, 12, {{1}, {2, 34}, {17}},
         {{2, {{-1, 4}, {0, 4}, {1, 4}}},  {4, {{2, 4}, {1, 4}, {0, 4}}},
          {6, {{1, 4}, {2, 4}, {3, 4}}},   {8, {{3, 4}, {2, 4}, {1, 4}}},
          {10, {{2, 4}, {3, 4}, {4, 4}}},  {12, {{5, 4}, {4, 4}, {3, 4}}}}},
        {35, 4, {{1}, {5}, {7}, {35}},
         {{2, {{-1, 2}, {1, 2}, {2, 2}, {0, 2}}},
          {4, {{3, 2}, {1, 2}, {0, 2}, {2, 2}}}}},
        {38, 8, {{1}, {2}, {19}, {38}},
         {{2, {{-1, 3}, {1, 3}, {1, 3}, {0, 3}}},
          {4, {{2, 3}, {1, 3}, {0, 3}, {2, 3}}},
          {6, {{1, 3}, {2, 3}, {3, 3}, {1, 3}}},
          {8, {{4, 3}, {2, 3}, {2, 3}, {3, 3}}}}},
        {39, 4, {{1}, {3}, {13}, {39}},
         {{2, {{-1, 2}, {1, 2}, {2, 2}, {0, 2}}},
          {4, {{3, 2}, {1, 2}, {0, 2}, {2, 2}}}}},
        {30, 12, {{1, 10}, {3, 6, 15, 30}, {2, 5}},
         {{2, {{1, 1}, {0, 1}, {0, 1}}},  {4, {{0, 1}, {0, 1}, {1, 1}}},
          {6, {{1, 1}, {0, 1}, {0, 1}}},  {8, {{0, 1}, {1, 1}, {1, 1}}},
          {10, {{1, 1}, {1, 1}, {0, 1}}}, {12, {{0, 1}, {1, 1}, {1, 1}}}}},
        {42, 8, {{1, 21}, {2, 6, 14, 42}, {3, 7}},
         {{2, {{1, 1}, {0, 1}, {0, 1}}}, {4, {{0, 1}, {0, 1}, {1, 1}}},
          {6, {{1, 1}, {1, 1}, {0, 1}}}, {8, {{0, 1}, {1, 1}, {1, 1}}}}},
        // non-squarefree levels
        {12, 12, {{1}, {3}},
         {{2, {{0, 1}, {0, 1}}},  {4, {{1, 1}, {0, 1}}},
          {6, {{0, 1}, {0, 1}}},  {8, {{1, 1}, {1, 1}}},
          {10, {{0, 1}, {1, 1}}}, {12, {{1, 1}, {1, 1}}}}},
        {20, 12, {{1}, {5}},
         {{2, {{0, 2}, {1, 2}}},  {4, {{1, 2}, {0, 2}}},
          {6, {{0, 2}, {1, 2}}},  {8, {{2, 2}, {1, 2}}},
          {10, {{1, 2}, {2, 2}}}, {12, {{2, 2}, {1, 2}}}}},
        {18, 24, {{1}, {2}},
         {{2, {{0, 5}, {0, 5}}},   {4, {{1, 5}, {0, 5}}},
          {6, {{1, 5}, {2, 5}}},   {8, {{1, 5}, {1, 5}}},
          {10, {{2, 5}, {2, 5}}},  {12, {{3, 5}, {2, 5}}},
          {14, {{2, 5}, {3, 5}}},  {16, {{3, 5}, {3, 5}}},
          {18, {{4, 5}, {4, 5}}},  {20, {{4, 5}, {3, 5}}},
          {22, {{4, 5}, {5, 5}}},  {24, {{5, 5}, {5, 5}}}}},
        {24, 4, {{1}, {3}}, {{2, {{0, 1}, {1, 1}}}, {4, {{1, 1}, {0, 1}}}}},
        {28, 4, {{1, 7}}, {{2, {{0, 1}}}, {4, {{1, 1}}}}},
        {40, 4, {{1}, {5}}, {{2, {{1, 2}, {0, 2}}}, {4, {{1, 2}, {2, 2}}}}},
    };
    return blocks;
}

}  // namespace golden

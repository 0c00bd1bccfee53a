#pragma once

#include <cstdint>

#include "newtrace/factored.hpp"
#include "newtrace/rational.hpp"

namespace newtrace {

// Decomposition D = d * m^2 with d a fundamental discriminant, or d = 1 when
// D is a positive perfect square.
struct DiscSplit {
    std::int64_t input;
    std::int64_t d;
    std::int64_t m;
};

// Requires D != 0 and D = 0 or 1 mod 4.
DiscSplit split_disc(std::int64_t D);

bool is_fundamental_discriminant(std::int64_t d);

// Class number of Q(sqrt(d)) for a negative fundamental discriminant d,
// by exhaustive enumeration of reduced binary quadratic forms (a, b, c):
// b^2 - 4ac = d, |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
// Results are memoized; if the environment variable NEWTRACE_CACHE_DIR is
// set, values are persisted to <dir>/class_numbers.txt as "d=h" lines.
std::int64_t class_number(std::int64_t d);

// Number of units in Q(sqrt(d)): 6 for d = -3, 4 for d = -4, else 2.
int unit_count(std::int64_t d);

// The class-number weight attached to t with t^2 - 4l < 0 or a perfect
// square: h(d)/units for the negative case, exactly 1 for the square case.
Rat h_weight(std::int64_t t, const Factored& l);

}  // namespace newtrace

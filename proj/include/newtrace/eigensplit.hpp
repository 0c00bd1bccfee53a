#pragma once

#include <cstdint>

#include "newtrace/factored.hpp"
#include "newtrace/rational.hpp"

namespace newtrace {

// Trace of T(l) on the subspace S^0_k(N; i) spanned by primitive forms whose
// eigenvalue at p is -p^kappa exactly for the primes p | i (i a divisor of
// N^* = nstar(N)):
//   1/sigma(N^*) sum_{h | N^*} <h,i> h^(-kappa) tr(T(hl) | S^0_k(N)),
// where sigma counts divisors. Requires i | N^*, gcd(l, N^*) = 1 and l
// squarefree. Inner indices hl are squarefree; levels where some p | l has
// p^2 | N contribute 0 through the vanishing rule of trace_newform.
Rat trace_split(int k, const Factored& N, const Factored& l, const Factored& i);

// dim S^0_k(N; i) = trace_split at l = 1; a nonnegative integer (the 1/sigma
// average is checked to be exact).
std::int64_t dim_split(int k, const Factored& N, std::int64_t i);

// d_k(N; i) = dim S^0_k(N; i) - mu(N) [k == 2][i == 1], the quantity the
// split-dimension tables are stated in.
std::int64_t d_table(int k, const Factored& N, std::int64_t i);

Rat trace_split(int k, std::int64_t N, std::int64_t l, std::int64_t i);
std::int64_t dim_split(int k, std::int64_t N, std::int64_t i);
std::int64_t d_table(int k, std::int64_t N, std::int64_t i);

}  // namespace newtrace

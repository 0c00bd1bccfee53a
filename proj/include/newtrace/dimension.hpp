#pragma once

#include <cstdint>

#include "newtrace/factored.hpp"

namespace newtrace {

// dim S_k(N): the classical dimension formula
//   (k-1)/12 eps_id + 1/4 (-1)^(k/2) eps_2 - 1/3 (k-1|3) eps_3
//   - 1/2 eps_inf + [k == 2]
// evaluated at N. Weight must be even and >= 2.
std::int64_t dim_full(int k, const Factored& N);

// dim of the newform subspace, via the closed prime-power forms of
// mu*mu*eps_id and mu*mu*eps_inf together with K_{-4}, K_{-3} and mu.
std::int64_t dim_newform(int k, const Factored& N);

// Same quantity through the generic convolution machinery
// (mu * mu * dim_full); kept as an independent route for cross-checking.
std::int64_t dim_newform_via_convolution(int k, const Factored& N);

std::int64_t dim_full(int k, std::int64_t N);
std::int64_t dim_newform(int k, std::int64_t N);

}  // namespace newtrace

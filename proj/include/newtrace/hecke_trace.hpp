#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "newtrace/factored.hpp"
#include "newtrace/rational.hpp"

namespace newtrace {

// A validated trace query: even weight k >= 2, level N, squarefree Hecke
// index l. kappa = k/2 - 1 throughout.
struct TraceQuery {
    TraceQuery(int k, Factored N, Factored l);

    int k;
    Factored N;
    Factored l;

    int kappa() const { return k / 2 - 1; }
};

TraceQuery make_query(int k, std::int64_t N, std::int64_t l);

enum class TKind { NegativeDisc, SquareDisc };

struct TElement {
    std::int64_t t;
    TKind kind;
    std::int64_t d;  // fundamental discriminant of t^2 - 4l (1 in the square case)
    std::int64_t m;  // conductor: t^2 - 4l = d m^2
};

// The nonnegative representatives of the index sets over which the trace
// formula runs: t >= 0 with t^2 - 4l < 0, and t = e + l/e over divisor pairs
// of l (the t with t^2 - 4l a perfect square). For squarefree l > 1 the two
// sets are disjoint. Negative t contribute by the symmetry t <-> -t.
struct TSets {
    std::vector<TElement> negative;  // ascending t
    std::vector<TElement> square;    // ascending t
};
TSets t_sets(const Factored& l);

// The weight attached to t in the trace formula:
//  - t^2 - 4l < 0: the integer (zeta^(k-1) - eta^(k-1)) / (zeta - eta) for
//    zeta, eta the roots of X^2 - tX + l, computed by the linear recurrence
//    u_0 = 0, u_1 = 1, u_{j+1} = t u_j - l u_{j-1};
//  - t^2 - 4l a positive square: min(zeta, eta)^(k-1) / (2 |zeta - eta|).
Rat a_coeff(std::int64_t t, const Factored& l, int k);

// b = phi * prod_{p | phi} (1 - (d|p)/p) for phi | m(t, l); integer-valued.
// In the square case (d = 1) this is Euler's phi of the argument.
Int b_factor(std::int64_t t, const Factored& l, std::int64_t phi);

// The local solution count c_{t,l,phi}(p^n), from the definition: with
// psi = m/phi and a = v_p(psi),
//   first sum:  solutions of x^2 - tx + l = 0 mod p^(2a+n), projected to
//               residues mod p^(a+n), counting classes y with p not | y;
//   second sum: only when p | d*phi, same with modulus p^(2a+n+1) and the
//               condition p not | (t - y).
std::int64_t c_local(std::int64_t t, const Factored& l, std::int64_t phi,
                     std::int64_t p, int n);

// Closed form for c_{t,l,phi}(p^n) where one of the two proved case tables
// applies (p coprime to l*m, or m prime with p = m and m not | l); nullopt
// outside that domain. Agrees with c_local everywhere it is defined.
std::optional<std::int64_t> c_closed(std::int64_t t, const Factored& l,
                                     std::int64_t phi, std::int64_t p, int n);

// Lambda_{t,l}(N) = sum_{phi | m} b_{t,l,phi} (mu * mu[l] * c_{t,l,phi})(N),
// each summand evaluated prime-power-wise from c_local.
Rat lambda_definitional(std::int64_t t, const Factored& l, const Factored& N);

// Closed forms: 0 when (l,N) does not divide t, and the K_d tables when the
// conductor m(t,l) is 1 or prime. Valid only under (l, N/(l,N)) = 1; nullopt
// when no closed case applies.
std::optional<Rat> lambda_closed(std::int64_t t, const Factored& l,
                                 const Factored& N);

// Closed form where applicable, definitional sum otherwise. The two routes
// agree on the closed forms' whole domain (enforced by the test suite); the
// definitional path stays authoritative.
Rat lambda(std::int64_t t, const Factored& l, const Factored& N);

// tr(T(l) | S_k(N)): the Eichler-Selberg trace formula specialized to
// trivial character and squarefree l,
//   -sum_t a h sum_{phi|m} b c(N) + [k==2] prod_{p|l}(1+p) omega_l(N),
// with omega_l(p^n) = p/(1+p) for p | l and 1 otherwise. l = 1 gives the
// dimension. Always an integer-valued Rat.
Rat trace_full(const TraceQuery& q);

// tr(T(l) | S^0_k(N)) on the newform subspace:
//   -sum_t a h Lambda_{t,l}(N) + [k==2] mu(N) prod_{p | l, p not | N} (1+p),
// and 0 whenever (l, N/(l,N)) != 1. l = 1 gives dim S^0_k(N).
Rat trace_newform(const TraceQuery& q);

Rat trace_full(int k, std::int64_t N, std::int64_t l);
Rat trace_newform(int k, std::int64_t N, std::int64_t l);

// Sign patterns entering the l = 2 and l = 3 closed evaluators:
// A_k = +1 for k = 0,2 mod 8 and -1 for k = 4,6; B_k = +1 for k = 0,2 mod 6
// and -2 for k = 4.
int A_k(int k);
int B_k(int k);

// Closed evaluator for tr(T(2) | S^0_k(N)), valid when 4 does not divide N:
//   -1/2 (-2)^kappa (K_{-8} + A_k K_{-4}) - a_{1,2,k} K_{-7} - K_1 + delta term.
std::optional<Rat> trace_newform_closed_l2(int k, const Factored& N);

// Closed evaluator for tr(T(3) | S^0_k(N)), valid when 9 does not divide N.
std::optional<Rat> trace_newform_closed_l3(int k, const Factored& N);

// Closed evaluator for (l, N) > 2 sqrt(l): the t-sum collapses to t = 0,
//   -h(d(0,l))/2 (-l)^kappa Lambda_{0,l}(N) + delta term.
std::optional<Rat> trace_newform_closed_large_gcd(const TraceQuery& q);

}  // namespace newtrace

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "newtrace/rational.hpp"

namespace newtrace {

// Truncated q-expansion sum a_n q^n, 0 <= n <= precision, with exact
// rational coefficients. Weight and level are carried as metadata only
// (weights add and levels lcm under products, the level multiplies under
// dilation); no modularity is enforced by the type.
class QSeries {
public:
    QSeries(int precision, int weight, std::int64_t level);

    int precision() const { return precision_; }
    int weight() const { return weight_; }
    std::int64_t level() const { return level_; }

    const Rat& coeff(int n) const;
    void set_coeff(int n, Rat value);

    // Sums and products truncate to the smaller operand precision.
    QSeries operator+(const QSeries& other) const;
    QSeries operator-(const QSeries& other) const;
    QSeries operator*(const QSeries& other) const;
    QSeries scaled(const Rat& c) const;

    // f(q) -> f(q^h): moves a_n to position h*n.
    QSeries dilated(int h) const;

private:
    std::vector<Rat> a_;
    int precision_;
    int weight_;
    std::int64_t level_;
};

// The weight-2 level-2 Eisenstein series 1 + 24 sum (sum_{d|n, d odd} d) q^n.
QSeries eisenstein_c2(int prec);

// The weight-1 Eisenstein series 1 + 2 sum (sum_{d|n} chi7(d)) q^n for the
// quadratic character chi7(d) = (d|7), extended by zero at multiples of 7.
QSeries eisenstein_f7(int prec);

// The level-14 weight-2 cuspform 1/2 (F7 - F7(q^2)) (2 F7(q^2) - F7),
// with q-expansion q - q^2 - 2q^3 + ...
QSeries delta14(int prec);

// The two weight-4 level-14 primitive forms: the all-plus-signs form
// 1/8 Delta (C2 + 7 C2(q^7)) and the all-minus-signs form
// 1/2 Delta (3 F7^2 - 7 F7 F7(q^2) + 6 F7(q^2)^2).
struct Weight4Forms {
    QSeries f1;   // eigenvalue +p^kappa at p = 2, 7
    QSeries f14;  // eigenvalue -p^kappa at p = 2, 7
};
Weight4Forms weight4_forms(int prec);

struct VerifyReport {
    bool pass = true;
    std::string first_failure;
    int checks = 0;
};

// Checks that f (with a_1 = 1) has the coefficient structure of a primitive
// form up to the given precision: multiplicativity at coprime indices, the
// Hecke recursion a_{p^(r+1)} = a_p a_{p^r} - p^(k-1) a_{p^(r-1)} away from
// the level (dropping the p^(k-1) term at p | N), and — whenever
// dim S^0_k(N) = 1 — agreement of a_l with trace_newform(k, N, l) for every
// squarefree l satisfying (l, N/(l,N)) = 1. Stops at the first failure.
VerifyReport hecke_verify(const QSeries& f, int k, std::int64_t N, int prec);

// Same structural checks, with the trace comparison taken inside the sign
// subspace: a_l against trace_split(k, N, l, i) for squarefree l coprime to
// nstar(N), whenever dim S^0_k(N; i) = 1.
VerifyReport hecke_verify_split(const QSeries& f, int k, std::int64_t N,
                                std::int64_t i, int prec);

}  // namespace newtrace

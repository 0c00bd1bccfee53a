#include "newtrace/qexpansion.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "newtrace/arith.hpp"
#include "newtrace/dimension.hpp"
#include "newtrace/eigensplit.hpp"
#include "newtrace/factored.hpp"
#include "newtrace/hecke_trace.hpp"

namespace newtrace {

QSeries::QSeries(int precision, int weight, std::int64_t level)
    : a_(precision + 1), precision_(precision), weight_(weight), level_(level) {
    if (precision < 1) {
        throw std::invalid_argument("QSeries: precision must be >= 1");
    }
}

const Rat& QSeries::coeff(int n) const {
    if (n < 0 || n > precision_) {
        throw std::out_of_range("QSeries: coefficient index " + std::to_string(n) +
                                " beyond precision " + std::to_string(precision_));
    }
    return a_[n];
}

void QSeries::set_coeff(int n, Rat value) {
    if (n < 0 || n > precision_) {
        throw std::out_of_range("QSeries: coefficient index out of range");
    }
    a_[n] = std::move(value);
}

QSeries QSeries::operator+(const QSeries& other) const {
    QSeries out(std::min(precision_, other.precision_), weight_,
                std::lcm(level_, other.level_));
    for (int n = 0; n <= out.precision_; ++n) out.a_[n] = a_[n] + other.a_[n];
    return out;
}

QSeries QSeries::operator-(const QSeries& other) const {
    QSeries out(std::min(precision_, other.precision_), weight_,
                std::lcm(level_, other.level_));
    for (int n = 0; n <= out.precision_; ++n) out.a_[n] = a_[n] - other.a_[n];
    return out;
}

QSeries QSeries::operator*(const QSeries& other) const {
    QSeries out(std::min(precision_, other.precision_), weight_ + other.weight_,
                std::lcm(level_, other.level_));
    for (int i = 0; i <= out.precision_; ++i) {
        if (a_[i] == 0) continue;
        for (int j = 0; i + j <= out.precision_; ++j) {
            if (other.a_[j] == 0) continue;
            out.a_[i + j] += a_[i] * other.a_[j];
        }
    }
    return out;
}

QSeries QSeries::scaled(const Rat& c) const {
    QSeries out(precision_, weight_, level_);
    for (int n = 0; n <= precision_; ++n) out.a_[n] = c * a_[n];
    return out;
}

QSeries QSeries::dilated(int h) const {
    if (h < 1) throw std::invalid_argument("QSeries: dilation factor must be >= 1");
    QSeries out(precision_, weight_, level_ * h);
    for (int n = 0; std::int64_t(n) * h <= precision_; ++n) out.a_[n * h] = a_[n];
    return out;
}

QSeries eisenstein_c2(int prec) {
    QSeries out(prec, 2, 2);
    out.set_coeff(0, 1);
    for (int n = 1; n <= prec; ++n) {
        Int sum = 0;
        for (std::int64_t d : factor(n).divisors()) {
            if (d % 2 == 1) sum += d;
        }
        out.set_coeff(n, Rat(24 * sum));
    }
    return out;
}

QSeries eisenstein_f7(int prec) {
    QSeries out(prec, 1, 7);
    out.set_coeff(0, 1);
    for (int n = 1; n <= prec; ++n) {
        Int sum = 0;
        for (std::int64_t d : factor(n).divisors()) sum += kronecker(d, 7);
        out.set_coeff(n, Rat(2 * sum));
    }
    return out;
}

QSeries delta14(int prec) {
    if (prec < 4) throw std::invalid_argument("delta14: precision must be >= 4");
    const QSeries f7 = eisenstein_f7(prec);
    const QSeries f7_2 = f7.dilated(2);
    QSeries out = ((f7 - f7_2) * (f7_2.scaled(2) - f7)).scaled(Rat(1, 2));
    return out;
}

Weight4Forms weight4_forms(int prec) {
    if (prec < 5) {
        throw std::invalid_argument("weight4_forms: precision must be >= 5");
    }
    const QSeries delta = delta14(prec);
    const QSeries c2 = eisenstein_c2(prec);
    const QSeries f7 = eisenstein_f7(prec);
    const QSeries f7_2 = f7.dilated(2);

    QSeries f1 = (delta * (c2 + c2.dilated(7).scaled(7))).scaled(Rat(1, 8));
    QSeries f14 = (delta * (f7 * f7).scaled(3) - delta * (f7 * f7_2).scaled(7) +
                   delta * (f7_2 * f7_2).scaled(6))
                      .scaled(Rat(1, 2));
    return {std::move(f1), std::move(f14)};
}

namespace {

// Returns the reference value for a_l, or nullopt when l is outside the
// oracle's domain.
using TraceOracle = std::function<std::optional<Rat>(std::int64_t l)>;

VerifyReport verify_impl(const QSeries& f, int k, std::int64_t N, int prec,
                         const TraceOracle& oracle) {
    VerifyReport report;
    if (f.coeff(1) != 1) {
        throw std::invalid_argument("hecke_verify: series is not normalized (a_1 != 1)");
    }
    prec = std::min(prec, f.precision());

    auto fail = [&](int n, const std::string& what) {
        report.pass = false;
        report.first_failure = "n = " + std::to_string(n) + ": " + what;
    };

    for (int n = 2; n <= prec && report.pass; ++n) {
        const Factored nf = factor(n);
        if (nf.factors().size() > 1) {
            Rat prod = 1;
            for (const auto& pe : nf.factors()) {
                std::int64_t q = 1;
                for (int e = 0; e < pe.exponent; ++e) q *= pe.prime;
                prod *= f.coeff(int(q));
            }
            ++report.checks;
            if (f.coeff(n) != prod) {
                fail(n, "coefficient is not multiplicative across coprime parts");
                break;
            }
        } else if (nf.factors()[0].exponent >= 2) {
            const std::int64_t p = nf.factors()[0].prime;
            const int r = nf.factors()[0].exponent - 1;  // n = p^(r+1)
            const std::int64_t pr = n / p;
            Rat expected = f.coeff(int(p)) * f.coeff(int(pr));
            if (N % p != 0) {
                expected -= Rat(int_pow(Int(p), unsigned(k - 1))) *
                            f.coeff(int(pr / p));
            }
            ++report.checks;
            if (f.coeff(n) != expected) {
                fail(n, "Hecke recursion fails at p = " + std::to_string(p) +
                            ", exponent " + std::to_string(r + 1));
                break;
            }
        }
    }

    if (report.pass) {
        for (int l = 2; l <= prec && report.pass; ++l) {
            if (!factor(l).is_squarefree()) continue;
            const auto expected = oracle(l);
            if (!expected) continue;
            ++report.checks;
            if (f.coeff(l) != *expected) {
                fail(l, "a_" + std::to_string(l) + " = " +
                            rat_to_string(f.coeff(l)) +
                            " does not match the trace value " +
                            rat_to_string(*expected));
            }
        }
    }
    return report;
}

}  // namespace

VerifyReport hecke_verify(const QSeries& f, int k, std::int64_t N, int prec) {
    const bool oracle_active = dim_newform(k, N) == 1;
    return verify_impl(f, k, N, prec,
                       [&](std::int64_t l) -> std::optional<Rat> {
                           if (!oracle_active) return std::nullopt;
                           const std::int64_t g = std::gcd(l, N);
                           if (std::gcd(l, N / g) != 1) return std::nullopt;
                           return trace_newform(k, N, l);
                       });
}

VerifyReport hecke_verify_split(const QSeries& f, int k, std::int64_t N,
                                std::int64_t i, int prec) {
    const std::int64_t nx = nstar(factor(N)).value();
    const bool oracle_active = dim_split(k, factor(N), i) == 1;
    return verify_impl(f, k, N, prec,
                       [&, i, nx](std::int64_t l) -> std::optional<Rat> {
                           if (!oracle_active) return std::nullopt;
                           if (std::gcd(l, nx) != 1) return std::nullopt;
                           return trace_split(k, N, l, i);
                       });
}

}  // namespace newtrace

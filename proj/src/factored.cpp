#include "newtrace/factored.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace newtrace {

namespace {
constexpr std::int64_t kFactorBound = std::int64_t(1) << 48;
}

Factored::Factored(std::int64_t n) {
    if (n < 1 || n >= kFactorBound) {
        throw std::invalid_argument("factor: argument " + std::to_string(n) +
                                    " outside [1, 2^48)");
    }
    value_ = n;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors_.push_back({p, e});
    }
    if (n > 1) factors_.push_back({n, 1});
}

bool Factored::is_squarefree() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
}

int Factored::exponent_of(std::int64_t p) const {
    for (const auto& f : factors_) {
        if (f.prime == p) return f.exponent;
    }
    return 0;
}

int Factored::mobius() const {
    if (!is_squarefree()) return 0;
    return factors_.size() % 2 == 0 ? 1 : -1;
}

std::int64_t Factored::num_divisors() const {
    std::int64_t count = 1;
    for (const auto& f : factors_) count *= f.exponent + 1;
    return count;
}

std::vector<std::int64_t> Factored::divisors() const {
    std::vector<std::int64_t> out{1};
    for (const auto& f : factors_) {
        const std::size_t base = out.size();
        std::int64_t q = 1;
        for (int e = 1; e <= f.exponent; ++e) {
            q *= f.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Factored factor(std::int64_t n) { return Factored(n); }

}  // namespace newtrace

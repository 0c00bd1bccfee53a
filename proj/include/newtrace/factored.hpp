#pragma once

#include <cstdint>
#include <vector>

namespace newtrace {

struct PrimePower {
    std::int64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer carried together with its prime factorization.
// Invariants: primes strictly increasing, exponents >= 1, product equals
// value(), and value() == 1 iff the factor list is empty.
class Factored {
public:
    Factored() = default;  // the integer 1
    explicit Factored(std::int64_t n);

    std::int64_t value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }

    bool is_squarefree() const;
    int exponent_of(std::int64_t p) const;  // v_p(value)
    int mobius() const;                     // 0 unless squarefree, else (-1)^#primes
    std::int64_t num_divisors() const;
    std::vector<std::int64_t> divisors() const;  // ascending

    friend bool operator==(const Factored& a, const Factored& b) {
        return a.value_ == b.value_;
    }

private:
    std::int64_t value_ = 1;
    std::vector<PrimePower> factors_;
};

// Canonical factorization by trial division. Inputs must lie in
// [1, 2^48); larger inputs are rejected rather than factored slowly.
Factored factor(std::int64_t n);

}  // namespace newtrace

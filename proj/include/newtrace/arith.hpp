#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "newtrace/factored.hpp"
#include "newtrace/rational.hpp"

namespace newtrace {

// Full Kronecker symbol (a|n), defined for all integer pairs except (0, 0).
// Conventions, which the rest of the library depends on:
//   (a|0)  = 1 if a = +-1, else 0
//   (a|-1) = -1 if a < 0, else 1
//   (a|2)  = 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
// and (a|n) is completely multiplicative in n.
int kronecker(std::int64_t a, std::int64_t n);

// Multiplicative function given by its values on prime powers. The value at 1
// is implicitly 1 and evaluation at n is the product over n's prime powers.
// Prime-power values are memoized behind a lock shared by copies; the cache
// never changes results.
class MultFn {
public:
    using Rule = std::function<Rat(std::int64_t prime, int exponent)>;

    MultFn(Rule rule, std::string description);

    Rat at_prime_power(std::int64_t p, int e) const;
    Rat operator()(const Factored& n) const;
    Rat operator()(std::int64_t n) const;

    const std::string& description() const { return state_->description; }

private:
    struct State {
        Rule rule;
        std::string description;
        mutable std::mutex lock;
        mutable std::map<std::pair<std::int64_t, int>, Rat> cache;
    };
    std::shared_ptr<State> state_;
};

// Arbitrary arithmetic function N -> Q, total up to an explicit evaluation
// bound. Evaluating past the bound throws std::out_of_range so convolution
// tests fail loudly instead of silently truncating.
class ArithFn {
public:
    static constexpr std::int64_t kDefaultBound = 1'000'000;

    using Rule = std::function<Rat(std::int64_t)>;

    explicit ArithFn(Rule rule, std::int64_t bound = kDefaultBound);

    Rat operator()(std::int64_t n) const;
    std::int64_t bound() const { return bound_; }

private:
    Rule rule_;
    std::int64_t bound_;
};

ArithFn as_arith(const MultFn& f, std::int64_t bound = ArithFn::kDefaultBound);

// Dirichlet convolution (f*g)(x) = sum_{d|x} f(x/d) g(d).
ArithFn convolve(const ArithFn& f, const ArithFn& g);
// Convolution of multiplicative functions is multiplicative; computed
// prime-power-wise.
MultFn convolve(const MultFn& f, const MultFn& g);

// Restriction f[l]: agrees with f on arguments coprime to l, vanishes
// elsewhere. Satisfies f[l]*g[l] = (f*g)[l].
ArithFn restrict_coprime(const ArithFn& f, const Factored& l);
MultFn restrict_coprime(const MultFn& f, const Factored& l);

MultFn one_fn();     // constant 1
MultFn delta_fn();   // 1 at x = 1, else 0 (the convolution identity)
MultFn mobius_fn();

// The multiplicative function K_d, for d = 0 or 1 mod 4:
//   K_d(p)   = (d|p) - 1
//   K_d(p^2) = -(d|p) if p does not divide d, -1 if p | d
//   K_d(p^3) = 1 if p | d
//   K_d(p^n) = 0 otherwise
MultFn K_fn(std::int64_t d);
Rat K_value(std::int64_t d, const Factored& n);

// The four multiplicative functions entering the cuspform dimension formula:
//   eps_id(p^n)  = p^n + p^(n-1)
//   eps_2(2^n)   = [n == 1],  eps_2(p^n)  = 1 + (-4|p) for odd p
//   eps_3(3^n)   = [n == 1],  eps_3(p^n)  = 1 + (-3|p) for p != 3
//   eps_inf(p^n) = p^floor(n/2) + p^floor((n-1)/2)
struct EpsFunctions {
    MultFn id;
    MultFn two;
    MultFn three;
    MultFn inf;
};
EpsFunctions eps_functions();

// Product of the primes dividing N exactly once.
Factored nstar(const Factored& N);

// <h, i> = (-1)^#(common prime divisors); h, i squarefree.
int sign_pair(const Factored& h, const Factored& i);

// Group law on squarefree divisors: product of the primes dividing exactly
// one of h, h2. Satisfies <h,i><h2,i> = <h xor h2, i>.
Factored xor_divisor(const Factored& h, const Factored& h2);

}  // namespace newtrace

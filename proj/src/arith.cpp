#include "newtrace/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace newtrace {

int kronecker(std::int64_t a, std::int64_t n) {
    if (a == 0 && n == 0) {
        throw std::invalid_argument("kronecker: (0, 0) is undefined");
    }
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;

    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int e = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++e;
        }
        if (e % 2 == 1) {
            const std::int64_t r = ((a % 8) + 8) % 8;
            if (r == 3 || r == 5) result = -result;
        }
    }
    // n odd and positive: the Jacobi symbol is periodic in a mod n.
    a = ((a % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

MultFn::MultFn(Rule rule, std::string description)
    : state_(std::make_shared<State>()) {
    state_->rule = std::move(rule);
    state_->description = std::move(description);
}

Rat MultFn::at_prime_power(std::int64_t p, int e) const {
    if (e < 1) throw std::invalid_argument("MultFn: exponent must be >= 1");
    const auto key = std::make_pair(p, e);
    {
        std::lock_guard<std::mutex> guard(state_->lock);
        auto it = state_->cache.find(key);
        if (it != state_->cache.end()) return it->second;
    }
    Rat value = state_->rule(p, e);
    std::lock_guard<std::mutex> guard(state_->lock);
    return state_->cache.emplace(key, std::move(value)).first->second;
}

Rat MultFn::operator()(const Factored& n) const {
    Rat out = 1;
    for (const auto& f : n.factors()) out *= at_prime_power(f.prime, f.exponent);
    return out;
}

Rat MultFn::operator()(std::int64_t n) const { return (*this)(factor(n)); }

ArithFn::ArithFn(Rule rule, std::int64_t bound)
    : rule_(std::move(rule)), bound_(bound) {
    if (bound_ < 1) throw std::invalid_argument("ArithFn: bound must be >= 1");
}

Rat ArithFn::operator()(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("ArithFn: argument must be >= 1");
    if (n > bound_) {
        throw std::out_of_range("ArithFn: argument " + std::to_string(n) +
                                " beyond evaluation bound " + std::to_string(bound_));
    }
    return rule_(n);
}

ArithFn as_arith(const MultFn& f, std::int64_t bound) {
    return ArithFn([f](std::int64_t n) { return f(n); }, bound);
}

ArithFn convolve(const ArithFn& f, const ArithFn& g) {
    const std::int64_t bound = std::min(f.bound(), g.bound());
    return ArithFn(
        [f, g](std::int64_t x) {
            Rat sum = 0;
            for (std::int64_t d : factor(x).divisors()) sum += f(x / d) * g(d);
            return sum;
        },
        bound);
}

MultFn convolve(const MultFn& f, const MultFn& g) {
    return MultFn(
        [f, g](std::int64_t p, int e) {
            Rat sum = g.at_prime_power(p, e) + f.at_prime_power(p, e);
            for (int r = 1; r < e; ++r) {
                sum += f.at_prime_power(p, e - r) * g.at_prime_power(p, r);
            }
            return sum;
        },
        "(" + f.description() + "*" + g.description() + ")");
}

ArithFn restrict_coprime(const ArithFn& f, const Factored& l) {
    const std::int64_t lv = l.value();
    return ArithFn(
        [f, lv](std::int64_t n) {
            return std::gcd(n, lv) == 1 ? f(n) : Rat(0);
        },
        f.bound());
}

MultFn restrict_coprime(const MultFn& f, const Factored& l) {
    const std::int64_t lv = l.value();
    return MultFn(
        [f, lv](std::int64_t p, int e) {
            return lv % p == 0 ? Rat(0) : f.at_prime_power(p, e);
        },
        f.description() + "[" + std::to_string(lv) + "]");
}

MultFn one_fn() {
    return MultFn([](std::int64_t, int) { return Rat(1); }, "1");
}

MultFn delta_fn() {
    return MultFn([](std::int64_t, int) { return Rat(0); }, "delta");
}

MultFn mobius_fn() {
    return MultFn([](std::int64_t, int e) { return Rat(e == 1 ? -1 : 0); }, "mu");
}

MultFn K_fn(std::int64_t d) {
    if (((d % 4) + 4) % 4 > 1) {
        throw std::invalid_argument("K_fn: d must be 0 or 1 mod 4, got " +
                                    std::to_string(d));
    }
    return MultFn(
        [d](std::int64_t p, int e) -> Rat {
            const bool divides = d % p == 0;
            switch (e) {
                case 1: return kronecker(d, p) - 1;
                case 2: return divides ? -1 : -kronecker(d, p);
                case 3: return divides ? 1 : 0;
                default: return 0;
            }
        },
        "K_" + std::to_string(d));
}

Rat K_value(std::int64_t d, const Factored& n) { return K_fn(d)(n); }

namespace {

Int pow_i64(std::int64_t p, int e) { return int_pow(Int(p), unsigned(e)); }

}  // namespace

EpsFunctions eps_functions() {
    MultFn id(
        [](std::int64_t p, int e) {
            return Rat(pow_i64(p, e) + pow_i64(p, e - 1));
        },
        "eps_id");
    MultFn two(
        [](std::int64_t p, int e) -> Rat {
            if (p == 2) return e == 1 ? 1 : 0;
            return 1 + kronecker(-4, p);
        },
        "eps_2");
    MultFn three(
        [](std::int64_t p, int e) -> Rat {
            if (p == 3) return e == 1 ? 1 : 0;
            return 1 + kronecker(-3, p);
        },
        "eps_3");
    MultFn inf(
        [](std::int64_t p, int e) {
            return Rat(pow_i64(p, e / 2) + pow_i64(p, (e - 1) / 2));
        },
        "eps_inf");
    return {id, two, three, inf};
}

Factored nstar(const Factored& N) {
    std::int64_t out = 1;
    for (const auto& f : N.factors()) {
        if (f.exponent == 1) out *= f.prime;
    }
    return factor(out);
}

int sign_pair(const Factored& h, const Factored& i) {
    if (!h.is_squarefree() || !i.is_squarefree()) {
        throw std::invalid_argument("sign_pair: arguments must be squarefree");
    }
    int shared = 0;
    for (const auto& f : h.factors()) {
        if (i.value() % f.prime == 0) ++shared;
    }
    return shared % 2 == 0 ? 1 : -1;
}

Factored xor_divisor(const Factored& h, const Factored& h2) {
    if (!h.is_squarefree() || !h2.is_squarefree()) {
        throw std::invalid_argument("xor_divisor: arguments must be squarefree");
    }
    std::int64_t out = 1;
    for (const auto& f : h.factors()) {
        if (h2.value() % f.prime != 0) out *= f.prime;
    }
    for (const auto& f : h2.factors()) {
        if (h.value() % f.prime != 0) out *= f.prime;
    }
    return factor(out);
}

}  // namespace newtrace

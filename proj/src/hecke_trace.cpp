#include "newtrace/hecke_trace.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>

#include "newtrace/arith.hpp"
#include "newtrace/dimension.hpp"
#include "newtrace/quadratic.hpp"

namespace newtrace {

namespace {

void check_weight(int k) {
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("weight must be even and >= 2, got " +
                                    std::to_string(k));
    }
}

void check_hecke_index(const Factored& l) {
    if (!l.is_squarefree()) {
        throw std::invalid_argument("Hecke index " + std::to_string(l.value()) +
                                    " is not squarefree");
    }
    if (l.value() > 1'000'000'000) {
        throw std::invalid_argument("Hecke index too large for t^2 - 4l arithmetic");
    }
}

std::int64_t isqrt_exact(std::int64_t n) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(double(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : -1;
}

// (mu * mu[l])(p^j), straight from the definition of the two factors.
std::int64_t mu_mu_l(std::int64_t p, int j, const Factored& l) {
    const bool in_l = l.value() % p == 0;
    std::int64_t sum = 0;
    for (int i = 0; i <= j; ++i) {
        const int i2 = j - i;
        const std::int64_t mu_i = i == 0 ? 1 : (i == 1 ? -1 : 0);
        std::int64_t mu_i2 = i2 == 0 ? 1 : (i2 == 1 ? -1 : 0);
        if (in_l && i2 >= 1) mu_i2 = 0;
        sum += mu_i * mu_i2;
    }
    return sum;
}

std::int64_t pow_checked(std::int64_t p, int e, std::int64_t cap) {
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i) {
        if (out > cap / p) {
            throw std::out_of_range("c_local: modulus p^" + std::to_string(e) +
                                    " too large for exhaustive counting");
        }
        out *= p;
    }
    return out;
}

struct CLocalKey {
    std::int64_t t, l, phi, p;
    int n;
    auto operator<=>(const CLocalKey&) const = default;
};

std::int64_t c_local_uncached(std::int64_t t, const Factored& l,
                              std::int64_t phi, std::int64_t p, int n) {
    const std::int64_t D = t * t - 4 * l.value();
    const DiscSplit split = split_disc(D);
    if (phi < 1 || split.m % phi != 0) {
        throw std::invalid_argument("c_local: phi must divide the conductor");
    }
    if (n < 1) throw std::invalid_argument("c_local: n must be >= 1");
    const std::int64_t psi = split.m / phi;
    int a = 0;
    for (std::int64_t v = psi; v % p == 0; v /= p) ++a;

    constexpr std::int64_t kCap = 3'000'000'000;  // keeps x*x inside int64
    const std::int64_t proj = pow_checked(p, a + n, kCap);

    auto count = [&](std::int64_t modulus, bool exclude_shifted) {
        const std::int64_t tm = ((t % modulus) + modulus) % modulus;
        const std::int64_t lm = ((l.value() % modulus) + modulus) % modulus;
        std::unordered_set<std::int64_t> classes;
        for (std::int64_t x = 0; x < modulus; ++x) {
            const std::int64_t val =
                ((x * x) % modulus + (modulus - (tm * x) % modulus) + lm) % modulus;
            if (val != 0) continue;
            const std::int64_t y = x % proj;
            const std::int64_t tested = exclude_shifted ? (t - y) % p : y % p;
            if (((tested % p) + p) % p == 0) continue;
            classes.insert(y);
        }
        return static_cast<std::int64_t>(classes.size());
    };

    std::int64_t total = count(pow_checked(p, 2 * a + n, kCap), false);
    if ((split.d % p == 0) || (phi % p == 0)) {
        total += count(pow_checked(p, 2 * a + n + 1, kCap), true);
    }
    return total;
}

std::map<CLocalKey, std::int64_t>& c_local_cache() {
    static std::map<CLocalKey, std::int64_t> cache;
    return cache;
}
std::mutex c_local_lock;

Int pow_neg(std::int64_t base, int e) { return int_pow(Int(base), unsigned(e)); }

// delta_{k,2} mu(N) prod_{p | l, p not | N} (1 + p)
Rat weight_two_term(int k, const Factored& N, const Factored& l) {
    if (k != 2) return 0;
    Int prod = 1;
    for (const auto& f : l.factors()) {
        if (N.value() % f.prime != 0) prod *= 1 + f.prime;
    }
    return Rat(N.mobius() * prod);
}

}  // namespace

TraceQuery::TraceQuery(int k_in, Factored N_in, Factored l_in)
    : k(k_in), N(std::move(N_in)), l(std::move(l_in)) {
    check_weight(k);
    check_hecke_index(l);
}

TraceQuery make_query(int k, std::int64_t N, std::int64_t l) {
    return TraceQuery(k, factor(N), factor(l));
}

TSets t_sets(const Factored& l) {
    check_hecke_index(l);
    if (l.value() < 2) {
        throw std::invalid_argument("t_sets: index must be >= 2");
    }
    TSets out;
    const std::int64_t lv = l.value();
    for (std::int64_t t = 0; t * t < 4 * lv; ++t) {
        const DiscSplit split = split_disc(t * t - 4 * lv);
        out.negative.push_back({t, TKind::NegativeDisc, split.d, split.m});
    }
    for (std::int64_t e : l.divisors()) {
        if (e * e > lv) break;
        // e = l/e would force t^2 = 4l, impossible for squarefree l > 1.
        out.square.push_back({e + lv / e, TKind::SquareDisc, 1, lv / e - e});
    }
    std::sort(out.square.begin(), out.square.end(),
              [](const TElement& x, const TElement& y) { return x.t < y.t; });
    return out;
}

Rat a_coeff(std::int64_t t, const Factored& l, int k) {
    check_weight(k);
    if (t < 0) throw std::invalid_argument("a_coeff: t must be >= 0");
    const std::int64_t D = t * t - 4 * l.value();
    if (D < 0) {
        Int prev = 0, cur = 1;
        for (int j = 1; j < k - 1; ++j) {
            Int next = t * cur - l.value() * prev;
            prev = cur;
            cur = next;
        }
        return Rat(cur);
    }
    const std::int64_t root = isqrt_exact(D);
    if (root <= 0) {
        throw std::invalid_argument("a_coeff: t not in the index set for l");
    }
    const Int eta = Int(t - root) / 2;  // smaller positive root of X^2 - tX + l
    return Rat(int_pow(eta, unsigned(k - 1)), Int(2 * root));
}

Int b_factor(std::int64_t t, const Factored& l, std::int64_t phi) {
    const DiscSplit split = split_disc(t * t - 4 * l.value());
    if (phi < 1 || split.m % phi != 0) {
        throw std::invalid_argument("b_factor: phi must divide the conductor");
    }
    Int out = 1;
    const Factored phi_f = factor(phi);
    for (const auto& f : phi_f.factors()) {
        out *= int_pow(Int(f.prime), unsigned(f.exponent - 1)) *
               (f.prime - kronecker(split.d, f.prime));
    }
    return out;
}

std::int64_t c_local(std::int64_t t, const Factored& l, std::int64_t phi,
                     std::int64_t p, int n) {
    const CLocalKey key{t, l.value(), phi, p, n};
    {
        std::lock_guard<std::mutex> guard(c_local_lock);
        auto it = c_local_cache().find(key);
        if (it != c_local_cache().end()) return it->second;
    }
    const std::int64_t value = c_local_uncached(t, l, phi, p, n);
    std::lock_guard<std::mutex> guard(c_local_lock);
    c_local_cache().emplace(key, value);
    return value;
}

std::optional<std::int64_t> c_closed(std::int64_t t, const Factored& l,
                                     std::int64_t phi, std::int64_t p, int n) {
    const DiscSplit split = split_disc(t * t - 4 * l.value());
    if (phi < 1 || split.m % phi != 0) {
        throw std::invalid_argument("c_closed: phi must divide the conductor");
    }
    const std::int64_t d = split.d;
    const std::int64_t m = split.m;

    if (l.value() % p != 0 && m % p != 0) {
        if (d % p != 0) return 1 + kronecker(d, p);
        return n == 1 ? 1 : 0;
    }

    const Factored m_f = factor(m);
    const bool m_prime =
        m_f.factors().size() == 1 && m_f.factors()[0].exponent == 1;
    if (m_prime && l.value() % m != 0 && p == m) {
        const int sym = kronecker(d, m);
        if (m == 2) {
            if (d % 2 != 0) {
                if (phi == 1) return 1 + sym;
                if (n == 1) return 2;
                if (n == 2) return 3 + sym;
                return 3 * (1 + sym);
            }
            if (phi == 1) return n == 1 ? 1 : 0;
            if (n == 1 || n == 3) return 2;
            if (n == 2) return 3;
            return 0;
        }
        if (d % m != 0) {
            if (phi == 1) return 1 + sym;
            if (n == 1) return 2;
            if (n == 2) return m + 1 + sym;
            return (m + 1) * (1 + sym);
        }
        if (phi == 1) return n == 1 ? 1 : 0;
        if (n == 1) return 2;
        if (n == 2) return m + 1;
        if (n == 3) return m;
        return 0;
    }
    return std::nullopt;
}

Rat lambda_definitional(std::int64_t t, const Factored& l, const Factored& N) {
    check_hecke_index(l);
    const DiscSplit split = split_disc(t * t - 4 * l.value());
    Rat total = 0;
    for (std::int64_t phi : factor(split.m).divisors()) {
        Int conv = 1;
        for (const auto& f : N.factors()) {
            std::int64_t at_power = 0;
            for (int r = 0; r <= f.exponent; ++r) {
                const std::int64_t c =
                    r == 0 ? 1 : c_local(t, l, phi, f.prime, r);
                at_power += mu_mu_l(f.prime, f.exponent - r, l) * c;
            }
            conv *= at_power;
        }
        total += Rat(b_factor(t, l, phi) * conv);
    }
    return total;
}

std::optional<Rat> lambda_closed(std::int64_t t, const Factored& l,
                                 const Factored& N) {
    if (l.value() < 2 || !l.is_squarefree()) return std::nullopt;
    const std::int64_t g = std::gcd(l.value(), N.value());
    // The closed forms require that no prime of l divides N twice.
    if (std::gcd(l.value(), N.value() / g) != 1) return std::nullopt;
    if (t % g != 0) return Rat(0);

    const DiscSplit split = split_disc(t * t - 4 * l.value());
    const std::int64_t d = split.d;
    const std::int64_t m = split.m;
    if (m == 1) return K_value(d, N);

    const Factored mf = factor(m);
    if (mf.factors().size() != 1 || mf.factors()[0].exponent != 1) {
        return std::nullopt;
    }
    const int v = N.exponent_of(m);
    const int sym = kronecker(d, m);
    Int scale = 0;
    if (v == 0) {
        scale = m + 1 - sym;
    } else if (v == 1) {
        scale = sym - 1;
    } else if (v == 2) {
        scale = Int(m) * m - 2 * m - 1 + sym;
    } else if (d % m != 0) {
        if (v == 3) scale = Int(m - sym) * (m - 1) * (sym - 1);
        if (v == 4) scale = -Int(m - sym) * m * sym;
    } else {
        if (v == 3) scale = 1 - Int(m) * m;
        if (v == 4) scale = Int(m) * (1 - m);
        if (v == 5) scale = Int(m) * m;
    }
    std::int64_t rest = N.value();
    for (int i = 0; i < v; ++i) rest /= m;
    return Rat(scale) * K_value(d, factor(rest));
}

namespace {

std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Rat>&
lambda_cache() {
    static std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, Rat>
        cache;
    return cache;
}
std::mutex lambda_lock;

}  // namespace

Rat lambda(std::int64_t t, const Factored& l, const Factored& N) {
    const auto key = std::make_tuple(t, l.value(), N.value());
    {
        std::lock_guard<std::mutex> guard(lambda_lock);
        auto it = lambda_cache().find(key);
        if (it != lambda_cache().end()) return it->second;
    }
    Rat value;
    if (auto closed = lambda_closed(t, l, N)) {
        value = *closed;
    } else {
        value = lambda_definitional(t, l, N);
    }
    std::lock_guard<std::mutex> guard(lambda_lock);
    lambda_cache().emplace(key, value);
    return value;
}

Rat trace_full(const TraceQuery& q) {
    if (q.l.value() == 1) return Rat(dim_full(q.k, q.N));

    Rat sum = 0;
    const TSets sets = t_sets(q.l);
    auto add_terms = [&](const std::vector<TElement>& elems) {
        for (const TElement& e : elems) {
            Rat local = 0;
            for (std::int64_t phi : factor(e.m).divisors()) {
                Int c_at_n = 1;
                for (const auto& f : q.N.factors()) {
                    c_at_n *= c_local(e.t, q.l, phi, f.prime, f.exponent);
                }
                local += Rat(b_factor(e.t, q.l, phi) * c_at_n);
            }
            const int mult = e.t > 0 ? 2 : 1;
            sum += mult * a_coeff(e.t, q.l, q.k) * h_weight(e.t, q.l) * local;
        }
    };
    add_terms(sets.negative);
    add_terms(sets.square);

    Rat result = -sum;
    if (q.k == 2) {
        Rat term = 1;
        for (const auto& f : q.l.factors()) term *= 1 + f.prime;
        for (const auto& f : q.N.factors()) {
            if (q.l.value() % f.prime == 0) {
                term *= Rat(f.prime, 1 + f.prime);
            }
        }
        result += term;
    }
    to_integer(result);  // trace of a Hecke operator is a rational integer
    return result;
}

Rat trace_newform(const TraceQuery& q) {
    if (q.l.value() == 1) return Rat(dim_newform(q.k, q.N));

    const std::int64_t g = std::gcd(q.l.value(), q.N.value());
    if (std::gcd(q.l.value(), q.N.value() / g) != 1) return 0;

    Rat sum = 0;
    const TSets sets = t_sets(q.l);
    auto add_terms = [&](const std::vector<TElement>& elems) {
        for (const TElement& e : elems) {
            const int mult = e.t > 0 ? 2 : 1;
            sum += mult * a_coeff(e.t, q.l, q.k) * h_weight(e.t, q.l) *
                   lambda(e.t, q.l, q.N);
        }
    };
    add_terms(sets.negative);
    add_terms(sets.square);

    Rat result = -sum + weight_two_term(q.k, q.N, q.l);
    to_integer(result);
    return result;
}

Rat trace_full(int k, std::int64_t N, std::int64_t l) {
    return trace_full(make_query(k, N, l));
}

Rat trace_newform(int k, std::int64_t N, std::int64_t l) {
    return trace_newform(make_query(k, N, l));
}

int A_k(int k) {
    check_weight(k);
    return (k % 8 == 0 || k % 8 == 2) ? 1 : -1;
}

int B_k(int k) {
    check_weight(k);
    return (k % 6 == 4) ? -2 : 1;
}

std::optional<Rat> trace_newform_closed_l2(int k, const Factored& N) {
    check_weight(k);
    if (N.value() % 4 == 0) return std::nullopt;
    const int kappa = k / 2 - 1;
    Rat value = Rat(-1, 2) * Rat(pow_neg(-2, kappa)) *
                (K_value(-8, N) + A_k(k) * K_value(-4, N));
    value -= a_coeff(1, factor(2), k) * K_value(-7, N);
    value -= K_value(1, N);
    if (k == 2) value += N.mobius() * (N.value() % 2 == 0 ? 1 : 3);
    return value;
}

std::optional<Rat> trace_newform_closed_l3(int k, const Factored& N) {
    check_weight(k);
    if (N.value() % 9 == 0) return std::nullopt;
    const int kappa = k / 2 - 1;
    const int v2 = N.exponent_of(2);
    std::int64_t odd = N.value();
    for (int i = 0; i < v2; ++i) odd /= 2;
    const Factored odd_part = factor(odd);

    static const std::int64_t lam03_scale[] = {4, -2, -2, -6, 6};
    const Rat lam03 =
        v2 <= 4 ? Rat(lam03_scale[v2]) * K_value(-3, odd_part) : Rat(0);
    const Rat lam43 = v2 == 0   ? Rat(2) * K_value(1, odd_part)
                      : v2 == 4 ? Rat(-2) * K_value(1, odd_part)
                                : Rat(0);

    const Factored three = factor(3);
    Rat value = Rat(-1, 6) * Rat(pow_neg(-3, kappa)) *
                (lam03 + 2 * B_k(k) * K_value(-3, N));
    value -= a_coeff(1, three, k) * K_value(-11, N);
    value -= a_coeff(2, three, k) * K_value(-8, N);
    value -= Rat(1, 2) * lam43;
    if (k == 2) value += N.mobius() * (N.value() % 3 == 0 ? 1 : 4);
    return value;
}

std::optional<Rat> trace_newform_closed_large_gcd(const TraceQuery& q) {
    if (q.l.value() < 2) return std::nullopt;
    const std::int64_t g = std::gcd(q.l.value(), q.N.value());
    if (std::gcd(q.l.value(), q.N.value() / g) != 1) return std::nullopt;
    if (g * g <= 4 * q.l.value()) return std::nullopt;

    const DiscSplit split = split_disc(-4 * q.l.value());
    const Rat weight = Rat(class_number(split.d), 2);
    Rat value = -weight * Rat(pow_neg(-q.l.value(), q.kappa())) *
                lambda(0, q.l, q.N);
    value += weight_two_term(q.k, q.N, q.l);
    return value;
}

}  // namespace newtrace

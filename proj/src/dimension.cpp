#include "newtrace/dimension.hpp"

#include <stdexcept>
#include <string>

#include "newtrace/arith.hpp"
#include "newtrace/rational.hpp"

namespace newtrace {

namespace {

void check_weight(int k) {
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("weight must be even and >= 2, got " +
                                    std::to_string(k));
    }
}

int sign_pow_half(int k) { return (k / 2) % 2 == 0 ? 1 : -1; }

Rat dim_full_rat(int k, const Factored& N) {
    static const EpsFunctions eps = eps_functions();
    Rat value = Rat(k - 1, 12) * eps.id(N);
    value += Rat(sign_pow_half(k), 4) * eps.two(N);
    value -= Rat(kronecker(k - 1, 3), 3) * eps.three(N);
    value -= Rat(1, 2) * eps.inf(N);
    if (k == 2) value += 1;
    return value;
}

std::int64_t as_dimension(const Rat& value, const char* what) {
    const Int n = to_integer(value);
    if (n < 0) {
        throw std::logic_error(std::string(what) + ": negative value " + n.str());
    }
    return to_int64(n);
}

// Closed prime-power forms of mu*mu*eps_id and mu*mu*eps_inf.
Rat mme_id(std::int64_t p, int e) {
    const Int q = p;
    if (e == 1) return Rat(q - 1);
    if (e == 2) return Rat(q * q - q - 1);
    return Rat(int_pow(q, unsigned(e - 3)) * (q - 1) * (q * q - 1));
}

Rat mme_inf(std::int64_t p, int e) {
    if (e % 2 == 1) return 0;
    const Int q = p;
    if (e == 2) return Rat(q - 2);
    return Rat(int_pow(q, unsigned(e / 2 - 2)) * (q - 1) * (q - 1));
}

}  // namespace

std::int64_t dim_full(int k, const Factored& N) {
    check_weight(k);
    return as_dimension(dim_full_rat(k, N), "dim_full");
}

std::int64_t dim_newform(int k, const Factored& N) {
    check_weight(k);
    static const MultFn id_part(mme_id, "mu*mu*eps_id");
    static const MultFn inf_part(mme_inf, "mu*mu*eps_inf");
    Rat value = Rat(k - 1, 12) * id_part(N);
    value += Rat(sign_pow_half(k), 4) * K_value(-4, N);
    value -= Rat(kronecker(k - 1, 3), 3) * K_value(-3, N);
    value -= Rat(1, 2) * inf_part(N);
    if (k == 2) value += N.mobius();
    return as_dimension(value, "dim_newform");
}

std::int64_t dim_newform_via_convolution(int k, const Factored& N) {
    check_weight(k);
    const std::int64_t bound = std::max<std::int64_t>(N.value(), 1);
    const ArithFn mu = as_arith(mobius_fn(), bound);
    const ArithFn dim_k(
        [k](std::int64_t n) { return dim_full_rat(k, factor(n)); }, bound);
    return as_dimension(convolve(convolve(mu, mu), dim_k)(N.value()),
                        "dim_newform_via_convolution");
}

std::int64_t dim_full(int k, std::int64_t N) { return dim_full(k, factor(N)); }

std::int64_t dim_newform(int k, std::int64_t N) {
    return dim_newform(k, factor(N));
}

}  // namespace newtrace

#include "newtrace/eigensplit.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "newtrace/arith.hpp"
#include "newtrace/hecke_trace.hpp"

namespace newtrace {

Rat trace_split(int k, const Factored& N, const Factored& l, const Factored& i) {
    const Factored nx = nstar(N);
    if (nx.value() % i.value() != 0) {
        throw std::invalid_argument("trace_split: i = " + std::to_string(i.value()) +
                                    " does not divide nstar(N) = " +
                                    std::to_string(nx.value()));
    }
    if (std::gcd(l.value(), nx.value()) != 1) {
        throw std::invalid_argument("trace_split: l must be coprime to nstar(N)");
    }
    if (!l.is_squarefree()) {
        throw std::invalid_argument("trace_split: l must be squarefree");
    }
    const int kappa = k / 2 - 1;
    Rat sum = 0;
    for (std::int64_t h : nx.divisors()) {
        const Factored hf = factor(h);
        const Rat inner = trace_newform(TraceQuery(k, N, factor(h * l.value())));
        sum += sign_pair(hf, i) * inner / Rat(int_pow(Int(h), unsigned(kappa)));
    }
    return sum / Rat(nx.num_divisors());
}

std::int64_t dim_split(int k, const Factored& N, std::int64_t i) {
    const Rat value = trace_split(k, N, factor(1), factor(i));
    const Int n = to_integer(value);
    if (n < 0) {
        throw std::logic_error("dim_split: negative value " + n.str());
    }
    return to_int64(n);
}

std::int64_t d_table(int k, const Factored& N, std::int64_t i) {
    std::int64_t value = dim_split(k, N, i);
    if (k == 2 && i == 1) value -= N.mobius();
    return value;
}

Rat trace_split(int k, std::int64_t N, std::int64_t l, std::int64_t i) {
    return trace_split(k, factor(N), factor(l), factor(i));
}

std::int64_t dim_split(int k, std::int64_t N, std::int64_t i) {
    return dim_split(k, factor(N), i);
}

std::int64_t d_table(int k, std::int64_t N, std::int64_t i) {
    return d_table(k, factor(N), i);
}

}  // namespace newtrace

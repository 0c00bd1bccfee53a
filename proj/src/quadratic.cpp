#include "newtrace/quadratic.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "newtrace/arith.hpp"

namespace newtrace {

namespace {

std::int64_t mod4(std::int64_t x) { return ((x % 4) + 4) % 4; }

bool is_perfect_square(std::int64_t n, std::int64_t* root = nullptr) {
    if (n < 0) return false;
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(double(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (root) *root = r;
    return r * r == n;
}

}  // namespace

DiscSplit split_disc(std::int64_t D) {
    if (D == 0) throw std::invalid_argument("split_disc: D must be nonzero");
    if (mod4(D) > 1) {
        throw std::invalid_argument("split_disc: D = " + std::to_string(D) +
                                    " is 2 or 3 mod 4");
    }
    const std::int64_t sign = D < 0 ? -1 : 1;
    std::int64_t m = 1;
    std::int64_t squarefree = sign;
    const Factored magnitude = factor(D * sign);
    for (const auto& f : magnitude.factors()) {
        for (int e = f.exponent; e >= 2; e -= 2) m *= f.prime;
        if (f.exponent % 2 == 1) squarefree *= f.prime;
    }
    if (mod4(squarefree) == 1) return {D, squarefree, m};
    // squarefree = 2,3 mod 4: the square part must absorb a factor of 4.
    if (m % 2 != 0) throw std::logic_error("split_disc: invariant violation");
    return {D, 4 * squarefree, m / 2};
}

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 0 || d == 1) return false;
    if (mod4(d) == 1) return factor(std::llabs(d)).is_squarefree();
    if (d % 4 != 0) return false;
    const std::int64_t q = d / 4;
    return mod4(q) >= 2 && factor(std::llabs(q)).is_squarefree();
}

namespace {

class ClassNumberCache {
public:
    static ClassNumberCache& instance() {
        static ClassNumberCache cache;
        return cache;
    }

    bool lookup(std::int64_t d, std::int64_t* h) {
        std::lock_guard<std::mutex> guard(lock_);
        load_once();
        auto it = values_.find(d);
        if (it == values_.end()) return false;
        *h = it->second;
        return true;
    }

    void store(std::int64_t d, std::int64_t h) {
        std::lock_guard<std::mutex> guard(lock_);
        if (!values_.emplace(d, h).second) return;
        if (path_.empty()) return;
        if (std::FILE* f = std::fopen(path_.c_str(), "a")) {
            std::fprintf(f, "%lld=%lld\n", static_cast<long long>(d),
                         static_cast<long long>(h));
            std::fclose(f);
        }
    }

private:
    void load_once() {
        if (loaded_) return;
        loaded_ = true;
        const char* dir = std::getenv("NEWTRACE_CACHE_DIR");
        if (!dir || !*dir) return;
        path_ = std::string(dir) + "/class_numbers.txt";
        if (std::FILE* f = std::fopen(path_.c_str(), "r")) {
            long long d = 0, h = 0;
            while (std::fscanf(f, "%lld=%lld\n", &d, &h) == 2) values_[d] = h;
            std::fclose(f);
        }
    }

    std::mutex lock_;
    std::map<std::int64_t, std::int64_t> values_;
    std::string path_;
    bool loaded_ = false;
};

}  // namespace

std::int64_t class_number(std::int64_t d) {
    if (d >= 0 || !is_fundamental_discriminant(d)) {
        throw std::invalid_argument(
            "class_number: " + std::to_string(d) +
            " is not a negative fundamental discriminant");
    }
    auto& cache = ClassNumberCache::instance();
    std::int64_t h = 0;
    if (cache.lookup(d, &h)) return h;

    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            const std::int64_t num = b * b - d;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (-b == a || c == a)) continue;
            if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
            ++h;
        }
    }
    cache.store(d, h);
    return h;
}

int unit_count(std::int64_t d) {
    if (d >= 0 || !is_fundamental_discriminant(d)) {
        throw std::invalid_argument(
            "unit_count: " + std::to_string(d) +
            " is not a negative fundamental discriminant");
    }
    if (d == -3) return 6;
    if (d == -4) return 4;
    return 2;
}

Rat h_weight(std::int64_t t, const Factored& l) {
    const std::int64_t D = t * t - 4 * l.value();
    if (D < 0) {
        const DiscSplit split = split_disc(D);
        return Rat(class_number(split.d), unit_count(split.d));
    }
    if (is_perfect_square(D)) return 1;
    throw std::invalid_argument("h_weight: t = " + std::to_string(t) +
                                " is not an index for l = " +
                                std::to_string(l.value()));
}

}  // namespace newtrace

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace newtrace {

// All formula evaluation is exact: arbitrary-precision integers and
// canonical rationals (reduced, positive denominator).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Exact conversion to an integer; throws if the value has a denominator.
inline Int to_integer(const Rat& r) {
    if (!is_integer(r)) {
        throw std::domain_error("expected an integer, got " + r.str());
    }
    return rat_num(r);
}

inline std::int64_t to_int64(const Int& v) { return v.convert_to<std::int64_t>(); }

// base^e for e >= 0.
inline Int int_pow(const Int& base, unsigned e) {
    return boost::multiprecision::pow(base, e);
}

// Prints "p" for integers and "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace newtrace

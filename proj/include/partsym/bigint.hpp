#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "partsym/errors.hpp"

namespace partsym {

// Exact unbounded arithmetic. cpp_rational keeps gcd(|num|, den) = 1 and
// den > 0 after every operation, which is exactly the normalization the
// engine relies on.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline bool is_integer(const BigRational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

// Converts a rational that is expected to have cleared to an integer.
// A fractional value here means a formula was transcribed wrong.
inline BigInt to_integer(const BigRational& q, const char* context = "rational") {
    if (!is_integer(q)) {
        throw ConsistencyError(std::string(context) + " did not reduce to an integer: " +
                               q.str());
    }
    return boost::multiprecision::numerator(q);
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

} // namespace partsym

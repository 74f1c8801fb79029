#pragma once

#include "paircollect/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <utility>

namespace paircollect {

using BigInt = boost::multiprecision::mpz_int;

// Exact probability/moment carrier. The GMP-backed rational keeps every value
// in lowest terms with a positive denominator; arithmetic never rounds.
using BigRational = boost::multiprecision::mpq_rational;

// Construct num/den for arbitrary signs. The two-integer BigRational
// constructor canonicalizes only when both arguments are already BigInt and
// the denominator is nonzero; this front door enforces that.
inline BigRational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw parameter_error("make_rational: zero denominator");
    return BigRational(std::move(num), std::move(den));
}

inline BigInt numerator(const BigRational& q) {
    return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const BigRational& q) {
    return boost::multiprecision::denominator(q);
}

// "p/q" (integers render without the denominator part).
inline std::string to_fraction_string(const BigRational& q) {
    BigInt den = denominator(q);
    std::string s = numerator(q).str();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

inline double to_double(const BigRational& q) {
    return q.convert_to<double>();
}

}  // namespace paircollect

#include "paircollect/combinatorics.hpp"

#include "paircollect/errors.hpp"

#include <cmath>
#include <string>

namespace paircollect::comb {

namespace {

// Binary exponentiation; the closed form delegates exactness to the sum.
double pow_int(double base, unsigned e) {
    double result = 1.0;
    double p = base;
    while (e != 0) {
        if (e & 1u) result *= p;
        p *= p;
        e >>= 1u;
    }
    return result;
}

struct Frac {
    BigInt num;
    BigInt den;
};

// Divide-and-conquer sum of 1/k^power over [lo, hi]; a single gcd happens
// when the caller forms the final BigRational.
Frac recip_sum(std::uint32_t lo, std::uint32_t hi, int power) {
    if (lo == hi) {
        BigInt d = lo;
        if (power == 2) d *= lo;
        return {BigInt(1), d};
    }
    std::uint32_t mid = lo + (hi - lo) / 2;
    Frac left = recip_sum(lo, mid, power);
    Frac right = recip_sum(mid + 1, hi, power);
    return {left.num * right.den + right.num * left.den, left.den * right.den};
}

}  // namespace

BigInt binomial(std::uint64_t r, std::uint64_t s) {
    if (s > r) return 0;
    if (r - s < s) s = r - s;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= s; ++i) {
        result *= r - s + i;
        result /= i;  // exact: result is C(r-s+i, i) at each step
    }
    return result;
}

BigRational chebyshev_sum(unsigned r, const BigRational& x) {
    BigRational sum = 0;
    BigRational xp = 1;
    for (unsigned s = 0; s <= r / 2; ++s) {
        sum += BigRational(binomial(r - s, s)) * xp;
        xp *= x;
    }
    return sum;
}

double chebyshev_closed(unsigned r, double x) {
    double disc = 1.0 + 4.0 * x;
    if (!(disc > 0.0)) {
        throw parameter_error("chebyshev_closed: requires 1 + 4x > 0, got x = " +
                              std::to_string(x));
    }
    double alpha = std::sqrt(disc);
    return (pow_int((1.0 + alpha) / 2.0, r + 1) - pow_int((1.0 - alpha) / 2.0, r + 1)) / alpha;
}

HarmonicPair harmonic(std::uint32_t n) {
    if (n > 1000000u) {
        throw size_guard_error("harmonic: exact rationals guaranteed only for n <= 1e6");
    }
    if (n == 0) return {BigRational(0), BigRational(0)};
    Frac h = recip_sum(1, n, 1);
    Frac h2 = recip_sum(1, n, 2);
    return {BigRational(h.num, h.den), BigRational(h2.num, h2.den)};
}

HarmonicAsym harmonic_asym(std::uint64_t n) {
    if (n < 1) throw parameter_error("harmonic_asym: n >= 1 required");
    double m = static_cast<double>(n);
    double m2 = m * m;
    double h = std::log(m) + HarmonicConstants::gamma + 1.0 / (2.0 * m) - 1.0 / (12.0 * m2) +
               1.0 / (120.0 * m2 * m2);
    double h2 = HarmonicConstants::pi_sq_over_6 - 1.0 / m;
    return {h, h2, {1.0 / (252.0 * m2 * m2 * m2), 1.0 / (m * (m + 1.0))}};
}

RunCounts run_counts(int n, int j, int max_len) {
    if (n < 2 || j < 1 || j > n || max_len < 0) {
        throw parameter_error("run_counts: need n >= 2, 1 <= j <= n, max_len >= 0");
    }
    RunCounts rc;
    rc.n = n;
    rc.j = j;
    rc.a.reserve(static_cast<std::size_t>(max_len) + 1);
    rc.b.reserve(static_cast<std::size_t>(max_len) + 1);
    rc.s.reserve(static_cast<std::size_t>(max_len) + 1);
    rc.a.emplace_back(1);
    rc.b.emplace_back(0);
    rc.s.emplace_back(1);
    for (int l = 1; l <= max_len; ++l) {
        BigInt a_l = (n - j) * rc.s[l - 1];
        BigInt b_l = j * rc.a[l - 1] + (j - 1) * rc.b[l - 1];
        rc.s.push_back(a_l + b_l);
        rc.a.push_back(std::move(a_l));
        rc.b.push_back(std::move(b_l));
    }
    return rc;
}

ClosedFormCounts closed_form_counts(int n, int j) {
    if (n < 2 || j < 1 || j > n) {
        throw parameter_error("closed_form_counts: need n >= 2, 1 <= j <= n");
    }
    double d = std::sqrt(static_cast<double>(
        static_cast<std::int64_t>(n + 1) * (n + 1) - 4 * static_cast<std::int64_t>(j)));
    ClosedFormCounts cf;
    cf.t1 = (n - 1 + d) / 2.0;
    cf.t2 = -2.0 * (n - j) / (n - 1 + d);
    cf.c1 = 0.5 * (1.0 + (n + 1) / d);
    cf.c2 = 0.5 * (1.0 - (n + 1) / d);
    return cf;
}

}  // namespace paircollect::comb

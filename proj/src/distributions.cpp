#include "paircollect/distributions.hpp"

#include "paircollect/combinatorics.hpp"
#include "paircollect/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace paircollect::dist {

namespace {

constexpr int kExactMaxN = 50;
constexpr std::int64_t kExactMaxK = 10000;

void check_nj(int n, int j, const char* who) {
    if (n < 2 || j < 1 || j > n) {
        throw parameter_error(std::string(who) + ": need n >= 2, 1 <= j <= n");
    }
}

void check_exact_bounds(int n, std::int64_t k, const char* who) {
    if (n > kExactMaxN || k > kExactMaxK) {
        throw size_guard_error(std::string(who) +
                               ": exact-rational path is limited to n <= 50, k <= 1e4");
    }
}

BigInt int_pow(int base, std::int64_t e) {
    BigInt out = 1;
    BigInt b = base;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

double lchoose(std::int64_t a, std::int64_t b) {
    return std::lgamma(static_cast<double>(a + 1)) - std::lgamma(static_cast<double>(b + 1)) -
           std::lgamma(static_cast<double>(a - b + 1));
}

}  // namespace

Roots roots(int n, int j) {
    check_nj(n, j, "roots");
    Roots r;
    r.n = n;
    r.j = j;
    // (n+1)^2 - 4j is an exact integer in double range for all supported n.
    r.d = std::sqrt(static_cast<double>(static_cast<std::int64_t>(n + 1) * (n + 1) -
                                        4 * static_cast<std::int64_t>(j)));
    r.t1 = (n - 1 + r.d) / 2.0;
    r.t2 = -2.0 * (n - j) / (n - 1 + r.d);  // equals (n-1-d)/2 without cancellation
    r.n_minus_t1 = 2.0 * j / (n + 1 + r.d);
    r.q1 = r.t1 / n;
    r.q2 = r.t2 / n;
    r.log_q1 = std::log1p(-r.n_minus_t1 / n);
    return r;
}

YLaw::YLaw(int n, int j) : r_(roots(n, j)) {
    pmf_coef_ = j / (n * r_.d);
    tail_c1_ = (n + 1 + r_.d) / (2.0 * r_.d);
    tail_c2_ = 2.0 * j / (r_.d * (n + 1 + r_.d));
    log_abs_q2_ = (j == n) ? -std::numeric_limits<double>::infinity()
                           : std::log(2.0 * (n - j) / (n * (n - 1 + r_.d)));
}

double YLaw::pmf(std::int64_t k) const {
    if (k < 2) throw parameter_error("pmf_Y: support starts at k = 2");
    double e = static_cast<double>(k - 1);
    double first = std::exp(e * r_.log_q1);
    double second = std::exp(e * log_abs_q2_);  // |q2|^{k-1}; 0 when j == n
    if ((k - 1) & 1) second = -second;          // q2 <= 0
    return pmf_coef_ * (first - second);
}

double YLaw::tail(std::int64_t m) const {
    if (m < 1) throw parameter_error("tail_Y: defined for m >= 1");
    double e = static_cast<double>(m);
    double first = tail_c1_ * std::exp(e * r_.log_q1);
    double second = tail_c2_ * std::exp(e * log_abs_q2_);
    if (m & 1) second = -second;
    return first - second;
}

double YLaw::mean() const {
    return (static_cast<double>(r_.n) * r_.n + r_.n) / r_.j;
}

double pmf_Y(int n, int j, std::int64_t k) { return YLaw(n, j).pmf(k); }

double tail_Y(int n, int j, std::int64_t m) { return YLaw(n, j).tail(m); }

double pmf_X(int n, std::int64_t k) {
    if (n < 2) throw parameter_error("pmf_X: need n >= 2");
    if (k < 2) throw parameter_error("pmf_X: support starts at k = 2");
    double log1m = std::log1p(-1.0 / n);
    double logn = std::log(static_cast<double>(n));
    double sum = 0.0;
    for (std::int64_t s = 0; s <= k / 2 - 1; ++s) {
        sum += std::exp(lchoose(k - s - 2, s) + (k - s - 2) * log1m - (s + 2) * logn);
    }
    return sum;
}

double tail_X(int n, std::int64_t m) { return YLaw(n, 1).tail(m); }

BigRational pmf_Y_exact(int n, int j, std::int64_t k) {
    check_nj(n, j, "pmf_Y_exact");
    if (k < 2) throw parameter_error("pmf_Y_exact: support starts at k = 2");
    check_exact_bounds(n, k, "pmf_Y_exact");
    comb::RunCounts rc = comb::run_counts(n, j, static_cast<int>(k - 1));
    return BigRational(rc.b[static_cast<std::size_t>(k - 1)], int_pow(n, k));
}

std::vector<BigRational> pmf_Y_exact_table(int n, int j, std::int64_t k_max) {
    check_nj(n, j, "pmf_Y_exact_table");
    if (k_max < 2) throw parameter_error("pmf_Y_exact_table: need k_max >= 2");
    check_exact_bounds(n, k_max, "pmf_Y_exact_table");
    comb::RunCounts rc = comb::run_counts(n, j, static_cast<int>(k_max - 1));
    std::vector<BigRational> out;
    out.reserve(static_cast<std::size_t>(k_max - 1));
    BigInt nk = BigInt(n) * n;
    for (std::int64_t k = 2; k <= k_max; ++k) {
        out.emplace_back(rc.b[static_cast<std::size_t>(k - 1)], nk);
        nk *= n;
    }
    return out;
}

BigRational tail_Y_exact(int n, int j, std::int64_t m) {
    check_nj(n, j, "tail_Y_exact");
    if (m < 1) throw parameter_error("tail_Y_exact: defined for m >= 1");
    check_exact_bounds(n, m, "tail_Y_exact");
    // P{Y > m} = s_m / n^m: survivors are exactly the pair-free strings.
    comb::RunCounts rc = comb::run_counts(n, j, static_cast<int>(m));
    return BigRational(rc.s[static_cast<std::size_t>(m)], int_pow(n, m));
}

BigRational pmf_X_exact(int n, std::int64_t k) {
    if (n < 2) throw parameter_error("pmf_X_exact: need n >= 2");
    if (k < 2) throw parameter_error("pmf_X_exact: support starts at k = 2");
    check_exact_bounds(n, k, "pmf_X_exact");
    // sum_s C(k-s-2, s) (n-1)^{k-s-2} over the common denominator n^k.
    BigInt num = 0;
    for (std::int64_t s = 0; s <= k / 2 - 1; ++s) {
        num += comb::binomial(static_cast<std::uint64_t>(k - s - 2),
                              static_cast<std::uint64_t>(s)) *
               int_pow(n - 1, k - s - 2);
    }
    return BigRational(num, int_pow(n, k));
}

BigRational tail_X_exact(int n, std::int64_t m) { return tail_Y_exact(n, 1, m); }

MomentSummary moments_Y(int n, int j) {
    check_nj(n, j, "moments_Y");
    BigInt nn = n;
    MomentSummary ms;
    ms.target = MomentTarget::Y;
    ms.n = n;
    ms.param = j;
    ms.mean = BigRational(nn * nn + nn, j);
    // n^4 + 2n^3 + n^2 - 3jn^2 - jn over j^2
    BigInt n2 = nn * nn;
    ms.variance = BigRational(n2 * n2 + 2 * n2 * nn + n2 - 3 * j * n2 - j * nn, BigInt(j) * j);
    return ms;
}

MomentSummary moments_S(int n, int a) {
    if (n < 2 || a < 1 || a > n) {
        throw parameter_error("moments_S: need n >= 2, 1 <= a <= n");
    }
    comb::HarmonicPair upper = comb::harmonic(static_cast<std::uint32_t>(n));
    comb::HarmonicPair lower = comb::harmonic(static_cast<std::uint32_t>(n - a));
    BigInt nn = n;
    BigInt n2 = nn * nn;
    MomentSummary ms;
    ms.target = MomentTarget::S;
    ms.n = n;
    ms.param = a;
    ms.mean = BigRational(n2 + nn) * (upper.h - lower.h);
    // sum of the per-term variances in closed form:
    //   n^2 (n+1)^2 (H2_n - H2_{n-a}) - n(3n+1)(H_n - H_{n-a})
    ms.variance = BigRational(n2 * (nn + 1) * (nn + 1)) * (upper.h2 - lower.h2) -
                  BigRational(nn * (3 * nn + 1)) * (upper.h - lower.h);
    return ms;
}

AsymMomentsS moments_S_asym(int n, int a, SRegime regime) {
    if (n < 2 || a < 1 || a >= n) {
        throw parameter_error("moments_S_asym: need n >= 2, 1 <= a < n (a = n is the maximum)");
    }
    double nd = n;
    AsymMomentsS out;
    out.regime = regime;
    out.main_mean = -nd * nd * std::log1p(-static_cast<double>(a) / nd);
    switch (regime) {
        case SRegime::Sublinear:
            out.main_variance = nd * nd * a;
            break;
        case SRegime::Proportional:
            out.main_variance = (static_cast<double>(a) / (nd - a)) * nd * nd * nd;
            break;
        case SRegime::NearComplete:
            out.main_variance = nd * nd * nd * nd / (nd - a);
            break;
    }
    return out;
}

MomentsM moments_M(int n) {
    if (n < 2) throw parameter_error("moments_M: need n >= 2");
    MomentsM m;
    m.exact = moments_S(n, n);
    m.exact.target = MomentTarget::M;
    m.exact.param = n;
    double nd = n;
    m.asym_mean = (nd * nd + nd) * (std::log(nd) + comb::HarmonicConstants::gamma) + nd / 2.0 +
                  5.0 / 12.0 - 1.0 / (12.0 * nd) + 1.0 / (120.0 * nd * nd);
    double pi2 = 6.0 * comb::HarmonicConstants::pi_sq_over_6;
    m.asym_var = pi2 * nd * nd * nd * nd / 6.0 + (pi2 / 3.0 - 1.0) * nd * nd * nd -
                 3.0 * nd * nd * std::log(nd);
    return m;
}

std::complex<double> charfn_Y(int n, int j, double t) {
    Roots r = roots(n, j);
    std::complex<double> i(0.0, 1.0);
    std::complex<double> eit = std::exp(i * t);
    std::complex<double> e2it = eit * eit;
    double coef = j / (n * r.d);
    return coef * (r.q1 * e2it / (1.0 - r.q1 * eit) - r.q2 * e2it / (1.0 - r.q2 * eit));
}

}  // namespace paircollect::dist

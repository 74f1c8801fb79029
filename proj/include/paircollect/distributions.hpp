#pragma once

#include "paircollect/rational.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace paircollect::dist {

// Algebraic kernel shared by pmfs, tails, characteristic functions and the
// inversion sampler: the roots of t^2 - (n-1)t - (n-j) = 0. The difference
// n - t1 and log(q1) are kept in cancellation-free forms so that tails stay
// accurate out to m ~ n^2 ln n.
struct Roots {
    int n = 0;
    int j = 0;
    double d = 0;           // sqrt((n+1)^2 - 4j), always > 0 for n >= 2
    double t1 = 0;          // (n-1+d)/2, in [0, n)
    double t2 = 0;          // (n-1-d)/2, in [-1, 0]
    double q1 = 0;          // t1/n
    double q2 = 0;          // t2/n
    double n_minus_t1 = 0;  // 2j/(n+1+d)
    double log_q1 = 0;      // log1p(-(n-t1)/n)
};

Roots roots(int n, int j);

// Waiting-time law of the first like-pair drawn from a j-element target set,
// evaluated through the two-geometric closed form. Construct once per (n, j)
// when evaluating many points; each call costs two exp().
class YLaw {
  public:
    YLaw(int n, int j);

    double pmf(std::int64_t k) const;   // k >= 2
    double tail(std::int64_t m) const;  // P{Y > m}, m >= 1
    double cdf(std::int64_t k) const { return 1.0 - tail(k); }
    double mean() const;

    const Roots& kernel() const { return r_; }

  private:
    Roots r_;
    double pmf_coef_;     // j/(n d)
    double tail_c1_;      // (n+1+d)/(2d)
    double tail_c2_;      // 2j/(d(n+1+d))
    double log_abs_q2_;   // -inf when t2 == 0 (j == n)
};

// Floating-point paths.
double pmf_Y(int n, int j, std::int64_t k);
double tail_Y(int n, int j, std::int64_t m);
double pmf_X(int n, std::int64_t k);   // the alternating-binomial sum form
double tail_X(int n, std::int64_t m);  // evaluated through the j=1 root form

// Exact-rational paths, recurrence-backed; guarded to n <= 50, k <= 1e4.
BigRational pmf_Y_exact(int n, int j, std::int64_t k);
std::vector<BigRational> pmf_Y_exact_table(int n, int j, std::int64_t k_max);  // k = 2..k_max
BigRational tail_Y_exact(int n, int j, std::int64_t m);
BigRational pmf_X_exact(int n, std::int64_t k);
BigRational tail_X_exact(int n, std::int64_t m);

enum class MomentTarget { Y, S, M };

struct MomentSummary {
    MomentTarget target = MomentTarget::Y;
    int n = 0;
    int param = 0;  // j for Y, a for S, n for M
    BigRational mean;
    BigRational variance;

    double mean_d() const { return to_double(mean); }
    double variance_d() const { return to_double(variance); }
};

MomentSummary moments_Y(int n, int j);
MomentSummary moments_S(int n, int a);

enum class SRegime { Sublinear, Proportional, NearComplete };

struct AsymMomentsS {
    double main_mean;      // -n^2 ln(1 - a/n)
    double main_variance;  // n^2 a | lam0 n^3 | n^4/(n-a)
    SRegime regime;
};

// a = n is rejected here; the maximum has its own asymptotics in moments_M.
AsymMomentsS moments_S_asym(int n, int a, SRegime regime);

struct MomentsM {
    MomentSummary exact;
    double asym_mean;
    double asym_var;
};

MomentsM moments_M(int n);

std::complex<double> charfn_Y(int n, int j, double t);

}  // namespace paircollect::dist

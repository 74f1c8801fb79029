#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace paircollect::laws {

// The asymptotic class of the sequence a_n. Callers must declare it: a single
// (n, a) pair cannot determine which limit applies, so nothing is inferred.
enum class RegimeKind { FixedK, Sublinear, Proportional, NearComplete, KthMax, FullMax };

struct Regime {
    RegimeKind kind = RegimeKind::FullMax;
    int k = 0;          // FixedK / KthMax
    double lambda = 0;  // Proportional: limit of a_n/n, in (0, 1)

    static Regime fixed_k(int k);
    static Regime sublinear();
    static Regime proportional(double lambda);
    static Regime near_complete();
    static Regime kth_max(int k);
    static Regime full_max();

    std::string name() const;
};

struct Normalization {
    double center = 0;  // nu_n
    double scale = 1;   // tau_n, always > 0
    Regime regime;
};

// Centering/scaling pairs per regime:
//   FixedK       -> (0, n)
//   Sublinear    -> (-n^2 ln(1-a/n), n sqrt(a))
//   Proportional -> (-n^2 ln(1-a/n), sqrt(lam0) n^{3/2}),  lam0 = (a/n)/(1-a/n)
//   NearComplete -> (-n^2 ln(1-a/n), n^2/sqrt(n-a))
//   KthMax/FullMax -> (n^2 ln n, n^2)
// Regime/parameter consistency is enforced (KthMax(k) requires a = n-k+1, ...).
Normalization normalization_for(int n, int a, const Regime& regime);

enum class LawKind { ErlangK, StdNormal, GumbelKth };

struct LimitLaw {
    LawKind kind = LawKind::StdNormal;
    int k = 1;

    static LimitLaw erlang(int k);
    static LimitLaw std_normal();
    static LimitLaw gumbel_kth(int k);

    double cdf(double x) const;
    std::string name() const;
};

// exp(-e^{-x}) sum_{s<k} e^{-sx}/s!  (k-th maximum refinement of the Gumbel law).
double cdf_gumbel_kth(int k, double x);

// (1 + t^2)^{-k/2} e^{ik arctan t}.
std::complex<double> cf_limit_fixed_k(int k, double t);

// 0 for x < 0, else 1 - e^{-x} sum_{s<k} x^s/s!.
double cdf_erlang(int k, double x);

double cdf_std_normal(double x);

// (e^{-jx}/n^j)(1 + j(x + ln n)/n): first-order tail at the max-scale
// threshold floor(n^2(x + ln n)).
double tail_asym_Y(int n, int j, double x);

// n P{X > floor(n^2(x + ln n))}; converges to e^{-x}. Rejects thresholds < 1.
double scaled_tail_limit(int n, double x);

struct KSReport {
    double distance = 0;  // in [0, 1]
    std::size_t sample_size = 0;
    LimitLaw law;
    std::optional<Normalization> normalization;
    std::uint64_t master_seed = 0;
};

// Sup over sample points of max(|i/N - F(x_i)|, |(i-1)/N - F(x_i)|).
// values must be sorted ascending and non-empty. No p-value is attached:
// the raw distance is the deliverable.
KSReport ks_distance(std::span<const double> sorted_values, const LimitLaw& law,
                     std::optional<Normalization> normalization = std::nullopt,
                     std::uint64_t master_seed = 0);

// n (floor(n/k) - 1) P{Y-over-2-targets > floor(n^2(x + ln n))}; approaches
// e^{-2x}/k for large n. The mixing-condition sum made computable.
double dprime_diagnostic(int n, int k, double x);

}  // namespace paircollect::laws

#include "paircollect/limitlaws.hpp"

#include "paircollect/distributions.hpp"
#include "paircollect/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace paircollect::laws {

namespace {

// floor(n^2 (x + ln n)) as an integer threshold; rejects values below the
// tail's domain.
std::int64_t max_scale_threshold(int n, double x, const char* who) {
    if (n < 2) throw parameter_error(std::string(who) + ": need n >= 2");
    double u = static_cast<double>(n) * n * (x + std::log(static_cast<double>(n)));
    if (!(u >= 1.0)) {
        throw parameter_error(std::string(who) + ": threshold n^2(x + ln n) is below 1");
    }
    return static_cast<std::int64_t>(std::floor(u));
}

}  // namespace

Regime Regime::fixed_k(int k) {
    if (k < 1) throw parameter_error("Regime::fixed_k: k >= 1 required");
    return {RegimeKind::FixedK, k, 0.0};
}

Regime Regime::sublinear() { return {RegimeKind::Sublinear, 0, 0.0}; }

Regime Regime::proportional(double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw parameter_error("Regime::proportional: lambda in (0, 1) required");
    }
    return {RegimeKind::Proportional, 0, lambda};
}

Regime Regime::near_complete() { return {RegimeKind::NearComplete, 0, 0.0}; }

Regime Regime::kth_max(int k) {
    if (k < 1) throw parameter_error("Regime::kth_max: k >= 1 required");
    return {RegimeKind::KthMax, k, 0.0};
}

Regime Regime::full_max() { return {RegimeKind::FullMax, 0, 0.0}; }

std::string Regime::name() const {
    switch (kind) {
        case RegimeKind::FixedK: return "fixedk";
        case RegimeKind::Sublinear: return "sublinear";
        case RegimeKind::Proportional: return "proportional";
        case RegimeKind::NearComplete: return "nearcomplete";
        case RegimeKind::KthMax: return "kthmax";
        case RegimeKind::FullMax: return "fullmax";
    }
    return "?";
}

Normalization normalization_for(int n, int a, const Regime& regime) {
    if (n < 2 || a < 1 || a > n) {
        throw parameter_error("normalization_for: need n >= 2, 1 <= a <= n");
    }
    double nd = n;
    Normalization norm;
    norm.regime = regime;
    auto clt_center = [&] {
        if (a >= n) {
            throw parameter_error("normalization_for: CLT regimes require a < n");
        }
        return -nd * nd * std::log1p(-static_cast<double>(a) / nd);
    };
    switch (regime.kind) {
        case RegimeKind::FixedK:
            if (a != regime.k) {
                throw parameter_error("normalization_for: FixedK(k) requires a = k");
            }
            norm.center = 0.0;
            norm.scale = nd;
            break;
        case RegimeKind::Sublinear:
            norm.center = clt_center();
            norm.scale = nd * std::sqrt(static_cast<double>(a));
            break;
        case RegimeKind::Proportional: {
            norm.center = clt_center();
            double lam0 = static_cast<double>(a) / (nd - a);  // from a/n, not the limit
            norm.scale = std::sqrt(lam0) * nd * std::sqrt(nd);
            break;
        }
        case RegimeKind::NearComplete:
            norm.center = clt_center();
            norm.scale = nd * nd / std::sqrt(static_cast<double>(n - a));
            break;
        case RegimeKind::KthMax:
            if (a != n - regime.k + 1) {
                throw parameter_error("normalization_for: KthMax(k) requires a = n - k + 1");
            }
            norm.center = nd * nd * std::log(nd);
            norm.scale = nd * nd;
            break;
        case RegimeKind::FullMax:
            if (a != n) {
                throw parameter_error("normalization_for: FullMax requires a = n");
            }
            norm.center = nd * nd * std::log(nd);
            norm.scale = nd * nd;
            break;
    }
    return norm;
}

LimitLaw LimitLaw::erlang(int k) {
    if (k < 1) throw parameter_error("LimitLaw::erlang: k >= 1 required");
    return {LawKind::ErlangK, k};
}

LimitLaw LimitLaw::std_normal() { return {LawKind::StdNormal, 1}; }

LimitLaw LimitLaw::gumbel_kth(int k) {
    if (k < 1) throw parameter_error("LimitLaw::gumbel_kth: k >= 1 required");
    return {LawKind::GumbelKth, k};
}

double LimitLaw::cdf(double x) const {
    switch (kind) {
        case LawKind::ErlangK: return cdf_erlang(k, x);
        case LawKind::StdNormal: return cdf_std_normal(x);
        case LawKind::GumbelKth: return cdf_gumbel_kth(k, x);
    }
    return 0.0;
}

std::string LimitLaw::name() const {
    switch (kind) {
        case LawKind::ErlangK: return "erlang(" + std::to_string(k) + ")";
        case LawKind::StdNormal: return "stdnormal";
        case LawKind::GumbelKth: return "gumbel_kth(" + std::to_string(k) + ")";
    }
    return "?";
}

double cdf_gumbel_kth(int k, double x) {
    if (k < 1) throw parameter_error("cdf_gumbel_kth: k >= 1 required");
    // exp(-mu) sum_{s<k} mu^s/s!, mu = e^{-x}; per-term exponentials keep the
    // far-left tail from overflowing before the leading factor kills it.
    double mu = std::exp(-x);
    double sum = 0.0;
    for (int s = 0; s < k; ++s) {
        sum += std::exp(-mu - s * x - std::lgamma(static_cast<double>(s) + 1.0));
    }
    return sum;
}

std::complex<double> cf_limit_fixed_k(int k, double t) {
    if (k < 1) throw parameter_error("cf_limit_fixed_k: k >= 1 required");
    double modulus = std::pow(1.0 + t * t, -0.5 * k);
    return std::polar(modulus, k * std::atan(t));
}

double cdf_erlang(int k, double x) {
    if (k < 1) throw parameter_error("cdf_erlang: k >= 1 required");
    if (x < 0.0) return 0.0;
    double term = std::exp(-x);
    double sum = term;
    for (int s = 1; s < k; ++s) {
        term *= x / s;
        sum += term;
    }
    return 1.0 - sum;
}

double cdf_std_normal(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double tail_asym_Y(int n, int j, double x) {
    if (n < 2 || j < 1 || j > 10) {
        throw parameter_error("tail_asym_Y: need n >= 2 and fixed small j (1..10)");
    }
    double logn = std::log(static_cast<double>(n));
    return std::exp(-j * (x + logn)) * (1.0 + j * (x + logn) / n);
}

double scaled_tail_limit(int n, double x) {
    std::int64_t m = max_scale_threshold(n, x, "scaled_tail_limit");
    return n * dist::tail_X(n, m);
}

KSReport ks_distance(std::span<const double> sorted_values, const LimitLaw& law,
                     std::optional<Normalization> normalization, std::uint64_t master_seed) {
    if (sorted_values.empty()) throw parameter_error("ks_distance: empty sample");
    double n = static_cast<double>(sorted_values.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted_values.size(); ++i) {
        double f = law.cdf(sorted_values[i]);
        double hi = (static_cast<double>(i) + 1.0) / n - f;
        double lo = f - static_cast<double>(i) / n;
        sup = std::max({sup, std::abs(hi), std::abs(lo)});
    }
    KSReport report;
    report.distance = sup;
    report.sample_size = sorted_values.size();
    report.law = law;
    report.normalization = normalization;
    report.master_seed = master_seed;
    return report;
}

double dprime_diagnostic(int n, int k, double x) {
    if (k < 1) throw parameter_error("dprime_diagnostic: k >= 1 required");
    std::int64_t m = max_scale_threshold(n, x, "dprime_diagnostic");
    int block_terms = n / k - 1;  // floor(n/k) - 1 pairwise-tail summands
    return static_cast<double>(n) * block_terms * dist::tail_Y(n, 2, m);
}

}  // namespace paircollect::laws

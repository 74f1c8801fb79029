#pragma once

// Shared test-side oracles and harness helpers. Everything here is
// deliberately independent of the library paths it is used to check.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

// Count length-len strings over {1..n} with no adjacent equal pair aa for
// a <= j, by direct enumeration (independent of the recurrence).
inline std::uint64_t brute_pair_free_strings(int n, int j, int len) {
    if (len == 0) return 1;
    std::vector<int> z(static_cast<std::size_t>(len), 0);
    std::uint64_t total = 1;
    for (int i = 0; i < len; ++i) total *= static_cast<std::uint64_t>(n);
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < total; ++s) {
        bool ok = true;
        for (int i = 1; i < len && ok; ++i) {
            if (z[static_cast<std::size_t>(i)] == z[static_cast<std::size_t>(i - 1)] &&
                z[static_cast<std::size_t>(i)] < j) {
                ok = false;
            }
        }
        if (ok) ++count;
        for (int i = len - 1; i >= 0; --i) {
            if (++z[static_cast<std::size_t>(i)] < n) break;
            z[static_cast<std::size_t>(i)] = 0;
        }
    }
    return count;
}

// Count length-len strings over {1..n} whose first jj run for symbol 1 ends
// exactly at draw k.
inline std::uint64_t brute_first_pair_at(int n, int len, int k) {
    std::vector<int> z(static_cast<std::size_t>(len), 0);
    std::uint64_t total = 1;
    for (int i = 0; i < len; ++i) total *= static_cast<std::uint64_t>(n);
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < total; ++s) {
        int first = 0;
        for (int i = 1; i < len; ++i) {
            if (z[static_cast<std::size_t>(i)] == 0 && z[static_cast<std::size_t>(i - 1)] == 0) {
                first = i + 1;
                break;
            }
        }
        if (first == k) ++count;
        for (int i = len - 1; i >= 0; --i) {
            if (++z[static_cast<std::size_t>(i)] < n) break;
            z[static_cast<std::size_t>(i)] = 0;
        }
    }
    return count;
}

// Two-sample Kolmogorov-Smirnov distance; both inputs sorted ascending.
inline double two_sample_ks(const std::vector<double>& a, const std::vector<double>& b) {
    double na = static_cast<double>(a.size());
    double nb = static_cast<double>(b.size());
    std::size_t ia = 0;
    std::size_t ib = 0;
    double sup = 0.0;
    while (ia < a.size() && ib < b.size()) {
        double x = std::min(a[ia], b[ib]);
        while (ia < a.size() && a[ia] <= x) ++ia;
        while (ib < b.size() && b[ib] <= x) ++ib;
        sup = std::max(sup, std::abs(static_cast<double>(ia) / na -
                                     static_cast<double>(ib) / nb));
    }
    return sup;
}

// Inverse of a continuous CDF by bisection.
inline double invert_cdf(const std::function<double(double)>& cdf, double p, double lo,
                         double hi) {
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// CDF by numerical inversion of a characteristic function:
//   F(x) = 1/2 - (1/pi) int_0^inf Im(e^{-itx} phi(t))/t dt
// (composite Simpson; the integrand decays like t^{-(k+1)} for the laws used
// in these tests).
inline double cdf_from_cf(const std::function<std::complex<double>(double)>& phi, double x,
                          double t_max = 60.0, int intervals = 600000) {
    auto integrand = [&](double t) {
        return std::imag(std::exp(std::complex<double>(0.0, -t * x)) * phi(t)) / t;
    };
    double a = 1e-9;
    double h = (t_max - a) / intervals;
    double sum = integrand(a) + integrand(t_max);
    for (int i = 1; i < intervals; ++i) {
        sum += integrand(a + i * h) * ((i & 1) ? 4.0 : 2.0);
    }
    double integral = sum * h / 3.0;
    return 0.5 - integral / M_PI;
}

inline double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double variance_of(const std::vector<double>& xs) {
    double m = mean_of(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

inline double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    double mx = mean_of(xs);
    double my = mean_of(ys);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

// Run a shell command capturing stdout; stderr passes through.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), got);
    }
    int status = ::pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testsupport

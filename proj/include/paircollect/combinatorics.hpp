#pragma once

#include "paircollect/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace paircollect::comb {

struct HarmonicConstants {
    static constexpr double gamma = 0.57721566490153286;       // Euler's constant
    static constexpr double pi_sq_over_6 = 1.6449340668482264; // lim H_n^{(2)}
};

// C(r, s); zero when s > r.
BigInt binomial(std::uint64_t r, std::uint64_t s);

// sum_{s=0}^{floor(r/2)} C(r-s, s) x^s, exactly.
BigRational chebyshev_sum(unsigned r, const BigRational& x);

// Closed form of the same sum,
//   (1/a) { ((1+a)/2)^{r+1} - ((1-a)/2)^{r+1} },  a = sqrt(1 + 4x),
// evaluated in floating point with binary exponentiation. Requires 1 + 4x > 0.
double chebyshev_closed(unsigned r, double x);

struct HarmonicPair {
    BigRational h;   // H_n
    BigRational h2;  // H_n^{(2)}
};

// Exact harmonic numbers; guarded to n <= 1e6 (denominators grow like e^n).
// harmonic(0) is the empty sum.
HarmonicPair harmonic(std::uint32_t n);

struct HarmonicAsym {
    double h;   // ln n + gamma + 1/(2n) - 1/(12n^2) + 1/(120n^4)
    double h2;  // pi^2/6 - 1/n
    // Bounds on the dropped remainders: (1/(252 n^6), 1/(n(n+1))).
    std::pair<double, double> remainder_bounds;
};

HarmonicAsym harmonic_asym(std::uint64_t n);

// Counts of length-l strings over {1..n} containing no adjacent equal pair aa
// with a among the first j symbols. a_l counts strings ending outside the
// target set, b_l those ending inside it, s_l = a_l + b_l.
struct RunCounts {
    int n = 0;
    int j = 0;
    std::vector<BigInt> a;
    std::vector<BigInt> b;
    std::vector<BigInt> s;
};

RunCounts run_counts(int n, int j, int max_len);

// Coefficients of the closed form s_{k-1} = c1 t1^{k-1} + c2 t2^{k-1}, where
// t1, t2 are the roots of t^2 - (n-1)t - (n-j).
struct ClosedFormCounts {
    double c1;
    double c2;
    double t1;
    double t2;
};

ClosedFormCounts closed_form_counts(int n, int j);

}  // namespace paircollect::comb

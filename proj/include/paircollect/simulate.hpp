#pragma once

#include "paircollect/distributions.hpp"
#include "paircollect/limitlaws.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace paircollect::sim {

// Small splittable generator (the splitmix64 sequence). Streams are keyed by
// (master_seed, replication_index), so results do not depend on how
// replications are distributed across workers.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Strictly inside (0, 1); safe for inverse-CDF sampling.
    double next_unit_open();

    // Uniform on {0, ..., bound-1} without modulo bias.
    std::uint64_t next_below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z);
SplitMix64 stream_for(std::uint64_t master_seed, std::uint64_t replication_index);

enum class TargetKind { Y, S, M, KthMax };

struct Target {
    TargetKind kind = TargetKind::M;
    int param = 0;  // j for Y, a for S, k for KthMax

    static Target y(int j) { return {TargetKind::Y, j}; }
    static Target s(int a) { return {TargetKind::S, a}; }
    static Target m() { return {TargetKind::M, 0}; }
    static Target kth_max(int k) { return {TargetKind::KthMax, k}; }

    std::string name() const;
};

enum class Backend { Process, Inversion };

struct SimConfig {
    int n = 2;
    Target target;
    std::size_t replications = 1;
    std::uint64_t master_seed = 0;
    Backend backend = Backend::Inversion;
};

struct EmpiricalSample {
    std::vector<double> values;  // sorted ascending
    SimConfig config;
};

// One full pass of the draw process: symbols uniform on {1..n}; a symbol is
// collected the first time it appears twice in a row (a triple run completes
// on its second draw and never re-completes). jump_times[a-1] is the draw
// index at which the a-th distinct pair completes.
std::vector<std::int64_t> simulate_process(int n, SplitMix64& rng);

// Same scan over an arbitrary draw source returning symbols in {0..n-1};
// lets tests script exact sequences.
template <typename DrawFn>
std::vector<std::int64_t> collect_pairs(int n, DrawFn&& draw) {
    std::vector<std::int64_t> jumps(static_cast<std::size_t>(n));
    std::vector<char> collected(static_cast<std::size_t>(n), 0);
    int done = 0;
    std::uint64_t prev = draw();
    std::int64_t k = 1;
    while (done < n) {
        std::uint64_t z = draw();
        ++k;
        if (z == prev && !collected[z]) {
            collected[z] = 1;
            jumps[static_cast<std::size_t>(done++)] = k;
        }
        prev = z;
    }
    return jumps;
}

// Smallest k with P{Y <= k} >= u: doubling upper bound from the mean, then
// bisection. u must lie strictly in (0, 1).
std::int64_t sample_Y_inversion(const dist::YLaw& law, double u);
std::int64_t sample_Y_inversion(int n, int j, double u);

// Per-replication streams derived from (master_seed, index); the result is
// independent of execution order and worker count.
EmpiricalSample run_experiment(const SimConfig& config, unsigned workers = 1);

// v -> (v - center)/scale, order preserved.
EmpiricalSample normalize_sample(const EmpiricalSample& sample,
                                 const laws::Normalization& norm);

}  // namespace paircollect::sim

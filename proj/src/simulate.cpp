#include "paircollect/simulate.hpp"

#include "paircollect/errors.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace paircollect::sim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// Number of independent waiting-time summands behind each target.
int summand_count(const Target& target, int n) {
    switch (target.kind) {
        case TargetKind::Y: return 1;
        case TargetKind::S: return target.param;
        case TargetKind::M: return n;
        case TargetKind::KthMax: return n - target.param + 1;
    }
    return 0;
}

void validate_config(const SimConfig& config) {
    int n = config.n;
    if (n < 2) throw parameter_error("run_experiment: need n >= 2");
    const Target& t = config.target;
    switch (t.kind) {
        case TargetKind::Y:
            if (t.param < 1 || t.param > n) {
                throw parameter_error("run_experiment: target Y needs 1 <= j <= n");
            }
            break;
        case TargetKind::S:
            if (t.param < 1 || t.param > n) {
                throw parameter_error("run_experiment: target S needs 1 <= a <= n");
            }
            break;
        case TargetKind::M:
            break;
        case TargetKind::KthMax:
            if (t.param < 1 || t.param > n) {
                throw parameter_error("run_experiment: target KthMax needs 1 <= k <= n");
            }
            break;
    }
    if (config.replications < 1) {
        throw parameter_error("run_experiment: need at least one replication");
    }
}

std::int64_t extract_from_jumps(const std::vector<std::int64_t>& jumps, const Target& target,
                                int n) {
    switch (target.kind) {
        case TargetKind::Y: {
            // Y over a j-element set is the (n-j+1)-th inter-completion time.
            int a = n - target.param + 1;
            return a >= 2 ? jumps[a - 1] - jumps[a - 2] : jumps[0];
        }
        case TargetKind::S:
            return jumps[target.param - 1];
        case TargetKind::M:
            return jumps[n - 1];
        case TargetKind::KthMax:
            return jumps[n - target.param];
    }
    return 0;
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += kGolden;
    return mix64(state_);
}

double SplitMix64::next_unit_open() {
    // 53 random bits shifted into (0, 1); never returns an endpoint.
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    // Lemire multiply-shift with rejection.
    std::uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        std::uint64_t threshold = -bound % bound;
        while (lo < threshold) {
            x = next();
            m = static_cast<unsigned __int128>(x) * bound;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

SplitMix64 stream_for(std::uint64_t master_seed, std::uint64_t replication_index) {
    return SplitMix64(mix64(master_seed + kGolden * (replication_index + 1)));
}

std::string Target::name() const {
    switch (kind) {
        case TargetKind::Y: return "y";
        case TargetKind::S: return "s";
        case TargetKind::M: return "m";
        case TargetKind::KthMax: return "kmax";
    }
    return "?";
}

std::vector<std::int64_t> simulate_process(int n, SplitMix64& rng) {
    if (n < 2) throw parameter_error("simulate_process: need n >= 2");
    auto bound = static_cast<std::uint64_t>(n);
    return collect_pairs(n, [&rng, bound] { return rng.next_below(bound); });
}

std::int64_t sample_Y_inversion(const dist::YLaw& law, double u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw parameter_error("sample_Y_inversion: u must lie strictly in (0, 1)");
    }
    std::int64_t hi = std::max<std::int64_t>(2, std::llround(law.mean()));
    while (law.cdf(hi) < u) hi *= 2;
    std::int64_t lo = 2;
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (law.cdf(mid) >= u) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

std::int64_t sample_Y_inversion(int n, int j, double u) {
    return sample_Y_inversion(dist::YLaw(n, j), u);
}

EmpiricalSample run_experiment(const SimConfig& config, unsigned workers) {
    validate_config(config);
    int n = config.n;
    std::size_t reps = config.replications;

    // One law per summand, shared read-only across workers. Summation runs
    // j = n, n-1, ... so the stream layout matches the collection order.
    std::vector<dist::YLaw> summands;
    if (config.backend == Backend::Inversion) {
        int count = summand_count(config.target, n);
        summands.reserve(static_cast<std::size_t>(count));
        if (config.target.kind == TargetKind::Y) {
            summands.emplace_back(n, config.target.param);
        } else {
            for (int j = n; j > n - count; --j) summands.emplace_back(n, j);
        }
    }

    std::vector<double> values(reps);
    auto draw_one = [&](std::size_t rep_index) {
        SplitMix64 rng = stream_for(config.master_seed, rep_index);
        if (config.backend == Backend::Process) {
            std::vector<std::int64_t> jumps = simulate_process(n, rng);
            return static_cast<double>(extract_from_jumps(jumps, config.target, n));
        }
        std::int64_t total = 0;
        for (const dist::YLaw& law : summands) {
            total += sample_Y_inversion(law, rng.next_unit_open());
        }
        return static_cast<double>(total);
    };

    if (workers <= 1 || reps < 2) {
        for (std::size_t i = 0; i < reps; ++i) values[i] = draw_one(i);
    } else {
        unsigned count = std::min<std::size_t>(workers, reps);
        std::vector<std::thread> pool;
        pool.reserve(count);
        for (unsigned w = 0; w < count; ++w) {
            std::size_t begin = reps * w / count;
            std::size_t end = reps * (w + 1) / count;
            pool.emplace_back([&, begin, end] {
                for (std::size_t i = begin; i < end; ++i) values[i] = draw_one(i);
            });
        }
        for (std::thread& t : pool) t.join();
    }

    std::sort(values.begin(), values.end());
    return {std::move(values), config};
}

EmpiricalSample normalize_sample(const EmpiricalSample& sample,
                                 const laws::Normalization& norm) {
    if (!(norm.scale > 0.0)) throw parameter_error("normalize_sample: scale must be > 0");
    EmpiricalSample out;
    out.config = sample.config;
    out.values.reserve(sample.values.size());
    for (double v : sample.values) {
        out.values.push_back((v - norm.center) / norm.scale);
    }
    return out;
}

}  // namespace paircollect::sim

#include "paircollect/oracle.hpp"

#include "paircollect/errors.hpp"

#include <string>
#include <utility>

namespace paircollect::oracle {

namespace {

constexpr int kMaxN = 4;
constexpr int kMaxLen = 12;

void check_mask(const EnumeratedLaws& laws, unsigned mask) {
    if (mask == 0 || mask >= (1u << laws.n)) {
        throw parameter_error("enumerate_laws: subset mask out of range");
    }
}

void check_k(const EnumeratedLaws& laws, int k) {
    if (k < 2 || k > laws.len) {
        throw parameter_error("enumerate_laws: event index k must lie in [2, len]");
    }
}

std::uint64_t tail_count(const std::vector<std::uint64_t>& counts, int m) {
    std::uint64_t c = 0;
    for (std::size_t k = static_cast<std::size_t>(m) + 1; k < counts.size(); ++k) {
        c += counts[k];
    }
    return c;
}

}  // namespace

BigRational EnumeratedLaws::prob_x(int j, int k) const {
    if (j < 1 || j > n) throw parameter_error("enumerate_laws: symbol out of range");
    check_k(*this, k);
    return BigRational(first_pair_counts[static_cast<std::size_t>(j - 1)]
                                        [static_cast<std::size_t>(k)],
                       total);
}

BigRational EnumeratedLaws::residual_x(int j) const {
    if (j < 1 || j > n) throw parameter_error("enumerate_laws: symbol out of range");
    return BigRational(first_pair_counts[static_cast<std::size_t>(j - 1)]
                                        [static_cast<std::size_t>(len + 1)],
                       total);
}

BigRational EnumeratedLaws::prob_subset(unsigned mask, int k) const {
    check_mask(*this, mask);
    check_k(*this, k);
    return BigRational(subset_counts[mask][static_cast<std::size_t>(k)], total);
}

BigRational EnumeratedLaws::residual_subset(unsigned mask) const {
    check_mask(*this, mask);
    return BigRational(subset_counts[mask][static_cast<std::size_t>(len + 1)], total);
}

BigRational EnumeratedLaws::tail_subset(unsigned mask, int m) const {
    check_mask(*this, mask);
    if (m < 0 || m > len) throw parameter_error("enumerate_laws: tail point out of range");
    return BigRational(tail_count(subset_counts[mask], m), total);
}

BigRational EnumeratedLaws::tail_joint(unsigned mask, int m) const {
    check_mask(*this, mask);
    if (m < 0 || m > len) throw parameter_error("enumerate_laws: tail point out of range");
    return BigRational(tail_count(joint_min_counts[mask], m), total);
}

EnumeratedLaws enumerate_laws(int n, int len) {
    if (n < 2) throw parameter_error("enumerate_laws: need n >= 2");
    if (len < 0) throw parameter_error("enumerate_laws: need len >= 0");
    if (n > kMaxN || len > kMaxLen) {
        throw size_guard_error("enumerate_laws: bounded to n <= " + std::to_string(kMaxN) +
                               ", len <= " + std::to_string(kMaxLen));
    }

    EnumeratedLaws laws;
    laws.n = n;
    laws.len = len;
    laws.total = 1;
    for (int i = 0; i < len; ++i) laws.total *= static_cast<std::uint64_t>(n);

    const int unresolved = len + 1;
    const auto slots = static_cast<std::size_t>(len + 2);
    const unsigned masks = 1u << n;
    laws.first_pair_counts.assign(static_cast<std::size_t>(n),
                                  std::vector<std::uint64_t>(slots, 0));
    laws.subset_counts.assign(masks, std::vector<std::uint64_t>(slots, 0));
    laws.joint_min_counts.assign(masks, std::vector<std::uint64_t>(slots, 0));

    std::vector<int> z(static_cast<std::size_t>(len), 0);  // odometer, symbols 0-based
    std::vector<int> first_pair(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> runs;  // (draw index, symbol) of adjacent equal pairs
    runs.reserve(static_cast<std::size_t>(len));

    for (std::uint64_t seq = 0; seq < laws.total; ++seq) {
        runs.clear();
        for (int i = 1; i < len; ++i) {
            if (z[static_cast<std::size_t>(i)] == z[static_cast<std::size_t>(i - 1)]) {
                runs.emplace_back(i + 1, z[static_cast<std::size_t>(i)]);
            }
        }

        std::fill(first_pair.begin(), first_pair.end(), unresolved);
        for (const auto& [k, sym] : runs) {
            if (first_pair[static_cast<std::size_t>(sym)] == unresolved) {
                first_pair[static_cast<std::size_t>(sym)] = k;
            }
        }
        for (int sym = 0; sym < n; ++sym) {
            ++laws.first_pair_counts[static_cast<std::size_t>(sym)]
                                    [static_cast<std::size_t>(first_pair[static_cast<std::size_t>(sym)])];
        }

        for (unsigned mask = 1; mask < masks; ++mask) {
            // Route one: scan the run list for the first symbol in the set.
            int direct = unresolved;
            for (const auto& [k, sym] : runs) {
                if (mask & (1u << sym)) {
                    direct = k;
                    break;
                }
            }
            ++laws.subset_counts[mask][static_cast<std::size_t>(direct)];

            // Route two: intersect the per-symbol waiting times.
            int joint = unresolved;
            for (int sym = 0; sym < n; ++sym) {
                if ((mask & (1u << sym)) && first_pair[static_cast<std::size_t>(sym)] < joint) {
                    joint = first_pair[static_cast<std::size_t>(sym)];
                }
            }
            ++laws.joint_min_counts[mask][static_cast<std::size_t>(joint)];
        }

        for (int i = len - 1; i >= 0; --i) {
            if (++z[static_cast<std::size_t>(i)] < n) break;
            z[static_cast<std::size_t>(i)] = 0;
        }
    }
    return laws;
}

std::vector<BigRational> recurrence_pmf_Y(int n, int j, std::int64_t k_max) {
    if (n < 2 || j < 1 || j > n) {
        throw parameter_error("recurrence_pmf_Y: need n >= 2, 1 <= j <= n");
    }
    if (k_max < 2) throw parameter_error("recurrence_pmf_Y: need k_max >= 2");
    if (n > 50 || k_max > 10000) {
        throw size_guard_error("recurrence_pmf_Y: bounded to n <= 50, k_max <= 1e4");
    }
    std::vector<BigRational> pmf;
    pmf.reserve(static_cast<std::size_t>(k_max - 1));
    BigInt s_prev = 1;  // s_0
    BigInt s_cur = n;   // s_1
    BigInt nk = BigInt(n) * n;
    for (std::int64_t k = 2; k <= k_max; ++k) {
        pmf.emplace_back(s_cur - (n - j) * s_prev, nk);
        BigInt s_next = (n - 1) * s_cur + (n - j) * s_prev;
        s_prev = std::move(s_cur);
        s_cur = std::move(s_next);
        nk *= n;
    }
    return pmf;
}

}  // namespace paircollect::oracle

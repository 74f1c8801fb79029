// Batch command-line surface over the pair-collecting library: exact law
// queries, moment tables, seeded simulation, convergence studies and
// enumeration checks, with machine-readable jsonl/csv output.

#include "CLI11.hpp"

#include "paircollect/combinatorics.hpp"
#include "paircollect/distributions.hpp"
#include "paircollect/errors.hpp"
#include "paircollect/limitlaws.hpp"
#include "paircollect/oracle.hpp"
#include "paircollect/report.hpp"
#include "paircollect/simulate.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using paircollect::BigRational;
using paircollect::parameter_error;
namespace comb = paircollect::comb;
namespace dist = paircollect::dist;
namespace laws = paircollect::laws;
namespace oracle = paircollect::oracle;
namespace report = paircollect::report;
namespace sim = paircollect::sim;

using report::ReportRow;
using Float50 = boost::multiprecision::cpp_bin_float_50;

struct OutputOpts {
    std::string format = "jsonl";
    std::string out_path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    cmd->add_option("--out", opts.out_path, "write rows to this file instead of stdout");
}

void emit(const std::vector<ReportRow>& rows, const OutputOpts& opts) {
    report::Format format = report::parse_format(opts.format);
    if (opts.out_path.empty()) {
        report::emit_report(rows, format, std::cout);
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) throw parameter_error("cannot open output file " + opts.out_path);
        report::emit_report(rows, format, out);
    }
}

// Probabilities are clamped at the formatting boundary only; the library
// never clamps internally, so cancellation bugs stay visible to tests.
double clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }

std::vector<int> parse_n_grid(const std::string& csv) {
    std::vector<int> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int n = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            grid.push_back(n);
        } catch (const std::exception&) {
            throw parameter_error("--n-grid: cannot parse '" + item + "' as an integer");
        }
    }
    if (grid.empty()) throw parameter_error("--n-grid must list at least one value");
    return grid;
}

// Closed-form rules for a_n, so a regime is described by a sequence rather
// than a single value: k:<int>, floor-frac:<num>/<den>, n-minus:<int>,
// floor-sqrt, n-minus-sqrt.
struct ARule {
    enum class Kind { FixedK, FloorFrac, NMinus, FloorSqrt, NMinusSqrt };
    Kind kind = Kind::FloorSqrt;
    long long p = 0;
    long long q = 1;
    std::string text;
};

ARule parse_a_rule(const std::string& s) {
    ARule rule;
    rule.text = s;
    auto numeric_tail = [&](const std::string& prefix) {
        return std::stoll(s.substr(prefix.size()));
    };
    try {
        if (s == "floor-sqrt") {
            rule.kind = ARule::Kind::FloorSqrt;
        } else if (s == "n-minus-sqrt") {
            rule.kind = ARule::Kind::NMinusSqrt;
        } else if (s.rfind("k:", 0) == 0) {
            rule.kind = ARule::Kind::FixedK;
            rule.p = numeric_tail("k:");
        } else if (s.rfind("n-minus:", 0) == 0) {
            rule.kind = ARule::Kind::NMinus;
            rule.p = numeric_tail("n-minus:");
        } else if (s.rfind("floor-frac:", 0) == 0) {
            std::string body = s.substr(std::string("floor-frac:").size());
            std::size_t slash = body.find('/');
            if (slash == std::string::npos) throw std::invalid_argument(s);
            rule.kind = ARule::Kind::FloorFrac;
            rule.p = std::stoll(body.substr(0, slash));
            rule.q = std::stoll(body.substr(slash + 1));
            if (rule.q <= 0 || rule.p <= 0) throw std::invalid_argument(s);
        } else {
            throw std::invalid_argument(s);
        }
    } catch (const std::exception&) {
        throw parameter_error("--a-rule: cannot parse '" + s +
                              "' (expected k:<int>, floor-frac:<num>/<den>, n-minus:<int>, "
                              "floor-sqrt or n-minus-sqrt)");
    }
    return rule;
}

int apply_a_rule(const ARule& rule, int n) {
    long long a = 0;
    switch (rule.kind) {
        case ARule::Kind::FixedK: a = rule.p; break;
        case ARule::Kind::FloorFrac: a = static_cast<long long>(n) * rule.p / rule.q; break;
        case ARule::Kind::NMinus: a = n - rule.p; break;
        case ARule::Kind::FloorSqrt:
            a = static_cast<long long>(std::floor(std::sqrt(static_cast<double>(n))));
            break;
        case ARule::Kind::NMinusSqrt:
            a = n - static_cast<long long>(std::floor(std::sqrt(static_cast<double>(n))));
            break;
    }
    if (a < 1 || a > n) {
        throw parameter_error("--a-rule '" + rule.text + "' gives a = " + std::to_string(a) +
                              " outside [1, n] at n = " + std::to_string(n));
    }
    return static_cast<int>(a);
}

// ---- pmf ----------------------------------------------------------------

struct PmfOpts {
    std::string dist = "y";
    int n = 2;
    int j = 1;
    std::int64_t kmax = 2;
    bool exact = false;
    bool j_given = false;
    OutputOpts out;
};

std::vector<ReportRow> run_pmf(const PmfOpts& opt) {
    if (opt.dist == "x" && opt.j_given) {
        throw parameter_error("pmf: --j applies only to --dist y");
    }
    if (opt.dist == "y" && !opt.j_given) {
        throw parameter_error("pmf: --dist y requires --j");
    }
    if (opt.kmax < 2) throw parameter_error("pmf: --kmax must be at least 2");
    std::vector<ReportRow> rows;
    auto base_row = [&] {
        ReportRow row;
        row.set("dist", opt.dist);
        row.set("n", static_cast<std::int64_t>(opt.n));
        if (opt.dist == "y") row.set("j", static_cast<std::int64_t>(opt.j));
        row.set("exact", opt.exact);
        return row;
    };
    if (opt.exact) {
        // one recurrence pass instead of kmax of them
        std::vector<BigRational> table;
        if (opt.dist == "y") table = dist::pmf_Y_exact_table(opt.n, opt.j, opt.kmax);
        for (std::int64_t k = 2; k <= opt.kmax; ++k) {
            ReportRow row = base_row();
            row.set("k", k);
            row.set("prob", opt.dist == "y" ? table[static_cast<std::size_t>(k - 2)]
                                            : dist::pmf_X_exact(opt.n, k));
            rows.push_back(std::move(row));
        }
        return rows;
    }
    std::optional<dist::YLaw> law;
    if (opt.dist == "y") law.emplace(opt.n, opt.j);
    for (std::int64_t k = 2; k <= opt.kmax; ++k) {
        ReportRow row = base_row();
        row.set("k", k);
        row.set("prob", clamp01(opt.dist == "y" ? law->pmf(k) : dist::pmf_X(opt.n, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- tail ---------------------------------------------------------------

struct TailOpts {
    std::string dist = "y";
    int n = 2;
    int j = 1;
    std::int64_t m = 1;
    bool j_given = false;
    OutputOpts out;
};

std::vector<ReportRow> run_tail(const TailOpts& opt) {
    if (opt.dist == "x" && opt.j_given) {
        throw parameter_error("tail: --j applies only to --dist y");
    }
    if (opt.dist == "y" && !opt.j_given) {
        throw parameter_error("tail: --dist y requires --j");
    }
    ReportRow row;
    row.set("dist", opt.dist);
    row.set("n", static_cast<std::int64_t>(opt.n));
    if (opt.dist == "y") row.set("j", static_cast<std::int64_t>(opt.j));
    row.set("m", opt.m);
    row.set("prob", clamp01(opt.dist == "y" ? dist::tail_Y(opt.n, opt.j, opt.m)
                                            : dist::tail_X(opt.n, opt.m)));
    return {row};
}

// ---- moments ------------------------------------------------------------

struct MomentsOpts {
    std::string target = "y";
    int n = 2;
    int j = 1;
    int a = 1;
    bool j_given = false;
    bool a_given = false;
    bool asym = false;
    std::string regime;
    OutputOpts out;
};

dist::SRegime parse_s_regime(const std::string& name) {
    if (name == "sublinear") return dist::SRegime::Sublinear;
    if (name == "proportional") return dist::SRegime::Proportional;
    if (name == "nearcomplete") return dist::SRegime::NearComplete;
    throw parameter_error("moments: --regime must be sublinear, proportional or nearcomplete");
}

std::string s_regime_name(dist::SRegime regime) {
    switch (regime) {
        case dist::SRegime::Sublinear: return "sublinear";
        case dist::SRegime::Proportional: return "proportional";
        case dist::SRegime::NearComplete: return "nearcomplete";
    }
    return "?";
}

std::vector<ReportRow> run_moments(const MomentsOpts& opt) {
    ReportRow row;
    row.set("target", opt.target);
    row.set("n", static_cast<std::int64_t>(opt.n));
    if (opt.target == "y") {
        if (!opt.j_given || opt.a_given) throw parameter_error("moments: --target y takes --j");
        if (opt.asym) throw parameter_error("moments: --asym applies to targets s and m");
        dist::MomentSummary ms = dist::moments_Y(opt.n, opt.j);
        row.set("j", static_cast<std::int64_t>(opt.j));
        row.set("mean", ms.mean);
        row.set("variance", ms.variance);
    } else if (opt.target == "s") {
        if (!opt.a_given || opt.j_given) throw parameter_error("moments: --target s takes --a");
        dist::MomentSummary ms = dist::moments_S(opt.n, opt.a);
        row.set("a", static_cast<std::int64_t>(opt.a));
        row.set("mean", ms.mean);
        row.set("variance", ms.variance);
        if (opt.asym) {
            if (opt.regime.empty()) {
                throw parameter_error(
                    "moments: --target s --asym requires --regime (the limit depends on the "
                    "a_n sequence, not on a single pair)");
            }
            dist::AsymMomentsS am = dist::moments_S_asym(opt.n, opt.a, parse_s_regime(opt.regime));
            row.set("main_mean", am.main_mean);
            row.set("main_variance", am.main_variance);
            row.set("regime", s_regime_name(am.regime));
        }
    } else if (opt.target == "m") {
        if (opt.j_given || opt.a_given) {
            throw parameter_error("moments: --target m takes neither --j nor --a");
        }
        dist::MomentsM mm = dist::moments_M(opt.n);
        row.set("mean", mm.exact.mean);
        row.set("variance", mm.exact.variance);
        if (opt.asym) {
            row.set("asym_mean", mm.asym_mean);
            row.set("asym_var", mm.asym_var);
        }
    } else {
        throw parameter_error("moments: --target must be y, s or m");
    }
    return {row};
}

// ---- simulate -----------------------------------------------------------

struct SimulateOpts {
    std::string target = "m";
    int n = 2;
    int j = 0;
    int a = 0;
    int k = 0;
    bool j_given = false;
    bool a_given = false;
    bool k_given = false;
    std::size_t reps = 1;
    std::uint64_t seed = 0;
    std::string backend = "inversion";
    unsigned workers = 1;
    OutputOpts out;
};

sim::Backend parse_backend(const std::string& name) {
    if (name == "process") return sim::Backend::Process;
    if (name == "inversion") return sim::Backend::Inversion;
    throw parameter_error("--backend must be process or inversion");
}

sim::Target parse_target(const SimulateOpts& opt) {
    if (opt.target == "y") {
        if (!opt.j_given || opt.a_given || opt.k_given) {
            throw parameter_error("simulate: --target y takes --j");
        }
        return sim::Target::y(opt.j);
    }
    if (opt.target == "s") {
        if (!opt.a_given || opt.j_given || opt.k_given) {
            throw parameter_error("simulate: --target s takes --a");
        }
        return sim::Target::s(opt.a);
    }
    if (opt.target == "m") {
        if (opt.j_given || opt.a_given || opt.k_given) {
            throw parameter_error("simulate: --target m takes no extra parameter");
        }
        return sim::Target::m();
    }
    if (opt.target == "kmax") {
        if (!opt.k_given || opt.j_given || opt.a_given) {
            throw parameter_error("simulate: --target kmax takes --k");
        }
        return sim::Target::kth_max(opt.k);
    }
    throw parameter_error("simulate: --target must be y, s, m or kmax");
}

std::vector<ReportRow> run_simulate(const SimulateOpts& opt) {
    sim::SimConfig config;
    config.n = opt.n;
    config.target = parse_target(opt);
    config.replications = opt.reps;
    config.master_seed = opt.seed;
    config.backend = parse_backend(opt.backend);
    sim::EmpiricalSample sample = sim::run_experiment(config, opt.workers);

    std::vector<ReportRow> rows;
    rows.reserve(sample.values.size());
    for (std::size_t i = 0; i < sample.values.size(); ++i) {
        ReportRow row;
        row.set("target", opt.target);
        row.set("n", static_cast<std::int64_t>(opt.n));
        if (opt.target == "y") row.set("j", static_cast<std::int64_t>(opt.j));
        if (opt.target == "s") row.set("a", static_cast<std::int64_t>(opt.a));
        if (opt.target == "kmax") row.set("k", static_cast<std::int64_t>(opt.k));
        row.set("reps", static_cast<std::uint64_t>(opt.reps));
        row.set("seed", opt.seed);
        row.set("backend", opt.backend);
        row.set("index", static_cast<std::int64_t>(i));
        row.set("value", sample.values[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- converge -----------------------------------------------------------

struct ConvergeOpts {
    std::string law = "gumbel";
    std::string regime = "fullmax";
    std::string n_grid;
    std::string a_rule;
    std::size_t reps = 1000;
    std::uint64_t seed = 0;
    std::string backend = "inversion";
    std::string normalize = "main";
    unsigned workers = 1;
    OutputOpts out;
};

std::string default_a_rule(const std::string& regime) {
    if (regime == "fullmax") return "n-minus:0";
    if (regime == "kthmax") return "n-minus:1";
    if (regime == "fixedk") return "k:1";
    if (regime == "sublinear") return "floor-sqrt";
    if (regime == "proportional") return "floor-frac:1/2";
    if (regime == "nearcomplete") return "n-minus-sqrt";
    throw parameter_error("converge: --regime must be one of fixedk, sublinear, proportional, "
                          "nearcomplete, kthmax, fullmax");
}

std::vector<ReportRow> run_converge(const ConvergeOpts& opt) {
    std::vector<int> grid = parse_n_grid(opt.n_grid);
    ARule rule = parse_a_rule(opt.a_rule.empty() ? default_a_rule(opt.regime) : opt.a_rule);
    sim::Backend backend = parse_backend(opt.backend);
    if (opt.normalize != "main" && opt.normalize != "exact") {
        throw parameter_error("converge: --normalize must be main or exact");
    }

    std::vector<ReportRow> rows;
    for (int n : grid) {
        int a = apply_a_rule(rule, n);

        laws::Regime regime;
        sim::Target target = sim::Target::s(a);
        if (opt.regime == "fixedk") {
            regime = laws::Regime::fixed_k(a);
        } else if (opt.regime == "sublinear") {
            regime = laws::Regime::sublinear();
        } else if (opt.regime == "proportional") {
            double lambda = rule.kind == ARule::Kind::FloorFrac
                                ? static_cast<double>(rule.p) / static_cast<double>(rule.q)
                                : static_cast<double>(a) / n;
            regime = laws::Regime::proportional(lambda);
        } else if (opt.regime == "nearcomplete") {
            regime = laws::Regime::near_complete();
        } else if (opt.regime == "kthmax") {
            regime = laws::Regime::kth_max(n - a + 1);
            target = sim::Target::kth_max(n - a + 1);
        } else if (opt.regime == "fullmax") {
            regime = laws::Regime::full_max();
            target = sim::Target::m();
        } else {
            throw parameter_error("converge: unknown --regime " + opt.regime);
        }

        laws::LimitLaw law;
        if (opt.law == "gumbel") {
            if (opt.regime != "fullmax") {
                throw parameter_error("converge: --law gumbel pairs with --regime fullmax");
            }
            law = laws::LimitLaw::gumbel_kth(1);
        } else if (opt.law == "kthmax") {
            if (opt.regime != "kthmax") {
                throw parameter_error("converge: --law kthmax pairs with --regime kthmax");
            }
            law = laws::LimitLaw::gumbel_kth(n - a + 1);
        } else if (opt.law == "normal") {
            if (opt.regime != "sublinear" && opt.regime != "proportional" &&
                opt.regime != "nearcomplete") {
                throw parameter_error("converge: --law normal pairs with a CLT regime");
            }
            law = laws::LimitLaw::std_normal();
        } else if (opt.law == "erlang") {
            if (opt.regime != "fixedk") {
                throw parameter_error("converge: --law erlang pairs with --regime fixedk");
            }
            law = laws::LimitLaw::erlang(a);
        } else {
            throw parameter_error("converge: --law must be gumbel, kthmax, normal or erlang");
        }

        laws::Normalization norm;
        if (opt.normalize == "main") {
            norm = laws::normalization_for(n, a, regime);
        } else {
            dist::MomentSummary ms = dist::moments_S(n, a);
            norm = laws::Normalization{ms.mean_d(), std::sqrt(ms.variance_d()), regime};
        }

        sim::SimConfig config{n, target, opt.reps, opt.seed, backend};
        sim::EmpiricalSample sample =
            sim::normalize_sample(sim::run_experiment(config, opt.workers), norm);
        laws::KSReport ks = laws::ks_distance(sample.values, law, norm, opt.seed);

        ReportRow row;
        row.set("law", law.name());
        row.set("regime", opt.regime);
        row.set("n", static_cast<std::int64_t>(n));
        row.set("a", static_cast<std::int64_t>(a));
        row.set("a_rule", rule.text);
        row.set("reps", static_cast<std::uint64_t>(opt.reps));
        row.set("seed", opt.seed);
        row.set("backend", opt.backend);
        row.set("normalize", opt.normalize);
        row.set("center", norm.center);
        row.set("scale", norm.scale);
        row.set("ks_distance", ks.distance);
        row.set("sample_size", static_cast<std::uint64_t>(ks.sample_size));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- diagnose -----------------------------------------------------------

struct DiagnoseOpts {
    std::string check = "tail-limit";
    std::string n_grid;
    double x = 0.0;
    int k = 10;
    OutputOpts out;
};

std::vector<ReportRow> run_diagnose(const DiagnoseOpts& opt) {
    std::vector<ReportRow> rows;
    if (opt.check == "tail-limit") {
        for (int n : parse_n_grid(opt.n_grid)) {
            double value = laws::scaled_tail_limit(n, opt.x);
            double limit = std::exp(-opt.x);
            ReportRow row;
            row.set("check", opt.check);
            row.set("n", static_cast<std::int64_t>(n));
            row.set("x", opt.x);
            row.set("value", value);
            row.set("limit", limit);
            row.set("rel_err", std::abs(value - limit) / limit);
            rows.push_back(std::move(row));
        }
    } else if (opt.check == "dprime") {
        for (int n : parse_n_grid(opt.n_grid)) {
            double value = laws::dprime_diagnostic(n, opt.k, opt.x);
            double limit = std::exp(-2.0 * opt.x) / opt.k;
            ReportRow row;
            row.set("check", opt.check);
            row.set("n", static_cast<std::int64_t>(n));
            row.set("k", static_cast<std::int64_t>(opt.k));
            row.set("x", opt.x);
            row.set("value", value);
            row.set("limit", limit);
            row.set("ratio", value / limit);
            rows.push_back(std::move(row));
        }
    } else if (opt.check == "cf-identity") {
        constexpr int kPoints = 801;
        for (int k = 1; k <= opt.k; ++k) {
            double sup = 0.0;
            for (int i = 0; i < kPoints; ++i) {
                double t = -20.0 + 40.0 * i / (kPoints - 1);
                std::complex<double> lhs = laws::cf_limit_fixed_k(k, t);
                std::complex<double> rhs =
                    std::pow(std::complex<double>(1.0, -t), -static_cast<double>(k));
                sup = std::max(sup, std::abs(lhs - rhs));
            }
            ReportRow row;
            row.set("check", opt.check);
            row.set("k", static_cast<std::int64_t>(k));
            row.set("points", static_cast<std::int64_t>(kPoints));
            row.set("sup_abs_diff", sup);
            rows.push_back(std::move(row));
        }
    } else if (opt.check == "asym-moments") {
        const Float50 gamma = boost::math::constants::euler<Float50>();
        const Float50 pi_sq = boost::math::constants::pi<Float50>() *
                              boost::math::constants::pi<Float50>();
        for (int n : parse_n_grid(opt.n_grid)) {
            dist::MomentsM mm = dist::moments_M(n);
            Float50 nd(n);
            Float50 exact_mean = paircollect::numerator(mm.exact.mean).convert_to<Float50>() /
                                 paircollect::denominator(mm.exact.mean).convert_to<Float50>();
            Float50 exact_var = paircollect::numerator(mm.exact.variance).convert_to<Float50>() /
                                paircollect::denominator(mm.exact.variance).convert_to<Float50>();
            Float50 asym_mean = (nd * nd + nd) * (log(nd) + gamma) + nd / 2 +
                                Float50(5) / 12 - 1 / (12 * nd) + 1 / (120 * nd * nd);
            Float50 asym_var = pi_sq * nd * nd * nd * nd / 6 +
                               (pi_sq / 3 - 1) * nd * nd * nd - 3 * nd * nd * log(nd);
            ReportRow row;
            row.set("check", opt.check);
            row.set("n", static_cast<std::int64_t>(n));
            row.set("exact_mean", mm.exact.mean);
            row.set("asym_mean", mm.asym_mean);
            row.set("mean_gap_scaled",
                    static_cast<double>(nd * nd * abs(exact_mean - asym_mean)));
            row.set("exact_var", mm.exact.variance);
            row.set("asym_var", mm.asym_var);
            row.set("var_gap_over_n2",
                    static_cast<double>(abs(exact_var - asym_var) / (nd * nd)));
            rows.push_back(std::move(row));
        }
    } else {
        throw parameter_error(
            "diagnose: --check must be tail-limit, dprime, cf-identity or asym-moments");
    }
    return rows;
}

// ---- oracle -------------------------------------------------------------

struct OracleOpts {
    int n = 2;
    int len = 4;
    OutputOpts out;
};

std::vector<ReportRow> run_oracle(const OracleOpts& opt) {
    oracle::EnumeratedLaws data = oracle::enumerate_laws(opt.n, opt.len);
    std::vector<ReportRow> rows;
    for (int j = 1; j <= opt.n; ++j) {
        unsigned mask = (1u << j) - 1;  // canonical target set {1..j}
        for (int k = 2; k <= opt.len; ++k) {
            ReportRow row;
            row.set("n", static_cast<std::int64_t>(opt.n));
            row.set("len", static_cast<std::int64_t>(opt.len));
            row.set("j", static_cast<std::int64_t>(j));
            row.set("event", std::string("pmf"));
            row.set("k", static_cast<std::int64_t>(k));
            row.set("prob", data.prob_subset(mask, k));
            rows.push_back(std::move(row));
        }
        ReportRow row;
        row.set("n", static_cast<std::int64_t>(opt.n));
        row.set("len", static_cast<std::int64_t>(opt.len));
        row.set("j", static_cast<std::int64_t>(j));
        row.set("event", std::string("residual"));
        row.set("k", static_cast<std::int64_t>(0));
        row.set("prob", data.residual_subset(mask));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"waiting-time laws and seeded convergence studies for collecting like pairs "
                 "when drawing uniformly with replacement"};
    app.require_subcommand(1);

    PmfOpts pmf_opts;
    CLI::App* pmf_cmd = app.add_subcommand("pmf", "exact or floating-point pmf table");
    pmf_cmd->add_option("--dist", pmf_opts.dist)->check(CLI::IsMember({"x", "y"}));
    pmf_cmd->add_option("--n", pmf_opts.n)->required();
    CLI::Option* pmf_j = pmf_cmd->add_option("--j", pmf_opts.j);
    pmf_cmd->add_option("--kmax", pmf_opts.kmax)->required();
    pmf_cmd->add_flag("--exact", pmf_opts.exact);
    add_output_opts(pmf_cmd, pmf_opts.out);

    TailOpts tail_opts;
    CLI::App* tail_cmd = app.add_subcommand("tail", "upper tail probability");
    tail_cmd->add_option("--dist", tail_opts.dist)->check(CLI::IsMember({"x", "y"}));
    tail_cmd->add_option("--n", tail_opts.n)->required();
    CLI::Option* tail_j = tail_cmd->add_option("--j", tail_opts.j);
    tail_cmd->add_option("--m", tail_opts.m)->required();
    add_output_opts(tail_cmd, tail_opts.out);

    MomentsOpts moments_opts;
    CLI::App* moments_cmd = app.add_subcommand("moments", "exact moments, optionally with "
                                                          "their asymptotic main terms");
    moments_cmd->add_option("--target", moments_opts.target)
        ->check(CLI::IsMember({"y", "s", "m"}));
    moments_cmd->add_option("--n", moments_opts.n)->required();
    CLI::Option* mom_j = moments_cmd->add_option("--j", moments_opts.j);
    CLI::Option* mom_a = moments_cmd->add_option("--a", moments_opts.a);
    moments_cmd->add_flag("--asym", moments_opts.asym);
    moments_cmd->add_option("--regime", moments_opts.regime,
                            "required with --target s --asym");
    add_output_opts(moments_cmd, moments_opts.out);

    SimulateOpts sim_opts;
    CLI::App* sim_cmd = app.add_subcommand("simulate", "seeded replications of a waiting-time "
                                                       "target; emits the sorted sample");
    sim_cmd->add_option("--target", sim_opts.target)
        ->check(CLI::IsMember({"y", "s", "m", "kmax"}));
    sim_cmd->add_option("--n", sim_opts.n)->required();
    CLI::Option* sim_j = sim_cmd->add_option("--j", sim_opts.j);
    CLI::Option* sim_a = sim_cmd->add_option("--a", sim_opts.a);
    CLI::Option* sim_k = sim_cmd->add_option("--k", sim_opts.k);
    sim_cmd->add_option("--reps", sim_opts.reps)->required();
    sim_cmd->add_option("--seed", sim_opts.seed);
    sim_cmd->add_option("--backend", sim_opts.backend)
        ->check(CLI::IsMember({"process", "inversion"}));
    sim_cmd->add_option("--workers", sim_opts.workers)->envname("PAIRCOLLECT_WORKERS");
    add_output_opts(sim_cmd, sim_opts.out);

    ConvergeOpts conv_opts;
    CLI::App* conv_cmd = app.add_subcommand("converge", "KS distances to a limit law over an "
                                                        "n grid");
    conv_cmd->add_option("--law", conv_opts.law)
        ->check(CLI::IsMember({"gumbel", "kthmax", "normal", "erlang"}));
    conv_cmd->add_option("--regime", conv_opts.regime)
        ->check(CLI::IsMember(
            {"fixedk", "sublinear", "proportional", "nearcomplete", "kthmax", "fullmax"}));
    conv_cmd->add_option("--n-grid", conv_opts.n_grid)->required();
    conv_cmd->add_option("--reps", conv_opts.reps)->required();
    conv_cmd->add_option("--seed", conv_opts.seed);
    conv_cmd->add_option("--a-rule", conv_opts.a_rule);
    conv_cmd->add_option("--backend", conv_opts.backend)
        ->check(CLI::IsMember({"process", "inversion"}));
    conv_cmd->add_option("--normalize", conv_opts.normalize)
        ->check(CLI::IsMember({"main", "exact"}));
    conv_cmd->add_option("--workers", conv_opts.workers)->envname("PAIRCOLLECT_WORKERS");
    add_output_opts(conv_cmd, conv_opts.out);

    DiagnoseOpts diag_opts;
    CLI::App* diag_cmd = app.add_subcommand("diagnose", "asymptotic sanity checks");
    diag_cmd->add_option("--check", diag_opts.check)
        ->check(CLI::IsMember({"tail-limit", "dprime", "cf-identity", "asym-moments"}));
    diag_cmd->add_option("--n-grid", diag_opts.n_grid);
    diag_cmd->add_option("--x", diag_opts.x);
    diag_cmd->add_option("--k", diag_opts.k);
    add_output_opts(diag_cmd, diag_opts.out);

    OracleOpts oracle_opts;
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive-enumeration ground truth");
    oracle_cmd->add_option("--n", oracle_opts.n)->required();
    oracle_cmd->add_option("--len", oracle_opts.len)->required();
    add_output_opts(oracle_cmd, oracle_opts.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    std::string active;
    try {
        if (pmf_cmd->parsed()) {
            active = "pmf";
            pmf_opts.j_given = pmf_j->count() > 0;
            emit(run_pmf(pmf_opts), pmf_opts.out);
        } else if (tail_cmd->parsed()) {
            active = "tail";
            tail_opts.j_given = tail_j->count() > 0;
            emit(run_tail(tail_opts), tail_opts.out);
        } else if (moments_cmd->parsed()) {
            active = "moments";
            moments_opts.j_given = mom_j->count() > 0;
            moments_opts.a_given = mom_a->count() > 0;
            emit(run_moments(moments_opts), moments_opts.out);
        } else if (sim_cmd->parsed()) {
            active = "simulate";
            sim_opts.j_given = sim_j->count() > 0;
            sim_opts.a_given = sim_a->count() > 0;
            sim_opts.k_given = sim_k->count() > 0;
            emit(run_simulate(sim_opts), sim_opts.out);
        } else if (conv_cmd->parsed()) {
            active = "converge";
            emit(run_converge(conv_opts), conv_opts.out);
        } else if (diag_cmd->parsed()) {
            active = "diagnose";
            emit(run_diagnose(diag_opts), diag_opts.out);
        } else if (oracle_cmd->parsed()) {
            active = "oracle";
            emit(run_oracle(oracle_opts), oracle_opts.out);
        }
    } catch (const paircollect::parameter_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const paircollect::size_guard_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cerr << "paircollect " << active << ": " << elapsed << " ms\n";
    return 0;
}

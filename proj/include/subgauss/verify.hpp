// verify.hpp
//
// Verification sweeps over the four checkable claims: the Kearns-Saul MGF
// inequality, exactness of Q(p) as the norm, the location of the maximizer of
// g_p, and domination of exact sum tails by exp(-x^2 / (4 B^2)).
#pragma once
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subgauss/detail/parallel.hpp"
#include "subgauss/indicator.hpp"
#include "subgauss/numeric_norm.hpp"
#include "subgauss/oracles/distribution.hpp"
#include "subgauss/oracles/enumeration.hpp"
#include "subgauss/oracles/golden_section.hpp"
#include "subgauss/oracles/monte_carlo.hpp"
#include "subgauss/report.hpp"
#include "subgauss/sum_bounds.hpp"

namespace subgauss {

struct VerifyConfig {
    std::vector<double> p_grid;                 // empty selects the suite default
    std::size_t lambda_count{10000};            // kearns-saul: lambda values per p
    std::size_t random_sums{500};               // domination: enumerated sums
    std::size_t max_enumerated_terms{16};
    std::vector<std::size_t> dp_sizes{1, 2, 3, 5, 10, 50, 100, 500, 1000, 5000, 10000};
    std::size_t x_points{64};
    std::optional<double> tol;                  // overrides the suite's primary threshold
    std::uint64_t seed{20240501};
    unsigned threads{1};
};

struct VerifyResult {
    std::string suite;
    bool passed{false};
    std::size_t checks{0};
    std::size_t violations{0};
    double worst{0.0};      // suite metric at the worst witness
    double threshold{0.0};
    std::string witness;
};

namespace detail {

inline std::vector<double> linear_grid(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
    return out;
}

// p = k / 100, k = 1..99, computed from the integer to avoid drift.
inline std::vector<double> percent_grid() {
    std::vector<double> out;
    for (int k = 1; k <= 99; ++k) out.push_back(k / 100.0);
    return out;
}

inline std::vector<double> permille_grid() {
    std::vector<double> out;
    for (int k = 1; k <= 999; ++k) out.push_back(k / 1000.0);
    return out;
}

} // namespace detail

// Log-spaced |l| in [1e-8, 60] for both signs, plus seeded uniform draws on [-60, 60].
inline std::vector<double> kearns_saul_lambdas(std::size_t count, std::uint64_t seed) {
    std::vector<double> out;
    const std::size_t n_random = count / 5;
    const std::size_t per_side = (count - n_random) / 2;
    if (per_side >= 2) {
        const double a = std::log(1e-8), b = std::log(60.0);
        for (std::size_t i = 0; i < per_side; ++i) {
            const double l = i + 1 == per_side ? 60.0 : i == 0 ? 1e-8
                                      : std::exp(a + (b - a) * static_cast<double>(i) / (per_side - 1));
            out.push_back(l);
            out.push_back(-l);
        }
    }
    const oracles::CounterRng rng(seed);
    for (std::uint64_t i = 0; out.size() < count; ++i) out.push_back(-60.0 + 120.0 * rng.uniform(i));
    return out;
}

inline VerifyResult verify_kearns_saul(const VerifyConfig& cfg = {}) {
    const auto ps = cfg.p_grid.empty() ? detail::permille_grid() : cfg.p_grid;
    const auto lambdas = kearns_saul_lambdas(cfg.lambda_count, cfg.seed);
    const double thr = cfg.tol.value_or(1e-12);

    struct Row { double gap, lambda; std::size_t bad; };
    std::vector<Row> rows(ps.size());
    detail::parallel_for(ps.size(), cfg.threads, [&](std::size_t i) {
        const Probability prob(ps[i]);
        Row r{std::numeric_limits<double>::infinity(), 0.0, 0};
        for (double l : lambdas) {
            const double g = kearns_saul_gap(prob, l);
            if (g < r.gap) {
                r.gap = g;
                r.lambda = l;
            }
            if (!(g >= -thr)) ++r.bad;
        }
        rows[i] = r;
    });

    VerifyResult res{"kearns-saul"};
    res.threshold = -thr;
    res.worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        res.violations += rows[i].bad;
        if (rows[i].gap < res.worst) {
            res.worst = rows[i].gap;
            res.witness = "p=" + detail::fmt17(ps[i]) + " lambda=" + detail::fmt17(rows[i].lambda) +
                          " gap=" + detail::fmt17(rows[i].gap);
        }
    }
    res.checks = ps.size() * lambdas.size();
    res.passed = res.violations == 0;
    return res;
}

inline VerifyResult verify_sharpness(const VerifyConfig& cfg = {}) {
    const auto ps = cfg.p_grid.empty() ? detail::percent_grid() : cfg.p_grid;
    const double thr = cfg.tol.value_or(1e-8);
    std::vector<double> err(ps.size());
    detail::parallel_for(ps.size(), cfg.threads, [&](std::size_t i) {
        const Probability prob(ps[i]);
        const CenteredIndicator ind(prob);
        const double numeric =
            subgaussian_norm_numeric(indicator_curve(ind), NormSearchConfig::for_indicator(prob)).value();
        err[i] = std::abs(numeric - q_norm(prob).value());
    });

    VerifyResult res{"sharpness"};
    res.threshold = thr;
    res.checks = ps.size();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!(err[i] <= thr)) ++res.violations;
        if (i == 0 || err[i] > res.worst) {
            res.worst = err[i];
            res.witness = "p=" + detail::fmt17(ps[i]) + " |numeric-Q|=" + detail::fmt17(err[i]);
        }
    }
    res.passed = res.violations == 0;
    return res;
}

inline constexpr double kArgmaxValueTol = 1e-10;

inline VerifyResult verify_argmax(const VerifyConfig& cfg = {}) {
    std::vector<double> ps;
    for (double p : cfg.p_grid.empty() ? detail::percent_grid() : cfg.p_grid) {
        if (p > 0.0 && p < 1.0 && p != 0.5) ps.push_back(p);
    }
    const double thr = cfg.tol.value_or(1e-6);

    struct Row { double arg_err, val_err; };
    std::vector<Row> rows(ps.size());
    detail::parallel_for(ps.size(), cfg.threads, [&](std::size_t i) {
        const Probability prob(ps[i]);
        const double l0 = lambda_star(prob);
        auto g = [&](double l) { return g_value(prob, l); };
        const double bound = std::max(60.0, 2.0 * std::abs(l0));
        const auto r = l0 > 0.0 ? oracles::golden_section_argmax(g, 1e-6, bound)
                                : oracles::golden_section_argmax(g, -bound, -1e-6);
        rows[i] = {std::abs(r.argmax - l0), std::abs(g_value(prob, l0) - q_squared(prob))};
    });

    VerifyResult res{"argmax"};
    res.threshold = thr;
    res.checks = 2 * ps.size();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!(rows[i].arg_err <= thr)) ++res.violations;
        if (!(rows[i].val_err <= kArgmaxValueTol)) ++res.violations;
        if (i == 0 || rows[i].arg_err > res.worst) {
            res.worst = rows[i].arg_err;
            res.witness = "p=" + detail::fmt17(ps[i]) + " |argmax-lambda0|=" +
                          detail::fmt17(rows[i].arg_err) + " |g(lambda0)-Q^2|=" +
                          detail::fmt17(rows[i].val_err);
        }
    }
    res.passed = res.violations == 0;
    return res;
}

// Seeded random independent sum: m in [1, max_terms], every other sum with unit
// coefficients, the rest with coefficients uniform on [-2, 2].
inline WeightedIndicatorSum random_independent_sum(std::uint64_t seed, std::size_t index,
                                                   std::size_t max_terms) {
    const oracles::CounterRng rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    std::uint64_t k = 0;
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(k++) * max_terms);
    const bool unit = index % 2 == 0;
    std::vector<IndicatorTerm> terms;
    for (std::size_t j = 0; j < m; ++j) {
        const double c = unit ? 1.0 : -2.0 + 4.0 * rng.uniform(k++);
        const double p = rng.uniform(k++);
        terms.push_back({c, Probability(p)});
    }
    return WeightedIndicatorSum(std::move(terms), Dependence::independent);
}

// x values for domination checks: x_points spanning [0, essential sup], and as
// many again over [0, 8 sd] where the tail of a long sum actually lives.
inline std::vector<double> domination_x_grid(const WeightedIndicatorSum& sum, std::size_t x_points) {
    const double radius = sum.support_radius();
    double var = 0.0;
    for (const auto& t : sum.terms()) var += t.coef * t.coef * t.prob.value() * t.prob.complement();
    auto xs = detail::linear_grid(0.0, radius, x_points);
    const double inner = std::min(radius, 8.0 * std::sqrt(var));
    if (inner > 0.0 && inner < radius) {
        for (double x : detail::linear_grid(0.0, inner, x_points)) xs.push_back(x);
    }
    return xs;
}

// Worst (tail - bound) over domination_x_grid.
inline std::pair<double, double> worst_domination_gap(const oracles::DistributionTable& law,
                                                      const WeightedIndicatorSum& sum,
                                                      std::size_t x_points) {
    double worst = -std::numeric_limits<double>::infinity(), at = 0.0;
    for (double x : domination_x_grid(sum, x_points)) {
        const double d = oracles::exact_tail(law, x, oracles::TailSide::max_both) - sum_tail_bound(sum, x);
        if (d > worst) {
            worst = d;
            at = x;
        }
    }
    return {worst, at};
}

inline VerifyResult verify_domination(const VerifyConfig& cfg = {}) {
    const double slack = cfg.tol.value_or(1e-12);
    const std::size_t n_dp = cfg.dp_sizes.size();
    const std::size_t total = cfg.random_sums + n_dp;

    struct Row { double gap, x; std::size_t bad; std::string label; };
    std::vector<Row> rows(total);
    detail::parallel_for(total, cfg.threads, [&](std::size_t i) {
        if (i < cfg.random_sums) {
            const auto sum = random_independent_sum(cfg.seed, i, cfg.max_enumerated_terms);
            const auto law = oracles::enumerate_law(sum);
            const auto [gap, x] = worst_domination_gap(law, sum, cfg.x_points);
            rows[i] = {gap, x, gap > slack ? 1u : 0u,
                       "enumerated sum #" + std::to_string(i) + " m=" + std::to_string(sum.size())};
        } else {
            const std::size_t n = cfg.dp_sizes[i - cfg.random_sums];
            const oracles::CounterRng rng(cfg.seed + 7919 * (n + 1));
            std::vector<double> ps(n);
            for (std::size_t j = 0; j < n; ++j) ps[j] = rng.uniform(j);
            const auto sum = WeightedIndicatorSum::independent_unit(ps);
            const auto law = oracles::poisson_binomial_table(ps);
            const auto [gap, x] = worst_domination_gap(law, sum, cfg.x_points);
            rows[i] = {gap, x, gap > slack ? 1u : 0u, "poisson-binomial n=" + std::to_string(n)};
        }
    });

    VerifyResult res{"domination"};
    res.threshold = slack;
    res.checks = total;
    res.worst = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
        res.violations += r.bad;
        if (r.gap > res.worst) {
            res.worst = r.gap;
            res.witness = r.label + " x=" + detail::fmt17(r.x) + " tail-bound=" + detail::fmt17(r.gap);
        }
    }
    res.passed = res.violations == 0;
    return res;
}

} // namespace subgauss

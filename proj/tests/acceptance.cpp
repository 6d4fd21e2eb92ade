// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "subgauss/subgauss.hpp"

using namespace subgauss;
using namespace subgauss::oracles;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::vector<double> percent_grid(bool skip_half) {
    std::vector<double> ps;
    for (int k = 1; k <= 99; ++k) {
        if (skip_half && k == 50) continue;
        ps.push_back(k / 100.0);
    }
    return ps;
}

double numeric_norm(const LogMgfCurve& curve, const NormSearchConfig& cfg) {
    return subgaussian_norm_numeric(curve, cfg).value();
}

// Tail <= bound, allowing relative rounding and the subnormal range where the
// DP tail and the bound both underflow.
bool dominated(double tail, double bound) {
    return tail <= bound * (1.0 + 1e-12) + std::numeric_limits<double>::min();
}

// 1. Numeric sup equals Q(p) on the percent grid.
Outcome ac1() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (double p : percent_grid(false)) {
        const Probability prob(p);
        const double v = numeric_norm(indicator_curve(CenteredIndicator(prob)),
                                      NormSearchConfig::for_indicator(prob));
        worst = std::max(worst, std::abs(v - q_norm(prob).value()));
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-8 && secs < 5.0,
            fmt("max |numeric - Q| = %.3g (tol 1e-8)", worst) + fmt(", %.2f s (limit 5 s)", secs)};
}

// 2. Q(1/2) and continuity across the series seam.
Outcome ac2() {
    const double centre = q_norm(Probability(0.5)).value();
    const double e0 = std::abs(centre - 1.0 / std::sqrt(8.0));
    const double up = std::abs(q_norm(Probability(0.5 + 1e-5)).value() - centre);
    const double dn = std::abs(q_norm(Probability(0.5 - 1e-5)).value() - centre);
    return {e0 <= 1e-12 && up <= 1e-9 && dn <= 1e-9,
            fmt("|Q(1/2) - 1/sqrt 8| = %.3g (tol 1e-12)", e0) +
                fmt(", seam jumps %.3g", up) + fmt(" / %.3g (tol 1e-9)", dn)};
}

// 3. Kearns-Saul inequality in log form over 999 p x 10^4 lambda.
Outcome ac3() {
    const auto t0 = Clock::now();
    const auto lambdas = kearns_saul_lambdas(10000, 20240501);
    double worst = std::numeric_limits<double>::infinity();
    std::size_t bad = 0;
    for (int k = 1; k <= 999; ++k) {
        const Probability prob(k / 1000.0);
        for (double l : lambdas) {
            const double g = kearns_saul_gap(prob, l);
            worst = std::min(worst, g);
            bad += !(g >= -1e-12);
        }
    }
    const double secs = seconds_since(t0);
    return {bad == 0 && secs < 30.0,
            fmt("min gap = %.3g over 9.99e6 points", worst) + fmt(", violations %.0f", double(bad)) +
                fmt(", %.2f s (limit 30 s)", secs)};
}

// 4. g_p(lambda0) = Q^2 and the golden-section argmax sits at lambda0.
Outcome ac4() {
    double worst_val = 0.0, worst_arg = 0.0;
    for (double p : percent_grid(true)) {
        const Probability prob(p);
        const double l0 = 2.0 * std::log((1.0 - p) / p);
        worst_val = std::max(worst_val, std::abs(g_value(prob, l0) - q_squared(prob)));
        auto g = [&](double l) { return g_value(prob, l); };
        const auto r = l0 > 0 ? golden_section_argmax(g, 1e-6, 60.0) : golden_section_argmax(g, -60.0, -1e-6);
        worst_arg = std::max(worst_arg, std::abs(r.argmax - l0));
    }
    return {worst_val <= 1e-10 && worst_arg <= 1e-6,
            fmt("max |g(l0) - Q^2| = %.3g (tol 1e-10)", worst_val) +
                fmt(", max |argmax - l0| = %.3g (tol 1e-6)", worst_arg)};
}

// 5. Exact tails never exceed exp(-x^2 / (4 W^2)).
Outcome ac5() {
    const auto t0 = Clock::now();
    std::size_t violations = 0, points = 0;
    double worst_ratio = 0.0;
    auto check = [&](const DistributionTable& law, const WeightedIndicatorSum& sum) {
        for (double x : domination_x_grid(sum, 64)) {
            const double tail = exact_tail(law, x, TailSide::max_both);
            const double bound = sum_tail_bound(sum, x);
            ++points;
            violations += !dominated(tail, bound);
            if (bound > 1e-300) worst_ratio = std::max(worst_ratio, tail / bound);
        }
    };
    for (std::size_t i = 0; i < 500; ++i) {
        const auto sum = random_independent_sum(777, i, 16);
        check(enumerate_law(sum), sum);
    }
    for (std::size_t n : {1u, 2u, 5u, 10u, 30u, 100u, 300u, 1000u, 3000u, 10000u}) {
        for (int kind = 0; kind < 3; ++kind) {
            std::vector<double> ps(n);
            const CounterRng rng(n * 3 + kind);
            for (std::size_t j = 0; j < n; ++j) {
                ps[j] = kind == 0 ? rng.uniform(j) : kind == 1 ? 0.5 : 0.02;
            }
            check(poisson_binomial_table(ps), WeightedIndicatorSum::independent_unit(ps));
        }
    }
    const double secs = seconds_since(t0);
    return {violations == 0 && secs < 60.0,
            fmt("%.0f grid points", double(points)) + fmt(", violations %.0f", double(violations)) +
                fmt(", max tail/bound = %.3g", worst_ratio) + fmt(", %.2f s (limit 60 s)", secs)};
}

// 6. Norm of S(1) is Q(p); norm of S(n)/sqrt(n) never exceeds Q(p).
Outcome ac6() {
    double worst_one = 0.0, worst_excess = -1.0;
    for (double p : {0.1, 0.3, 0.5}) {
        const Probability prob(p);
        const double q = q_norm(prob).value();
        const auto s1 = WeightedIndicatorSum::identical(1, p);
        worst_one = std::max(worst_one,
                             std::abs(numeric_norm(sum_curve(s1), NormSearchConfig::for_indicator(prob)) - q));
        for (std::size_t n : {2u, 4u, 16u, 256u, 4096u}) {
            const double r = std::sqrt(static_cast<double>(n));
            const auto sn = WeightedIndicatorSum::identical(n, p, 1.0 / r);
            const double v = numeric_norm(sum_curve(sn), NormSearchConfig::for_indicator(prob, r));
            worst_excess = std::max(worst_excess, v - q);
        }
    }
    return {worst_one <= 1e-8 && worst_excess <= 1e-8,
            fmt("max |norm S(1) - Q| = %.3g (tol 1e-8)", worst_one) +
                fmt(", max norm(S(n)/sqrt n) - Q = %.3g (tol 1e-8)", worst_excess)};
}

// 7. Fair coins, n = 4096: exact tail of 2 S(n)/sqrt(n) under exp(-x^2/2) and
//    the Gaussian-type ratio tail * x * exp(x^2/2) inside [0.15, 0.5].
Outcome ac7() {
    const std::size_t n = 4096;
    const auto law = poisson_binomial_table(std::vector<double>(n, 0.5));
    bool ok = true;
    std::string detail = "ratios";
    for (double x : {1.0, 1.5, 2.0, 2.5}) {
        const double tail = exact_tail(law, x * std::sqrt(double(n)) / 2.0, TailSide::upper);
        const double ratio = tail * x * std::exp(0.5 * x * x);
        ok = ok && tail <= hoeffding_reference_tail(n, x) && ratio >= 0.15 && ratio <= 0.5;
        detail += fmt(" %.4f", ratio);
    }
    return {ok, detail + " (window [0.15, 0.5]), all tails <= exp(-x^2/2)"};
}

// 8. Q against its endpoint asymptote at 1e-12 and 1 - 1e-12.
Outcome ac8() {
    const double lo = q_norm(Probability(1e-12)).value() / q_asymptotic(Probability(1e-12));
    const double hi = q_norm(Probability(1 - 1e-12)).value() / q_asymptotic(Probability(1 - 1e-12));
    const bool ok = lo >= 0.97 && lo <= 1.03 && hi >= 0.97 && hi <= 1.03;
    return {ok, fmt("ratios %.12f", lo) + fmt(" / %.12f (window [0.97, 1.03])", hi)};
}

// 9. Enumeration and DP agree; Monte Carlo 99% intervals cover the exact tail.
Outcome ac9() {
    double worst = 0.0;
    for (int i = 0; i < 160; ++i) {
        const CounterRng rng(5000 + i);
        const std::size_t m = 1 + i % 16;
        std::vector<double> ps(m);
        for (std::size_t j = 0; j < m; ++j) ps[j] = rng.uniform(j);
        const auto sum = WeightedIndicatorSum::independent_unit(ps);
        const auto law = enumerate_law(sum);
        const auto dp = poisson_binomial_table(ps);
        if (law.support() != dp.support()) return {false, "support mismatch at m = " + std::to_string(m)};
        for (double x : domination_x_grid(sum, 64)) {
            for (auto side : {TailSide::upper, TailSide::lower}) {
                worst = std::max(worst, std::abs(exact_tail(law, x, side) - exact_tail(dp, x, side)));
            }
        }
    }

    int covered = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto sum = random_independent_sum(31337, trial, 12);
        const CounterRng rng(90000 + trial);
        const double x = rng.uniform(0) * 0.6 * sum.support_radius();
        const double exact = exhaustive_weighted_tail(sum, x, TailSide::upper);
        const auto est = monte_carlo_tail(sum, x, 20000, 4242 + trial, TailSide::upper);
        covered += est.ci_low <= exact && exact <= est.ci_high;
    }
    return {worst <= 1e-14 && covered >= 190,
            fmt("max |enum - dp| = %.3g (tol 1e-14)", worst) +
                fmt(", MC coverage %.0f/200 (need >= 190)", double(covered))};
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1 norm sharpness on p grid", ac1},
        {"AC2 Q(1/2) and seam continuity", ac2},
        {"AC3 Kearns-Saul sweep", ac3},
        {"AC4 extremal point lambda0", ac4},
        {"AC5 tail domination", ac5},
        {"AC6 normalized sums", ac6},
        {"AC7 fair-coin Gaussian comparison", ac7},
        {"AC8 endpoint asymptotics", ac8},
        {"AC9 oracle cross-agreement", ac9},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    const double total = seconds_since(t0);
    const bool total_ok = total < 180.0;
    failed += !total_ok;
    std::printf("[%s] AC10 whole suite at desk scale: %.2f s (limit 180 s)\n", total_ok ? "PASS" : "FAIL",
                total);
    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}

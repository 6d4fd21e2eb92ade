// moments.hpp
#pragma once
#include <algorithm>
#include <cmath>

#include "subgauss/errors.hpp"
#include "subgauss/indicator.hpp"
#include "subgauss/oracles/golden_section.hpp"

namespace subgauss {

// |eta_p|_s = (E|eta_p|^s)^{1/s} = (p (1-p)^s + (1-p) p^s)^{1/s}, s >= 1.
inline double moment_abs(const CenteredIndicator& ind, double s) {
    if (std::isnan(s) || s < 1.0) throw DomainError("moment order must be >= 1");
    const Probability& prob = ind.prob();
    if (prob.degenerate()) return 0.0;
    const double p = prob.value();
    double log_p, log_q;
    if (p < 0.5) {
        log_p = std::log(p);
        log_q = std::log1p(-p);
    } else {
        log_p = std::log1p(-(1.0 - p));
        log_q = std::log(1.0 - p);
    }
    const double a = log_p + s * log_q;
    const double b = log_q + s * log_p;
    const double hi = std::max(a, b);
    const double lse = hi + std::log1p(std::exp(std::min(a, b) - hi));
    return std::exp(lse / s);
}

struct GlsConfig {
    int grid_points{512};
    double s_max{0.0};  // 0 selects max(8, 4 |log min(p, 1 - p)|)
    double tol{1e-12};
    int max_iter{200};
};

struct GlsNorm {
    double value{0.0};
    double s_argmax{1.0};
    double s_max{8.0};
    bool boundary_sup{false};  // maximizer sat on s_max; value may be truncated
};

// Grand Lebesgue norm sup_{s >= 1} |eta_p|_s / sqrt(s), searched on [1, s_max].
inline GlsNorm gls_norm(const CenteredIndicator& ind, const GlsConfig& cfg = {}) {
    if (cfg.grid_points < 3) throw DomainError("gls grid needs at least 3 points");
    const Probability& prob = ind.prob();
    GlsNorm out;
    if (prob.degenerate()) {
        out.value = 0.0;
        return out;
    }
    const double m = std::min(prob.value(), prob.complement());
    out.s_max = cfg.s_max > 0.0 ? cfg.s_max : std::max(8.0, 4.0 * std::abs(std::log(m)));
    if (out.s_max <= 1.0) throw DomainError("s_max must exceed 1");

    auto f = [&](double s) { return moment_abs(ind, s) / std::sqrt(s); };
    const int n = cfg.grid_points;
    const double step = std::log(out.s_max) / (n - 1);
    auto node = [&](int i) {
        if (i <= 0) return 1.0;
        if (i >= n - 1) return out.s_max;
        return std::exp(step * i);
    };

    int best_i = 0;
    double best = f(1.0);
    for (int i = 1; i < n; ++i) {
        const double v = f(node(i));
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    out.value = best;
    out.s_argmax = node(best_i);
    out.boundary_sup = best_i == n - 1;

    const auto r = oracles::golden_section_argmax(f, node(best_i - 1), node(best_i + 1), cfg.tol,
                                                  cfg.max_iter);
    if (r.value > out.value) {
        out.value = r.value;
        out.s_argmax = r.argmax;
    }
    return out;
}

} // namespace subgauss

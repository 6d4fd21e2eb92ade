// numeric_norm.hpp
#pragma once
#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <optional>
#include <utility>

#include "subgauss/errors.hpp"
#include "subgauss/indicator.hpp"
#include "subgauss/norm.hpp"
#include "subgauss/oracles/golden_section.hpp"

namespace subgauss {

// A log-moment-generating function l -> log E exp(l X), defined on all reals.
// zero_limit, when known, is lim_{l -> 0} log_mgf(l) / l^2 = Var(X) / 2.
struct LogMgfCurve {
    std::function<double(double)> log_mgf;
    std::optional<double> zero_limit;
};

inline LogMgfCurve indicator_curve(const CenteredIndicator& ind) {
    const double p = ind.p();
    return {[p](double l) { return detail::log_mgf(p, l); }, 0.5 * ind.variance()};
}

struct NormSearchConfig {
    double lambda_min{1e-8};
    double lambda_max{60.0};
    int grid_points{256};  // per sign
    double tol{1e-12};
    int max_iter{200};

    // Window sized for eta_p, or for a sum of such terms rescaled so the
    // maximizer moves out by `scale` (e.g. sqrt(n) for S(n)/sqrt(n)).
    static NormSearchConfig for_indicator(const Probability& prob, double scale = 1.0) {
        NormSearchConfig cfg;
        if (!prob.degenerate()) {
            cfg.lambda_max = std::max(cfg.lambda_max, 4.0 * std::abs(lambda_star(prob)) * scale);
        }
        return cfg;
    }
};

struct ScaledLogMgfSup {
    double sup{0.0};          // sup of log_mgf(l) / l^2 over the searched candidates
    double argmax{0.0};       // 0 when the l -> 0 limit wins
    bool at_zero_limit{false};
};

// Supremum of log_mgf(l) / l^2 over l != 0.
//
// Both signs are scanned on a log-spaced grid |l| in [lambda_min, lambda_max];
// the best cell is refined by golden section, which assumes the ratio is
// unimodal near its maximum. The l -> 0 limit is always a candidate because
// the supremum may be attained only there (symmetric laws). The result is the
// largest value actually evaluated, hence a lower bound of the true sup.
inline ScaledLogMgfSup sup_scaled_log_mgf(const LogMgfCurve& curve,
                                          const NormSearchConfig& cfg = {}) {
    if (!curve.log_mgf) throw DomainError("log-MGF curve is empty");
    if (!(cfg.lambda_min > 0.0) || !(cfg.lambda_max > cfg.lambda_min) || cfg.grid_points < 3) {
        throw DomainError("invalid lambda search window");
    }
    const double at_zero = curve.log_mgf(0.0);
    if (!(std::abs(at_zero) <= 1e-12)) throw DomainError("log-MGF must vanish at zero");

    auto ratio = [&](double l) {
        const double k = curve.log_mgf(l);
        if (!std::isfinite(k)) throw DomainError("log-MGF not finite on the search window");
        return k / (l * l);
    };

    const int n = cfg.grid_points;
    const double log_lo = std::log(cfg.lambda_min);
    const double step = (std::log(cfg.lambda_max) - log_lo) / (n - 1);
    auto node = [&](int i) {
        if (i <= 0) return cfg.lambda_min;
        if (i >= n - 1) return cfg.lambda_max;
        return std::exp(log_lo + step * i);
    };

    ScaledLogMgfSup best;
    best.sup = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    double best_sign = 1.0;
    for (int i = 0; i < n; ++i) {
        for (double sign : {1.0, -1.0}) {
            const double l = sign * node(i);
            const double v = ratio(l);
            if (v > best.sup) {
                best.sup = v;
                best.argmax = l;
                best_i = i;
                best_sign = sign;
            }
        }
    }

    const double a = best_sign * node(best_i - 1);
    const double b = best_sign * node(best_i + 1);
    const auto refined = oracles::golden_section_argmax(ratio, std::min(a, b), std::max(a, b),
                                                        cfg.tol, cfg.max_iter);
    if (!refined.converged) {
        throw ConvergenceError("golden-section refinement did not converge", refined.width);
    }
    if (refined.value > best.sup) {
        best.sup = refined.value;
        best.argmax = refined.argmax;
    }

    if (curve.zero_limit && *curve.zero_limit >= best.sup) {
        best.sup = *curve.zero_limit;
        best.argmax = 0.0;
        best.at_zero_limit = true;
    }
    return best;
}

// ||X||_Sub = sup_{l != 0} sqrt(log E exp(l X)) / |l|, evaluated numerically.
inline SubgaussianNorm subgaussian_norm_numeric(const LogMgfCurve& curve,
                                                const NormSearchConfig& cfg = {}) {
    const auto s = sup_scaled_log_mgf(curve, cfg);
    return SubgaussianNorm(std::sqrt(std::max(0.0, s.sup)), NormMethod::numeric_sup);
}

} // namespace subgauss

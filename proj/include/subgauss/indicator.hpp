// indicator.hpp
//
// The centered indicator eta_p = I(A) - p with P(A) = p: it takes the value
// 1 - p with probability p and -p with probability 1 - p. Its subgaussian
// norm has the closed form
//
//     Q(p) = sqrt( (1 - 2p) / (4 log((1 - p) / p)) ),   Q(0) = Q(1) = 0,
//
// with Q(1/2) = 1/sqrt(8) as the limit. The supremum of
// g_p(l) = log E exp(l eta_p) / l^2 is attained at l0 = 2 log((1 - p) / p).
#pragma once
#include <algorithm>
#include <cmath>
#include <limits>

#include "subgauss/errors.hpp"
#include "subgauss/norm.hpp"
#include "subgauss/probability.hpp"

namespace subgauss {

class CenteredIndicator {
public:
    explicit CenteredIndicator(Probability p) : prob_(p) {}
    explicit CenteredIndicator(double p) : prob_(p) {}

    const Probability& prob() const noexcept { return prob_; }
    double p() const noexcept { return prob_.value(); }

    double mean() const noexcept { return 0.0; }
    double variance() const noexcept { return prob_.value() * prob_.complement(); }

    double upper_value() const noexcept { return 1.0 - prob_.value(); }  // taken w.p. p
    double lower_value() const noexcept { return -prob_.value(); }       // taken w.p. 1 - p

private:
    Probability prob_;
};

namespace detail {

// Below this |p - 1/2| the 0/0 in Q^2 is replaced by its series.
inline constexpr double kQSeriesBand = 1e-5;
// Below this |l| the log-MGF is summed from its cumulant series.
inline constexpr double kCumulantBand = 1e-2;
// Above this |l| the log-MGF is evaluated as a two-term log-sum-exp.
inline constexpr double kLogSumExpBand = 2.0;

// log E exp(l eta_p) for finite l.
inline double log_mgf(double p, double l) {
    if (p == 0.0 || p == 1.0 || l == 0.0) return 0.0;
    const double q = 1.0 - p;
    const double al = std::abs(l);

    if (al < kCumulantBand) {
        // Cumulants of Bernoulli(p) beyond the first, with v = pq and d = q - p.
        const double v = p * q;
        const double d = 1.0 - 2.0 * p;
        const double k2 = v;
        const double k3 = v * d;
        const double k4 = v * (1.0 - 6.0 * v);
        const double k5 = v * d * (1.0 - 12.0 * v);
        const double k6 = v * (1.0 - 30.0 * v + 120.0 * v * v);
        const double k7 = v * d * (1.0 - 60.0 * v + 360.0 * v * v);
        const double tail =
            k2 / 2.0 +
            l * (k3 / 6.0 + l * (k4 / 24.0 + l * (k5 / 120.0 + l * (k6 / 720.0 + l * k7 / 5040.0))));
        return l * l * tail;
    }

    if (al <= kLogSumExpBand) {
        if (p >= 0.25 && p <= 0.75) {
            // log E e^{l eta} = -l d/2 + log(cosh(l/2) + d sinh(l/2)), d = 2p - 1 exact here.
            const double d = 2.0 * p - 1.0;
            const double s4 = std::sinh(l / 4.0);
            return -l * d / 2.0 + std::log1p(2.0 * s4 * s4 + d * std::sinh(l / 2.0));
        }
        if (p < 0.5) return -p * l + std::log1p(p * std::expm1(l));
        return q * l + std::log1p(q * std::expm1(-l));
    }

    double log_p, log_q;
    if (p < 0.5) {
        log_p = std::log(p);
        log_q = std::log1p(-p);
    } else {
        log_p = std::log1p(-q);
        log_q = std::log(q);
    }
    const double a = log_p + l * q;
    const double b = log_q - l * p;
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

inline void require_finite_lambda(double l) {
    if (!std::isfinite(l)) throw DomainError("lambda must be finite");
}

} // namespace detail

// Q(p)^2, the squared closed-form norm.
inline double q_squared(const Probability& prob) {
    const double p = prob.value();
    if (prob.degenerate()) return 0.0;
    const double eps = p - 0.5;
    if (std::abs(eps) < detail::kQSeriesBand) {
        return 0.125 * (1.0 - (4.0 / 3.0) * eps * eps);
    }
    return (1.0 - 2.0 * p) / (4.0 * prob.log_odds());
}

inline SubgaussianNorm q_norm(const Probability& prob) {
    return SubgaussianNorm(std::sqrt(q_squared(prob)), NormMethod::closed_form);
}

// Leading-order behaviour of Q near the endpoints: 0.5 / sqrt(|log min(p, 1 - p)|).
inline double q_asymptotic(const Probability& prob) {
    const double p = prob.value();
    if (prob.degenerate() || p == 0.5) {
        throw DomainError("q_asymptotic is defined for p in (0, 1) other than 1/2");
    }
    const double lg = p < 0.5 ? std::log(p) : std::log(1.0 - p);
    return 0.5 / std::sqrt(std::abs(lg));
}

inline double log_mgf(const CenteredIndicator& ind, double l) {
    detail::require_finite_lambda(l);
    return detail::log_mgf(ind.p(), l);
}

// E exp(l eta_p). Throws OverflowError when the value exceeds double range;
// log_mgf stays finite in that case.
inline double mgf(const CenteredIndicator& ind, double l) {
    const double k = log_mgf(ind, l);
    const double m = std::exp(k);
    if (!std::isfinite(m)) throw OverflowError("mgf overflows double range");
    return m;
}

// Q(p)^2 l^2 - log E exp(l eta_p); nonnegative up to rounding.
inline double kearns_saul_gap(const Probability& prob, double l) {
    detail::require_finite_lambda(l);
    return q_squared(prob) * l * l - detail::log_mgf(prob.value(), l);
}

// Maximizer 2 log((1 - p) / p) of g_p.
inline double lambda_star(const Probability& prob) {
    if (prob.degenerate()) throw DomainError("lambda_star is defined for p in (0, 1)");
    return 2.0 * prob.log_odds();
}

// g_p(l) = log E exp(l eta_p) / l^2. At l = 0 the continuous extension
// p(1 - p)/2 is returned only when extend_at_zero is set.
inline double g_value(const Probability& prob, double l, bool extend_at_zero = false) {
    detail::require_finite_lambda(l);
    if (l == 0.0) {
        if (!extend_at_zero) throw DomainError("g_p is undefined at lambda = 0");
        return 0.5 * prob.value() * prob.complement();
    }
    return detail::log_mgf(prob.value(), l) / (l * l);
}

} // namespace subgauss

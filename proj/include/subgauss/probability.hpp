// probability.hpp
#pragma once
#include <cmath>
#include <limits>
#include <string>

#include "subgauss/errors.hpp"

namespace subgauss {

namespace detail {

// log((1-p)/p), accurate near 0, 1/2 and 1.
//
// Central band uses log((1-p)/p) = -2 atanh(2p - 1), where 2p - 1 is exact.
// Tails use log1p(-p) - log(p) on the smaller of p and 1-p, and the
// p > 1/2 branch is the negation of the p < 1/2 branch evaluated at 1-p,
// so f(p) == -f(1-p) whenever 1-(1-p) == p in floating point.
inline double stable_log_odds(double p) {
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    if (p == 1.0) return -std::numeric_limits<double>::infinity();
    if (p == 0.5) return 0.0;
    if (p >= 0.25 && p <= 0.75) return -2.0 * std::atanh(2.0 * p - 1.0);
    if (p < 0.5) return std::log1p(-p) - std::log(p);
    const double q = 1.0 - p;
    return -(std::log1p(-q) - std::log(q));
}

} // namespace detail

// A validated probability in [0, 1] with its log-odds log((1-p)/p).
// log_odds is +inf at p = 0 and -inf at p = 1.
class Probability {
public:
    explicit Probability(double p) : p_(p) {
        if (std::isnan(p) || p < 0.0 || p > 1.0) {
            throw DomainError("probability must lie in [0, 1], got " + std::to_string(p));
        }
        log_odds_ = detail::stable_log_odds(p);
    }

    double value() const noexcept { return p_; }
    double complement() const noexcept { return 1.0 - p_; }
    double log_odds() const noexcept { return log_odds_; }

    bool degenerate() const noexcept { return p_ == 0.0 || p_ == 1.0; }

    friend bool operator==(const Probability& a, const Probability& b) noexcept {
        return a.p_ == b.p_;
    }

private:
    double p_;
    double log_odds_;
};

} // namespace subgauss

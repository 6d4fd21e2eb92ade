// sum_bounds.hpp
//
// Norm and tail bounds for nu = sum_j c_j (I(A_j) - p_j) over finitely many terms.
//
//   any dependence:  ||nu|| <= sum_j |c_j| Q(p_j)            (triangle inequality)
//   independent:     ||nu|| <= sqrt(sum_j c_j^2 Q(p_j)^2)    (W(n) when c == 1)
//
// The weighted independent form extends the unit-coefficient bound through
// homogeneity of the norm. Tail bounds go through exp(-x^2 / (4 B^2)) for the
// applicable bound B, which for dependent sums composes the triangle bound
// with the generic norm-to-tail conversion.
#pragma once
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "subgauss/errors.hpp"
#include "subgauss/indicator.hpp"
#include "subgauss/norm.hpp"
#include "subgauss/probability.hpp"

namespace subgauss {

enum class Dependence { independent, arbitrary };

struct IndicatorTerm {
    double coef;
    Probability prob;
};

class WeightedIndicatorSum {
public:
    WeightedIndicatorSum(std::vector<IndicatorTerm> terms, Dependence dep)
    : terms_(std::move(terms)), dep_(dep) {
        if (terms_.empty()) throw DomainError("a weighted sum needs at least one term");
        for (const auto& t : terms_) {
            if (!std::isfinite(t.coef)) throw DomainError("coefficients must be finite");
        }
    }

    // S(n) = sum of n independent centered indicators with unit coefficients.
    static WeightedIndicatorSum independent_unit(const std::vector<double>& probs) {
        std::vector<IndicatorTerm> t;
        t.reserve(probs.size());
        for (double p : probs) t.push_back({1.0, Probability(p)});
        return WeightedIndicatorSum(std::move(t), Dependence::independent);
    }

    static WeightedIndicatorSum identical(std::size_t n, double p, double coef = 1.0) {
        std::vector<IndicatorTerm> t(n, IndicatorTerm{coef, Probability(p)});
        return WeightedIndicatorSum(std::move(t), Dependence::independent);
    }

    const std::vector<IndicatorTerm>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    Dependence dependence() const noexcept { return dep_; }
    bool independent() const noexcept { return dep_ == Dependence::independent; }

    bool unit_coefficients() const noexcept {
        for (const auto& t : terms_) {
            if (t.coef != 1.0) return false;
        }
        return true;
    }

    // Largest value the sum can take: sum_j |c_j| max(p_j, 1 - p_j) bounds it.
    double support_radius() const noexcept {
        double r = 0.0;
        for (const auto& t : terms_) {
            r += std::abs(t.coef) * std::max(t.prob.value(), t.prob.complement());
        }
        return r;
    }

    double coef_square_sum() const noexcept {
        double s = 0.0;
        for (const auto& t : terms_) s += t.coef * t.coef;
        return s;
    }

private:
    std::vector<IndicatorTerm> terms_;
    Dependence dep_;
};

enum class SumBoundKind { triangle_dependent, quadratic_independent };

inline std::string_view to_string(SumBoundKind k) {
    return k == SumBoundKind::triangle_dependent ? "triangle_dependent" : "quadratic_independent";
}

struct SumNormBound {
    double value;
    SumBoundKind kind;

    SubgaussianNorm as_norm() const { return SubgaussianNorm(value, NormMethod::bound_only); }
};

inline SumNormBound norm_bound_dependent(const WeightedIndicatorSum& sum) {
    double b = 0.0;
    for (const auto& t : sum.terms()) b += std::abs(t.coef) * q_norm(t.prob).value();
    return {b, SumBoundKind::triangle_dependent};
}

inline SumNormBound norm_bound_independent(const WeightedIndicatorSum& sum) {
    if (!sum.independent()) {
        throw DomainError("quadratic norm bound requires independent terms");
    }
    double s = 0.0;
    for (const auto& t : sum.terms()) s += t.coef * t.coef * q_squared(t.prob);
    return {std::sqrt(s), SumBoundKind::quadratic_independent};
}

// Quadratic bound for independent sums, triangle bound otherwise.
inline SumNormBound applicable_norm_bound(const WeightedIndicatorSum& sum) {
    return sum.independent() ? norm_bound_independent(sum) : norm_bound_dependent(sum);
}

// max(P(nu > x), P(nu < -x)) <= exp(-x^2 / (4 B^2)).
inline double sum_tail_bound(const WeightedIndicatorSum& sum, double x) {
    return tail_bound_from_norm(applicable_norm_bound(sum).as_norm(), x);
}

// e^{-x^2/2}: the fair-coin case of sum_tail_bound on the scale 2 S(n) / sqrt(n),
// where W(n)^2 = n / 8.
inline double hoeffding_reference_tail(std::size_t n, double x) {
    if (n == 0) throw DomainError("n must be positive");
    if (std::isnan(x) || x < 0.0) throw DomainError("tail threshold must be >= 0");
    return std::exp(-0.5 * x * x);
}

// Classical Hoeffding bound exp(-2 x^2 / sum_j c_j^2) for independent terms
// with ranges of width |c_j|; equals hoeffding_reference_tail on the scale
// 2x / sqrt(sum_j c_j^2).
inline double hoeffding_bound(const WeightedIndicatorSum& sum, double x) {
    if (!sum.independent()) throw DomainError("Hoeffding bound requires independent terms");
    if (std::isnan(x) || x < 0.0) throw DomainError("tail threshold must be >= 0");
    const double c2 = sum.coef_square_sum();
    if (c2 == 0.0) {
        if (x > 0.0) throw DomainError("Hoeffding bound is degenerate for zero coefficients");
        return 1.0;
    }
    return hoeffding_reference_tail(sum.size(), 2.0 * x / std::sqrt(c2));
}

} // namespace subgauss

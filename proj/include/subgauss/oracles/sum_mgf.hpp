// sum_mgf.hpp
#pragma once
#include <cmath>
#include <vector>

#include "subgauss/detail/summation.hpp"
#include "subgauss/errors.hpp"
#include "subgauss/indicator.hpp"
#include "subgauss/numeric_norm.hpp"
#include "subgauss/sum_bounds.hpp"

namespace subgauss::oracles {

// log E exp(l nu) = sum_j log E exp(c_j l eta_{p_j}) for independent terms.
inline double exact_sum_log_mgf(const WeightedIndicatorSum& sum, double l) {
    if (!sum.independent()) throw DomainError("exact_sum_log_mgf requires independent terms");
    if (!std::isfinite(l)) throw DomainError("lambda must be finite");
    std::vector<double> parts;
    parts.reserve(sum.size());
    for (const auto& t : sum.terms()) {
        const double arg = t.coef * l;
        if (!std::isfinite(arg)) throw OverflowError("coefficient times lambda overflows");
        parts.push_back(detail::log_mgf(t.prob.value(), arg));
    }
    const double k = detail::stable_sum(std::move(parts));
    if (!std::isfinite(k)) throw OverflowError("sum log-MGF overflows");
    return k;
}

// The sum's log-MGF as a curve, with its exact l -> 0 limit Var/2.
inline LogMgfCurve sum_curve(const WeightedIndicatorSum& sum) {
    if (!sum.independent()) throw DomainError("sum_curve requires independent terms");
    double half_var = 0.0;
    for (const auto& t : sum.terms()) {
        half_var += 0.5 * t.coef * t.coef * t.prob.value() * t.prob.complement();
    }
    return {[sum](double l) { return exact_sum_log_mgf(sum, l); }, half_var};
}

} // namespace subgauss::oracles

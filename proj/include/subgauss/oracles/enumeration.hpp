// enumeration.hpp
#pragma once
#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "subgauss/detail/summation.hpp"
#include "subgauss/errors.hpp"
#include "subgauss/oracles/distribution.hpp"
#include "subgauss/sum_bounds.hpp"

namespace subgauss::oracles {

inline constexpr std::size_t kMaxEnumeratedTerms = 20;

// Exact law of sum_j c_j (I_j - p_j) by listing all 2^m outcomes with product
// probabilities. The indicators are coupled independently, which is one
// admissible law for a sum flagged as arbitrarily dependent.
inline DistributionTable enumerate_law(const WeightedIndicatorSum& sum) {
    const std::size_t m = sum.size();
    if (m > kMaxEnumeratedTerms) {
        throw CapacityError("exhaustive enumeration limited to " +
                            std::to_string(kMaxEnumeratedTerms) + " terms, got " +
                            std::to_string(m));
    }
    const auto& terms = sum.terms();
    std::vector<double> shifts(m);
    for (std::size_t j = 0; j < m; ++j) shifts[j] = terms[j].coef * terms[j].prob.value();
    const double shift = detail::stable_sum(std::move(shifts));

    const std::uint64_t count = std::uint64_t{1} << m;
    std::vector<std::pair<double, double>> outcomes;
    outcomes.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        double value = 0.0;
        double prob = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (mask >> j & 1u) {
                value += terms[j].coef;
                prob *= terms[j].prob.value();
            } else {
                prob *= terms[j].prob.complement();
            }
        }
        outcomes.emplace_back(value - shift, prob);
    }
    std::sort(outcomes.begin(), outcomes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<double> support, masses, group;
    for (std::size_t i = 0; i < outcomes.size();) {
        std::size_t k = i;
        group.clear();
        while (k < outcomes.size() && outcomes[k].first == outcomes[i].first) {
            group.push_back(outcomes[k].second);
            ++k;
        }
        support.push_back(outcomes[i].first);
        masses.push_back(detail::stable_sum(group));
        i = k;
    }
    return DistributionTable(std::move(support), std::move(masses));
}

inline double exhaustive_weighted_tail(const WeightedIndicatorSum& sum, double x,
                                       TailSide side = TailSide::max_both,
                                       Strictness strictness = Strictness::strict) {
    return exact_tail(enumerate_law(sum), x, side, strictness);
}

} // namespace subgauss::oracles

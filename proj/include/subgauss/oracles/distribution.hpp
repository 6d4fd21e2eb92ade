// distribution.hpp
//
// Exact finite laws of centered indicator sums and their tails.
#pragma once
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "subgauss/detail/summation.hpp"
#include "subgauss/errors.hpp"
#include "subgauss/probability.hpp"

namespace subgauss::oracles {

enum class TailSide { upper, lower, max_both };
enum class Strictness { strict, weak };

// Sorted support with aligned probability masses.
class DistributionTable {
public:
    DistributionTable(std::vector<double> support, std::vector<double> masses)
    : support_(std::move(support)), masses_(std::move(masses)) {
        if (support_.empty() || support_.size() != masses_.size()) {
            throw DomainError("support and masses must be nonempty and aligned");
        }
        for (std::size_t i = 0; i < masses_.size(); ++i) {
            if (!std::isfinite(masses_[i]) || masses_[i] < 0.0) {
                throw DomainError("masses must be finite and nonnegative");
            }
            if (i > 0 && !(support_[i - 1] < support_[i])) {
                throw DomainError("support must be strictly increasing");
            }
        }
    }

    const std::vector<double>& support() const noexcept { return support_; }
    const std::vector<double>& masses() const noexcept { return masses_; }
    std::size_t size() const noexcept { return support_.size(); }

    double total_mass() const { return detail::stable_sum(masses_); }

    double mean() const {
        std::vector<double> t(size());
        for (std::size_t i = 0; i < size(); ++i) t[i] = support_[i] * masses_[i];
        return detail::stable_sum(std::move(t));
    }

private:
    std::vector<double> support_;
    std::vector<double> masses_;
};

inline constexpr std::size_t kDefaultPoissonBinomialCap = 100000;

// Exact law of S(n) = sum_i (I(A_i) - p_i) for independent events.
// Support is {k - sum_i p_i : k = 0..n}; the shift is summed once, compensated.
inline DistributionTable poisson_binomial_table(const std::vector<Probability>& probs,
                                                std::size_t cap = kDefaultPoissonBinomialCap) {
    const std::size_t n = probs.size();
    if (n == 0) throw DomainError("poisson_binomial_table needs at least one probability");
    if (n > cap) {
        throw CapacityError("poisson_binomial_table: n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
    }
    std::vector<double> ps(n);
    for (std::size_t i = 0; i < n; ++i) ps[i] = probs[i].value();
    std::sort(ps.begin(), ps.end());

    std::vector<double> dp(n + 1, 0.0);
    dp[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = ps[i];
        const double q = 1.0 - p;
        for (std::size_t k = i + 1; k > 0; --k) dp[k] = dp[k] * q + dp[k - 1] * p;
        dp[0] *= q;
    }

    const double shift = detail::stable_sum(ps);
    std::vector<double> support(n + 1);
    for (std::size_t k = 0; k <= n; ++k) support[k] = static_cast<double>(k) - shift;
    return DistributionTable(std::move(support), std::move(dp));
}

inline DistributionTable poisson_binomial_table(const std::vector<double>& probs,
                                                std::size_t cap = kDefaultPoissonBinomialCap) {
    std::vector<Probability> ps;
    ps.reserve(probs.size());
    for (double p : probs) ps.emplace_back(p);
    return poisson_binomial_table(ps, cap);
}

// P(S > x), P(S < -x), or the larger of the two. Atoms at +-x count only
// under Strictness::weak. Masses are summed smallest first.
inline double exact_tail(const DistributionTable& table, double x, TailSide side,
                         Strictness strictness = Strictness::strict) {
    const bool strict = strictness == Strictness::strict;
    auto upper = [&] {
        std::vector<double> m;
        for (std::size_t i = 0; i < table.size(); ++i) {
            const double s = table.support()[i];
            if (strict ? s > x : s >= x) m.push_back(table.masses()[i]);
        }
        return detail::stable_sum(std::move(m));
    };
    auto lower = [&] {
        std::vector<double> m;
        for (std::size_t i = 0; i < table.size(); ++i) {
            const double s = table.support()[i];
            if (strict ? s < -x : s <= -x) m.push_back(table.masses()[i]);
        }
        return detail::stable_sum(std::move(m));
    };
    switch (side) {
        case TailSide::upper: return upper();
        case TailSide::lower: return lower();
        case TailSide::max_both: return std::max(upper(), lower());
    }
    return 0.0;
}

} // namespace subgauss::oracles

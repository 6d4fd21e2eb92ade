// monte_carlo.hpp
#pragma once
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "subgauss/detail/parallel.hpp"
#include "subgauss/detail/summation.hpp"
#include "subgauss/errors.hpp"
#include "subgauss/oracles/distribution.hpp"
#include "subgauss/sum_bounds.hpp"

namespace subgauss::oracles {

// Counter-based SplitMix64 stream ("splitmix64-counter v1"). Draw number k of
// the stream keyed by seed is mix(key(seed) + (k + 1) * golden_gamma), so any
// draw can be produced without generating the ones before it. Changing this
// changes every seeded Monte Carlo result; bump the version tag if you do.
class CounterRng {
public:
    static constexpr const char* kVersion = "splitmix64-counter v1";

    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6A09E667F3BCC909ULL)) {}

    std::uint64_t bits(std::uint64_t counter) const noexcept {
        return mix(key_ + (counter + 1) * kGamma);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform(std::uint64_t counter) const noexcept {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t key_;
};

struct McEstimate {
    double point{0.0};
    double ci_low{0.0};
    double ci_high{1.0};
    std::uint64_t n_samples{0};
    std::uint64_t seed{0};
};

inline constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile

struct WilsonInterval {
    double low, high;
};

inline WilsonInterval wilson_interval(std::uint64_t hits, std::uint64_t n, double z = kZ99) {
    if (n == 0 || hits > n) throw DomainError("wilson_interval needs 0 <= hits <= n, n > 0");
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(hits) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (phat + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
    double lo = std::max(0.0, center - half);
    double hi = std::min(1.0, center + half);
    return {std::min(lo, phat), std::max(hi, phat)};
}

inline constexpr std::uint64_t kMcChunk = std::uint64_t{1} << 16;

// Seeded estimate of a tail of sum_j c_j (I_j - p_j) under the independent
// coupling. Sample i, term j uses draw i * m + j of the seed's stream; chunks
// of kMcChunk samples are spread over threads and their integer hit counts
// added, so the result depends only on (sum, x, n_samples, seed).
//
// For TailSide::max_both the point is the larger one-sided frequency and the
// interval is the componentwise max of the two one-sided Wilson intervals.
inline McEstimate monte_carlo_tail(const WeightedIndicatorSum& sum, double x,
                                   std::uint64_t n_samples, std::uint64_t seed,
                                   TailSide side = TailSide::max_both, unsigned threads = 1,
                                   Strictness strictness = Strictness::strict) {
    if (n_samples < 100) throw DomainError("monte_carlo_tail needs at least 100 samples");
    const auto& terms = sum.terms();
    const std::uint64_t m = terms.size();
    std::vector<double> shifts(m);
    for (std::size_t j = 0; j < m; ++j) shifts[j] = terms[j].coef * terms[j].prob.value();
    const double shift = detail::stable_sum(std::move(shifts));
    const bool strict = strictness == Strictness::strict;

    const CounterRng rng(seed);
    const std::uint64_t n_chunks = (n_samples + kMcChunk - 1) / kMcChunk;
    std::vector<std::uint64_t> up(n_chunks, 0), down(n_chunks, 0);
    detail::parallel_for(n_chunks, threads, [&](std::size_t c) {
        const std::uint64_t begin = c * kMcChunk;
        const std::uint64_t end = std::min(n_samples, begin + kMcChunk);
        std::uint64_t u = 0, d = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            double value = 0.0;
            for (std::uint64_t j = 0; j < m; ++j) {
                if (rng.uniform(i * m + j) < terms[j].prob.value()) value += terms[j].coef;
            }
            value -= shift;
            if (strict ? value > x : value >= x) ++u;
            if (strict ? value < -x : value <= -x) ++d;
        }
        up[c] = u;
        down[c] = d;
    });
    std::uint64_t hits_up = 0, hits_down = 0;
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
        hits_up += up[c];
        hits_down += down[c];
    }

    const double nn = static_cast<double>(n_samples);
    McEstimate est;
    est.n_samples = n_samples;
    est.seed = seed;
    const auto wu = wilson_interval(hits_up, n_samples);
    const auto wd = wilson_interval(hits_down, n_samples);
    switch (side) {
        case TailSide::upper:
            est.point = hits_up / nn;
            est.ci_low = wu.low;
            est.ci_high = wu.high;
            break;
        case TailSide::lower:
            est.point = hits_down / nn;
            est.ci_low = wd.low;
            est.ci_high = wd.high;
            break;
        case TailSide::max_both:
            est.point = std::max(hits_up, hits_down) / nn;
            est.ci_low = std::max(wu.low, wd.low);
            est.ci_high = std::max(wu.high, wd.high);
            break;
    }
    return est;
}

} // namespace subgauss::oracles

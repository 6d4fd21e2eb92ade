// norm.hpp
#pragma once
#include <cmath>
#include <string>
#include <string_view>

#include "subgauss/errors.hpp"

namespace subgauss {

enum class NormMethod { closed_form, numeric_sup, bound_only };

inline std::string_view to_string(NormMethod m) {
    switch (m) {
        case NormMethod::closed_form: return "closed_form";
        case NormMethod::numeric_sup: return "numeric_sup";
        case NormMethod::bound_only: return "bound_only";
    }
    return "unknown";
}

// Subgaussian norm value: the smallest tau with E exp(l X) <= exp(l^2 tau^2)
// for all real l, or an upper bound on it when method == bound_only.
class SubgaussianNorm {
public:
    SubgaussianNorm(double value, NormMethod method) : value_(value), method_(method) {
        if (!std::isfinite(value) || value < 0.0) {
            throw DomainError("subgaussian norm must be finite and nonnegative, got " +
                              std::to_string(value));
        }
    }

    double value() const noexcept { return value_; }
    NormMethod method() const noexcept { return method_; }

private:
    double value_;
    NormMethod method_;
};

// Norm of a non-centered variable from the norm of its centered part and its mean:
// sqrt(||X - EX||^2 + (EX)^2).
inline SubgaussianNorm noncentered_norm(const SubgaussianNorm& centered, double mean) {
    if (!std::isfinite(mean)) throw DomainError("mean must be finite");
    return SubgaussianNorm(std::hypot(centered.value(), mean), centered.method());
}

// max(P(X > x), P(X < -x)) <= exp(-x^2 / (4 tau^2)) for x >= 0.
// tau == 0 with x > 0 is rejected rather than mapped to 0.
inline double tail_bound_from_norm(const SubgaussianNorm& tau, double x) {
    if (std::isnan(x) || x < 0.0) throw DomainError("tail threshold must be >= 0");
    if (x == 0.0) return 1.0;
    if (tau.value() == 0.0) {
        throw DomainError("tail bound is degenerate for a zero norm and x > 0");
    }
    const double r = x / (2.0 * tau.value());
    return std::exp(-r * r);
}

// A centered variable with max(P(X > x), P(X < -x)) <= exp(-x^2 / K^2) has
// norm below 4K.
inline SubgaussianNorm norm_bound_from_tail(double k) {
    if (!std::isfinite(k) || k <= 0.0) throw DomainError("tail constant K must be positive");
    return SubgaussianNorm(4.0 * k, NormMethod::bound_only);
}

} // namespace subgauss

// golden_section.hpp
#pragma once
#include <algorithm>
#include <cmath>

#include "subgauss/errors.hpp"

namespace subgauss::oracles {

struct GoldenResult {
    double argmax{0.0};
    double value{0.0};
    int iterations{0};
    double width{0.0};      // final bracket width
    bool converged{false};
};

// Golden-section search for the maximum of a unimodal f on [lo, hi].
//
// Stops once the bracket width is below tol * max(1, |midpoint|), so that
// brackets far from the origin are not held to sub-ulp widths. Unimodality
// is the caller's responsibility; non-convergence is reported, not thrown.
template <class F>
GoldenResult golden_section_argmax(F&& f, double lo, double hi, double tol = 1e-12,
                                   int max_iter = 200) {
    if (!(lo < hi)) throw DomainError("golden section needs lo < hi");
    if (!(tol > 0.0)) throw DomainError("golden section tolerance must be positive");

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);

    GoldenResult r;
    for (;;) {
        const double mid = 0.5 * (a + b);
        if (b - a <= tol * std::max(1.0, std::abs(mid))) {
            r.converged = true;
            break;
        }
        if (r.iterations >= max_iter) break;
        ++r.iterations;
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    r.argmax = 0.5 * (a + b);
    r.value = f(r.argmax);
    r.width = b - a;
    return r;
}

} // namespace subgauss::oracles

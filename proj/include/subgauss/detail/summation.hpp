// summation.hpp
#pragma once
#include <algorithm>
#include <cmath>
#include <vector>

namespace subgauss::detail {

// Neumaier-compensated sum, taken smallest magnitude first. The ordering
// makes the result independent of the input order.
inline double stable_sum(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    double s = 0.0, c = 0.0;
    for (double x : xs) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x)) {
            c += (s - t) + x;
        } else {
            c += (x - t) + s;
        }
        s = t;
    }
    return s + c;
}

} // namespace subgauss::detail

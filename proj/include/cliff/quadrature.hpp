#ifndef CLIFF_QUADRATURE_HPP
#define CLIFF_QUADRATURE_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "cliff/errors.hpp"

namespace cliff {

struct GaussLegendre {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

inline GaussLegendre gauss_legendre(int n) {
    GaussLegendre r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton on P_n with the Chebyshev initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

// Boundary sphere S^{2m+1} of radius R centered at `center` in R^{2m+2}.
struct QuadratureRule {
    std::vector<std::vector<double>> nodes; // paravector components
    std::vector<double> weights;            // positive, sum = surface area
    int level = 0;
};

inline double sphere_area(int m, double radius) {
    // |S^1| = 2 pi R, |S^3| = 2 pi^2 R^3, |S^5| = pi^3 R^5.
    const double pi = std::numbers::pi;
    switch (m) {
        case 0: return 2.0 * pi * radius;
        case 1: return 2.0 * pi * pi * std::pow(radius, 3);
        case 2: return pi * pi * pi * std::pow(radius, 5);
        default: throw domain_error("sphere_area supports m in {0,1,2}");
    }
}

// Product rule: Gauss-Legendre in the polar angles, trapezoidal in the
// azimuth (exact for trigonometric polynomials). Node count ~ level^{2m+1}.
inline QuadratureRule sphere_quadrature(int m, const std::vector<double>& center, double radius,
                                        int level) {
    if (level < 1) throw domain_error("quadrature level must be >= 1");
    if (m < 0 || m > 2) throw domain_error("sphere_quadrature supports m in {0,1,2}");
    const int n_axes = 2 * m + 2;
    if (static_cast<int>(center.size()) != n_axes)
        throw dimension_mismatch("center has wrong dimension");
    const double pi = std::numbers::pi;

    QuadratureRule rule;
    rule.level = level;
    const int n_phi = std::max(4, 4 * level);
    const double wphi = 2.0 * pi / n_phi;

    const int n_polar = 2 * m; // number of polar angles
    GaussLegendre gl = gauss_legendre(std::max(2, level));

    // Iterate over the product grid of polar angles.
    std::vector<int> idx(n_polar, 0);
    const int gn = static_cast<int>(gl.nodes.size());
    bool done = false;
    while (!done) {
        double wpolar = 1.0;
        std::vector<double> theta(n_polar);
        for (int t = 0; t < n_polar; ++t) {
            theta[t] = (gl.nodes[idx[t]] + 1.0) * 0.5 * pi;
            double s = std::sin(theta[t]);
            wpolar *= gl.weights[idx[t]] * (pi / 2.0) * std::pow(s, 2 * m - t);
        }
        for (int p = 0; p < n_phi; ++p) {
            const double phi = wphi * p;
            std::vector<double> y(n_axes);
            double prod = 1.0;
            for (int t = 0; t < n_polar; ++t) {
                y[t] = prod * std::cos(theta[t]);
                prod *= std::sin(theta[t]);
            }
            y[n_axes - 2] = prod * std::cos(phi);
            y[n_axes - 1] = prod * std::sin(phi);
            for (int i = 0; i < n_axes; ++i) y[i] = center[i] + radius * y[i];
            rule.nodes.push_back(std::move(y));
            rule.weights.push_back(wpolar * wphi * std::pow(radius, 2 * m + 1));
        }
        done = true;
        for (int t = n_polar - 1; t >= 0; --t) {
            if (++idx[t] < gn) {
                done = false;
                break;
            }
            idx[t] = 0;
        }
    }
    return rule;
}

// Deterministic pairwise-tree reduction; float results are independent of
// the accumulation schedule for a fixed node count.
template <class T>
T pairwise_sum(std::vector<T> items, const T& zero) {
    if (items.empty()) return zero;
    while (items.size() > 1) {
        std::vector<T> next;
        next.reserve((items.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < items.size(); i += 2) next.push_back(items[i] + items[i + 1]);
        if (items.size() % 2 == 1) next.push_back(items.back());
        items = std::move(next);
    }
    return items[0];
}

} // namespace cliff

#endif

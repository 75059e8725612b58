#ifndef CLIFF_ELLIPTIC_HPP
#define CLIFF_ELLIPTIC_HPP

#include <cmath>
#include <vector>

#include "cliff/calculus.hpp"
#include "cliff/linalg.hpp"
#include "cliff/quadrature.hpp"

namespace cliff {

// 2m+2 R-independent paravector periods omega_j; the lattice points are
// Omega_K = 2 sum_j k_j omega_j, K in Z^{2m+2}.
struct Lattice {
    int m = 1;
    std::vector<std::vector<Rational>> periods; // periods[j][axis]

    int n_axes() const { return num_axes(m); }

    RatMatrix basis_matrix() const { // columns 2 omega_j
        const int n = n_axes();
        RatMatrix w(n, RatVector(n, Rational(0)));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) w[i][j] = Rational(2) * periods[j][i];
        return w;
    }

    Rational covolume_sq() const { // det(W)^2 via Gram determinant
        const int n = n_axes();
        RatMatrix g(n, RatVector(n, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s(0);
                for (int a = 0; a < n; ++a)
                    s += Rational(2) * periods[i][a] * Rational(2) * periods[j][a];
                g[i][j] = s;
            }
        // determinant by fraction-free-ish rational elimination
        Rational det(1);
        for (int c = 0; c < n; ++c) {
            int pr = -1;
            for (int r = c; r < n; ++r)
                if (!(g[r][c] == 0)) {
                    pr = r;
                    break;
                }
            if (pr < 0) return Rational(0);
            if (pr != c) {
                std::swap(g[pr], g[c]);
                det = -det;
            }
            det *= g[c][c];
            Rational inv = Rational(1) / g[c][c];
            for (int r = c + 1; r < n; ++r) {
                Rational f = g[r][c] * inv;
                for (int j = c; j < n; ++j) g[r][j] -= f * g[c][j];
            }
        }
        return det;
    }

    double covolume() const { return std::sqrt(to_double(covolume_sq())); }

    void validate() const {
        if (static_cast<int>(periods.size()) != n_axes())
            throw dimension_mismatch("lattice needs 2m+2 periods");
        for (const auto& p : periods)
            if (static_cast<int>(p.size()) != n_axes())
                throw dimension_mismatch("period has wrong dimension");
        if (covolume_sq() == 0) throw domain_error("degenerate lattice: periods are R-dependent");
    }
};

inline Lattice cubic_lattice(int m) {
    Lattice l;
    l.m = m;
    const int n = num_axes(m);
    l.periods.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int j = 0; j < n; ++j) l.periods[j][j] = Rational(1, 2); // Omega basis = e_j
    return l;
}

struct LatticePoint {
    std::vector<int> index;        // K
    std::vector<Rational> omega;   // Omega_K components
};

// All K != 0 with |Omega_K| <= R, each exactly once; the comparison
// |Omega_K|^2 <= R^2 is exact, so the list is symmetric under negation.
inline std::vector<LatticePoint> lattice_enumerate(const Lattice& lat, double radius) {
    if (!(radius > 0)) throw domain_error("enumeration radius must be positive");
    lat.validate();
    const int n = lat.n_axes();

    // Box bound from the inverse basis: k = W^{-1} Omega, |k_j| <= |row_j| R.
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0)),
        winv(n, std::vector<double>(n, 0.0));
    {
        RatMatrix wb = lat.basis_matrix();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) w[i][j] = to_double(wb[i][j]);
            winv[i][i] = 1.0;
        }
        for (int c = 0; c < n; ++c) {
            int pr = c;
            for (int r = c + 1; r < n; ++r)
                if (std::abs(w[r][c]) > std::abs(w[pr][c])) pr = r;
            std::swap(w[pr], w[c]);
            std::swap(winv[pr], winv[c]);
            const double piv = w[c][c];
            for (int j = 0; j < n; ++j) {
                w[c][j] /= piv;
                winv[c][j] /= piv;
            }
            for (int r = 0; r < n; ++r) {
                if (r == c) continue;
                const double f = w[r][c];
                for (int j = 0; j < n; ++j) {
                    w[r][j] -= f * w[c][j];
                    winv[r][j] -= f * winv[c][j];
                }
            }
        }
    }
    std::vector<int> bound(n);
    for (int j = 0; j < n; ++j) {
        double rn = 0.0;
        for (int i = 0; i < n; ++i) rn += winv[j][i] * winv[j][i];
        bound[j] = static_cast<int>(std::floor(std::sqrt(rn) * radius + 1e-9));
    }

    RatMatrix wb = lat.basis_matrix();
    std::vector<std::vector<double>> wd(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) wd[i][j] = to_double(wb[i][j]);

    // The radius filter runs in floats: |(-Omega)|^2 evaluates bit-identically
    // to |Omega|^2, so the accepted set stays closed under negation.
    const double r_sq = radius * radius;
    std::vector<LatticePoint> out;
    std::vector<int> k(n, 0);
    std::vector<double> od(n, 0.0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            bool zero = true;
            for (int v : k)
                if (v != 0) zero = false;
            if (zero) return;
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (int j = 0; j < n; ++j)
                    if (k[j] != 0) s += wd[i][j] * k[j];
                od[i] = s;
            }
            double nsq = 0.0;
            for (int i = 0; i < n; ++i) nsq += od[i] * od[i];
            if (nsq > r_sq) return;
            std::vector<Rational> omega(n, Rational(0));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (k[j] != 0) omega[i] += wb[i][j] * Rational(k[j]);
            out.push_back({k, std::move(omega)});
            return;
        }
        for (int v = -bound[pos]; v <= bound[pos]; ++v) {
            k[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Norm of the bracket term after subtracting the first 2m+2 Neumann terms:
//   |(x-Omega)^{-1} + sum_{p<=2m+1} (Omega^{-1}x)^p Omega^{-1}|
//     <= |x|^{2m+2} / (|Omega|^{2m+3} (1 - |x|/|Omega|)).
inline double zeta_term_bound(double xnorm, double omega_norm, int m) {
    return std::pow(xnorm, 2 * m + 2) /
           (std::pow(omega_norm, 2 * m + 3) * (1.0 - xnorm / omega_norm));
}

// Tail of the (order-times differentiated) series beyond radius R,
// aggregated with the shell-count model  count(r..r+dr) ~ kappa r^{2m+1} dr,
// kappa = |S^{2m+1}| / covolume, and a safety factor 2. Per shell the exact
// per-term bound sum_{p >= 2m+2} p!/(p-order)! |x|^{p-order} / r^{p+1} is
// integrated in closed form.
inline double zeta_tail_estimate(const Lattice& lat, double radius, double xnorm, int order = 0) {
    const int m = lat.m;
    if (!(radius >= 2.0 * xnorm)) throw domain_error("tail estimate requires R >= 2|x|");
    const double kappa = sphere_area(m, 1.0) / lat.covolume();
    double tail = 0.0;
    for (int p = 2 * m + 2;; ++p) {
        if (p < order) continue;
        double fall = 1.0;
        for (int t = 0; t < order; ++t) fall *= (p - t);
        // integral_R^inf r^{2m+1} r^{-(p+1)} dr = R^{2m+1-p} / (p - 2m - 1)
        const double shell = fall * std::pow(xnorm, p - order) * std::pow(radius, 2 * m + 1 - p) /
                             (p - 2 * m - 1);
        tail += shell;
        if (shell < 1e-17 * tail && p > 2 * m + 2 + order) break;
        if (p > 10000) break;
    }
    return 2.0 * kappa * tail;
}

template <class S>
struct ZetaValue {
    Multivector<S> value;
    double tail_estimate = 0.0;
};

// One lattice term, grouped as printed:
//   (x - Omega)^{-1} + sum_{p=0}^{2m+1} (Omega^{-1} x)^p Omega^{-1}.
template <class S>
Multivector<S> zeta_bracket(const Multivector<S>& x, const Multivector<S>& omega) {
    const int m = x.algebra_m();
    Multivector<S> shifted = x - omega;
    if (shifted.norm_sq() == S(0)) throw singular_point("x on the lattice");
    Multivector<S> acc = paravector_inverse(shifted);
    Multivector<S> w = paravector_inverse(omega);
    Multivector<S> t = w * x;
    Multivector<S> pw = w;
    for (int p = 0; p <= 2 * m + 1; ++p) {
        acc += pw;
        pw = t * pw;
    }
    return acc;
}

template <class S>
std::vector<S> convert_point(const std::vector<Rational>& v) {
    std::vector<S> out;
    for (const Rational& q : v) out.push_back(scalar_from_rational<S>(q));
    return out;
}

// Partial sum of zeta_{2m+2} over a precomputed lattice point set.
template <class S>
ZetaValue<S> zeta_truncated(const std::vector<S>& x, const Lattice& lat, double radius,
                            const std::vector<LatticePoint>& points) {
    const int m = lat.m;
    Multivector<S> xmv = Multivector<S>::paravector(m, x);
    if (xmv.norm_sq() == S(0)) throw singular_point("zeta singular at 0");
    const double xn = xmv.norm();
    if (!(radius >= 2.0 * xn)) throw domain_error("truncation radius below 2|x|");

    Multivector<S> acc = paravector_inverse(xmv);
    for (const LatticePoint& pt : points) {
        Multivector<S> omega = Multivector<S>::paravector(m, convert_point<S>(pt.omega));
        acc += zeta_bracket(xmv, omega);
    }
    return {acc, zeta_tail_estimate(lat, radius, xn, 0)};
}

template <class S>
ZetaValue<S> zeta_truncated(const std::vector<S>& x, const Lattice& lat, double radius) {
    return zeta_truncated<S>(x, lat, radius, lattice_enumerate(lat, radius));
}

namespace detail {

// d^order/dx_axis^order of sum_{p=0}^{2m+1} (w x)^p w at the numeric point
// x. Differentiating (w x)^p places w e_axis at `order` of the p factors;
// summing over the ordered placements gives order! times the sum over
// compositions a_0 + .. + a_order = p - order of
//   T^{a_0} E T^{a_1} E ... E T^{a_order} w,  T = w x, E = w e_axis.
inline Multivector<double> bracket_poly_derivative(const Multivector<double>& w,
                                                   const Multivector<double>& xmv, int axis,
                                                   int order, int m) {
    const int pmax = 2 * m + 1;
    Multivector<double> t = w * xmv;
    Multivector<double> e = w * Multivector<double>::basis_axis(m, axis);
    std::vector<Multivector<double>> tp{Multivector<double>::unit(m)};
    for (int p = 1; p <= pmax; ++p) tp.push_back(t * tp.back());

    double fact = 1.0;
    for (int i = 2; i <= order; ++i) fact *= i;

    Multivector<double> acc(m);
    // For each p, the left prefixes T^{a_0} E T^{a_1} E ... can be shared
    // across compositions; p is small (<= 2m+1) so plain recursion suffices.
    auto rec = [&](auto&& self, const Multivector<double>& prefix, int slots_left,
                   int rem) -> void {
        if (slots_left == 0) {
            acc += prefix * tp[rem] * w;
            return;
        }
        for (int a = 0; a <= rem; ++a) self(self, prefix * tp[a] * e, slots_left - 1, rem - a);
    };
    for (int p = order; p <= pmax; ++p)
        rec(rec, Multivector<double>::unit(m), order, p - order);
    return acc * fact;
}

} // namespace detail

// Axis-partial derivative of given order, term-wise: the singular parts
// are differentiated once symbolically as a rational function and then
// evaluated at x - Omega; the degree-(2m+1) polynomial parts numerically
// via the composition formula above (they vanish once order >= 2m+2).
inline ZetaValue<double> zeta_partial_derivative(const std::vector<double>& x, const Lattice& lat,
                                                 double radius, int axis, int order,
                                                 const std::vector<LatticePoint>& points) {
    const int m = lat.m;
    if (order < 0) throw domain_error("negative derivative order");
    if (order == 0) return zeta_truncated<double>(x, lat, radius, points);

    double xn = 0.0;
    for (double v : x) xn += v * v;
    xn = std::sqrt(xn);
    if (!(radius >= 2.0 * xn)) throw domain_error("truncation radius below 2|x|");

    // d^order/dx_axis^order of u^{-1}, symbolically, once.
    RatFun<Rational> dsing = RatFun<Rational>::inverse_variable(m);
    for (int t = 0; t < order; ++t) dsing = dsing.partial(axis);
    RatFun<double> dsing_f = to_float(dsing);

    Multivector<double> acc = dsing_f.eval(x); // derivative of the leading x^{-1}
    const bool poly_alive = order <= 2 * m + 1;
    Multivector<double> xmv = Multivector<double>::paravector(m, x);

    std::vector<double> u(num_axes(m));
    for (const LatticePoint& pt : points) {
        std::vector<double> omega = convert_point<double>(pt.omega);
        for (int i = 0; i < num_axes(m); ++i) u[i] = x[i] - omega[i];
        acc += dsing_f.eval(u);
        if (poly_alive) {
            Multivector<double> w = paravector_inverse(Multivector<double>::paravector(m, omega));
            acc += detail::bracket_poly_derivative(w, xmv, axis, order, m);
        }
    }
    return {acc, zeta_tail_estimate(lat, radius, xn, order)};
}

inline ZetaValue<double> zeta_partial_derivative(const std::vector<double>& x, const Lattice& lat,
                                                 double radius, int axis, int order) {
    return zeta_partial_derivative(x, lat, radius, axis, order, lattice_enumerate(lat, radius));
}

struct PeriodicityResult {
    double defect = 0.0;
    double value_norm = 0.0;
};

// Defect |G(x + 2 omega_j) - G(x)| for G the order-`order` axis derivative
// of the truncated zeta; it decays like R^{-(order-2m)} as R grows.
inline PeriodicityResult periodicity_check(const std::vector<double>& x, const Lattice& lat,
                                           double radius, int period_index, int axis, int order) {
    const int n = lat.n_axes();
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = x[i] + 2.0 * to_double(lat.periods[period_index][i]);
    std::vector<LatticePoint> pts = lattice_enumerate(lat, radius);
    ZetaValue<double> a = zeta_partial_derivative(x, lat, radius, axis, order, pts);
    ZetaValue<double> b = zeta_partial_derivative(xs, lat, radius, axis, order, pts);
    return {(b.value - a.value).norm(), a.value.norm()};
}

} // namespace cliff

#endif

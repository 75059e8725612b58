#ifndef CLIFF_CAUCHY_HPP
#define CLIFF_CAUCHY_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cliff/calculus.hpp"
#include "cliff/quadrature.hpp"

namespace cliff {

struct Ball {
    std::vector<double> center;
    double radius = 1.0;
};

// N(x) = (-1)^m (m+1) / (2^{2m+1} m! pi^{m+1}) x^{-1}. The rational part
// and the scalar prefactor are kept separate so the power of pi stays
// symbolic until float evaluation.
struct KernelN {
    Rational coeff;                  // (-1)^m (m+1) / (2^{2m+1} m!)
    int pi_power = 1;                // divide by pi^{pi_power}
    RatFun<Rational> inverse_part;   // x^{-1}

    double prefactor() const {
        return to_double(coeff) / std::pow(std::numbers::pi, pi_power);
    }
};

inline KernelN kernel_N(int m) {
    KernelN k;
    Rational c(m + 1, mpz_class(1) << (2 * m + 1));
    c /= Rational(factorial(m));
    c.canonicalize();
    if (m % 2 != 0) c = -c;
    k.coeff = c;
    k.pi_power = m + 1;
    k.inverse_part = RatFun<Rational>::inverse_variable(m);
    return k;
}

// Delta^k (x^{-1}) for k = 0..m, without the scalar prefactor.
inline std::vector<RatFun<Rational>> kernel_laplacians(int m) {
    std::vector<RatFun<Rational>> out;
    RatFun<Rational> g = RatFun<Rational>::inverse_variable(m);
    out.push_back(g);
    for (int k = 1; k <= m; ++k) {
        g = laplacian(g, 1);
        out.push_back(g);
    }
    return out;
}

// d f/dn at y on the sphere |y - a| = R, outward normal n = (y - a)/R.
inline Multivector<double> normal_derivative(const RatFun<Rational>& f,
                                             const std::vector<double>& y, const Ball& ball) {
    const int m = f.algebra_m();
    Multivector<double> acc(m);
    for (int i = 0; i < num_axes(m); ++i) {
        const double ni = (y[i] - ball.center[i]) / ball.radius;
        acc += f.partial(i).eval(y) * ni;
    }
    return acc;
}

// Order of the factors in the first boundary integrand; the sum terms
// always use the scalar measure dS.
enum class MeasureConvention {
    mixed,    // integrand Delta^m N(y-x) n(y) f(y), Clifford measure n dS
    scalar,   // integrand Delta^m N(y-x) f(y), scalar dS
    mixed_fn, // integrand Delta^m N(y-x) f(y) n(y)
};

inline std::string to_string(MeasureConvention c) {
    switch (c) {
        case MeasureConvention::mixed: return "mixed";
        case MeasureConvention::scalar: return "scalar";
        case MeasureConvention::mixed_fn: return "mixed-fn";
    }
    return "?";
}

inline MeasureConvention convention_from_string(const std::string& s) {
    if (s == "mixed") return MeasureConvention::mixed;
    if (s == "scalar") return MeasureConvention::scalar;
    if (s == "mixed-fn" || s == "mixed_fn") return MeasureConvention::mixed_fn;
    throw parse_error("unknown measure convention: " + s);
}

struct ReconstructResult {
    Multivector<double> value;
    double defect = 0.0; // norm(value - f(x)) / max(1, norm(f(x)))
};

// Precomputed integrand data reused across evaluation points.
struct CauchyWorkspace {
    int m = 0;
    Ball ball;
    QuadratureRule rule;
    std::vector<RatFun<double>> lap;                     // Delta^k x^{-1}
    std::vector<std::vector<RatFun<double>>> lap_parts;  // partials of each
    double prefactor = 1.0;

    // per-node data for a fixed f
    std::vector<Multivector<double>> f_vals;
    std::vector<std::vector<Multivector<double>>> df_vals;   // D Delta^{k-1} f, k=1..m
    std::vector<std::vector<Multivector<double>>> dfdn_vals; // d/dn of those
};

inline CauchyWorkspace cauchy_workspace(const Ball& ball, int m, int level) {
    CauchyWorkspace ws;
    ws.m = m;
    ws.ball = ball;
    ws.rule = sphere_quadrature(m, ball.center, ball.radius, level);
    for (const RatFun<Rational>& g : kernel_laplacians(m)) {
        ws.lap.push_back(to_float(g));
        std::vector<RatFun<double>> parts;
        for (int i = 0; i < num_axes(m); ++i) parts.push_back(to_float(g.partial(i)));
        ws.lap_parts.push_back(std::move(parts));
    }
    ws.prefactor = kernel_N(m).prefactor();
    return ws;
}

inline void cauchy_load_function(CauchyWorkspace& ws, const MvPolynomial<Rational>& f) {
    const int m = ws.m;
    MvPolynomial<double> ff = to_float(f);
    ws.f_vals.clear();
    ws.df_vals.assign(m, {});
    ws.dfdn_vals.assign(m, {});
    std::vector<MvPolynomial<double>> dfk;        // D Delta^{k-1} f
    std::vector<std::vector<MvPolynomial<double>>> dfk_parts;
    for (int k = 1; k <= m; ++k) {
        MvPolynomial<double> g = dirac_D(laplacian(ff, k - 1));
        std::vector<MvPolynomial<double>> parts;
        for (int i = 0; i < num_axes(m); ++i) parts.push_back(g.partial(i));
        dfk.push_back(g);
        dfk_parts.push_back(std::move(parts));
    }
    for (std::size_t q = 0; q < ws.rule.nodes.size(); ++q) {
        const std::vector<double>& y = ws.rule.nodes[q];
        ws.f_vals.push_back(ff.eval(y));
        for (int k = 1; k <= m; ++k) {
            ws.df_vals[k - 1].push_back(dfk[k - 1].eval(y));
            Multivector<double> dn(m);
            for (int i = 0; i < num_axes(m); ++i) {
                const double ni = (y[i] - ws.ball.center[i]) / ws.ball.radius;
                dn += dfk_parts[k - 1][i].eval(y) * ni;
            }
            ws.dfdn_vals[k - 1].push_back(dn);
        }
    }
}

// Evaluates the three-term boundary representation at an interior point x
// with the workspace's loaded function.
inline Multivector<double> cauchy_evaluate(const CauchyWorkspace& ws, const std::vector<double>& x,
                                           MeasureConvention conv) {
    const int m = ws.m;
    double dist2 = 0.0;
    for (int i = 0; i < num_axes(m); ++i) {
        const double d = x[i] - ws.ball.center[i];
        dist2 += d * d;
    }
    if (!(std::sqrt(dist2) < ws.ball.radius))
        throw domain_error("evaluation point not strictly inside the ball");

    const std::size_t nq = ws.rule.nodes.size();
    std::vector<Multivector<double>> contrib;
    contrib.reserve(nq);
    std::vector<double> u(num_axes(m));
    for (std::size_t q = 0; q < nq; ++q) {
        const std::vector<double>& y = ws.rule.nodes[q];
        const double w = ws.rule.weights[q];
        for (int i = 0; i < num_axes(m); ++i) u[i] = y[i] - x[i];

        Multivector<double> kern = ws.lap[m].eval(u);
        Multivector<double> node(m);
        switch (conv) {
            case MeasureConvention::mixed: {
                Multivector<double> nvec(m);
                for (int i = 0; i < num_axes(m); ++i)
                    nvec[axis_blade(i)] = (y[i] - ws.ball.center[i]) / ws.ball.radius;
                node = kern * nvec * ws.f_vals[q];
                break;
            }
            case MeasureConvention::scalar:
                node = kern * ws.f_vals[q];
                break;
            case MeasureConvention::mixed_fn: {
                Multivector<double> nvec(m);
                for (int i = 0; i < num_axes(m); ++i)
                    nvec[axis_blade(i)] = (y[i] - ws.ball.center[i]) / ws.ball.radius;
                node = kern * ws.f_vals[q] * nvec;
                break;
            }
        }

        for (int k = 1; k <= m; ++k) {
            // - d/dn Delta^{m-k} N(y-x) D Delta^{k-1} f(y)
            Multivector<double> dkern(m);
            for (int i = 0; i < num_axes(m); ++i) {
                const double ni = (y[i] - ws.ball.center[i]) / ws.ball.radius;
                dkern += ws.lap_parts[m - k][i].eval(u) * ni;
            }
            node -= dkern * ws.df_vals[k - 1][q];
            // + Delta^{m-k} N(y-x) d/dn D Delta^{k-1} f(y)
            node += ws.lap[m - k].eval(u) * ws.dfdn_vals[k - 1][q];
        }
        contrib.push_back(node * w);
    }
    Multivector<double> total = pairwise_sum(std::move(contrib), Multivector<double>(m));
    return total * ws.prefactor;
}

inline ReconstructResult cauchy_reconstruct(const MvPolynomial<Rational>& f, const Ball& ball,
                                            const std::vector<double>& x, int m, int level,
                                            MeasureConvention conv = MeasureConvention::mixed) {
    CauchyWorkspace ws = cauchy_workspace(ball, m, level);
    cauchy_load_function(ws, f);
    ReconstructResult r;
    r.value = cauchy_evaluate(ws, x, conv);
    Multivector<double> fx = to_float(f).eval(x);
    r.defect = (r.value - fx).norm() / std::max(1.0, fx.norm());
    return r;
}

struct CalibrationEntry {
    MeasureConvention convention;
    std::vector<double> lambdas; // one per (function, point) pair
    double lambda_mean = 0.0;
    double spread = 0.0; // max relative deviation from the mean
};

struct CalibrationReport {
    std::vector<CalibrationEntry> entries;
    bool has_accepted = false;
    MeasureConvention accepted = MeasureConvention::mixed;
    double accepted_lambda = 0.0;
};

// Measures the multiplicative constant lambda = <value, f(x)> / |f(x)|^2
// per (function, point) pair under each convention. The accepted
// convention is the one whose lambda is constant across the test set.
inline CalibrationReport calibration_scan(const std::vector<MvPolynomial<Rational>>& fs,
                                          const std::vector<std::vector<double>>& points,
                                          const Ball& ball, int m, int level,
                                          const std::vector<MeasureConvention>& conventions,
                                          double spread_tol = 1e-3) {
    CalibrationReport report;
    CauchyWorkspace ws = cauchy_workspace(ball, m, level);
    std::vector<std::vector<std::vector<Multivector<double>>>> values; // [conv][f][pt]
    values.assign(conventions.size(), {});
    for (const MvPolynomial<Rational>& f : fs) {
        cauchy_load_function(ws, f);
        for (std::size_t ci = 0; ci < conventions.size(); ++ci) {
            values[ci].push_back({});
            for (const auto& x : points)
                values[ci].back().push_back(cauchy_evaluate(ws, x, conventions[ci]));
        }
    }
    for (std::size_t ci = 0; ci < conventions.size(); ++ci) {
        CalibrationEntry entry;
        entry.convention = conventions[ci];
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            MvPolynomial<double> ff = to_float(fs[fi]);
            for (std::size_t pi = 0; pi < points.size(); ++pi) {
                Multivector<double> fx = ff.eval(points[pi]);
                double den = to_double(fx.norm_sq());
                if (den < 1e-30) continue;
                double dot = 0.0;
                const Multivector<double>& v = values[ci][fi][pi];
                for (int b = 0; b < fx.dim(); ++b)
                    dot += v[static_cast<BladeMask>(b)] * fx[static_cast<BladeMask>(b)];
                entry.lambdas.push_back(dot / den);
            }
        }
        double sum = 0.0;
        for (double l : entry.lambdas) sum += l;
        entry.lambda_mean = entry.lambdas.empty() ? 0.0 : sum / entry.lambdas.size();
        double spread = 0.0;
        for (double l : entry.lambdas)
            spread = std::max(spread, std::abs(l - entry.lambda_mean) /
                                          std::max(1e-300, std::abs(entry.lambda_mean)));
        entry.spread = spread;
        report.entries.push_back(entry);
        if (!report.has_accepted && spread <= spread_tol && !entry.lambdas.empty()) {
            report.has_accepted = true;
            report.accepted = conventions[ci];
            report.accepted_lambda = entry.lambda_mean;
        }
    }
    return report;
}

} // namespace cliff

#endif

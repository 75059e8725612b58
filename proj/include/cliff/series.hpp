#ifndef CLIFF_SERIES_HPP
#define CLIFF_SERIES_HPP

#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "cliff/solutions.hpp"

namespace cliff {

template <class S>
struct NeumannResult {
    Multivector<S> partial_sum;
    double tail_bound = 0.0;
};

// Truncation of (x - Omega)^{-1} = -sum_{p>=0} (Omega^{-1} x)^p Omega^{-1},
// valid for |x| < |Omega|. The tail bound is exact because every term has
// norm exactly |x|^p / |Omega|^{p+1} (multiplicative norm on paravector
// products).
template <class S>
NeumannResult<S> neumann_inverse_series(const Multivector<S>& x, const Multivector<S>& omega,
                                        int truncation) {
    if (truncation < 0) throw domain_error("negative truncation order");
    S on = omega.norm_sq();
    if (on == S(0)) throw singular_point("zero Omega");
    if (!(x.norm_sq() < on)) throw domain_error("divergent: |x| >= |Omega|");
    const int m = x.algebra_m();
    Multivector<S> w = paravector_inverse(omega);
    Multivector<S> t = w * x;
    Multivector<S> pow = w; // t^p w
    Multivector<S> acc(m);
    for (int p = 0; p <= truncation; ++p) {
        acc += pow;
        pow = t * pow;
    }
    const double xn = x.norm();
    const double wn = omega.norm();
    const double ratio = xn / wn;
    const double tail =
        std::pow(xn, truncation + 1) / std::pow(wn, truncation + 2) / (1.0 - ratio);
    return {-acc, tail};
}

struct TaylorFit {
    std::map<MultiIndex, Multivector<Rational>> coeffs;
    bool consistent = true;     // false would falsify completeness
    bool residual_zero = false; // exact reconstruction achieved
    MvPolynomial<Rational> residual;
};

namespace detail {

// Solves target = sum_j coeff_j * columns_j blade-wise over a fixed set of
// monomials; unknowns are (column, blade) pairs with right Multivector
// coefficients.
inline std::optional<std::vector<Multivector<Rational>>> solve_poly_block(
    const std::vector<MvPolynomial<Rational>>& columns, const MvPolynomial<Rational>& target,
    int m) {
    const int dim = algebra_dim(m);
    std::map<Exponents, int> mono_index;
    auto note = [&](const MvPolynomial<Rational>& p) {
        for (const auto& [e, c] : p.terms())
            mono_index.emplace(e, 0);
    };
    note(target);
    for (const auto& col : columns) note(col);
    {
        int i = 0;
        for (auto& [e, idx] : mono_index) idx = i++;
    }
    const int rows = static_cast<int>(mono_index.size()) * dim;
    const int ncols = static_cast<int>(columns.size()) * dim;

    RatMatrix a(rows, RatVector(ncols, Rational(0)));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        // Right-multiplying a column by the blade e_B permutes and signs its
        // blade components; fill all dim unknowns per column at once.
        for (int b = 0; b < dim; ++b) {
            MvPolynomial<Rational> pc =
                columns[j] * Multivector<Rational>::blade(m, static_cast<BladeMask>(b));
            const int col = static_cast<int>(j) * dim + b;
            for (const auto& [e, c] : pc.terms()) {
                const int r0 = mono_index.at(e) * dim;
                for (int aidx = 0; aidx < dim; ++aidx)
                    a[r0 + aidx][col] = c[static_cast<BladeMask>(aidx)];
            }
        }
    }
    RatVector rhs(rows, Rational(0));
    for (const auto& [e, c] : target.terms()) {
        const int r0 = mono_index.at(e) * dim;
        for (int aidx = 0; aidx < dim; ++aidx) rhs[r0 + aidx] = c[static_cast<BladeMask>(aidx)];
    }

    auto sol = solve_consistent(a, rhs);
    if (!sol) return std::nullopt;
    std::vector<Multivector<Rational>> out;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        Multivector<Rational> c(m);
        for (int b = 0; b < dim; ++b) c[static_cast<BladeMask>(b)] = (*sol)[j * dim + b];
        out.push_back(c);
    }
    return out;
}

} // namespace detail

// Expresses f as sum_alpha P_alpha(x - a) c_alpha with right Multivector
// coefficients, |alpha| <= dmax + 1. The family need not be independent;
// any consistent solution is accepted and the contract is exact
// reconstruction. The solve decomposes by homogeneous degree around a.
inline TaylorFit taylor_fit(const MvPolynomial<Rational>& f, const std::vector<Rational>& a,
                            int dmax, int m) {
    TaylorFit fit;
    fit.residual = MvPolynomial<Rational>(m);
    MvPolynomial<Rational> g = f.shifted(a); // g(y) = f(y + a)

    std::vector<Rational> minus_a;
    for (const Rational& ai : a) minus_a.push_back(-ai);

    MvPolynomial<Rational> recon(m);
    for (int d = 0; d <= std::max(g.degree(), 0); ++d) {
        MvPolynomial<Rational> gd = g.homogeneous_part(d);
        if (gd.is_zero()) continue;
        if (d > dmax) {
            fit.consistent = false;
            continue;
        }
        auto alphas = multi_indices_of_order(num_axes(m), d + 1);
        std::vector<MvPolynomial<Rational>> cols;
        for (const MultiIndex& alpha : alphas) cols.push_back(p_alpha(alpha, m));
        auto sol = detail::solve_poly_block(cols, gd, m);
        if (!sol) {
            fit.consistent = false;
            continue;
        }
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            if ((*sol)[j].is_zero()) continue;
            fit.coeffs[alphas[j]] = (*sol)[j];
            recon += cols[j].shifted(minus_a) * (*sol)[j]; // P_alpha(x - a) c_alpha
        }
    }
    fit.residual = f - recon;
    fit.residual_zero = fit.residual.is_zero();
    return fit;
}

struct LaurentFit {
    std::map<MultiIndex, Multivector<Rational>> c_alpha;
    std::map<MultiIndex, Multivector<Rational>> d_beta;
    bool residual_zero = false;
    RatFun<Rational> residual;
};

namespace detail {

// Splits f (poles only at the origin) into components that are homogeneous
// of integer degree deg(monomial) - 2k.
inline std::map<int, RatFun<Rational>> graded_components(const RatFun<Rational>& f) {
    std::map<int, RatFun<Rational>> out;
    const int m = f.algebra_m();
    const std::vector<Rational> origin(num_axes(m), Rational(0));
    for (const RatTerm<Rational>& t : f.term_list()) {
        if (t.k > 0 && t.center != origin)
            throw domain_error("laurent_fit requires poles at the origin only");
        for (const auto& [e, c] : t.num.terms()) {
            const int grade = total_degree(e) - 2 * t.k;
            auto it = out.emplace(grade, RatFun<Rational>(m)).first;
            MvPolynomial<Rational> mono(m);
            mono.add_term(e, c);
            it->second.add_raw_term({mono, origin, t.k});
        }
    }
    for (auto& [g, r] : out) r.prune();
    return out;
}

} // namespace detail

// Joint fit in the {P_alpha, S_beta} dictionary (Laurent decomposition
// around the origin). Components outside the index bounds are left in the
// residual rather than raising an error.
inline LaurentFit laurent_fit(const RatFun<Rational>& f, int dmax, int bmax, int m) {
    LaurentFit fit;
    const std::vector<Rational> origin(num_axes(m), Rational(0));
    const MvPolynomial<Rational> r2 = norm_sq_poly(m, origin);

    RatFun<Rational> recon(m);
    for (auto& [grade, comp] : detail::graded_components(f)) {
        int kmax = 0;
        for (const RatTerm<Rational>& t : comp.term_list()) kmax = std::max(kmax, t.k);

        std::vector<MultiIndex> labels;
        std::vector<MvPolynomial<Rational>> cols;  // numerators over |x|^{2K}
        std::vector<RatFun<Rational>> col_funs;    // the dictionary members themselves
        int common_k = kmax;

        if (grade >= 0 && grade + 1 <= dmax + 1) {
            for (const MultiIndex& alpha : multi_indices_of_order(num_axes(m), grade + 1)) {
                labels.push_back(alpha);
                MvPolynomial<Rational> p = p_alpha(alpha, m);
                col_funs.push_back(RatFun<Rational>::from_polynomial(p));
                cols.push_back(p * poly_pow(r2, common_k));
            }
        } else if (grade < 0 && -grade <= bmax) {
            const int b = -grade;
            common_k = std::max(kmax, b);
            for (const MultiIndex& beta : multi_indices_of_order(num_axes(m), b)) {
                RatFun<Rational> s = s_beta(beta, m);
                // All of s's terms share center 0 and pole order b.
                MvPolynomial<Rational> numer(m);
                for (const RatTerm<Rational>& t : s.term_list()) {
                    if (t.k != b) throw domain_error("unexpected S_beta pole order");
                    numer += t.num;
                }
                labels.push_back(beta);
                col_funs.push_back(s);
                cols.push_back(numer * poly_pow(r2, common_k - b));
            }
        } else {
            continue; // out of bounds; stays in the residual
        }

        // Numerator of the component over the common denominator |x|^{2K}.
        MvPolynomial<Rational> target(m);
        for (const RatTerm<Rational>& t : comp.term_list())
            target += t.num * poly_pow(r2, common_k - t.k);

        auto sol = detail::solve_poly_block(cols, target, m);
        if (!sol) continue;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if ((*sol)[j].is_zero()) continue;
            if (grade >= 0)
                fit.c_alpha[labels[j]] = (*sol)[j];
            else
                fit.d_beta[labels[j]] = (*sol)[j];
            recon += col_funs[j] * (*sol)[j];
        }
    }
    fit.residual = f - recon;
    fit.residual_zero = fit.residual.is_identically_zero();
    return fit;
}

} // namespace cliff

#endif

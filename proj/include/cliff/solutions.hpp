#ifndef CLIFF_SOLUTIONS_HPP
#define CLIFF_SOLUTIONS_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "cliff/calculus.hpp"
#include "cliff/linalg.hpp"

namespace cliff {

// Multi-index alpha in N^{2m+2}; labels the multiset with alpha_i copies
// of the generator e_i.
using MultiIndex = std::vector<int>;

inline int multi_index_order(const MultiIndex& a) { return total_degree(a); }

// Weight carried by each distinct arrangement so that the weighted sum
// over distinct arrangements equals the sum over all |alpha|! permutations.
inline mpz_class arrangement_weight(const MultiIndex& a) {
    mpz_class w = 1;
    for (int ai : a) w *= factorial(ai);
    return w;
}

inline mpz_class multinomial_count(const MultiIndex& a) {
    mpz_class r = factorial(multi_index_order(a));
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), arrangement_weight(a).get_mpz_t());
    return r;
}

// Visits each distinct sequence of the multiset exactly once, in
// lexicographic order. The sequence entries are axis indices (0 = e_0).
template <class Fn>
void for_each_arrangement(const MultiIndex& a, Fn&& fn) {
    if (multi_index_order(a) < 1) throw domain_error("multi-index must have |alpha| >= 1");
    std::vector<int> seq;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int c = 0; c < a[i]; ++c) seq.push_back(static_cast<int>(i));
    do {
        fn(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
}

inline std::vector<std::vector<int>> multiset_arrangements(const MultiIndex& a) {
    std::vector<std::vector<int>> out;
    for_each_arrangement(a, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

// P_alpha(x) = (1/|alpha|!) sum_sigma (e_{s(1)} x) ... (e_{s(|a|-1)} x) e_{s(|a|)},
// summed over all permutations of the multiset; computed over distinct
// arrangements with multiplicity weights. Homogeneous of degree |alpha|-1.
inline MvPolynomial<Rational> p_alpha(const MultiIndex& alpha, int m) {
    if (static_cast<int>(alpha.size()) != num_axes(m))
        throw dimension_mismatch("multi-index needs 2m+2 entries");
    const int n = multi_index_order(alpha);
    if (n < 1) throw domain_error("p_alpha needs |alpha| >= 1");
    const MvPolynomial<Rational> x = MvPolynomial<Rational>::paravector_variable(m);
    Rational w(arrangement_weight(alpha), factorial(n));
    w.canonicalize();
    MvPolynomial<Rational> sum(m);
    for_each_arrangement(alpha, [&](const std::vector<int>& seq) {
        MvPolynomial<Rational> prod =
            MvPolynomial<Rational>::scalar_constant(m, Rational(1));
        for (int v = 0; v + 1 < n; ++v)
            prod = prod * (Multivector<Rational>::basis_axis(m, seq[v]) * x);
        prod = prod * Multivector<Rational>::basis_axis(m, seq[n - 1]);
        sum += prod;
    });
    return sum * w;
}

// S_beta(x) = (1/|beta|!) sum_sigma (x^{-1} e_{s(1)}) ... (x^{-1} e_{s(|b|-1)}) x^{-1}.
// Implemented literally: the product runs over the first |beta|-1 elements
// of each arrangement, so the final multiset element never appears.
inline RatFun<Rational> s_beta(const MultiIndex& beta, int m) {
    if (static_cast<int>(beta.size()) != num_axes(m))
        throw dimension_mismatch("multi-index needs 2m+2 entries");
    const int n = multi_index_order(beta);
    if (n < 1) throw domain_error("s_beta needs |beta| >= 1");
    const RatFun<Rational> xinv = RatFun<Rational>::inverse_variable(m);
    Rational w(arrangement_weight(beta), factorial(n));
    w.canonicalize();
    RatFun<Rational> sum(m);
    for_each_arrangement(beta, [&](const std::vector<int>& seq) {
        RatFun<Rational> prod =
            RatFun<Rational>::from_polynomial(MvPolynomial<Rational>::scalar_constant(m, Rational(1)));
        for (int v = 0; v + 1 < n; ++v)
            prod = prod * (xinv * Multivector<Rational>::basis_axis(m, seq[v]));
        prod = prod * xinv;
        sum += prod;
    });
    return sum * w;
}

// Independent route to S_beta for |beta| >= 2:
//   S_beta = ((-1)^{|b|-1}/|b|!) sum_j beta_j d^{beta - delta_j} (x^{-1}),
// with the mixed partials taken by repeated quotient-rule differentiation.
inline RatFun<Rational> s_beta_derivative_oracle(const MultiIndex& beta, int m) {
    const int n = multi_index_order(beta);
    if (n < 2) throw domain_error("oracle needs |beta| >= 2");
    RatFun<Rational> sum(m);
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (beta[j] == 0) continue;
        RatFun<Rational> g = RatFun<Rational>::inverse_variable(m);
        for (std::size_t i = 0; i < beta.size(); ++i) {
            int times = beta[i] - (i == j ? 1 : 0);
            for (int t = 0; t < times; ++t) g = g.partial(static_cast<int>(i));
        }
        sum += g * Rational(beta[j]);
    }
    Rational c(1, factorial(n));
    c.canonicalize();
    if ((n - 1) % 2 != 0) c = -c;
    return sum * c;
}

// All multi-indices over n_axes entries with the given total.
inline std::vector<MultiIndex> multi_indices_of_order(int n_axes, int total) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n_axes, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n_axes - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

inline std::vector<MultiIndex> multi_indices_up_to(int n_axes, int lo, int hi) {
    std::vector<MultiIndex> out;
    for (int t = lo; t <= hi; ++t) {
        auto v = multi_indices_of_order(n_axes, t);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

struct SpaceCompareReport {
    int d = 0;
    int m = 0;
    int kernel_dim = 0;
    int span_rank = 0;
    bool spans_equal = false;
};

namespace detail {

// Flattens a polynomial of degree <= d into the coefficient vector over
// (monomial, blade) pairs.
template <class S>
RatVector poly_coeff_vector(const MvPolynomial<S>& p,
                            const std::map<Exponents, int>& mono_index, int dim) {
    RatVector v(static_cast<std::size_t>(mono_index.size()) * dim, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        auto it = mono_index.find(e);
        if (it == mono_index.end()) throw domain_error("monomial outside the basis");
        for (int a = 0; a < dim; ++a)
            v[static_cast<std::size_t>(it->second) * dim + a] = c[static_cast<BladeMask>(a)];
    }
    return v;
}

} // namespace detail

// Compares the exact kernel of D Delta^m on Multivector-valued polynomials
// of degree <= d with the right-span of {P_alpha e_A : |alpha| <= d+1}.
inline SpaceCompareReport solution_space_compare(int d, int m,
                                                 long max_cells = 4'000'000L) {
    // Below d = 2m+1 the operator annihilates everything and the kernel is
    // the whole space; the comparison is still well defined, just vacuous.
    if (d < 1) throw domain_error("degree bound must be >= 1");
    const int n = num_axes(m);
    const int dim = algebra_dim(m);

    std::map<Exponents, int> mono_index;
    for (const MultiIndex& e : multi_indices_up_to(n, 0, d))
        mono_index.emplace(e, static_cast<int>(mono_index.size()));
    const int space_dim = static_cast<int>(mono_index.size()) * dim;

    auto alphas = multi_indices_up_to(n, 1, d + 1);
    const long span_cols = static_cast<long>(alphas.size()) * dim;
    if (static_cast<long>(space_dim) * span_cols > max_cells)
        throw resource_limit("solution_space_compare matrix exceeds configured size");

    // Rank of the operator on the monomial-blade basis.
    RatMatrix op_cols;
    for (const auto& [e, idx] : mono_index) {
        for (int a = 0; a < dim; ++a) {
            MvPolynomial<Rational> basis(m);
            basis.add_term(e, Multivector<Rational>::blade(m, static_cast<BladeMask>(a)));
            MvPolynomial<Rational> img = lhc_residual(basis, m);
            if (!img.is_zero())
                op_cols.push_back(detail::poly_coeff_vector(img, mono_index, dim));
        }
    }
    const int op_rank = rank_exact(op_cols); // rows of op_cols = images; rank is the same transposed
    const int kernel_dim = space_dim - op_rank;

    // Span of the P_alpha with right blade coefficients.
    RatMatrix span_cols_mat;
    bool span_in_kernel = true;
    for (const MultiIndex& alpha : alphas) {
        MvPolynomial<Rational> p = p_alpha(alpha, m);
        if (!lhc_residual(p, m).is_zero()) span_in_kernel = false;
        for (int a = 0; a < dim; ++a) {
            MvPolynomial<Rational> pc = p * Multivector<Rational>::blade(m, static_cast<BladeMask>(a));
            span_cols_mat.push_back(detail::poly_coeff_vector(pc, mono_index, dim));
        }
    }
    const int span_rank = rank_exact(span_cols_mat);

    SpaceCompareReport r;
    r.d = d;
    r.m = m;
    r.kernel_dim = kernel_dim;
    r.span_rank = span_rank;
    r.spans_equal = span_in_kernel && span_rank == kernel_dim;
    return r;
}

} // namespace cliff

#endif

#ifndef CLIFF_CALCULUS_HPP
#define CLIFF_CALCULUS_HPP

#include <utility>

#include "cliff/polynomial.hpp"
#include "cliff/ratfun.hpp"

namespace cliff {

// The differential operators act uniformly on MvPolynomial and RatFun:
// both expose partial(axis) and left multiplication by a Multivector.

// D f = sum_{i=0}^{2m+1} e_i df/dx_i, applied from the left.
template <class F>
F dirac_D(const F& f) {
    using S = typename F::scalar_type;
    const int m = f.algebra_m();
    F r(m);
    for (int i = 0; i < num_axes(m); ++i)
        r += Multivector<S>::basis_axis(m, i) * f.partial(i);
    return r;
}

// Dbar f = df/dx_0 - sum_{i>=1} e_i df/dx_i; satisfies Dbar D = D Dbar = Delta.
template <class F>
F dirac_Dbar(const F& f) {
    using S = typename F::scalar_type;
    const int m = f.algebra_m();
    F r(m);
    for (int i = 0; i < num_axes(m); ++i)
        r += Multivector<S>::basis_axis(m, i).conjugate_bar() * f.partial(i);
    return r;
}

// Delta^times f with the ordinary Laplacian; times = 0 is the identity.
template <class F>
F laplacian(const F& f, int times = 1) {
    if (times < 0) throw domain_error("negative Laplacian power");
    const int m = f.algebra_m();
    F g = f;
    for (int t = 0; t < times; ++t) {
        F acc(m);
        for (int i = 0; i < num_axes(m); ++i) acc += g.partial(i).partial(i);
        g = acc;
    }
    return g;
}

// D Delta^m f; identically zero iff f is (left) holomorphic Cliffordian.
template <class F>
F lhc_residual(const F& f, int m_op) {
    return dirac_D(laplacian(f, m_op));
}

template <class F>
F lhc_residual(const F& f) {
    return lhc_residual(f, f.algebra_m());
}

// x * f with x the paravector variable.
template <class S>
MvPolynomial<S> x_times(const MvPolynomial<S>& f) {
    return MvPolynomial<S>::paravector_variable(f.algebra_m()) * f;
}

template <class S>
RatFun<S> x_times(const RatFun<S>& f) {
    return MvPolynomial<S>::paravector_variable(f.algebra_m()) * f;
}

// The two residuals (Delta^{m+1} f, Delta^{m+1}(x f)). Their joint
// vanishing characterizes D Delta^m f = 0 through the exact identity
//   Delta^{m+1}(x f) = x Delta^{m+1} f + 2(m+1) D Delta^m f.
// Note the exponent m+1 on the first residual as well: with exponent m
// the equivalence fails already for f = x^{-1}.
template <class F>
std::pair<F, F> remark2_residuals(const F& f, int m_op) {
    F r1 = laplacian(f, m_op + 1);
    F r2 = laplacian(x_times(f), m_op + 1);
    return {r1, r2};
}

} // namespace cliff

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "cliff/random.hpp"
#include "cliff/series.hpp"

using namespace cliff;

TEST_CASE("Neumann series at x = 0") {
    const int m = 1;
    Multivector<Rational> omega = Multivector<Rational>::paravector(
        m, {Rational(1), Rational(2), Rational(0), Rational(-1)});
    NeumannResult<Rational> r = neumann_inverse_series(Multivector<Rational>(m), omega, 5);
    CHECK(r.partial_sum == -paravector_inverse(omega));
    CHECK(r.tail_bound == 0.0);
}

TEST_CASE("m=0 reduces to the complex geometric series") {
    // R_{0,1} with basis {1, e1} is C; paravector (a, b) <-> a + bi.
    const int m = 0;
    Multivector<Rational> x = Multivector<Rational>::paravector(m, {Rational(1, 4), Rational(1, 8)});
    Multivector<Rational> omega = Multivector<Rational>::paravector(m, {Rational(1), Rational(-2)});
    const int P = 7;
    NeumannResult<Rational> r = neumann_inverse_series(x, omega, P);

    std::complex<double> zx(0.25, 0.125), zo(1.0, -2.0);
    std::complex<double> acc(0.0, 0.0);
    for (int p = 0; p <= P; ++p) acc -= std::pow(zx / zo, p) / zo;
    CHECK(to_double(r.partial_sum[0]) == doctest::Approx(acc.real()).epsilon(1e-12));
    CHECK(to_double(r.partial_sum[1]) == doctest::Approx(acc.imag()).epsilon(1e-12));
}

TEST_CASE("tail bound is valid and not vacuous") {
    Rng rng(606);
    const int m = 1;
    int cases = 0;
    while (cases < 100) {
        Multivector<Rational> omega =
            Multivector<Rational>::paravector(m, rng.nonzero_paravector_components(m));
        Multivector<Rational> x =
            Multivector<Rational>::paravector(m, rng.paravector_components(m));
        if (!(Rational(4) * x.norm_sq() <= omega.norm_sq())) continue;
        if (x.norm_sq() == 0) continue;
        ++cases;
        Multivector<Rational> direct = paravector_inverse(x - omega);
        const int P = rng.uniform_int(0, 8);
        NeumannResult<Rational> r = neumann_inverse_series(x, omega, P);
        const double err = (r.partial_sum - direct).norm();
        CHECK(err <= r.tail_bound);
        CHECK(err / r.tail_bound <= 1.0);
        CHECK(r.tail_bound > 0.0);
    }
}

TEST_CASE("divergent input is rejected") {
    const int m = 1;
    Multivector<Rational> x = Multivector<Rational>::paravector(
        m, {Rational(2), Rational(0), Rational(0), Rational(0)});
    Multivector<Rational> omega = Multivector<Rational>::paravector(
        m, {Rational(1), Rational(0), Rational(0), Rational(0)});
    CHECK_THROWS_AS(neumann_inverse_series(x, omega, 3), domain_error);
    CHECK_THROWS_AS(neumann_inverse_series(x, Multivector<Rational>(m), 3), singular_point);
}

TEST_CASE("taylor_fit on family members") {
    const int m = 1;
    const std::vector<Rational> origin(num_axes(m), Rational(0));
    TaylorFit fit = taylor_fit(p_alpha({1, 1, 0, 0}, m), origin, 3, m);
    CHECK(fit.consistent);
    CHECK(fit.residual_zero);

    // f = x is P_(2,0,0,0)
    TaylorFit fx = taylor_fit(MvPolynomial<Rational>::paravector_variable(m), origin, 3, m);
    CHECK(fx.residual_zero);
}

TEST_CASE("taylor_fit round trip on random right combinations") {
    Rng rng(888);
    const int m = 1;
    const std::vector<Rational> origin(num_axes(m), Rational(0));
    for (int t = 0; t < 3; ++t) {
        MvPolynomial<Rational> f(m);
        for (const MultiIndex& alpha : multi_indices_up_to(num_axes(m), 1, 4))
            if (rng.uniform_int(0, 2) == 0) f += p_alpha(alpha, m) * rng.multivector(m);
        TaylorFit fit = taylor_fit(f, origin, 3, m);
        CHECK(fit.consistent);
        CHECK(fit.residual_zero);
    }
}

TEST_CASE("taylor_fit at a shifted center") {
    Rng rng(1234);
    const int m = 1;
    std::vector<Rational> a{Rational(1, 2), Rational(-1), Rational(0), Rational(1, 3)};
    MvPolynomial<Rational> f =
        p_alpha({1, 1, 0, 0}, m) * rng.multivector(m) + p_alpha({2, 0, 1, 0}, m);
    TaylorFit fit = taylor_fit(f, a, 3, m);
    CHECK(fit.consistent);
    CHECK(fit.residual_zero);
}

TEST_CASE("degree overflow is reported, not hidden") {
    const int m = 1;
    TaylorFit fit = taylor_fit(p_alpha({4, 0, 0, 0}, m), std::vector<Rational>(4, Rational(0)), 1, m);
    CHECK(!fit.consistent);
    CHECK(!fit.residual_zero);
}

TEST_CASE("laurent_fit recovers dictionary members") {
    const int m = 1;
    RatFun<Rational> f = s_beta({0, 2, 0, 0}, m) +
                         RatFun<Rational>::from_polynomial(p_alpha({2, 0, 0, 0}, m));
    LaurentFit fit = laurent_fit(f, 3, 3, m);
    CHECK(fit.residual_zero);

    LaurentFit inv = laurent_fit(RatFun<Rational>::inverse_variable(m), 3, 3, m);
    CHECK(inv.residual_zero);
    MultiIndex delta0{1, 0, 0, 0};
    CHECK(inv.d_beta.count(delta0) == 1);
}

TEST_CASE("laurent_fit round trip on random joint combinations") {
    Rng rng(4242);
    const int m = 1;
    for (int t = 0; t < 2; ++t) {
        RatFun<Rational> f(m);
        for (const MultiIndex& alpha : multi_indices_up_to(num_axes(m), 1, 4))
            if (rng.uniform_int(0, 3) == 0)
                f += RatFun<Rational>::from_polynomial(p_alpha(alpha, m)) * rng.multivector(m);
        for (const MultiIndex& beta : multi_indices_up_to(num_axes(m), 1, 3))
            if (rng.uniform_int(0, 3) == 0) f += s_beta(beta, m) * rng.multivector(m);
        LaurentFit fit = laurent_fit(f, 3, 3, m);
        CHECK(fit.residual_zero);
    }
}

TEST_CASE("exterior expansion of a shifted inverse, linked via Neumann partial sums") {
    // (x-a)^{-1} = sum_p (x^{-1} a)^p x^{-1} for |x| > |a|; the partial sums
    // are Laurent-dictionary material and the residual shrinks with the
    // index bound.
    const int m = 1;
    std::vector<Rational> ac{Rational(1, 4), Rational(0), Rational(-1, 4), Rational(0)};
    Multivector<Rational> a = Multivector<Rational>::paravector(m, ac);
    RatFun<Rational> xinv = RatFun<Rational>::inverse_variable(m);
    MvPolynomial<Rational> apoly = MvPolynomial<Rational>::constant(a);

    RatFun<Rational> partial(m);
    RatFun<Rational> term = xinv;
    const std::vector<double> pt{2.0, 0.5, -1.0, 0.25};
    std::vector<Rational> shifted_center = ac;
    RatFun<Rational> direct = RatFun<Rational>::shifted_inverse(m, shifted_center);
    double prev_err = 1e300;
    for (int p = 0; p < 4; ++p) {
        partial += term;
        const double err = (partial.eval(pt) - direct.eval(pt)).norm();
        CHECK(err < prev_err);
        prev_err = err;

        // exact recovery within bounds, reported (nonzero) residual below them
        LaurentFit fit = laurent_fit(partial, 0, p + 1, m);
        CHECK(fit.residual_zero);
        if (p >= 1) {
            LaurentFit low = laurent_fit(partial, 0, p, m);
            CHECK(!low.residual_zero);
        }
        term = term * apoly * xinv; // next (x^{-1} a)^{p+1} x^{-1}
    }
}

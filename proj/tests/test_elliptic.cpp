#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "cliff/elliptic.hpp"
#include "cliff/random.hpp"

using namespace cliff;

namespace {

Lattice skewed_lattice() {
    // cubic lattice with one sheared period; still nondegenerate
    Lattice l = cubic_lattice(1);
    l.periods[1][0] = Rational(1, 4);
    return l;
}

} // namespace

TEST_CASE("lattice enumeration examples") {
    // Omega basis = 2 e_j: exactly the 8 points +-2 e_j inside R = 2
    Lattice l2;
    l2.m = 1;
    l2.periods.assign(4, std::vector<Rational>(4, Rational(0)));
    for (int j = 0; j < 4; ++j) l2.periods[j][j] = Rational(1);
    auto pts = lattice_enumerate(l2, 2.0);
    CHECK(pts.size() == 8);
    for (const LatticePoint& p : pts) {
        Rational n(0);
        for (const Rational& v : p.omega) n += v * v;
        CHECK(n == 4);
    }
}

TEST_CASE("enumeration is symmetric and grows like R^4") {
    for (const Lattice& lat : {cubic_lattice(1), skewed_lattice()}) {
        auto pts = lattice_enumerate(lat, 4.0);
        // closed under negation
        std::set<std::vector<int>> keys;
        for (const LatticePoint& p : pts) keys.insert(p.index);
        for (const LatticePoint& p : pts) {
            std::vector<int> neg;
            for (int v : p.index) neg.push_back(-v);
            CHECK(keys.count(neg) == 1);
        }
        auto pts2 = lattice_enumerate(lat, 8.0);
        const double growth = static_cast<double>(pts2.size()) / static_cast<double>(pts.size());
        CHECK(growth > 8.0);  // within factor 2 of the 16x volume scaling
        CHECK(growth < 32.0);
    }
}

TEST_CASE("degenerate lattices are rejected") {
    Lattice bad = cubic_lattice(1);
    bad.periods[3] = bad.periods[0];
    CHECK_THROWS_AS(bad.validate(), domain_error);
    CHECK_THROWS_AS(lattice_enumerate(bad, 2.0), domain_error);
}

TEST_CASE("per-term Neumann bound holds exactly on random pairs") {
    Rng rng(9090);
    const int m = 1;
    int cases = 0;
    while (cases < 100) {
        Multivector<Rational> omega =
            Multivector<Rational>::paravector(m, rng.nonzero_paravector_components(m));
        Multivector<Rational> x =
            Multivector<Rational>::paravector(m, rng.paravector_components(m));
        if (x.norm_sq() == 0) continue;
        if (!(Rational(4) * x.norm_sq() <= omega.norm_sq())) continue;
        ++cases;
        Multivector<Rational> term = zeta_bracket(x, omega);
        CHECK(term.norm() <= zeta_term_bound(x.norm(), omega.norm(), m) * (1 + 1e-12));
    }
}

TEST_CASE("term norms are exactly multiplicative") {
    Rng rng(33);
    const int m = 1;
    for (int t = 0; t < 25; ++t) {
        Multivector<Rational> omega =
            Multivector<Rational>::paravector(m, rng.nonzero_paravector_components(m));
        Multivector<Rational> x =
            Multivector<Rational>::paravector(m, rng.paravector_components(m));
        Multivector<Rational> w = paravector_inverse(omega);
        Multivector<Rational> pw = w;
        for (int p = 0; p <= 3; ++p) {
            // |(w x)^p w|^2 = |x|^{2p} / |Omega|^{2(p+1)}
            Rational expect(1);
            for (int i = 0; i < p; ++i) expect *= x.norm_sq();
            for (int i = 0; i < p + 1; ++i) expect /= omega.norm_sq();
            CHECK(pw.norm_sq() == expect);
            pw = (w * x) * pw;
        }
    }
}

TEST_CASE("truncated zeta is holomorphic Cliffordian (per bracket term)") {
    const int m = 1;
    CHECK(lhc_residual(RatFun<Rational>::inverse_variable(m), m).is_identically_zero());
    for (const LatticePoint& pt : lattice_enumerate(cubic_lattice(m), 1.0)) {
        // bracket = (x - Omega)^{-1} + sum_p (Omega^{-1} x)^p Omega^{-1}
        RatFun<Rational> term = RatFun<Rational>::shifted_inverse(m, pt.omega);
        Multivector<Rational> omega = Multivector<Rational>::paravector(m, pt.omega);
        Multivector<Rational> w = paravector_inverse(omega);
        MvPolynomial<Rational> t =
            MvPolynomial<Rational>::constant(w) * MvPolynomial<Rational>::paravector_variable(m);
        MvPolynomial<Rational> part = MvPolynomial<Rational>::constant(w);
        MvPolynomial<Rational> poly(m);
        for (int p = 0; p <= 2 * m + 1; ++p) {
            poly += part;
            part = t * part;
        }
        term += RatFun<Rational>::from_polynomial(poly);
        CHECK(lhc_residual(term, m).is_identically_zero());
    }
}

TEST_CASE("exact oddness of symmetric truncations") {
    const Lattice lat = cubic_lattice(1);
    Rng rng(646);
    for (int t = 0; t < 5; ++t) {
        std::vector<Rational> x = rng.paravector_components(1);
        for (Rational& q : x) q /= 8;
        Multivector<Rational> xmv = Multivector<Rational>::paravector(1, x);
        if (xmv.norm_sq() == 0) continue;
        std::vector<Rational> nx;
        for (const Rational& q : x) nx.push_back(-q);
        ZetaValue<Rational> zp = zeta_truncated<Rational>(x, lat, 3.0);
        ZetaValue<Rational> zn = zeta_truncated<Rational>(nx, lat, 3.0);
        CHECK((zp.value + zn.value).is_zero());
    }
}

TEST_CASE("convergence certificate: bound sums are monotone and Cauchy") {
    const std::vector<double> radii{3.0, 4.0, 5.0, 6.0};
    for (const Lattice& lat : {cubic_lattice(1), skewed_lattice()}) {
        const double xn = 0.5;
        std::vector<double> sums;
        for (double r : radii) {
            double s = 0.0;
            for (const LatticePoint& p : lattice_enumerate(lat, r)) {
                double on = 0.0;
                for (const Rational& v : p.omega) on += to_double(v) * to_double(v);
                on = std::sqrt(on);
                if (on > 2 * xn) s += zeta_term_bound(xn, on, 1);
            }
            sums.push_back(s);
        }
        double prev_gap = 1e300;
        for (std::size_t i = 1; i < sums.size(); ++i) {
            CHECK(sums[i] >= sums[i - 1]); // monotone partial bound sums
            const double gap = sums[i] - sums[i - 1];
            CHECK(gap <= prev_gap); // shrinking increments (Cauchy behavior)
            prev_gap = gap;
        }
    }
}

TEST_CASE("preconditions") {
    const Lattice lat = cubic_lattice(1);
    std::vector<double> x{1.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(zeta_truncated<double>(x, lat, 1.5), domain_error); // R < 2|x|
    std::vector<double> onlat{1.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(zeta_truncated<double>(onlat, lat, 4.0), singular_point);
    std::vector<double> zero(4, 0.0);
    CHECK_THROWS_AS(zeta_truncated<double>(zero, lat, 4.0), singular_point);
    CHECK_THROWS_AS(zeta_tail_estimate(lat, 1.0, 0.9), domain_error);
}

TEST_CASE("derivative matches finite differences of the truncation") {
    const Lattice lat = cubic_lattice(1);
    const std::vector<double> x{0.3, 0.15, -0.1, 0.2};
    const double R = 4.0;
    for (int axis : {0, 2}) {
        ZetaValue<double> d = zeta_partial_derivative(x, lat, R, axis, 1);
        const double h = 1e-5;
        std::vector<double> xp = x, xm = x;
        xp[axis] += h;
        xm[axis] -= h;
        Multivector<double> fd = (zeta_truncated<double>(xp, lat, R).value -
                                  zeta_truncated<double>(xm, lat, R).value) *
                                 (1.0 / (2 * h));
        CHECK((d.value - fd).norm() <= 1e-8 * std::max(1.0, d.value.norm()));
    }
    // order 2 via second differences of order 1
    ZetaValue<double> d2 = zeta_partial_derivative(x, lat, R, 0, 2);
    const double h = 1e-5;
    std::vector<double> xp = x, xm = x;
    xp[0] += h;
    xm[0] -= h;
    Multivector<double> fd2 = (zeta_partial_derivative(xp, lat, R, 0, 1).value -
                               zeta_partial_derivative(xm, lat, R, 0, 1).value) *
                              (1.0 / (2 * h));
    CHECK((d2.value - fd2).norm() <= 1e-6 * std::max(1.0, d2.value.norm()));
}

TEST_CASE("order 2m+2 kills the polynomial parts") {
    // at order 4 (m=1) the per-lattice term is 24 (x-Omega)^{-5}; check one term
    const int m = 1;
    std::vector<Rational> oc{Rational(2), Rational(0), Rational(0), Rational(0)};
    RatFun<Rational> inv = RatFun<Rational>::shifted_inverse(m, oc);
    RatFun<Rational> d4 = inv;
    for (int t = 0; t < 4; ++t) d4 = d4.partial(0);
    RatFun<Rational> p5 = inv;
    for (int t = 0; t < 4; ++t) p5 = p5 * inv;
    CHECK((d4 - Rational(24) * p5).is_identically_zero());
}

TEST_CASE("periodicity defect decays with the radius") {
    const Lattice lat = cubic_lattice(1);
    const std::vector<double> x{1.0 / 3, 0.2, 0.0, 1.0 / 7};
    PeriodicityResult p1 = periodicity_check(x, lat, 3.35, 1, 0, 4);
    PeriodicityResult p2 = periodicity_check(x, lat, 6.7, 1, 0, 4);
    CHECK(p2.defect < p1.defect);
    // order 2m+1 = 3 decays too, slower
    PeriodicityResult q1 = periodicity_check(x, lat, 3.35, 1, 0, 3);
    PeriodicityResult q2 = periodicity_check(x, lat, 6.7, 1, 0, 3);
    CHECK(q2.defect < q1.defect);
}

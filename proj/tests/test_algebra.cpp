#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliff/algebra.hpp"
#include "cliff/random.hpp"

using namespace cliff;

TEST_CASE("blade product signs") {
    // e1 e1 = -1
    auto r = blade_product(1, 1);
    CHECK(r.blade == 0);
    CHECK(r.sign == -1);
    // e1 e2 = e12, e2 e1 = -e12
    CHECK(blade_product(1, 2).blade == 3);
    CHECK(blade_product(1, 2).sign == 1);
    CHECK(blade_product(2, 1).blade == 3);
    CHECK(blade_product(2, 1).sign == -1);
    // e12 e12 = e1 e2 e1 e2 = -e1 e1 e2 e2 = -(-1)(-1) = -1
    CHECK(blade_product(3, 3).blade == 0);
    CHECK(blade_product(3, 3).sign == -1);
}

TEST_CASE("blade multiplication is associative (exhaustive, m <= 2)") {
    for (int m : {0, 1, 2}) {
        const int dim = algebra_dim(m);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                for (int c = 0; c < dim; ++c) {
                    auto ab = blade_product(a, b);
                    auto ab_c = blade_product(ab.blade, c);
                    auto bc = blade_product(b, c);
                    auto a_bc = blade_product(a, bc.blade);
                    CHECK(ab_c.blade == a_bc.blade);
                    CHECK(ab.sign * ab_c.sign == bc.sign * a_bc.sign);
                }
    }
}

TEST_CASE("blade names round trip") {
    for (int m : {0, 1, 2}) {
        for (BladeMask a = 0; a < static_cast<BladeMask>(algebra_dim(m)); ++a)
            CHECK(parse_blade(blade_name(a), m) == a);
    }
    CHECK_THROWS_AS(parse_blade("e21", 1), parse_error);
    CHECK_THROWS_AS(parse_blade("x3", 1), parse_error);
    CHECK_THROWS_AS(parse_blade("e4", 1), parse_error);
}

TEST_CASE("conjugation reverses products") {
    Rng rng(101);
    for (int t = 0; t < 40; ++t) {
        Multivector<Rational> a = rng.multivector(1);
        Multivector<Rational> b = rng.multivector(1);
        CHECK((a * b).conjugate_bar() == b.conjugate_bar() * a.conjugate_bar());
    }
}

TEST_CASE("paravector inverse") {
    Rng rng(7);
    for (int m : {0, 1, 2}) {
        for (int t = 0; t < 10; ++t) {
            auto comps = rng.nonzero_paravector_components(m);
            Multivector<Rational> x = Multivector<Rational>::paravector(m, comps);
            CHECK(x * paravector_inverse(x) == Multivector<Rational>::unit(m));
            CHECK(paravector_inverse(x) * x == Multivector<Rational>::unit(m));
        }
    }
    CHECK_THROWS_AS(paravector_inverse(Multivector<Rational>(1)), singular_point);
    Multivector<Rational> biv = Multivector<Rational>::blade(1, 3); // e12 is not a paravector
    CHECK_THROWS_AS(paravector_inverse(biv), domain_error);
}

TEST_CASE("multiplicative norm on paravector products") {
    Rng rng(5150);
    for (int t = 0; t < 200; ++t) {
        Multivector<Rational> x =
            Multivector<Rational>::paravector(1, rng.paravector_components(1));
        Multivector<Rational> a = rng.multivector(1);
        CHECK((x * a).norm_sq() == x.norm_sq() * a.norm_sq());
    }
}

TEST_CASE("dimension checks") {
    Multivector<Rational> a(0), b(1);
    CHECK_THROWS_AS(a + b, dimension_mismatch);
    CHECK_THROWS_AS(Multivector<Rational>::paravector(1, {Rational(1)}), dimension_mismatch);
    CHECK(algebra_dim(1) == 8);
    CHECK(num_axes(1) == 4);
}

TEST_CASE("paravector recognition and components") {
    std::vector<Rational> comps{Rational(1), Rational(2), Rational(-3), Rational(1, 2)};
    Multivector<Rational> x = Multivector<Rational>::paravector(1, comps);
    CHECK(x.is_paravector());
    CHECK(x.paravector_components() == comps);
    Multivector<Rational> y = x;
    y[3] = Rational(1); // add an e12 component
    CHECK(!y.is_paravector());
}

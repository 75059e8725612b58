#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cliff/random.hpp"
#include "cliff/solutions.hpp"

using namespace cliff;

namespace {

// Literal sum over all |alpha|! permutations; the production code sums
// distinct arrangements with multiplicity weights instead.
MvPolynomial<Rational> p_alpha_bruteforce(const MultiIndex& alpha, int m) {
    const int n = multi_index_order(alpha);
    std::vector<int> seq;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (int c = 0; c < alpha[i]; ++c) seq.push_back(static_cast<int>(i));
    std::sort(seq.begin(), seq.end());
    const MvPolynomial<Rational> x = MvPolynomial<Rational>::paravector_variable(m);
    MvPolynomial<Rational> sum(m);
    std::vector<int> perm(seq);
    // iterate over all n! index permutations, repeats included
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    do {
        MvPolynomial<Rational> prod = MvPolynomial<Rational>::scalar_constant(m, Rational(1));
        for (int v = 0; v + 1 < n; ++v)
            prod = prod * (Multivector<Rational>::basis_axis(m, seq[order[v]]) * x);
        prod = prod * Multivector<Rational>::basis_axis(m, seq[order[n - 1]]);
        sum += prod;
    } while (std::next_permutation(order.begin(), order.end()));
    Rational w(1, factorial(n));
    w.canonicalize();
    return sum * w;
}

} // namespace

TEST_CASE("arrangement counts match the multinomial coefficient") {
    Rng rng(404);
    for (int t = 0; t < 15; ++t) {
        MultiIndex a(4, 0);
        int total = 0;
        while (total < 1 || total > 6) {
            total = 0;
            for (int& v : a) total += (v = rng.uniform_int(0, 3));
        }
        CHECK(mpz_class(multiset_arrangements(a).size()) == multinomial_count(a));
    }
}

TEST_CASE("P_alpha examples (m=1)") {
    const int m = 1;
    CHECK(p_alpha({1, 0, 0, 0}, m) == MvPolynomial<Rational>::scalar_constant(m, Rational(1)));
    CHECK(p_alpha({2, 0, 0, 0}, m) == MvPolynomial<Rational>::paravector_variable(m));

    // alpha = (1,1,0,0): x_0 e_1 - x_1
    MvPolynomial<Rational> expect =
        MvPolynomial<Rational>::coordinate(m, 0) * Multivector<Rational>::basis_axis(m, 1) -
        MvPolynomial<Rational>::coordinate(m, 1);
    CHECK(p_alpha({1, 1, 0, 0}, m) == expect);

    // alpha = (0,2,0,0): -x_0 - x_1 e_1 + x_2 e_2 + x_3 e_3
    MvPolynomial<Rational> e2 = -MvPolynomial<Rational>::coordinate(m, 0) -
                                MvPolynomial<Rational>::coordinate(m, 1) *
                                    Multivector<Rational>::basis_axis(m, 1) +
                                MvPolynomial<Rational>::coordinate(m, 2) *
                                    Multivector<Rational>::basis_axis(m, 2) +
                                MvPolynomial<Rational>::coordinate(m, 3) *
                                    Multivector<Rational>::basis_axis(m, 3);
    CHECK(p_alpha({0, 2, 0, 0}, m) == e2);
}

TEST_CASE("weighted arrangements equal the full permutation sum (exhaustive |alpha| <= 4)") {
    const int m = 1;
    for (const MultiIndex& alpha : multi_indices_up_to(num_axes(m), 1, 4))
        CHECK(p_alpha(alpha, m) == p_alpha_bruteforce(alpha, m));
}

TEST_CASE("P_alpha degree and homogeneity") {
    for (int m : {0, 1})
        for (const MultiIndex& alpha : multi_indices_up_to(num_axes(m), 1, 5)) {
            MvPolynomial<Rational> p = p_alpha(alpha, m);
            CHECK(p.degree() == multi_index_order(alpha) - 1);
            CHECK(p.is_homogeneous());
        }
}

TEST_CASE("P_alpha are holomorphic Cliffordian") {
    for (int m : {0, 1})
        for (const MultiIndex& alpha : multi_indices_up_to(num_axes(m), 1, 4))
            CHECK(lhc_residual(p_alpha(alpha, m), m).is_zero());
}

TEST_CASE("S_beta examples and holomorphy") {
    const int m = 1;
    RatFun<Rational> xinv = RatFun<Rational>::inverse_variable(m);
    CHECK((s_beta({1, 0, 0, 0}, m) - xinv).is_identically_zero());
    // |beta| = 1 leaves the single element unused: every unit choice gives x^{-1}
    CHECK((s_beta({0, 1, 0, 0}, m) - xinv).is_identically_zero());
    CHECK((s_beta({0, 2, 0, 0}, m) + xinv.partial(1)).is_identically_zero());

    for (int mm : {0, 1})
        for (const MultiIndex& beta : multi_indices_up_to(num_axes(mm), 1, 3))
            CHECK(lhc_residual(s_beta(beta, mm), mm).is_identically_zero());
}

TEST_CASE("S_beta agrees with the derivative oracle") {
    const int m = 1;
    for (const MultiIndex& beta : multi_indices_up_to(num_axes(m), 2, 3))
        CHECK((s_beta(beta, m) - s_beta_derivative_oracle(beta, m)).is_identically_zero());
}

TEST_CASE("right-linearity of the residual") {
    Rng rng(777);
    const int m = 1;
    for (int t = 0; t < 10; ++t) {
        MvPolynomial<Rational> f = rng.polynomial(m, 3);
        Multivector<Rational> c = rng.multivector(m);
        CHECK(lhc_residual(f * c, m) == lhc_residual(f, m) * c);
    }
}

TEST_CASE("solution space comparison") {
    SUBCASE("m=0, d=1: classical holomorphy") {
        SpaceCompareReport r = solution_space_compare(1, 0);
        CHECK(r.spans_equal);
        // kernel of D on degree <= 1 C-valued polys: spanned by 1, i, z, iz
        CHECK(r.kernel_dim == 4);
        CHECK(r.span_rank == 4);
    }
    SUBCASE("m=1, d=2: third-order operator annihilates everything") {
        SpaceCompareReport r = solution_space_compare(2, 1);
        CHECK(r.kernel_dim == 120);
        CHECK(r.spans_equal);
    }
    SUBCASE("resource guard") {
        CHECK_THROWS_AS(solution_space_compare(9, 1, 1000L), resource_limit);
    }
}

#ifndef CLIFF_RANDOM_HPP
#define CLIFF_RANDOM_HPP

#include <random>

#include "cliff/ratfun.hpp"

namespace cliff {

// Deterministic source for property tests; everything randomized takes an
// explicit seed so runs are reproducible bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform small rational p/q with |p| <= num_max, 1 <= q <= den_max.
    Rational rational(int num_max = 9, int den_max = 5) {
        std::uniform_int_distribution<int> num(-num_max, num_max);
        std::uniform_int_distribution<int> den(1, den_max);
        Rational q(num(eng_), den(eng_));
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational(int num_max = 9, int den_max = 5) {
        for (;;) {
            Rational q = rational(num_max, den_max);
            if (!(q == 0)) return q;
        }
    }

    int uniform_int(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng_);
    }

    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(eng_);
    }

    std::vector<Rational> paravector_components(int m) {
        std::vector<Rational> v(num_axes(m));
        for (Rational& q : v) q = rational();
        return v;
    }

    std::vector<Rational> nonzero_paravector_components(int m) {
        for (;;) {
            std::vector<Rational> v = paravector_components(m);
            for (const Rational& q : v)
                if (!(q == 0)) return v;
        }
    }

    Multivector<Rational> multivector(int m) {
        Multivector<Rational> a(m);
        for (int b = 0; b < a.dim(); ++b) a[static_cast<BladeMask>(b)] = rational();
        return a;
    }

    // Dense-ish random polynomial of total degree <= d.
    MvPolynomial<Rational> polynomial(int m, int d, int terms = 6) {
        MvPolynomial<Rational> p(m);
        for (int t = 0; t < terms; ++t) {
            Exponents e(num_axes(m), 0);
            int budget = uniform_int(0, d);
            for (int u = 0; u < budget; ++u) e[uniform_int(0, num_axes(m) - 1)] += 1;
            p.add_term(e, multivector(m));
        }
        return p;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace cliff

#endif

#ifndef CLIFF_RATIONAL_HPP
#define CLIFF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <type_traits>

#include "cliff/errors.hpp"

namespace cliff {

// Exact scalar ring used for all identity verification; doubles are used
// only for quadrature and lattice sums.
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

inline mpz_class factorial(int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
inline double to_double(double x) { return x; }

template <class S>
inline constexpr bool is_exact_scalar_v = std::is_same_v<S, Rational>;

inline std::string rational_to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        // fall through to float parsing
    }
    // Accept plain decimal literals; the double -> mpq conversion is exact.
    try {
        std::size_t pos = 0;
        double d = std::stod(s, &pos);
        if (pos != s.size()) throw parse_error("bad rational: " + s);
        return Rational(d);
    } catch (const std::exception&) {
        throw parse_error("bad rational: " + s);
    }
}

template <class S>
S scalar_from_rational(const Rational& q) {
    if constexpr (is_exact_scalar_v<S>) {
        return q;
    } else {
        return q.get_d();
    }
}

} // namespace cliff

#endif

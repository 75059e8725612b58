#ifndef CLIFF_POLYNOMIAL_HPP
#define CLIFF_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "cliff/algebra.hpp"

namespace cliff {

// Exponent vector over the 2m+2 real variables x_0..x_{2m+1}.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Polynomial in x_0..x_{2m+1} with Multivector coefficients. Coefficients
// sit to the left of the (commuting) monomials; multiplication of two
// polynomials multiplies coefficients in order.
template <class S>
class MvPolynomial {
public:
    using scalar_type = S;
    using TermMap = std::map<Exponents, Multivector<S>>;

    MvPolynomial() : m_(0) {}
    explicit MvPolynomial(int m) : m_(m) {}

    static MvPolynomial constant(const Multivector<S>& c) {
        MvPolynomial p(c.algebra_m());
        p.add_term(Exponents(num_axes(c.algebra_m()), 0), c);
        return p;
    }
    static MvPolynomial scalar_constant(int m, const S& v) {
        return constant(Multivector<S>::scalar(m, v));
    }
    // The coordinate x_i as a scalar-valued polynomial.
    static MvPolynomial coordinate(int m, int axis) {
        MvPolynomial p(m);
        Exponents e(num_axes(m), 0);
        e.at(axis) = 1;
        p.add_term(e, Multivector<S>::unit(m));
        return p;
    }
    // x = sum_i x_i e_i as a paravector-valued polynomial.
    static MvPolynomial paravector_variable(int m) {
        MvPolynomial p(m);
        for (int i = 0; i < num_axes(m); ++i) {
            Exponents e(num_axes(m), 0);
            e[i] = 1;
            p.add_term(e, Multivector<S>::basis_axis(m, i));
        }
        return p;
    }

    int algebra_m() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    void add_term(const Exponents& e, const Multivector<S>& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Multivector<S> coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Multivector<S>(m_) : it->second;
    }

    MvPolynomial& operator+=(const MvPolynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MvPolynomial& operator-=(const MvPolynomial& o) {
        check_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MvPolynomial operator+(MvPolynomial a, const MvPolynomial& b) { return a += b; }
    friend MvPolynomial operator-(MvPolynomial a, const MvPolynomial& b) { return a -= b; }
    friend MvPolynomial operator-(const MvPolynomial& a) {
        MvPolynomial r(a.m_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MvPolynomial operator*(const MvPolynomial& a, const MvPolynomial& b) {
        a.check_same(b);
        MvPolynomial r(a.m_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend MvPolynomial operator*(const Multivector<S>& c, const MvPolynomial& p) {
        MvPolynomial r(p.m_);
        for (const auto& [e, pc] : p.terms_) r.add_term(e, c * pc);
        return r;
    }
    friend MvPolynomial operator*(const MvPolynomial& p, const Multivector<S>& c) {
        MvPolynomial r(p.m_);
        for (const auto& [e, pc] : p.terms_) r.add_term(e, pc * c);
        return r;
    }
    friend MvPolynomial operator*(MvPolynomial p, const S& s) {
        for (auto& [e, c] : p.terms_) c *= s;
        return p;
    }
    friend MvPolynomial operator*(const S& s, const MvPolynomial& p) { return p * s; }

    friend bool operator==(const MvPolynomial& a, const MvPolynomial& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    MvPolynomial partial(int axis) const {
        if (axis < 0 || axis >= num_axes(m_)) throw domain_error("axis out of range");
        MvPolynomial r(m_);
        for (const auto& [e, c] : terms_) {
            if (e[axis] == 0) continue;
            Exponents d(e);
            d[axis] -= 1;
            r.add_term(d, c * S(e[axis]));
        }
        return r;
    }

    template <class P>
    Multivector<P> eval(const std::vector<P>& point) const {
        Multivector<P> acc(m_);
        for (const auto& [e, c] : terms_) {
            P mono(1);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) mono *= point[i];
            if constexpr (std::is_same_v<P, S>) {
                acc += c * mono;
            } else {
                acc += to_float(c) * mono;
            }
        }
        return acc;
    }

    // Substitute x_i -> x_i + a_i (exact shift of center).
    MvPolynomial shifted(const std::vector<S>& a) const {
        MvPolynomial one = scalar_constant(m_, S(1));
        MvPolynomial r(m_);
        for (const auto& [e, c] : terms_) {
            MvPolynomial mono = constant(c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                MvPolynomial xi = coordinate(m_, static_cast<int>(i)) +
                                  scalar_constant(m_, a[i]);
                for (int k = 0; k < e[i]; ++k) mono = mono * xi;
            }
            r += mono;
        }
        return r;
    }

    // Component of given total degree.
    MvPolynomial homogeneous_part(int d) const {
        MvPolynomial r(m_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) r.add_term(e, c);
        return r;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            if (d < 0) d = total_degree(e);
            else if (total_degree(e) != d) return false;
        }
        return true;
    }

private:
    void check_same(const MvPolynomial& o) const {
        if (m_ != o.m_) throw dimension_mismatch("polynomials from different algebras");
    }

    int m_;
    TermMap terms_;
};

// |x - c|^2 as a scalar polynomial.
template <class S>
MvPolynomial<S> norm_sq_poly(int m, const std::vector<S>& center) {
    MvPolynomial<S> r(m);
    for (int i = 0; i < num_axes(m); ++i) {
        MvPolynomial<S> d = MvPolynomial<S>::coordinate(m, i) -
                            MvPolynomial<S>::scalar_constant(m, center[i]);
        r += d * d;
    }
    return r;
}

template <class S>
MvPolynomial<S> poly_pow(const MvPolynomial<S>& p, int k) {
    MvPolynomial<S> r = MvPolynomial<S>::scalar_constant(p.algebra_m(), S(1));
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

inline MvPolynomial<double> to_float(const MvPolynomial<Rational>& p) {
    MvPolynomial<double> r(p.algebra_m());
    for (const auto& [e, c] : p.terms()) r.add_term(e, to_float(c));
    return r;
}

} // namespace cliff

#endif

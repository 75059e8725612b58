#ifndef CLIFF_ALGEBRA_HPP
#define CLIFF_ALGEBRA_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliff/errors.hpp"
#include "cliff/rational.hpp"

namespace cliff {

// Basis blades of R_{0,2m+1} are encoded as bitmasks over the generators
// e_1..e_{2m+1}: bit i-1 set <=> e_i present. Mask 0 is the scalar unit.
using BladeMask = std::uint32_t;

inline int algebra_dim(int m) { return 1 << (2 * m + 1); }
inline int num_axes(int m) { return 2 * m + 2; }

// Axis i of a paravector corresponds to the blade e_i (e_0 = 1).
inline BladeMask axis_blade(int axis) {
    return axis == 0 ? 0u : (BladeMask{1} << (axis - 1));
}

struct SignedBlade {
    int sign; // +1 or -1
    BladeMask blade;
};

// e_a e_b with e_i^2 = -1 and e_i e_j = -e_j e_i. The result blade is
// a XOR b; the sign counts the transpositions needed to sort the product
// plus one factor -1 per repeated generator.
inline SignedBlade blade_product(BladeMask a, BladeMask b) {
    int sign = 1;
    BladeMask acc = a;
    BladeMask rest = b;
    while (rest != 0) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        const BladeMask bit = BladeMask{1} << j;
        if (std::popcount(acc >> (j + 1)) & 1) sign = -sign; // move past higher generators
        if (acc & bit) sign = -sign;                         // e_j e_j = -1
        acc ^= bit;
    }
    return {sign, acc};
}

// Clifford conjugation on a blade of grade g is (-1)^{g(g+1)/2}.
inline int conjugation_sign(BladeMask a) {
    const int g = std::popcount(a);
    return (g * (g + 1) / 2) % 2 == 0 ? 1 : -1;
}

inline std::string blade_name(BladeMask a) {
    if (a == 0) return "1";
    std::string s = "e";
    for (int i = 0; a != 0; ++i, a >>= 1)
        if (a & 1) s += std::to_string(i + 1);
    return s;
}

inline BladeMask parse_blade(const std::string& name, int m) {
    if (name == "1") return 0;
    if (name.empty() || name[0] != 'e') throw parse_error("bad blade name: " + name);
    BladeMask mask = 0;
    int prev = 0;
    for (std::size_t p = 1; p < name.size(); ++p) {
        if (name[p] < '1' || name[p] > '9') throw parse_error("bad blade name: " + name);
        const int i = name[p] - '0';
        if (i <= prev || i > 2 * m + 1) throw parse_error("bad blade name: " + name);
        mask |= BladeMask{1} << (i - 1);
        prev = i;
    }
    return mask;
}

// Dense multivector over scalar ring S (Rational for exact work, double
// for quadrature and lattice sums).
template <class S>
class Multivector {
public:
    Multivector() : m_(0), c_(2, S(0)) {}
    explicit Multivector(int m) : m_(m), c_(algebra_dim(m), S(0)) {}

    static Multivector scalar(int m, const S& v) {
        Multivector r(m);
        r.c_[0] = v;
        return r;
    }
    static Multivector unit(int m) { return scalar(m, S(1)); }
    static Multivector blade(int m, BladeMask a, const S& v = S(1)) {
        Multivector r(m);
        r.c_[a] = v;
        return r;
    }
    static Multivector basis_axis(int m, int axis) { return blade(m, axis_blade(axis)); }

    static Multivector paravector(int m, const std::vector<S>& comps) {
        if (static_cast<int>(comps.size()) != num_axes(m))
            throw dimension_mismatch("paravector needs 2m+2 components");
        Multivector r(m);
        for (int i = 0; i < num_axes(m); ++i) r.c_[axis_blade(i)] = comps[i];
        return r;
    }

    int algebra_m() const { return m_; }
    int dim() const { return static_cast<int>(c_.size()); }
    const S& operator[](BladeMask a) const { return c_[a]; }
    S& operator[](BladeMask a) { return c_[a]; }
    const std::vector<S>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const S& v : c_)
            if (!(v == S(0))) return false;
        return true;
    }

    bool is_paravector() const {
        for (BladeMask a = 0; a < static_cast<BladeMask>(dim()); ++a)
            if (std::popcount(a) >= 2 && !(c_[a] == S(0))) return false;
        return true;
    }

    std::vector<S> paravector_components() const {
        std::vector<S> r(num_axes(m_));
        for (int i = 0; i < num_axes(m_); ++i) r[i] = c_[axis_blade(i)];
        return r;
    }

    Multivector& operator+=(const Multivector& o) {
        check_same(o);
        for (int a = 0; a < dim(); ++a) c_[a] += o.c_[a];
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        check_same(o);
        for (int a = 0; a < dim(); ++a) c_[a] -= o.c_[a];
        return *this;
    }
    Multivector& operator*=(const S& s) {
        for (S& v : c_) v *= s;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator-(const Multivector& a) {
        Multivector r(a.m_);
        for (int i = 0; i < a.dim(); ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
    friend Multivector operator*(const S& s, Multivector a) { return a *= s; }

    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        a.check_same(b);
        Multivector r(a.m_);
        for (int i = 0; i < a.dim(); ++i) {
            if (a.c_[i] == S(0)) continue;
            for (int j = 0; j < b.dim(); ++j) {
                if (b.c_[j] == S(0)) continue;
                const auto [sign, blade] =
                    blade_product(static_cast<BladeMask>(i), static_cast<BladeMask>(j));
                S term = a.c_[i] * b.c_[j];
                if (sign < 0)
                    r.c_[blade] -= term;
                else
                    r.c_[blade] += term;
            }
        }
        return r;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.m_ == b.m_ && a.c_ == b.c_;
    }

    // Clifford conjugation: bar(e_i) = -e_i for i >= 1, bar(ab) = bar(b)bar(a).
    Multivector conjugate_bar() const {
        Multivector r(m_);
        for (int a = 0; a < dim(); ++a) {
            if (conjugation_sign(static_cast<BladeMask>(a)) < 0)
                r.c_[a] = -c_[a];
            else
                r.c_[a] = c_[a];
        }
        return r;
    }

    S norm_sq() const {
        S s(0);
        for (const S& v : c_) s += v * v;
        return s;
    }
    double norm() const { return std::sqrt(to_double(norm_sq())); }

private:
    void check_same(const Multivector& o) const {
        if (m_ != o.m_) throw dimension_mismatch("multivectors from different algebras");
    }

    int m_;
    std::vector<S> c_;
};

// Inverse of a nonzero paravector: bar(x)/|x|^2. Exact in rational mode.
template <class S>
Multivector<S> paravector_inverse(const Multivector<S>& x) {
    if (!x.is_paravector()) throw domain_error("inverse defined for paravectors only");
    S n = x.norm_sq();
    if (n == S(0)) throw singular_point("inverse of zero paravector");
    Multivector<S> r = x.conjugate_bar();
    r *= S(1) / n;
    return r;
}

template <class S>
Multivector<S> mv_pow(const Multivector<S>& a, int p) {
    Multivector<S> r = Multivector<S>::unit(a.algebra_m());
    for (int i = 0; i < p; ++i) r = r * a;
    return r;
}

template <class S2, class S>
Multivector<S2> convert_multivector(const Multivector<S>& a) {
    Multivector<S2> r(a.algebra_m());
    for (int i = 0; i < a.dim(); ++i)
        r[static_cast<BladeMask>(i)] = static_cast<S2>(to_double(a[static_cast<BladeMask>(i)]));
    return r;
}

inline Multivector<double> to_float(const Multivector<Rational>& a) {
    Multivector<double> r(a.algebra_m());
    for (int i = 0; i < a.dim(); ++i) r[static_cast<BladeMask>(i)] = a[static_cast<BladeMask>(i)].get_d();
    return r;
}

} // namespace cliff

#endif

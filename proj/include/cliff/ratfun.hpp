#ifndef CLIFF_RATFUN_HPP
#define CLIFF_RATFUN_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "cliff/polynomial.hpp"

namespace cliff {

// One summand P(x) / |x - c|^{2k}.
template <class S>
struct RatTerm {
    MvPolynomial<S> num;
    std::vector<S> center;
    int k = 0;
};

// Finite sum of terms P_t(x)/|x - c_t|^{2 k_t}; closed under partial
// differentiation and defined off the finite set of centers.
template <class S>
class RatFun {
public:
    using scalar_type = S;

    RatFun() : m_(0) {}
    explicit RatFun(int m) : m_(m) {}

    static RatFun from_polynomial(const MvPolynomial<S>& p) {
        RatFun f(p.algebra_m());
        if (!p.is_zero())
            f.terms_.push_back({p, std::vector<S>(num_axes(p.algebra_m()), S(0)), 0});
        return f;
    }

    // bar(x - c) / |x - c|^2, the inverse of the shifted paravector variable.
    static RatFun shifted_inverse(int m, const std::vector<S>& center) {
        MvPolynomial<S> num(m);
        for (int i = 0; i < num_axes(m); ++i) {
            MvPolynomial<S> d = MvPolynomial<S>::coordinate(m, i) -
                                MvPolynomial<S>::scalar_constant(m, center[i]);
            Multivector<S> bar_ei = Multivector<S>::basis_axis(m, i).conjugate_bar();
            num += d * bar_ei;
        }
        RatFun f(m);
        f.terms_.push_back({num, center, 1});
        return f;
    }
    static RatFun inverse_variable(int m) {
        return shifted_inverse(m, std::vector<S>(num_axes(m), S(0)));
    }

    int algebra_m() const { return m_; }
    const std::vector<RatTerm<S>>& term_list() const { return terms_; }

    void add_raw_term(RatTerm<S> t) {
        if (t.num.is_zero()) return;
        for (RatTerm<S>& u : terms_) {
            if (u.k == t.k && u.center == t.center) {
                u.num += t.num;
                return;
            }
        }
        terms_.push_back(std::move(t));
    }

    void prune() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const RatTerm<S>& t) { return t.num.is_zero(); }),
                     terms_.end());
    }

    RatFun& operator+=(const RatFun& o) {
        check_same(o);
        for (const RatTerm<S>& t : o.terms_) add_raw_term(t);
        prune();
        return *this;
    }
    RatFun& operator-=(const RatFun& o) {
        check_same(o);
        for (const RatTerm<S>& t : o.terms_) add_raw_term({-t.num, t.center, t.k});
        prune();
        return *this;
    }
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator-(const RatFun& a) {
        RatFun r(a.m_);
        for (const RatTerm<S>& t : a.terms_) r.terms_.push_back({-t.num, t.center, t.k});
        return r;
    }

    friend RatFun operator*(const Multivector<S>& c, const RatFun& f) {
        RatFun r(f.m_);
        for (const RatTerm<S>& t : f.terms_) r.add_raw_term({c * t.num, t.center, t.k});
        r.prune();
        return r;
    }
    friend RatFun operator*(const RatFun& f, const Multivector<S>& c) {
        RatFun r(f.m_);
        for (const RatTerm<S>& t : f.terms_) r.add_raw_term({t.num * c, t.center, t.k});
        r.prune();
        return r;
    }
    friend RatFun operator*(RatFun f, const S& s) {
        for (RatTerm<S>& t : f.terms_) t.num = t.num * s;
        return f;
    }
    friend RatFun operator*(const S& s, const RatFun& f) { return f * s; }

    friend RatFun operator*(const RatFun& f, const MvPolynomial<S>& p) {
        RatFun r(f.m_);
        for (const RatTerm<S>& t : f.terms_) r.add_raw_term({t.num * p, t.center, t.k});
        r.prune();
        return r;
    }
    friend RatFun operator*(const MvPolynomial<S>& p, const RatFun& f) {
        RatFun r(f.m_);
        for (const RatTerm<S>& t : f.terms_) r.add_raw_term({p * t.num, t.center, t.k});
        r.prune();
        return r;
    }

    // Product of two sums; each pair of factors must share a pole center
    // (terms with k = 0 combine with anything).
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        a.check_same(b);
        RatFun r(a.m_);
        for (const RatTerm<S>& ta : a.terms_)
            for (const RatTerm<S>& tb : b.terms_) {
                if (ta.k > 0 && tb.k > 0 && ta.center != tb.center)
                    throw domain_error("product of rational terms with distinct centers");
                const std::vector<S>& c = ta.k > 0 ? ta.center : tb.center;
                r.add_raw_term({ta.num * tb.num, c, ta.k + tb.k});
            }
        r.prune();
        return r;
    }

    // Quotient rule: d/dx_i (P/|x-c|^{2k}) =
    //   (dP/dx_i)/|x-c|^{2k} - 2k (x_i - c_i) P / |x-c|^{2(k+1)}.
    RatFun partial(int axis) const {
        if (axis < 0 || axis >= num_axes(m_)) throw domain_error("axis out of range");
        RatFun r(m_);
        for (const RatTerm<S>& t : terms_) {
            r.add_raw_term({t.num.partial(axis), t.center, t.k});
            if (t.k > 0) {
                MvPolynomial<S> d = MvPolynomial<S>::coordinate(m_, axis) -
                                    MvPolynomial<S>::scalar_constant(m_, t.center[axis]);
                r.add_raw_term({d * t.num * S(-2 * t.k), t.center, t.k + 1});
            }
        }
        r.prune();
        return r;
    }

    template <class P>
    Multivector<P> eval(const std::vector<P>& point) const {
        Multivector<P> acc(m_);
        for (const RatTerm<S>& t : terms_) {
            P nsq(0);
            for (int i = 0; i < num_axes(m_); ++i) {
                P d = point[i] - scalar_from_point<P>(t.center[i]);
                nsq += d * d;
            }
            if (t.k > 0 && nsq == P(0)) throw singular_point("evaluation at a pole center");
            P denom(1);
            for (int j = 0; j < t.k; ++j) denom *= nsq;
            Multivector<P> numv = t.num.template eval<P>(point);
            numv *= P(1) / denom;
            acc += numv;
        }
        return acc;
    }

    // Exact zero test: bring every term over the common denominator
    //   prod_c |x - c|^{2 K_c}   (K_c = max k over center c)
    // and test the combined numerator polynomial for identical zero.
    bool is_identically_zero() const {
        static_assert(is_exact_scalar_v<S>, "zero test requires exact scalars");
        if (terms_.empty()) return true;
        std::vector<std::pair<std::vector<S>, int>> centers; // (center, max k)
        for (const RatTerm<S>& t : terms_) {
            if (t.k == 0) continue;
            bool found = false;
            for (auto& [c, K] : centers)
                if (c == t.center) {
                    K = std::max(K, t.k);
                    found = true;
                }
            if (!found) centers.push_back({t.center, t.k});
        }
        MvPolynomial<S> numerator(m_);
        for (const RatTerm<S>& t : terms_) {
            MvPolynomial<S> factor = t.num;
            for (const auto& [c, K] : centers) {
                int power = (t.k > 0 && c == t.center) ? K - t.k : K;
                if (power > 0) factor = factor * poly_pow(norm_sq_poly(m_, c), power);
            }
            numerator += factor;
        }
        return numerator.is_zero();
    }

    // Largest k per center actually stored (diagnostic).
    int max_pole_order() const {
        int k = 0;
        for (const RatTerm<S>& t : terms_) k = std::max(k, t.k);
        return k;
    }

private:
    template <class P>
    static P scalar_from_point(const S& v) {
        if constexpr (std::is_same_v<P, S>) return v;
        else return static_cast<P>(to_double(v));
    }

    void check_same(const RatFun& o) const {
        if (m_ != o.m_) throw dimension_mismatch("rational functions from different algebras");
    }

    int m_;
    std::vector<RatTerm<S>> terms_;
};

inline RatFun<double> to_float(const RatFun<Rational>& f) {
    RatFun<double> r(f.algebra_m());
    for (const RatTerm<Rational>& t : f.term_list()) {
        std::vector<double> c;
        for (const Rational& v : t.center) c.push_back(v.get_d());
        r.add_raw_term({to_float(t.num), c, t.k});
    }
    return r;
}

} // namespace cliff

#endif

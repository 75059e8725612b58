#ifndef CLIFF_IO_HPP
#define CLIFF_IO_HPP

#include <string>

#include <json.hpp>

#include "cliff/ratfun.hpp"

namespace cliff {

// Document layout is versioned; bump when a serialized field changes shape.
inline constexpr int schema_version = 1;

// ordered_json keeps insertion order, so a given value always prints the
// same bytes.
using Json = nlohmann::ordered_json;

inline Json scalar_to_json(const Rational& q) { return rational_to_string(q); }
inline Json scalar_to_json(double v) { return v; }

template <class S>
S scalar_from_json(const Json& j) {
    if constexpr (is_exact_scalar_v<S>) {
        if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long>()));
        if (j.is_number()) return Rational(j.get<double>());
        return parse_rational(j.get<std::string>());
    } else {
        if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
        return j.get<double>();
    }
}

template <class S>
Json multivector_to_json(const Multivector<S>& a) {
    Json coeffs = Json::array();
    for (int b = 0; b < a.dim(); ++b) {
        const S& v = a[static_cast<BladeMask>(b)];
        if (v == S(0)) continue;
        coeffs.push_back({{"blade", blade_name(static_cast<BladeMask>(b))},
                          {"value", scalar_to_json(v)}});
    }
    return {{"m", a.algebra_m()}, {"coeffs", coeffs}};
}

template <class S>
Multivector<S> multivector_from_json(const Json& j) {
    if (!j.contains("m") || !j.contains("coeffs")) throw parse_error("multivector: missing field");
    const int m = j.at("m").get<int>();
    if (m < 0 || m > 2) throw parse_error("multivector: m out of range");
    Multivector<S> a(m);
    for (const Json& c : j.at("coeffs")) {
        BladeMask b = parse_blade(c.at("blade").get<std::string>(), m);
        a[b] += scalar_from_json<S>(c.at("value"));
    }
    return a;
}

template <class S>
Json polynomial_to_json(const MvPolynomial<S>& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exponents", e}, {"coeff", multivector_to_json(c)}});
    return {{"m", p.algebra_m()}, {"terms", terms}};
}

template <class S>
MvPolynomial<S> polynomial_from_json(const Json& j) {
    if (!j.contains("m") || !j.contains("terms")) throw parse_error("polynomial: missing field");
    const int m = j.at("m").get<int>();
    MvPolynomial<S> p(m);
    for (const Json& t : j.at("terms")) {
        Exponents e = t.at("exponents").get<Exponents>();
        if (static_cast<int>(e.size()) != num_axes(m))
            throw parse_error("polynomial: exponent vector needs 2m+2 entries");
        for (int v : e)
            if (v < 0) throw parse_error("polynomial: negative exponent");
        p.add_term(e, multivector_from_json<S>(t.at("coeff")));
    }
    return p;
}

template <class S>
Json ratfun_to_json(const RatFun<S>& f) {
    Json terms = Json::array();
    for (const RatTerm<S>& t : f.term_list()) {
        Json center = Json::array();
        for (const S& v : t.center) center.push_back(scalar_to_json(v));
        terms.push_back(
            {{"num", polynomial_to_json(t.num)}, {"center", center}, {"k", t.k}});
    }
    return {{"m", f.algebra_m()}, {"terms", terms}};
}

template <class S>
RatFun<S> ratfun_from_json(const Json& j) {
    if (!j.contains("m") || !j.contains("terms")) throw parse_error("ratfun: missing field");
    const int m = j.at("m").get<int>();
    RatFun<S> f(m);
    for (const Json& t : j.at("terms")) {
        RatTerm<S> term;
        term.num = polynomial_from_json<S>(t.at("num"));
        for (const Json& v : t.at("center")) term.center.push_back(scalar_from_json<S>(v));
        if (static_cast<int>(term.center.size()) != num_axes(m))
            throw parse_error("ratfun: center needs 2m+2 entries");
        term.k = t.at("k").get<int>();
        if (term.k < 0) throw parse_error("ratfun: negative pole order");
        f.add_raw_term(std::move(term));
    }
    return f;
}

// A serialized function is either a polynomial (no "terms[].k") or a
// rational function; verify/taylor-fit accept both.
template <class S>
bool json_is_ratfun(const Json& j) {
    if (!j.contains("terms")) return false;
    for (const Json& t : j.at("terms"))
        if (t.contains("k")) return true;
    return false;
}

} // namespace cliff

#endif

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conedual {

// Exact arbitrary-precision rational scalar. Always stored in lowest terms
// with positive denominator (GMP canonicalizes on construction).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

inline Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVector add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVector sub(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVector scaled(const RatVector& a, const Rational& lambda) {
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = lambda * a[i];
    return r;
}

inline RatVector negated(const RatVector& a) { return scaled(a, Rational(-1)); }

inline RatVector zero_vector(int dim) { return RatVector(static_cast<std::size_t>(dim), Rational(0)); }

inline bool is_zero(const RatVector& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

/// Lexicographic comparison; the total order used for all canonical sorting.
inline bool lex_less(const RatVector& a, const RatVector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

/// Scale a vector by a positive factor so that all entries are coprime
/// integers. Direction is preserved (no sign flip); the zero vector is
/// left untouched.
inline void make_primitive(RatVector& v) {
    Integer lcm_den = 1;
    for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    Integer gcd_num = 0;
    for (auto& x : v) {
        x *= lcm_den;
        gcd_num = boost::multiprecision::gcd(gcd_num, numerator(x));
    }
    if (gcd_num > 1)
        for (auto& x : v) x /= gcd_num;
}

inline RatVector primitive(RatVector v) {
    make_primitive(v);
    return v;
}

/// Serializes as "p" for integers and "p/q" otherwise; exact round-trip.
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("parse_rational: nonpositive denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("parse_rational: bad literal '") + s + "'");
    }
}

}  // namespace conedual

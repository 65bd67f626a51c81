/**
 * Exact scalar types (arbitrary-precision integers and rationals) and the
 * small vector helpers everything else is built on.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace troplink {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Vectors in the lattice N ≅ Z^r and its rational span.
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

inline bool is_zero(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const RatVector& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

/** gcd of all entries, as a nonnegative integer (0 for the zero vector). */
inline Int entries_gcd(const IntVector& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

/**
 * The primitive form of a nonzero integer vector: v divided by the positive
 * gcd of its entries. Signs are unchanged, so the first nonzero entry keeps
 * its sign.
 */
inline IntVector primitive(const IntVector& v) {
    Int g = entries_gcd(v);
    if (g == 0) throw std::invalid_argument("zero vector has no primitive form");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

inline bool is_primitive(const IntVector& v) {
    return !is_zero(v) && entries_gcd(v) == 1;
}

inline Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IntVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline IntVector negate(const IntVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

inline RatVector to_rat(const IntVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

/** Clears denominators: the primitive integer vector spanning the same ray. */
inline IntVector to_primitive_int(const RatVector& v) {
    Int l = 1;
    for (const Rat& x : v) l = boost::multiprecision::lcm(l, denominator(x));
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = numerator(v[i]) * (l / denominator(v[i]));
    return primitive(out);
}

inline bool lex_less(const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

/** True iff a = c*b for some positive rational c (same ray direction). */
inline bool proportional_same_direction(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
    return primitive(a) == primitive(b);
}

/** True iff a = c*b for a nonzero rational c (same line). */
inline bool proportional(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
    IntVector pa = primitive(a), pb = primitive(b);
    return pa == pb || pa == negate(pb);
}

inline std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

}  // namespace troplink

#ifndef COCONE_RATIONAL_HPP
#define COCONE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "cocone/errors.hpp"

namespace cocone {

// Exact arithmetic scalars. Every quantity the toolkit computes is one of
// these; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Integer vector in the geometry layer (entries may grow large through
// exact elimination).
using IVec = std::vector<Int>;

// Lattice vector in the semigroup layer (exponents, Hilbert basis steps,
// cone facet data: all small by construction).
using LVec = std::vector<std::int64_t>;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

// Accepts "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

// Decimal rendering with `digits` fractional digits, truncated toward zero.
std::string to_decimal(const Rational& q, int digits);

std::int64_t checked_int64(const Int& v);

Int factorial(int n);
Int binomial(int n, int k);

inline LVec narrow_vec(const IVec& v) {
    LVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = checked_int64(v[i]);
    return out;
}

inline IVec widen_vec(const LVec& v) {
    IVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

} // namespace cocone

#endif

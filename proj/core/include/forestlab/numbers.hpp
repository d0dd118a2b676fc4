#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace forestlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// ~332 bits of mantissa; enough for every certified comparison we do.
using Real = boost::multiprecision::cpp_bin_float_100;

// Renders p/q without reducing, e.g. "16/38". Callers pass the raw
// numerator/denominator pair they want reported.
inline std::string fraction_string(const BigInt& num, const BigInt& den) {
    return num.str() + "/" + den.str();
}

inline std::string rational_string(const Rational& r) {
    return fraction_string(numerator(r), denominator(r));
}

// A two-sided rational enclosure of a real value.
struct RationalInterval {
    Rational lo;
    Rational hi;
};

// Certified enclosure of e^{-x} for rational x >= 0. The bin_float value is
// exact-converted to a rational and padded by a relative margin far wider
// than the evaluation error of the 100-digit exp.
RationalInterval exp_neg_enclosure(const Rational& x);

// True iff p is certainly greater than e^{-x}; throws if the enclosure
// cannot decide (never happens at the widths we use).
bool certified_greater_than_exp_neg(const Rational& p, const Rational& x);

}  // namespace forestlab

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::string to_string(const Rational& x) { return x.str(); }

/// Parses "p", "p/q" or a plain decimal like "1.25" into an exact rational.
Rational parse_rational(const std::string& s);

using IntVec = std::vector<std::int64_t>;

/// Divides out the gcd and flips signs so the first nonzero entry is positive.
/// The zero vector is returned unchanged.
IntVec primitive(const IntVec& v);

std::int64_t dot(const IntVec& a, const IntVec& b);

bool is_zero(const IntVec& v);

}  // namespace qk

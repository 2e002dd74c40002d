#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "a3/errors.hpp"

namespace a3 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline int sgn(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// Floored division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// cpp_rational rejects negative denominators; normalize first.
inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw ParseError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

// Exact rational as "p/q" (or "p" for integers), never decimal.
inline std::string rat_to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::exception&) {
    throw ParseError("cannot parse rational '" + s + "'");
  }
}

}  // namespace a3

#include "a3/slope.hpp"

#include <boost/multiprecision/integer.hpp>

namespace a3 {

Slope reduce(const Int& num, const Int& den) { return Slope(num, den); }

Slope::Slope(Int n, Int d) {
  if (n == 0 && d == 0) throw ZeroSlopePair();
  if (d == 0) {
    num = 1;
    den = 0;
    return;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int g = boost::multiprecision::gcd(abs_int(n), d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = std::move(n);
  den = std::move(d);
}

bool is_farey_neighbor(const Slope& a, const Slope& b) {
  if (a == b) throw EqualSlopes();
  return abs_int(a.num * b.den - a.den * b.num) == 1;
}

RawFraction ominus(const RawFraction& a, const RawFraction& b) {
  if (a.den < 0 || b.den < 0) throw NegativeDenominatorInput();
  return RawFraction(a.num - b.num, a.den - b.den);
}

Int bullet(const RawFraction& a, const RawFraction& b) {
  return a.num * b.den - a.den * b.num;
}

Slope mobius_apply(const Mat2& m, const Slope& s) {
  Int det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det != 1 && det != -1) throw NonUnimodularMatrix();
  return Slope(m[0][0] * s.num + m[0][1] * s.den, m[1][0] * s.num + m[1][1] * s.den);
}

ContFrac neg_cont_frac(const Slope& s) {
  if (s.is_infinite()) throw SlopeOutOfRange("continued fraction requires a finite slope");
  if (s.num > -s.den) throw SlopeOutOfRange("continued fraction requires slope <= -1");
  ContFrac cf;
  Int p = s.num, q = s.den;
  while (true) {
    if (q == 1) {
      cf.entries.push_back(p);
      break;
    }
    Int a = floor_div(p, q);
    cf.entries.push_back(a);
    // remainder r = p/q - a in (0,1); recurse on -1/r = -q/(p - a q)
    Int rn = p - a * q;
    p = -q;
    q = rn;
  }
  return cf;
}

Slope eval_cont_frac(const ContFrac& cf) {
  if (cf.entries.empty()) throw SlopeOutOfRange("empty continued fraction");
  Rat v(cf.entries.back());
  for (auto it = cf.entries.rbegin() + 1; it != cf.entries.rend(); ++it)
    v = Rat(*it) - 1 / v;
  return Slope(boost::multiprecision::numerator(v), boost::multiprecision::denominator(v));
}

Int ceil_term(const Int& t) {
  if (t == 0) throw ZeroInput();
  return ceil_div(Int(-1), t);
}

std::string slope_to_string(const Slope& s) {
  if (s.is_infinite()) return "inf";
  return s.num.str() + "/" + s.den.str();
}

Slope parse_slope(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return Slope(1, 0);
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Slope(Int(text), 1);
    return Slope(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("cannot parse slope '" + text + "'");
  }
}

}  // namespace a3

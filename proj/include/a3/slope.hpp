#pragma once

#include <array>
#include <string>
#include <vector>

#include "a3/ints.hpp"

namespace a3 {

// A point of the Farey circle Q u {inf}: p/q in lowest terms with q >= 0,
// infinity canonically 1/0. Never both zero.
struct Slope {
  Int num;
  Int den;

  Slope() : num(0), den(1) {}
  Slope(Int n, Int d);  // canonicalizes, throws ZeroSlopePair

  bool is_infinite() const { return den == 0; }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
};

// Deliberately unreduced, sign-unnormalized fraction. The bullet pairing is
// not invariant under reduction, so differences of slopes must stay raw.
struct RawFraction {
  Int num;
  Int den;

  RawFraction() : num(0), den(1) {}
  RawFraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) {}
  RawFraction(const Slope& s) : num(s.num), den(s.den) {}

  friend bool operator==(const RawFraction& a, const RawFraction& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// Negative continued fraction a0 - 1/(a1 - 1/(...)); entries <= -2 except for
// the single boundary value -1 = [-1].
struct ContFrac {
  std::vector<Int> entries;
};

Slope reduce(const Int& num, const Int& den);

bool is_farey_neighbor(const Slope& a, const Slope& b);

RawFraction ominus(const RawFraction& a, const RawFraction& b);

Int bullet(const RawFraction& a, const RawFraction& b);

using Mat2 = std::array<std::array<Int, 2>, 2>;

Slope mobius_apply(const Mat2& m, const Slope& s);

ContFrac neg_cont_frac(const Slope& s);

Slope eval_cont_frac(const ContFrac& cf);

// ceil(-1/t): 0 for t >= 1, 1 for t <= -1.
Int ceil_term(const Int& t);

std::string slope_to_string(const Slope& s);
Slope parse_slope(const std::string& text);

}  // namespace a3

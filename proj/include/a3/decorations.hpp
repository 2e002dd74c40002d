#pragma once

#include <string>
#include <vector>

#include "a3/ints.hpp"

namespace a3 {

enum class Twisting { zero_twisting, non_twisting };

// Sign data of a factorized tight structure on the pair-of-pants times S^1:
// the outer basic slice's sign plus one sign per basic slice of each leg,
// listed from the innermost boundary outward. A leg with parameter 0 is
// absent (empty list).
struct Decoration {
  int sigma0 = +1;  // +1 / -1
  std::vector<signed char> leg1;
  std::vector<signed char> leg2;
  Twisting twisting = Twisting::zero_twisting;

  friend bool operator==(const Decoration& a, const Decoration& b) {
    return a.sigma0 == b.sigma0 && a.leg1 == b.leg1 && a.leg2 == b.leg2 &&
           a.twisting == b.twisting;
  }
};

// Piecewise branch of the counting formulas, with the evaluated count.
struct CountCase {
  long long t0 = 0, t1 = 0, t2 = 0;
  std::string branch;
  Int formula_value;
};

// Opaque index label of a structure without 0-twisting vertical circles.
struct NonTwistingLabel {
  int i = 0, j = 0, k = 0;
};

// Basic-slice count of the leg path -1/t -> inf (0 when the leg is absent).
int leg_slice_count(long long t);

// Block sizes of that path, innermost block first.
std::vector<int> leg_block_sizes(long long t);

// t0 + ceil(-1/t1) + ceil(-1/t2); both legs must be present.
long long twisting_sum(long long t0, long long t1, long long t2);

CountCase count_strongly_exceptional(long long t0, long long t1, long long t2);

std::vector<Decoration> enumerate_zero_twisting(long long t0, long long t1, long long t2);

Decoration canonicalize_decoration(const Decoration& d, long long t0, long long t1,
                                   long long t2);

bool is_discarded(const Decoration& d, long long t0, long long t1, long long t2);

std::vector<NonTwistingLabel> enumerate_non_twisting(long long t0, long long t1,
                                                     long long t2);

// Number of non-twisting structures, 0 outside the guard region.
Int non_twisting_count(long long t0, long long t1, long long t2);

Decoration global_flip(const Decoration& d);

// Bracket string, e.g. "(+)((-)(+))(-)" or "(+)(--)(--)".
std::string decoration_to_string(const Decoration& d, long long t1, long long t2);

bool decoration_valid(const Decoration& d, long long t1, long long t2);

}  // namespace a3

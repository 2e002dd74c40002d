#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a3/decorations.hpp"
#include "a3/ints.hpp"

namespace a3 {

struct RotationTriple {
  Int r0, r1, r2;

  friend bool operator==(const RotationTriple& a, const RotationTriple& b) {
    return a.r0 == b.r0 && a.r1 == b.r1 && a.r2 == b.r2;
  }
  friend bool operator<(const RotationTriple& a, const RotationTriple& b) {
    if (a.r0 != b.r0) return a.r0 < b.r0;
    if (a.r1 != b.r1) return a.r1 < b.r1;
    return a.r2 < b.r2;
  }
};

enum class Ambient { tight, overtwisted };

struct TableEntry {
  RotationTriple r;
  Rat d3;
  Ambient ambient = Ambient::overtwisted;
  std::string provenance;                 // branch id + pattern index
  std::optional<std::string> decoration;  // bracket string where transcribed
};

// Full multiset of (rotation triple, d3, ambient) for one parameter triple,
// from the transcribed branch tables (legs exchanged when needed).
std::vector<TableEntry> rotation_table(long long t0, long long t1, long long t2);

// Relative Euler class evaluation by the literal fraction-calculus sums of
// the worked sign patterns:
//   t1,t2 <= -1, (+) with all-minus legs        -> (1-t0, t1-1, t2-1)
//   t1,t2 >= 1,  (+) with all-minus legs        -> (-t0-3, -t1-1, -t2-1)
//   t1 = 0, t2 >= 1, (+) with all-minus leg 2   -> (-(t0+1), -1, -(t2+1))
// and their global flips. Anything else is UnsupportedDecoration: the
// per-slice sign rule for mixed legs is not pinned down.
RotationTriple euler_path_sum(const Decoration& d, long long t0, long long t1,
                              long long t2);

}  // namespace a3

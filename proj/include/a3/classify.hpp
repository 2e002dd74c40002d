#pragma once

#include <string>
#include <vector>

#include "a3/euler.hpp"
#include "a3/ints.hpp"

namespace a3 {

// One classified link: tb triple, rotation triple, ambient d3, tightness,
// and where the entry comes from (decoration string or family id).
struct LegendrianClass {
  long long t0 = 0, t1 = 0, t2 = 0;
  RotationTriple r;
  Rat d3;
  Ambient ambient = Ambient::overtwisted;
  std::string provenance;

  friend bool operator==(const LegendrianClass& a, const LegendrianClass& b) {
    return a.t0 == b.t0 && a.t1 == b.t1 && a.t2 == b.t2 && a.r == b.r && a.d3 == b.d3 &&
           a.ambient == b.ambient && a.provenance == b.provenance;
  }
};

// Deterministic join of the counting formulas and the transcribed tables;
// throws ConsistencyFailure when they disagree (never adjusts).
std::vector<LegendrianClass> classify(long long t0, long long t1, long long t2);

bool can_destabilize_K0(long long t0, long long t1, long long t2);

struct GridBounds {
  long long t0_min = -5, t0_max = 8;
  long long t1_min = -5, t1_max = 6;
  long long t2_min = -5, t2_max = 6;
};

enum class Execution { serial, parallel };

struct VerifyFailure {
  long long t0, t1, t2;
  std::string message;
};

struct VerifyReport {
  long long triples_checked = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Per-triple checks over the grid: table size vs count formula, (r, d3)
// uniqueness, rotation parity, d3 range and tight branch, negation
// symmetry, the decoration/non-twisting split, and the surgery-diagram
// cross-check on the t1 = t2 = 2 family.
VerifyReport verify_counts(const GridBounds& bounds, Execution how = Execution::parallel);

// Stabilization graph of one component over a parameter range.
struct MountainNode {
  long long tb;
  Int rot;
  Rat d3;
};

struct MountainEdge {
  std::size_t parent;  // node indices within the family
  std::size_t child;   // tb drops by 1, rot moves by +-1
  bool inferred;
};

struct MountainFamily {
  Int fixed_a, fixed_b;  // (r1, r2) for the K0 axis, (r0, r1) for the K2 axis
  Rat d3;
  std::vector<MountainNode> nodes;
  std::vector<MountainEdge> edges;
};

enum class MountainAxis { k0, k2 };

// K0 axis: fixed (t1, t2), t0 ranging. K2 axis (only for t1 = 0): fixed t0,
// t2 ranging.
std::vector<MountainFamily> mountain_range(long long fixed1, long long fixed2,
                                           long long lo, long long hi,
                                           MountainAxis axis = MountainAxis::k0);

std::string mountain_to_dot(const std::vector<MountainFamily>& families,
                            MountainAxis axis);

// Structured text: one JSON record per line; parses back exactly.
std::string classes_to_structured(const std::vector<LegendrianClass>& classes);
std::vector<LegendrianClass> parse_structured_classes(const std::string& text);

std::string classes_to_table(const std::vector<LegendrianClass>& classes);

}  // namespace a3

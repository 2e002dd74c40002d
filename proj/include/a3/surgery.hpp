#pragma once

#include <string>
#include <vector>

#include "a3/ints.hpp"

namespace a3 {

using IMatrix = std::vector<std::vector<Int>>;

// Legendrian surgery knot: classical invariants before surgery plus the
// contact surgery coefficient (+1 or -1). tb must not vanish.
struct SurgeryKnot {
  Int tb;
  Int rot;
  int coeff = -1;
};

// A component carried along through the surgery, with its linking numbers
// against each surgery knot (self-linking convention lk(L,L) = 0).
struct TrackedComponent {
  std::string name;
  Int tb;
  Int rot;
  std::vector<Int> lk;
};

struct SurgeryDiagram {
  std::vector<SurgeryKnot> knots;
  IMatrix linking;  // symmetric; diagonal entries are ignored
  std::vector<TrackedComponent> components;

  std::size_t size() const { return knots.size(); }
};

// Throws on shape errors, non-symmetric linking, zero tb, bad coefficients.
void validate(const SurgeryDiagram& d);

// Topological linking matrix: diagonal tb_i + coeff_i, off-diagonal linking.
IMatrix linking_matrix(const SurgeryDiagram& d);

// Fraction-free (Bareiss) determinant of an integer matrix.
Int det_exact(const IMatrix& m);

// Signature of a symmetric matrix by exact congruence diagonalization,
// nonzero diagonal pivots first, hyperbolic 2x2 blocks for zero diagonals.
int signature_exact(const IMatrix& m);

// Exact solution of m x = v; throws SingularMatrix.
std::vector<Rat> solve_exact(const IMatrix& m, const std::vector<Int>& v);

Rat c_squared(const SurgeryDiagram& d);

// d3 = (c^2 - 3 sigma - 2 chi)/4 + q with chi = 1 + #knots and q = #(+1).
Rat d3(const SurgeryDiagram& d);

Rat tb_after(const SurgeryDiagram& d, const TrackedComponent& component);

Rat rot_after(const SurgeryDiagram& d, const TrackedComponent& component);

// The one-parameter diagram family presenting Legendrian A3 links with
// t1 = t2 = 2: t0-1 surgery knots, three of them +1 push-offs, the rest
// -1 unknots in a chain. Tracked components K0, K1, K2.
SurgeryDiagram build_a3_surgery_family(long long t0);

// Structured-text (JSON) diagram file format.
SurgeryDiagram parse_diagram(const std::string& json_text);
std::string diagram_to_json(const SurgeryDiagram& d);

}  // namespace a3

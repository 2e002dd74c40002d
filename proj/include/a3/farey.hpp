#pragma once

#include <cstddef>
#include <vector>

#include "a3/slope.hpp"

namespace a3 {

// Cyclic order of the Farey circle. "Clockwise" is the slope-increasing
// direction with a single wrap through infinity:
//   inf -> negatives (increasing) -> 0 -> positives (increasing) -> inf.
enum class ArcDirection { clockwise, counterclockwise };

enum class BypassSide { front, back };

// Closed boundary arc traversed from `from` to `to` in `direction`.
struct Arc {
  Slope from;
  Slope to;
  ArcDirection direction;
};

// Neighbor-to-neighbor path; consecutive nodes are Farey neighbors and no
// node repeats.
struct FareyPath {
  std::vector<Slope> nodes;

  std::size_t edge_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

// Maximal run of path edges whose basic slices form one continued fraction
// block. Edge i joins nodes[i] and nodes[i+1].
struct EdgeBlock {
  std::size_t first_edge;
  std::size_t last_edge;  // inclusive

  std::size_t size() const { return last_edge - first_edge + 1; }
  friend bool operator==(const EdgeBlock& a, const EdgeBlock& b) {
    return a.first_edge == b.first_edge && a.last_edge == b.last_edge;
  }
};

// -1 / 0 / +1: position of a vs b in the linear cut of the clockwise order
// starting just past infinity (negatives, 0, positives, inf).
int circle_compare(const Slope& a, const Slope& b);

// Strictly between a and b along the open clockwise arc a -> b.
bool clockwise_between(const Slope& a, const Slope& x, const Slope& b);

bool arc_contains(const Arc& arc, const Slope& x);

// Attaching a bypass along a ruling of slope r to a convex torus of slope s
// moves the dividing slope to the point nearest r on the arc [r, s] (front =
// counterclockwise, back = clockwise) that has a Farey edge to s.
Slope bypass_attach(const Slope& s, const Slope& r, BypassSide side);

// Fan path from a to b along the clockwise (slope-increasing) arc: each step
// goes to the neighbor of the current slope that is closest to b on that arc.
// This is the basic-slice factorization path; for -1/t -> inf it has length
// 1 (t = 1), 2 (t >= 2) and |t| (t <= -1).
FareyPath shortest_farey_path(const Slope& a, const Slope& b);

// Partition of the path's edges into maximal continued fraction blocks.
// Edges (a,b),(b,c) lie in one block iff |a.num*c.den - a.den*c.num| = 2.
std::vector<EdgeBlock> block_decompose(const FareyPath& p);

}  // namespace a3

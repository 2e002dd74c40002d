#include "a3/farey.hpp"

#include <boost/integer/extended_euclidean.hpp>

namespace a3 {

namespace {

// Linear rank classes for the cut just past infinity.
int rank_class(const Slope& s) {
  if (s.is_infinite()) return 3;
  int sg = sgn(s.num);
  if (sg < 0) return 0;
  if (sg == 0) return 1;
  return 2;
}

Mat2 inverse_unimodular(const Mat2& m) {
  Int det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  // det is +-1 by construction at call sites
  Mat2 inv{{{m[1][1] * det, -m[0][1] * det}, {-m[1][0] * det, m[0][0] * det}}};
  return inv;
}

// Unimodular map (det +1) sending s to infinity.
Mat2 send_to_infinity(const Slope& s) {
  if (s.is_infinite()) return Mat2{{{1, 0}, {0, 1}}};
  if (s.num == 0) return Mat2{{{0, 1}, {-1, 0}}};
  auto res = boost::integer::extended_euclidean(s.num < 0 ? Int(-s.num) : s.num, s.den);
  Int x = s.num < 0 ? Int(-res.x) : res.x;
  Int y = res.y;
  // x*num + y*den = gcd = 1
  return Mat2{{{x, y}, {-s.den, s.num}}};
}

}  // namespace

int circle_compare(const Slope& a, const Slope& b) {
  int ca = rank_class(a), cb = rank_class(b);
  if (ca != cb) return ca < cb ? -1 : 1;
  if (ca == 1 || ca == 3) return 0;
  Int lhs = a.num * b.den, rhs = b.num * a.den;
  if (lhs == rhs) return 0;
  return lhs < rhs ? -1 : 1;
}

bool clockwise_between(const Slope& a, const Slope& x, const Slope& b) {
  int ab = circle_compare(a, b);
  if (ab == 0) return false;
  if (ab < 0) return circle_compare(a, x) < 0 && circle_compare(x, b) < 0;
  return circle_compare(a, x) < 0 || circle_compare(x, b) < 0;
}

bool arc_contains(const Arc& arc, const Slope& x) {
  if (x == arc.from || x == arc.to) return true;
  if (arc.direction == ArcDirection::clockwise)
    return clockwise_between(arc.from, x, arc.to);
  return clockwise_between(arc.to, x, arc.from);
}

Slope bypass_attach(const Slope& s, const Slope& r, BypassSide side) {
  if (r == s) throw EqualSlopes();
  Mat2 m = send_to_infinity(s);
  Slope rr = mobius_apply(m, r);  // finite since r != s
  // Neighbors of infinity are the integers. Walking the clockwise
  // (increasing) arc from rr the first one is ceil(rr); counterclockwise,
  // floor(rr). Determinant +1 maps preserve the cyclic order, so the side
  // labels carry over unchanged.
  Int n = side == BypassSide::back ? ceil_div(rr.num, rr.den) : floor_div(rr.num, rr.den);
  return mobius_apply(inverse_unimodular(m), Slope(n, 1));
}

FareyPath shortest_farey_path(const Slope& a, const Slope& b) {
  if (a == b) throw EqualSlopes();
  FareyPath path;
  path.nodes.push_back(a);
  Slope v = a;
  while (v != b) {
    // Neighbor of v nearest to b on the clockwise arc from v to b. That arc
    // read from b is the counterclockwise arc [b, v], so this is a front
    // bypass of v along b.
    v = bypass_attach(v, b, BypassSide::front);
    path.nodes.push_back(v);
  }
  return path;
}

std::vector<EdgeBlock> block_decompose(const FareyPath& p) {
  std::vector<EdgeBlock> blocks;
  const std::size_t edges = p.edge_count();
  if (edges == 0) return blocks;
  EdgeBlock current{0, 0};
  for (std::size_t e = 1; e < edges; ++e) {
    const Slope& a = p.nodes[e - 1];
    const Slope& c = p.nodes[e + 1];
    if (abs_int(a.num * c.den - a.den * c.num) == 2) {
      current.last_edge = e;
    } else {
      blocks.push_back(current);
      current = EdgeBlock{e, e};
    }
  }
  blocks.push_back(current);
  return blocks;
}

}  // namespace a3

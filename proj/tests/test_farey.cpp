#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "a3/farey.hpp"

using namespace a3;

namespace {

Slope S(long long n, long long d) { return Slope(Int(n), Int(d)); }

// Independent ordering oracle through the angle parametrization: finite
// slopes at atan(v), infinity at pi/2. Safe in double for tiny denominators.
double angle(const Slope& s) {
  if (s.is_infinite()) return std::atan2(1.0, 0.0);
  return std::atan(s.num.convert_to<double>() / s.den.convert_to<double>());
}

bool oracle_cw_between(const Slope& a, const Slope& x, const Slope& b) {
  double ta = angle(a), tx = angle(x), tb = angle(b);
  auto ahead = [](double from, double to) {  // cw distance, increasing angle
    double d = to - from;
    const double pi = 3.14159265358979323846;
    while (d <= 0) d += 2 * pi;
    while (d > 2 * pi) d -= 2 * pi;
    return d;
  };
  return ahead(ta, tx) < ahead(ta, tb);
}

// Brute-force bypass oracle: all neighbors of s with denominator <= N, on
// the arc, ordered by distance from r along the arc.
std::optional<Slope> oracle_bypass(const Slope& s, const Slope& r, BypassSide side,
                                   long long max_den) {
  Arc arc{r, s, side == BypassSide::back ? ArcDirection::clockwise
                                         : ArcDirection::counterclockwise};
  std::optional<Slope> best;
  auto consider = [&](const Slope& x) {
    if (x == s || !arc_contains(arc, x)) return;
    if (!best) {
      best = x;
      return;
    }
    // x beats best iff x lies on the sub-arc from r to best
    Arc to_best{r, *best, arc.direction};
    if (arc_contains(to_best, x)) best = x;
  };
  for (long long b = 0; b <= max_den; ++b) {
    // numerators a with |s.num * b - s.den * a| = 1
    for (int eps : {+1, -1}) {
      Int rhs = s.num * b - eps;
      if (s.den == 0) {
        if (rhs == 0) continue;  // handled by b loop only when den != 0
      }
      if (s.den != 0) {
        if (rhs % s.den != 0) continue;
        Int a = rhs / s.den;
        if (b == 0 && a == 0) continue;
        consider(Slope(a, Int(b)));
      }
    }
    if (s.den == 0 && b == 1) {
      // neighbors of infinity are the integers
      for (long long a = -200; a <= 200; ++a) consider(S(a, 1));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("arc membership against the angle oracle") {
  std::vector<Slope> pts;
  for (int q = 1; q <= 3; ++q)
    for (int p = -6; p <= 6; ++p)
      if (boost::multiprecision::gcd(Int(p < 0 ? -p : p), Int(q)) == 1) pts.push_back(S(p, q));
  pts.push_back(S(1, 0));
  for (const auto& a : pts)
    for (const auto& b : pts) {
      if (a == b) continue;
      for (const auto& x : pts) {
        if (x == a || x == b) continue;
        CHECK(arc_contains(Arc{a, b, ArcDirection::clockwise}, x) ==
              oracle_cw_between(a, x, b));
      }
    }
}

TEST_CASE("arc examples") {
  Arc cw{S(1, 0), S(-1, 3), ArcDirection::clockwise};
  CHECK(arc_contains(cw, S(-1, 2)));
  CHECK_FALSE(arc_contains(cw, S(0, 1)));
  CHECK(arc_contains(cw, S(1, 0)));  // closed at both ends
  CHECK(arc_contains(cw, S(-1, 3)));
}

TEST_CASE("bypass examples") {
  CHECK(bypass_attach(S(-1, 3), S(1, 0), BypassSide::back) == S(-1, 2));
  CHECK(bypass_attach(S(-1, 3), S(1, 0), BypassSide::front) == S(0, 1));
  // the closed arc starts at r, so a ruling slope adjacent to s is returned
  // as is
  CHECK(bypass_attach(S(0, 1), S(1, 0), BypassSide::back) == S(1, 0));
  CHECK(bypass_attach(S(1, 2), S(1, 5), BypassSide::back) == S(1, 3));
  CHECK_THROWS_AS(bypass_attach(S(1, 2), S(1, 2), BypassSide::back), EqualSlopes);
}

TEST_CASE("bypass result is a neighbor on the stated arc") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-12, 12), den(0, 12);
  for (int k = 0; k < 400; ++k) {
    Slope s, r;
    try {
      s = S(num(rng), den(rng));
      r = S(num(rng), den(rng));
    } catch (const ZeroSlopePair&) {
      continue;
    }
    if (s == r) continue;
    for (BypassSide side : {BypassSide::front, BypassSide::back}) {
      Slope out = bypass_attach(s, r, side);
      if (out != r) CHECK(is_farey_neighbor(out, s));
      Arc arc{r, s, side == BypassSide::back ? ArcDirection::clockwise
                                             : ArcDirection::counterclockwise};
      CHECK(arc_contains(arc, out));
    }
  }
}

TEST_CASE("bypass equals the brute-force arc search") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-25, 25), den(0, 25);
  int checked = 0;
  for (int k = 0; k < 600 && checked < 250; ++k) {
    Slope s, r;
    try {
      s = S(num(rng), den(rng));
      r = S(num(rng), den(rng));
    } catch (const ZeroSlopePair&) {
      continue;
    }
    if (s == r) continue;
    for (BypassSide side : {BypassSide::front, BypassSide::back}) {
      auto expect = oracle_bypass(s, r, side, 2 * 25);
      REQUIRE(expect.has_value());
      CHECK(bypass_attach(s, r, side) == *expect);
      ++checked;
    }
  }
  CHECK(checked >= 250);
}

TEST_CASE("slice paths") {
  auto path = [](long long t) { return shortest_farey_path(Slope(-1, t), S(1, 0)); };
  CHECK(path(3).nodes == std::vector<Slope>{S(-1, 3), S(0, 1), S(1, 0)});
  CHECK(path(2).nodes == std::vector<Slope>{S(-1, 2), S(0, 1), S(1, 0)});
  CHECK(shortest_farey_path(S(5, 1), S(1, 0)).nodes ==
        std::vector<Slope>{S(5, 1), S(1, 0)});
  CHECK_THROWS_AS(shortest_farey_path(S(1, 2), S(1, 2)), EqualSlopes);

  for (long long t = 1; t <= 9; ++t) CHECK(path(t).edge_count() == (t == 1 ? 1u : 2u));
  for (long long t = -9; t <= -1; ++t)
    CHECK(path(t).edge_count() == static_cast<std::size_t>(-t));
}

TEST_CASE("path nodes are consecutive neighbors without repeats") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> num(-15, 15), den(0, 15);
  for (int k = 0; k < 200; ++k) {
    Slope a, b;
    try {
      a = S(num(rng), den(rng));
      b = S(num(rng), den(rng));
    } catch (const ZeroSlopePair&) {
      continue;
    }
    if (a == b) continue;
    FareyPath p = shortest_farey_path(a, b);
    REQUIRE(p.nodes.front() == a);
    REQUIRE(p.nodes.back() == b);
    for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) {
      CHECK(is_farey_neighbor(p.nodes[i], p.nodes[i + 1]));
      for (std::size_t j = i + 1; j < p.nodes.size(); ++j)
        CHECK(p.nodes[i] != p.nodes[j]);
    }
  }
}

TEST_CASE("block decomposition of the leg paths") {
  auto blocks = [](long long t) {
    return block_decompose(shortest_farey_path(Slope(-1, t), S(1, 0)));
  };
  CHECK(blocks(2) == std::vector<EdgeBlock>{{0, 1}});
  CHECK(blocks(3) == std::vector<EdgeBlock>{{0, 0}, {1, 1}});
  for (long long t = -8; t <= -1; ++t) {
    auto bl = blocks(t);
    REQUIRE(bl.size() == 1);
    CHECK(bl[0].size() == static_cast<std::size_t>(-t));
  }

  // per-leg structure counts: product over blocks of (size + 1)
  auto structures = [&](long long t) {
    std::size_t n = 1;
    for (const auto& b : blocks(t)) n *= b.size() + 1;
    return n;
  };
  CHECK(structures(1) == 2);
  CHECK(structures(2) == 3);
  for (long long t = 3; t <= 8; ++t) CHECK(structures(t) == 4);
  for (long long t = -8; t <= -1; ++t)
    CHECK(structures(t) == static_cast<std::size_t>(1 - t));
}

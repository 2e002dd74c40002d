#include "a3/euler.hpp"

#include <algorithm>

#include "a3/errors.hpp"
#include "a3/rotation_data.hpp"
#include "a3/slope.hpp"

namespace a3 {

namespace {

void expand_pattern(const BranchTable& table, std::size_t pattern_index, long long t0,
                    long long t1, long long t2, bool swap_legs,
                    std::vector<TableEntry>& out) {
  const TablePattern& pat = table.patterns[pattern_index];

  bool has_sign = false;
  for (const auto& c : pat.r)
    has_sign |= c.kind == CompKind::signed_pos || c.kind == CompKind::signed_neg ||
                c.kind == CompKind::signed_range || c.kind == CompKind::anti_range;

  // range components enumerate lo, lo+2, ..., hi
  auto range_values = [&](const Component& c) {
    std::vector<Int> vals;
    if (c.kind == CompKind::range || c.kind == CompKind::signed_range ||
        c.kind == CompKind::anti_range) {
      Int lo = c.a.eval(t0, t1, t2), hi = c.b.eval(t0, t1, t2);
      for (Int v = lo; v <= hi; v += 2) vals.push_back(v);
      if (vals.empty())
        throw ConsistencyFailure("empty range in table '" + table.id + "'");
    } else {
      vals.push_back(c.a.eval(t0, t1, t2));
    }
    return vals;
  };

  const auto v0 = range_values(pat.r[0]);
  const auto v1 = range_values(pat.r[1]);
  const auto v2 = range_values(pat.r[2]);

  auto apply = [&](const Component& c, const Int& v, int eps) -> Int {
    switch (c.kind) {
      case CompKind::signed_pos:
      case CompKind::signed_range:
        return eps * v;
      case CompKind::signed_neg:
      case CompKind::anti_range:
        return -eps * v;
      default:
        return v;
    }
  };

  for (int eps : has_sign ? std::vector<int>{+1, -1} : std::vector<int>{+1})
    for (const Int& a : v0)
      for (const Int& b : v1)
        for (const Int& c : v2) {
          TableEntry e;
          e.r = RotationTriple{apply(pat.r[0], a, eps), apply(pat.r[1], b, eps),
                               apply(pat.r[2], c, eps)};
          if (swap_legs) std::swap(e.r.r1, e.r.r2);
          e.d3 = pat.d3;
          e.ambient = table.tight ? Ambient::tight : Ambient::overtwisted;
          e.provenance = table.id + "#" + std::to_string(pattern_index);
          if (swap_legs) e.provenance += "~swap";
          // Decoration strings are written in the table's own leg order;
          // they do not transfer to leg-exchanged queries.
          if (pat.decoration && !swap_legs) {
            std::string deco = *pat.decoration;
            if (eps < 0)
              for (auto& ch : deco)
                ch = ch == '+' ? '-' : (ch == '-' ? '+' : ch);
            e.decoration = deco;
          }
          out.push_back(std::move(e));
        }
}

const BranchTable* find_table(long long t0, long long t1, long long t2) {
  const BranchTable* found = nullptr;
  for (const auto& t : rotation_tables()) {
    if (!t.matches(t0, t1, t2)) continue;
    if (found)
      throw ConsistencyFailure("tables '" + found->id + "' and '" + t.id +
                               "' both match (" + std::to_string(t0) + "," +
                               std::to_string(t1) + "," + std::to_string(t2) + ")");
    found = &t;
  }
  return found;
}

}  // namespace

std::vector<TableEntry> rotation_table(long long t0, long long t1, long long t2) {
  bool swap_legs = false;
  const BranchTable* table = find_table(t0, t1, t2);
  if (!table) {
    table = find_table(t0, t2, t1);
    swap_legs = true;
  }
  if (!table)
    throw ConsistencyFailure("no table branch covers (" + std::to_string(t0) + "," +
                             std::to_string(t1) + "," + std::to_string(t2) + ")");
  std::vector<TableEntry> out;
  for (std::size_t k = 0; k < table->patterns.size(); ++k)
    expand_pattern(*table, k, t0, swap_legs ? t2 : t1, swap_legs ? t1 : t2, swap_legs, out);
  return out;
}

namespace {

Int term(const RawFraction& x, const RawFraction& y, const RawFraction& pair) {
  return bullet(ominus(x, y), pair);
}

RawFraction rf(long long n, long long d) { return RawFraction(Int(n), Int(d)); }

// (+)(-...-)(-...-) with t1,t2 <= -1. Leg slopes reversed for r0; outer
// slope reversed for r1, r2.
RotationTriple sum_neg_neg(long long t0, long long t1, long long t2) {
  const RawFraction zero_one = rf(0, 1), inf = rf(1, 0);
  Int r0 = 0;
  for (long long t : {t1, t2})
    for (long long j = -t; j >= 1; --j) r0 -= term(rf(-1, j), rf(-1, j - 1), zero_one);
  r0 += term(RawFraction(Int(1), Int(0)), RawFraction(Int(t0), Int(1)), zero_one);

  auto leg_rot = [&](long long t) {
    Int r = term(RawFraction(Int(-t0), Int(1)), rf(-1, 0), inf);
    for (long long j = 0; j <= -t - 1; ++j) r -= term(rf(1, j), rf(1, j + 1), inf);
    return r;
  };
  return RotationTriple{r0, leg_rot(t1), leg_rot(t2)};
}

// (+)(-...-)(-...-) with t1,t2 >= 1.
RotationTriple sum_pos_pos(long long t0, long long t1, long long t2) {
  const RawFraction zero_one = rf(0, 1), inf = rf(1, 0);
  Int r0 = 0;
  for (long long t : {t1, t2}) {
    r0 -= term(rf(1, t), zero_one, zero_one);
    r0 -= term(zero_one, rf(-1, 0), zero_one);
  }
  r0 += term(rf(1, 0), RawFraction(Int(t0), Int(1)), zero_one);

  auto leg_rot = [&](long long t) {
    Int r = term(RawFraction(Int(-t0), Int(1)), rf(-1, 0), inf);
    r -= term(rf(1, 0), zero_one, inf);
    r -= term(zero_one, RawFraction(Int(-1), Int(t)), inf);
    return r;
  };
  return RotationTriple{r0, leg_rot(t1), leg_rot(t2)};
}

// (+)(-...-) with t1 = 0, t2 >= 1 (first leg absent).
RotationTriple sum_zero_leg(long long t0, long long t2) {
  const RawFraction zero_one = rf(0, 1), inf = rf(1, 0);
  Int r0 = -term(rf(1, t2), zero_one, zero_one) - term(zero_one, rf(-1, 0), zero_one) +
           term(rf(1, 0), RawFraction(Int(t0), Int(1)), zero_one);
  Int r1 = term(RawFraction(Int(-t0), Int(1)), rf(-1, 0), inf);
  Int r2 = term(RawFraction(Int(-t0), Int(1)), rf(-1, 0), inf) -
           term(rf(1, 0), zero_one, zero_one) -
           term(zero_one, RawFraction(Int(-1), Int(t2)), inf);
  return RotationTriple{r0, r1, r2};
}

bool all_sign(const std::vector<signed char>& leg, int sign) {
  for (auto s : leg)
    if ((s > 0 ? 1 : -1) != sign) return false;
  return true;
}

}  // namespace

RotationTriple euler_path_sum(const Decoration& d, long long t0, long long t1,
                              long long t2) {
  if (!decoration_valid(d, t1, t2))
    throw UnsupportedDecoration("decoration does not fit the leg structure of (t1, t2)");
  const int anti = -d.sigma0;
  if (!(all_sign(d.leg1, anti) && all_sign(d.leg2, anti)))
    throw UnsupportedDecoration(
        "evaluation is only worked out for uniform legs opposite to the outer sign");

  RotationTriple r;
  if (t1 <= -1 && t2 <= -1)
    r = sum_neg_neg(t0, t1, t2);
  else if (t1 >= 1 && t2 >= 1)
    r = sum_pos_pos(t0, t1, t2);
  else if (t1 == 0 && t2 >= 1)
    r = sum_zero_leg(t0, t2);
  else if (t2 == 0 && t1 >= 1) {
    RotationTriple m = sum_zero_leg(t0, t1);
    r = RotationTriple{m.r0, m.r2, m.r1};
  } else {
    throw UnsupportedDecoration("no worked evaluation for this parameter region");
  }
  if (d.sigma0 < 0) r = RotationTriple{-r.r0, -r.r1, -r.r2};
  return r;
}

}  // namespace a3

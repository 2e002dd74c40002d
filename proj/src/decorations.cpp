#include "a3/decorations.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "a3/slope.hpp"

namespace a3 {

int leg_slice_count(long long t) {
  if (t == 0) return 0;
  if (t == 1) return 1;
  if (t >= 2) return 2;
  return static_cast<int>(-t);
}

std::vector<int> leg_block_sizes(long long t) {
  if (t == 0) return {};
  if (t == 1) return {1};
  if (t == 2) return {2};
  if (t >= 3) return {1, 1};
  return {static_cast<int>(-t)};
}

long long twisting_sum(long long t0, long long t1, long long t2) {
  auto term = [](long long t) { return t >= 2 ? 0 : (t == 1 ? -1 : 1); };  // ceil(-1/t)
  return t0 + term(t1) + term(t2);
}

namespace {

struct Region {
  // after the leg swap: which count branch applies
  bool swapped = false;
  long long t1 = 0, t2 = 0;
};

// Normalize (t1, t2) so the printed branch guards apply directly.
Region normalize_region(long long t1, long long t2) {
  auto covered = [](long long a, long long b) {
    if (a == 0) return true;                  // leg-1 absent
    if (a < 0) return b < 0 || b >= 1;        // mixed and doubly negative
    if (a >= 1 && b == 1) return true;        // (>=1, 1)
    if (a >= 2 && b >= 2) return a >= b;      // printed guards put the larger leg first
    return false;
  };
  if (covered(t1, t2)) return Region{false, t1, t2};
  return Region{true, t2, t1};
}

std::string leg_to_string(const std::vector<signed char>& leg,
                          const std::vector<int>& blocks) {
  std::string out;
  std::size_t pos = 0;
  for (int sz : blocks) {
    std::string body;
    for (int k = 0; k < sz; ++k, ++pos) body += leg[pos] > 0 ? '+' : '-';
    out += blocks.size() > 1 ? "(" + body + ")" : body;
  }
  return "(" + out + ")";
}

void sort_blocks(std::vector<signed char>& leg, const std::vector<int>& blocks) {
  std::size_t pos = 0;
  for (int sz : blocks) {
    std::sort(leg.begin() + pos, leg.begin() + pos + sz);  // '-' (<0) first
    pos += sz;
  }
}

bool innermost_block_contains(const std::vector<signed char>& leg,
                              const std::vector<int>& blocks, int sign) {
  if (blocks.empty()) return false;
  for (int k = 0; k < blocks[0]; ++k)
    if ((leg[k] > 0 ? 1 : -1) == sign) return true;
  return false;
}

int count_sign(const std::vector<signed char>& leg, int sign) {
  int n = 0;
  for (auto s : leg)
    if ((s > 0 ? 1 : -1) == sign) ++n;
  return n;
}

void flip_one(std::vector<signed char>& leg, int sign) {
  for (auto& s : leg)
    if ((s > 0 ? 1 : -1) == sign) {
      s = static_cast<signed char>(-sign);
      return;
    }
}

}  // namespace

std::string decoration_to_string(const Decoration& d, long long t1, long long t2) {
  std::string out = d.sigma0 > 0 ? "(+)" : "(-)";
  if (t1 != 0) out += leg_to_string(d.leg1, leg_block_sizes(t1));
  if (t2 != 0) out += leg_to_string(d.leg2, leg_block_sizes(t2));
  return out;
}

bool decoration_valid(const Decoration& d, long long t1, long long t2) {
  return d.leg1.size() == static_cast<std::size_t>(leg_slice_count(t1)) &&
         d.leg2.size() == static_cast<std::size_t>(leg_slice_count(t2));
}

Decoration global_flip(const Decoration& d) {
  Decoration f = d;
  f.sigma0 = -f.sigma0;
  for (auto& s : f.leg1) s = static_cast<signed char>(-s);
  for (auto& s : f.leg2) s = static_cast<signed char>(-s);
  return f;
}

CountCase count_strongly_exceptional(long long t0, long long t1, long long t2) {
  Region rg = normalize_region(t1, t2);
  const long long a = rg.t1, b = rg.t2;
  const Int T0 = t0, T1 = a, T2 = b;
  CountCase out;
  out.t0 = t0;
  out.t1 = t1;
  out.t2 = t2;
  std::string branch;
  Int value;

  if (a == 0) {
    if (b <= 0) {
      branch = "t1=0, t2<=0";
      value = 2 - 2 * T2;
    } else if (b == 1) {
      branch = "t1=0, t2=1";
      value = 4;
    } else if (b == 2) {
      branch = "t1=0, t2=2";
      value = 6;
    } else {
      branch = "t1=0, t2>=3";
      value = 8;
    }
  } else if (a < 0 && b < 0) {
    if (t0 >= 2) {
      branch = "t1<0 t2<0, t0>=2";
      value = 2 * T1 * T2 - 2 * T1 - 2 * T2 + 2;
    } else if (t0 == 1) {
      branch = "t1<0 t2<0, t0=1";
      value = T1 * T2 - 2 * T1 - 2 * T2 + 2;
    } else if (t0 == 0) {
      branch = "t1<0 t2<0, t0=0";
      value = -2 * T1 - 2 * T2 + 2;
    } else {
      branch = "t1<0 t2<0, t0<=-1";
      value = -T0 * T1 * T2;
    }
  } else if (a == 1 && b == 1) {
    if (t0 >= 6) {
      branch = "t1=1 t2=1, t0>=6";
      value = 8;
    } else if (t0 == 5) {
      branch = "t1=1 t2=1, t0=5";
      value = 7;
    } else if (t0 == 4) {
      branch = "t1=1 t2=1, t0=4";
      value = 6;
    } else {
      branch = "t1=1 t2=1, t0<=3";
      value = 4 - T0;
    }
  } else if (a > 1 && b == 1) {
    if (t0 >= 5 && a == 2) {
      branch = "t1=2 t2=1, t0>=5";
      value = 12;
    } else if (t0 == 4 && a == 2) {
      branch = "t1=2 t2=1, t0=4";
      value = 10;
    } else if (t0 == 3 && a == 2) {
      branch = "t1=2 t2=1, t0=3";
      value = 8;
    } else if (t0 >= 5) {
      branch = "t1>=3 t2=1, t0>=5";
      value = 16;
    } else if (t0 == 4) {
      branch = "t1>=3 t2=1, t0=4";
      value = 14;
    } else if (t0 == 3 && a >= 4) {
      branch = "t1>=4 t2=1, t0=3";
      value = 12;
    } else if (t0 == 3) {
      branch = "t1=3 t2=1, t0=3";
      value = 11;
    } else {
      branch = "t1>1 t2=1, t0<=2";
      value = 6 - 2 * T0;
    }
  } else if (a > 1 && b > 1) {
    const long long hi = std::max(a, b), lo = std::min(a, b);
    if (t0 >= 4 && hi == 2) {
      branch = "t1=2 t2=2, t0>=4";
      value = 18;
    } else if (t0 == 3 && hi == 2) {
      branch = "t1=2 t2=2, t0=3";
      value = 14;
    } else if (t0 == 2 && hi == 2) {
      branch = "t1=2 t2=2, t0=2";
      value = 10;
    } else if (t0 >= 4 && lo == 2) {
      branch = "t1>=3 t2=2, t0>=4";
      value = 24;
    } else if (t0 == 3 && lo == 2) {
      branch = "t1>=3 t2=2, t0=3";
      value = 20;
    } else if (t0 == 2 && lo == 2) {
      branch = "t1>=3 t2=2, t0=2";
      value = 16;
    } else if (t0 >= 4) {
      branch = "t1>=3 t2>=3, t0>=4";
      value = 32;
    } else if (t0 == 3) {
      branch = "t1>=3 t2>=3, t0=3";
      value = 28;
    } else if (t0 == 2) {
      branch = "t1>=3 t2>=3, t0=2";
      value = 24;
    } else {
      branch = "t1>1 t2>1, t0<=1";
      value = 8 - 4 * T0;
    }
  } else if (a < 0 && b == 1) {
    if (t0 >= 4) {
      branch = "t1<0 t2=1, t0>=4";
      value = 4 - 4 * T1;
    } else if (t0 == 3) {
      branch = "t1<0 t2=1, t0=3";
      value = 4 - 3 * T1;
    } else if (t0 == 2) {
      branch = "t1<0 t2=1, t0=2";
      value = 4 - 2 * T1;
    } else {
      branch = "t1<0 t2=1, t0<=1";
      value = T0 * T1 - 2 * T1;
    }
  } else {  // a < 0, b > 1
    if (t0 >= 3 && b == 2) {
      branch = "t1<0 t2=2, t0>=3";
      value = 6 - 6 * T1;
    } else if (t0 == 2 && b == 2) {
      branch = "t1<0 t2=2, t0=2";
      value = 6 - 4 * T1;
    } else if (t0 == 1 && b == 2) {
      branch = "t1<0 t2=2, t0=1";
      value = 6 - 2 * T1;
    } else if (t0 >= 3) {
      branch = "t1<0 t2>=3, t0>=3";
      value = 8 - 8 * T1;
    } else if (t0 == 2) {
      branch = "t1<0 t2>=3, t0=2";
      value = 8 - 6 * T1;
    } else if (t0 == 1 && b >= 4) {
      branch = "t1<0 t2>=4, t0=1";
      value = 8 - 4 * T1;
    } else if (t0 == 1) {
      branch = "t1<0 t2=3, t0=1";
      value = 8 - 3 * T1;
    } else {
      branch = "t1<0 t2>1, t0<=0";
      value = 2 * T0 * T1 - 2 * T1;
    }
  }

  out.branch = rg.swapped ? branch + " (legs swapped)" : branch;
  out.formula_value = value;
  return out;
}

bool is_discarded(const Decoration& d, long long t0, long long t1, long long t2) {
  if (t1 == 0 || t2 == 0) return false;
  const long long sum = twisting_sum(t0, t1, t2);
  if (sum <= 1) return true;
  if (sum >= 3) return false;
  return innermost_block_contains(d.leg1, leg_block_sizes(t1), d.sigma0) &&
         innermost_block_contains(d.leg2, leg_block_sizes(t2), d.sigma0);
}

Decoration canonicalize_decoration(const Decoration& d, long long t0, long long t1,
                                   long long t2) {
  Decoration c = d;
  const auto blocks1 = leg_block_sizes(t1);
  const auto blocks2 = leg_block_sizes(t2);
  sort_blocks(c.leg1, blocks1);
  sort_blocks(c.leg2, blocks2);

  // Two extra identifications that hold on specific boundary triples: the
  // cut-and-shuffle exchange for (3,{3},1)-type and (1,neg,{3})-type slopes.
  auto leg_is = [](const std::vector<signed char>& leg, signed char a, signed char b) {
    return leg.size() == 2 && leg[0] == a && leg[1] == b;
  };
  if (t0 == 3 && t1 == 3 && t2 == 1 && c.sigma0 == -1 && leg_is(c.leg1, +1, -1) &&
      c.leg2 == std::vector<signed char>{-1}) {
    c.sigma0 = +1;
    c.leg1 = {-1, +1};
    c.leg2 = {+1};
    return c;
  }
  if (t0 == 3 && t1 == 1 && t2 == 3 && c.sigma0 == -1 && leg_is(c.leg2, +1, -1) &&
      c.leg1 == std::vector<signed char>{-1}) {
    c.sigma0 = +1;
    c.leg2 = {-1, +1};
    c.leg1 = {+1};
    return c;
  }
  if (t0 == 1 && t1 < 0 && t2 == 3 && c.sigma0 == +1 && leg_is(c.leg2, -1, +1) &&
      count_sign(c.leg1, +1) >= 1) {
    c.sigma0 = -1;
    flip_one(c.leg1, +1);
    c.leg2 = {+1, -1};
    sort_blocks(c.leg1, blocks1);
    return c;
  }
  if (t0 == 1 && t2 < 0 && t1 == 3 && c.sigma0 == +1 && leg_is(c.leg1, -1, +1) &&
      count_sign(c.leg2, +1) >= 1) {
    c.sigma0 = -1;
    flip_one(c.leg2, +1);
    c.leg1 = {+1, -1};
    sort_blocks(c.leg2, blocks2);
    return c;
  }

  // When the three regions are simultaneously flippable the structure is
  // unchanged by the flip; keep the representative with positive outer sign
  // (the lexicographically smaller bracket string).
  if (t1 != 0 && t2 != 0 && twisting_sum(t0, t1, t2) == 3 &&
      innermost_block_contains(c.leg1, blocks1, c.sigma0) &&
      innermost_block_contains(c.leg2, blocks2, c.sigma0) && c.sigma0 == -1) {
    c = global_flip(c);
    sort_blocks(c.leg1, blocks1);
    sort_blocks(c.leg2, blocks2);
  }
  return c;
}

std::vector<Decoration> enumerate_zero_twisting(long long t0, long long t1, long long t2) {
  std::vector<Decoration> out;
  if (t1 != 0 && t2 != 0 && twisting_sum(t0, t1, t2) <= 1) return out;

  const auto blocks1 = leg_block_sizes(t1);
  const auto blocks2 = leg_block_sizes(t2);

  // Per-block sign multisets: a block of size m has m+1 shuffle classes.
  auto leg_choices = [](const std::vector<int>& blocks) {
    std::vector<std::vector<signed char>> legs{{}};
    for (int sz : blocks) {
      std::vector<std::vector<signed char>> next;
      for (const auto& prefix : legs)
        for (int plus = 0; plus <= sz; ++plus) {
          auto leg = prefix;
          for (int k = 0; k < sz; ++k)
            leg.push_back(k < sz - plus ? static_cast<signed char>(-1)
                                        : static_cast<signed char>(+1));
          next.push_back(std::move(leg));
        }
      legs = std::move(next);
    }
    return legs;
  };

  std::set<std::string> seen;
  for (int sigma : {+1, -1})
    for (const auto& l1 : leg_choices(blocks1))
      for (const auto& l2 : leg_choices(blocks2)) {
        Decoration d;
        d.sigma0 = sigma;
        d.leg1 = l1;
        d.leg2 = l2;
        d = canonicalize_decoration(d, t0, t1, t2);
        if (is_discarded(d, t0, t1, t2)) continue;
        if (seen.insert(decoration_to_string(d, t1, t2)).second) out.push_back(d);
      }
  std::sort(out.begin(), out.end(), [&](const Decoration& a, const Decoration& b) {
    return decoration_to_string(a, t1, t2) < decoration_to_string(b, t1, t2);
  });
  return out;
}

Int non_twisting_count(long long t0, long long t1, long long t2) {
  if (t1 == 0 || t2 == 0) return 0;
  if (twisting_sum(t0, t1, t2) > 1) return 0;
  Region rg = normalize_region(t1, t2);
  const long long a = rg.t1, b = rg.t2;
  const Int T0 = t0, T1 = a, T2 = b;
  if (a < 0 && b < 0) return (-T0) * (-T1) * (-T2);
  if (a == 1 && b == 1) return 4 - T0;
  if (a > 1 && b == 1) return (3 - T0) * 2;
  if (a > 1 && b > 1) return (2 - T0) * 4;
  if (a < 0 && b == 1) return (2 - T0) * (-T1);
  return (1 - T0) * (-T1) * 2;  // a < 0, b > 1
}

std::vector<NonTwistingLabel> enumerate_non_twisting(long long t0, long long t1,
                                                     long long t2) {
  if (t1 == 0 || t2 == 0 || twisting_sum(t0, t1, t2) > 1)
    throw RegionMismatch("structures without 0-twisting circles exist only when t0 + ceil(-1/t1) + ceil(-1/t2) <= 1 and t1,t2 != 0");
  Region rg = normalize_region(t1, t2);
  const long long a = rg.t1, b = rg.t2;
  long long fi, fj, fk;
  if (a < 0 && b < 0) {
    fi = -t0;
    fj = -a;
    fk = -b;
  } else if (a == 1 && b == 1) {
    fi = 4 - t0;
    fj = fk = 1;
  } else if (a > 1 && b == 1) {
    fi = 3 - t0;
    fj = 2;
    fk = 1;
  } else if (a > 1 && b > 1) {
    fi = 2 - t0;
    fj = 2;
    fk = 2;
  } else if (a < 0 && b == 1) {
    fi = 2 - t0;
    fj = -a;
    fk = 1;
  } else {
    fi = 1 - t0;
    fj = -a;
    fk = 2;
  }
  std::vector<NonTwistingLabel> labels;
  for (long long i = 0; i < fi; ++i)
    for (long long j = 0; j < fj; ++j)
      for (long long k = 0; k < fk; ++k)
        labels.push_back(NonTwistingLabel{static_cast<int>(i), static_cast<int>(j),
                                          static_cast<int>(k)});
  if (Int(static_cast<long long>(labels.size())) != non_twisting_count(t0, t1, t2))
    throw ConsistencyFailure("non-twisting label count disagrees with the branch product");
  return labels;
}

}  // namespace a3

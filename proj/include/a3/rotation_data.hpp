#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a3/ints.hpp"

namespace a3 {

// Affine integer expression c0 + k0*t0 + k1*t1 + k2*t2.
struct Affine {
  long long c0 = 0, k0 = 0, k1 = 0, k2 = 0;

  Int eval(long long t0, long long t1, long long t2) const {
    return Int(c0) + Int(k0) * t0 + Int(k1) * t1 + Int(k2) * t2;
  }
};

enum class CompKind {
  fixed,         // value
  signed_pos,    // eps * value
  signed_neg,    // -eps * value
  range,         // lo, lo+2, ..., hi
  signed_range,  // eps * each
  anti_range,    // -eps * each
};

struct Component {
  CompKind kind = CompKind::fixed;
  Affine a;  // value or range lo
  Affine b;  // range hi
};

struct TablePattern {
  Component r[3];
  Rat d3;
  std::optional<std::string> decoration;  // for eps = +1; eps = -1 flips it
};

struct Guard {
  int var = 0;  // 0,1,2 -> t0,t1,t2
  int op = 0;   // -1: <=, 0: =, +1: >=
  long long bound = 0;

  bool holds(long long t0, long long t1, long long t2) const {
    long long v = var == 0 ? t0 : (var == 1 ? t1 : t2);
    if (op < 0) return v <= bound;
    if (op > 0) return v >= bound;
    return v == bound;
  }
};

struct BranchTable {
  std::string id;
  std::vector<Guard> guards;
  bool tight = false;
  std::vector<TablePattern> patterns;

  bool matches(long long t0, long long t1, long long t2) const {
    for (const auto& g : guards)
      if (!g.holds(t0, t1, t2)) return false;
    return true;
  }
};

// Parses the bundled format; throws ParseError with a line number on any
// malformed input.
std::vector<BranchTable> parse_rotation_tables(const std::string& text);

// Compiled-in copy of data/rotation_tables.txt.
const std::string& default_rotation_tables_text();

// Tables from $A3_ROTATION_TABLES when set, else the bundled copy. Parsed
// once per process.
const std::vector<BranchTable>& rotation_tables();

}  // namespace a3

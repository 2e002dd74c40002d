#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "a3/decorations.hpp"

using namespace a3;

namespace {

Decoration deco(int sigma0, std::vector<signed char> l1, std::vector<signed char> l2) {
  Decoration d;
  d.sigma0 = sigma0;
  d.leg1 = std::move(l1);
  d.leg2 = std::move(l2);
  return d;
}

}  // namespace

TEST_CASE("count formula branches") {
  CHECK(count_strongly_exceptional(3, -2, -2).formula_value == 18);
  CHECK(count_strongly_exceptional(2, 2, 2).formula_value == 10);
  CHECK(count_strongly_exceptional(5, 0, 3).formula_value == 8);
  CHECK(count_strongly_exceptional(-1, -1, -1).formula_value == 1);
  CHECK(count_strongly_exceptional(5, 1, 1).formula_value == 7);
  CHECK(count_strongly_exceptional(3, 3, 1).formula_value == 11);
  CHECK(count_strongly_exceptional(3, 1, 3).formula_value == 11);
  CHECK(count_strongly_exceptional(1, -2, 3).formula_value == 8 - 3 * (-2));
  CHECK(count_strongly_exceptional(0, 0, 0).formula_value == 2);
  CHECK(count_strongly_exceptional(2, 0, 0).formula_value == 2);
  CHECK(count_strongly_exceptional(4, 2, 1).formula_value == 10);
  // leg exchange reaches the printed branches
  CHECK(count_strongly_exceptional(4, 1, 2).formula_value == 10);
  CHECK(count_strongly_exceptional(7, 3, 0).formula_value == 8);
}

TEST_CASE("zero-twisting enumeration sizes") {
  CHECK(enumerate_zero_twisting(6, 1, 1).size() == 8);
  CHECK(enumerate_zero_twisting(4, 2, 1).size() == 10);
  CHECK(enumerate_zero_twisting(0, -2, -2).size() == 10);
  CHECK(enumerate_zero_twisting(3, 3, 1).size() == 11);
  CHECK(enumerate_zero_twisting(1, -3, 3).size() == 8 - 3 * (-3));
  CHECK(enumerate_zero_twisting(1, 2, 2).empty());
  CHECK(enumerate_zero_twisting(-4, 0, 2).size() == 6);
}

TEST_CASE("decoration strings") {
  CHECK(decoration_to_string(deco(+1, {-1, -1}, {-1, -1}), 2, 2) == "(+)(--)(--)");
  CHECK(decoration_to_string(deco(+1, {-1, +1}, {-1}), 3, 1) == "(+)((-)(+))(-)");
  CHECK(decoration_to_string(deco(-1, {}, {+1, -1}), 0, 3) == "(-)((+)(-))");
}

TEST_CASE("canonicalize sorts within blocks") {
  Decoration d = deco(+1, {+1, -1}, {-1, -1});
  Decoration c = canonicalize_decoration(d, 2, 2, 2);
  CHECK(decoration_to_string(c, 2, 2) == "(+)(-+)(--)");
}

TEST_CASE("canonicalize applies the boundary identifications") {
  // (3,3,1): (-)((+)(-))(-) and (+)((-)(+))(+) name the same structure
  Decoration d = deco(-1, {+1, -1}, {-1});
  Decoration c = canonicalize_decoration(d, 3, 3, 1);
  CHECK(decoration_to_string(c, 3, 1) == "(+)((-)(+))(+)");

  // (1, t1<0, 3): (+)(++-)((-)(+)) ~ (-)(--+)((+)(-))
  Decoration e = deco(+1, {+1, +1, -1}, {-1, +1});
  Decoration ce = canonicalize_decoration(e, 1, -3, 3);
  CHECK(decoration_to_string(ce, -3, 3) == "(-)(--+)((+)(-))");
}

TEST_CASE("canonicalize is idempotent") {
  for (long long t0 : {0, 1, 2, 3, 4, 5})
    for (long long t1 : {-3, -1, 1, 2, 3})
      for (long long t2 : {-2, 1, 2, 3})
        for (const auto& d : enumerate_zero_twisting(t0, t1, t2)) {
          Decoration c = canonicalize_decoration(d, t0, t1, t2);
          CHECK(c == canonicalize_decoration(c, t0, t1, t2));
        }
}

TEST_CASE("discard rules") {
  CHECK(is_discarded(deco(+1, {+1}, {+1}), 0, -1, -1));
  CHECK_FALSE(is_discarded(deco(+1, {-1}, {-1}), 0, -1, -1));
  CHECK(is_discarded(deco(+1, {-1, -1}, {-1, -1}), 1, 2, 2));
  CHECK(is_discarded(deco(-1, {-1, -1}, {-1, -1}), 1, 2, 2));
  // twisting sum 3: nothing is discarded
  CHECK_FALSE(is_discarded(deco(+1, {+1}, {+1}), 5, 1, 1));
}

TEST_CASE("flip closure of the enumeration") {
  for (long long t0 : {0, 1, 2, 3, 4, 5, 6})
    for (long long t1 : {-2, -1, 1, 2, 3, 0})
      for (long long t2 : {-3, 1, 2, 3}) {
        auto all = enumerate_zero_twisting(t0, t1, t2);
        std::set<std::string> keys;
        for (const auto& d : all) keys.insert(decoration_to_string(d, t1, t2));
        for (const auto& d : all) {
          Decoration f = canonicalize_decoration(global_flip(d), t0, t1, t2);
          CHECK(keys.count(decoration_to_string(f, t1, t2)) == 1);
        }
      }
}

TEST_CASE("non-twisting labels") {
  CHECK(enumerate_non_twisting(-1, -1, -1).size() == 1);
  CHECK(enumerate_non_twisting(1, 2, 2).size() == 4);
  CHECK(enumerate_non_twisting(0, -2, 1).size() == 4);
  CHECK_THROWS_AS(enumerate_non_twisting(5, 1, 1), RegionMismatch);
  CHECK_THROWS_AS(enumerate_non_twisting(0, 0, 2), RegionMismatch);
}

TEST_CASE("enumeration splits match the count formulas on the grid") {
  for (long long t0 = -5; t0 <= 8; ++t0)
    for (long long t1 = -5; t1 <= 6; ++t1)
      for (long long t2 = -5; t2 <= 6; ++t2) {
        const Int zero_twisting =
            static_cast<long long>(enumerate_zero_twisting(t0, t1, t2).size());
        const Int total = zero_twisting + non_twisting_count(t0, t1, t2);
        CHECK_MESSAGE(total == count_strongly_exceptional(t0, t1, t2).formula_value,
                      "t = (", t0, ",", t1, ",", t2, ")");
      }
}

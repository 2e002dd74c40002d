#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "a3/classify.hpp"

using namespace a3;

namespace {

std::multiset<std::string> class_keys(long long t0, long long t1, long long t2) {
  std::multiset<std::string> out;
  for (const auto& c : classify(t0, t1, t2))
    out.insert(c.r.r0.str() + "," + c.r.r1.str() + "," + c.r.r2.str() + ";" +
               rat_to_string(c.d3));
  return out;
}

std::string key(long long r0, long long r1, long long r2, const char* d3) {
  return std::to_string(r0) + "," + std::to_string(r1) + "," + std::to_string(r2) +
         ";" + d3;
}

}  // namespace

TEST_CASE("classify (4,1,1)") {
  auto got = class_keys(4, 1, 1);
  std::multiset<std::string> want{key(3, 0, 2, "1/2"),   key(-3, 0, -2, "1/2"),
                                  key(3, 2, 0, "1/2"),   key(-3, -2, 0, "1/2"),
                                  key(7, 2, 2, "-3/2"),  key(-7, -2, -2, "-3/2")};
  CHECK(got == want);
}

TEST_CASE("classify (-2,-1,-3): all tight") {
  auto classes = classify(-2, -1, -3);
  CHECK(classes.size() == 6);
  for (const auto& c : classes) {
    CHECK(c.ambient == Ambient::tight);
    CHECK(c.d3 == Rat(-1, 2));
    CHECK((c.r.r0 == 1 || c.r.r0 == -1));
    CHECK(c.r.r1 == 0);
    CHECK((c.r.r2 == -2 || c.r.r2 == 0 || c.r.r2 == 2));
  }
}

TEST_CASE("classify (2,0,0)") {
  CHECK(classify(2, 0, 0).size() == 2);
}

TEST_CASE("decorated provenance shows up where transcribed") {
  bool saw_decoration = false;
  for (const auto& c : classify(5, 1, 1))
    saw_decoration |= c.provenance == "(+)(-)(-)" || c.provenance == "(-)(+)(+)";
  CHECK(saw_decoration);
}

TEST_CASE("destabilization guard") {
  CHECK(can_destabilize_K0(2, -1, -1));
  CHECK_FALSE(can_destabilize_K0(1, 2, 2));
  CHECK(can_destabilize_K0(-3, 0, 5));
  CHECK(can_destabilize_K0(-7, 4, 0));
}

TEST_CASE("grid verification passes, serial and parallel agree") {
  GridBounds small{-3, 5, -3, 4, -3, 4};
  VerifyReport serial = verify_counts(small, Execution::serial);
  VerifyReport parallel = verify_counts(small, Execution::parallel);
  CHECK(serial.ok());
  CHECK(parallel.ok());
  CHECK(serial.triples_checked == parallel.triples_checked);
  CHECK(serial.failures.size() == parallel.failures.size());
}

TEST_CASE("empty grid") {
  GridBounds empty{1, 0, 0, 0, 0, 0};
  VerifyReport r = verify_counts(empty);
  CHECK(r.triples_checked == 0);
  CHECK(r.ok());
}

TEST_CASE("destabilizable classes have a parent one level up") {
  for (long long t0 = -3; t0 <= 6; ++t0)
    for (long long t1 = -3; t1 <= 4; ++t1)
      for (long long t2 = -3; t2 <= 4; ++t2) {
        if (!can_destabilize_K0(t0, t1, t2)) continue;
        auto parents = classify(t0 + 1, t1, t2);
        for (const auto& c : classify(t0, t1, t2)) {
          bool found = false;
          for (const auto& p : parents) {
            Int dr = p.r.r0 - c.r.r0;
            found |= (dr == 1 || dr == -1) && p.r.r1 == c.r.r1 && p.r.r2 == c.r.r2 &&
                     p.d3 == c.d3;
          }
          CHECK_MESSAGE(found, "orphan class at (", t0, ",", t1, ",", t2, "): (",
                        c.r.r0.str(), ",", c.r.r1.str(), ",", c.r.r2.str(), ";",
                        rat_to_string(c.d3), ")");
        }
      }
}

TEST_CASE("mountain range of the (1,1) summit family") {
  auto fams = mountain_range(1, 1, 4, 7, MountainAxis::k0);
  const MountainFamily* summit = nullptr;
  for (const auto& f : fams)
    if (f.fixed_a == 0 && f.fixed_b == 0 && f.d3 == Rat(5, 2)) summit = &f;
  REQUIRE(summit != nullptr);
  // apex (t0=5, r0=0), then (6,+-1), (7,0),(7,+-2)
  std::multiset<std::pair<long long, long long>> nodes;
  for (const auto& n : summit->nodes)
    nodes.insert({n.tb, n.rot.convert_to<long long>()});
  CHECK(nodes.count({5, 0}) == 1);
  CHECK(nodes.count({6, 1}) == 1);
  CHECK(nodes.count({6, -1}) == 1);
  CHECK(nodes.count({4, 0}) == 0);
  for (const auto& e : summit->edges) {
    CHECK(summit->nodes[e.child].tb == summit->nodes[e.parent].tb - 1);
    Int dr = summit->nodes[e.child].rot - summit->nodes[e.parent].rot;
    CHECK((dr == 1 || dr == -1));
    CHECK_FALSE(e.inferred);
  }
  // both stabilizations of (6,+-1) reach the apex
  int to_apex = 0;
  for (const auto& e : summit->edges)
    if (summit->nodes[e.child].tb == 5) ++to_apex;
  CHECK(to_apex == 2);
}

TEST_CASE("tight family fills a triangle") {
  auto fams = mountain_range(-1, -1, -4, -1, MountainAxis::k0);
  std::size_t nodes = 0, edges = 0;
  for (const auto& f : fams) {
    nodes += f.nodes.size();
    edges += f.edges.size();
  }
  // counts 1, 2, 3, 4 at t0 = -1..-4 for the single (0,0) family
  CHECK(nodes == 10);
  CHECK(edges > 0);
}

TEST_CASE("k2 axis requires t1 = 0") {
  CHECK_THROWS_AS(mountain_range(3, 1, 0, 2, MountainAxis::k2), ParameterOutOfRange);
  auto fams = mountain_range(2, 0, -2, 4, MountainAxis::k2);
  CHECK(!fams.empty());
  for (const auto& f : fams)
    for (const auto& e : f.edges) {
      CHECK(f.nodes[e.child].tb == f.nodes[e.parent].tb - 1);
    }
}

TEST_CASE("empty mountain range") {
  CHECK(mountain_range(1, 1, 3, 2, MountainAxis::k0).empty());
}

TEST_CASE("dot output mentions families and edges") {
  auto fams = mountain_range(1, 1, 4, 7, MountainAxis::k0);
  std::string dot = mountain_to_dot(fams, MountainAxis::k0);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("r1=0 r2=0 d3=5/2") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("structured records round trip") {
  for (auto [t0, t1, t2] : {std::tuple<long long, long long, long long>{5, 1, 1},
                            {4, 2, 1},
                            {-2, -1, -3},
                            {1, -2, 2},
                            {0, 0, 3}}) {
    auto classes = classify(t0, t1, t2);
    auto back = parse_structured_classes(classes_to_structured(classes));
    CHECK(back == classes);
  }
  CHECK_THROWS_AS(parse_structured_classes("{not json"), ParseError);
}

TEST_CASE("aligned table output") {
  std::string table = classes_to_table(classify(5, 1, 1));
  CHECK(table.find("(5,1,1)") != std::string::npos);
  CHECK(table.find("5/2") != std::string::npos);
  CHECK(table.find("overtwisted") != std::string::npos);
}

#include "a3/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "a3/rotation_data.hpp"
#include "a3/surgery.hpp"

namespace a3 {

using nlohmann::json;

std::vector<LegendrianClass> classify(long long t0, long long t1, long long t2) {
  const CountCase count = count_strongly_exceptional(t0, t1, t2);
  const auto entries = rotation_table(t0, t1, t2);
  if (Int(static_cast<long long>(entries.size())) != count.formula_value)
    throw ConsistencyFailure(
        "table size " + std::to_string(entries.size()) + " != count " +
        count.formula_value.str() + " for (" + std::to_string(t0) + "," +
        std::to_string(t1) + "," + std::to_string(t2) + ") [" + count.branch + "]");
  std::vector<LegendrianClass> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    LegendrianClass c;
    c.t0 = t0;
    c.t1 = t1;
    c.t2 = t2;
    c.r = e.r;
    c.d3 = e.d3;
    c.ambient = e.ambient;
    c.provenance = e.decoration ? *e.decoration : e.provenance;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const LegendrianClass& a, const LegendrianClass& b) {
    if (!(a.r == b.r)) return a.r < b.r;
    return a.d3 < b.d3;
  });
  return out;
}

bool can_destabilize_K0(long long t0, long long t1, long long t2) {
  if (t1 == 0 || t2 == 0) return true;
  return twisting_sum(t0, t1, t2) >= 2;
}

namespace {

bool is_tight_branch(long long t0, long long t1, long long t2) {
  return t0 <= -1 && t1 <= -1 && t2 <= -1;
}

void check_triple(long long t0, long long t1, long long t2, VerifyReport& report) {
  auto fail = [&](const std::string& msg) {
    report.failures.push_back(VerifyFailure{t0, t1, t2, msg});
  };
  std::vector<LegendrianClass> classes;
  try {
    classes = classify(t0, t1, t2);
  } catch (const domain_error& e) {
    fail(e.what());
    return;
  }

  // no two classes may share (r, d3)
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& c : classes) {
    std::string key = c.r.r0.str() + "," + c.r.r1.str() + "," + c.r.r2.str();
    if (!seen.insert({key, rat_to_string(c.d3)}).second)
      fail("duplicate (r, d3): (" + key + "; " + rat_to_string(c.d3) + ")");
  }

  const bool tight_branch = is_tight_branch(t0, t1, t2);
  static const std::set<std::string> d3_range{"-3/2", "-1/2", "1/2", "3/2", "5/2"};
  for (const auto& c : classes) {
    if ((c.r.r0 - t0 - 1) % 2 != 0 || (c.r.r1 - t1 - 1) % 2 != 0 ||
        (c.r.r2 - t2 - 1) % 2 != 0)
      fail("rotation parity violated");
    if (c.ambient == Ambient::tight) {
      if (!tight_branch || c.d3 != Rat(-1, 2)) fail("tight class outside the tight branch");
    } else {
      if (tight_branch) fail("overtwisted class in the tight branch");
      if (!d3_range.count(rat_to_string(c.d3)))
        fail("overtwisted d3 " + rat_to_string(c.d3) + " out of range");
    }
  }

  // global negation symmetry with equal d3
  std::set<std::string> keys;
  for (const auto& c : classes)
    keys.insert(c.r.r0.str() + "," + c.r.r1.str() + "," + c.r.r2.str() + ";" +
                rat_to_string(c.d3));
  for (const auto& c : classes) {
    std::string neg = Int(-c.r.r0).str() + "," + Int(-c.r.r1).str() + "," +
                      Int(-c.r.r2).str() + ";" + rat_to_string(c.d3);
    if (!keys.count(neg)) fail("negated triple missing for (" + neg + ")");
  }

  // decorated + non-twisting structures account for the whole count
  const Int zt = static_cast<long long>(enumerate_zero_twisting(t0, t1, t2).size());
  const Int total = zt + non_twisting_count(t0, t1, t2);
  if (total != Int(static_cast<long long>(classes.size())))
    fail("enumeration total " + total.str() + " != class count " +
         std::to_string(classes.size()));

  // the surgery family lands in the t1 = t2 = 2 tables
  if (t1 == 2 && t2 == 2 && t0 >= 4) {
    SurgeryDiagram d = build_a3_surgery_family(t0);
    RotationTriple r{Int(0), Int(0), Int(0)};
    const Rat v3 = d3(d);
    Rat tb[3], rr[3];
    for (int i = 0; i < 3; ++i) {
      tb[i] = tb_after(d, d.components[i]);
      rr[i] = rot_after(d, d.components[i]);
    }
    if (tb[0] != Rat(t0) || tb[1] != 2 || tb[2] != 2)
      fail("surgery family tb mismatch");
    for (int i = 0; i < 3; ++i)
      if (boost::multiprecision::denominator(rr[i]) != 1)
        fail("surgery family rot not integral");
    r.r0 = boost::multiprecision::numerator(rr[0]);
    r.r1 = boost::multiprecision::numerator(rr[1]);
    r.r2 = boost::multiprecision::numerator(rr[2]);
    bool found = false;
    for (const auto& c : classes)
      found |= c.r == r && c.d3 == v3;
    if (!found) fail("surgery family class not in the tables");
  }
}

}  // namespace

VerifyReport verify_counts(const GridBounds& bounds, Execution how) {
  std::vector<std::array<long long, 3>> triples;
  for (long long t0 = bounds.t0_min; t0 <= bounds.t0_max; ++t0)
    for (long long t1 = bounds.t1_min; t1 <= bounds.t1_max; ++t1)
      for (long long t2 = bounds.t2_min; t2 <= bounds.t2_max; ++t2)
        triples.push_back({t0, t1, t2});

  VerifyReport report;
  report.triples_checked = static_cast<long long>(triples.size());
  if (triples.empty()) return report;

  // touch the shared table cache once before going parallel
  rotation_tables();

  if (how == Execution::serial) {
    for (const auto& t : triples) check_triple(t[0], t[1], t[2], report);
    return report;
  }

  std::vector<VerifyReport> partial;
#ifdef _OPENMP
#pragma omp parallel
  {
#pragma omp single
    partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
#pragma omp for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(triples.size()); ++i) {
      const auto& t = triples[static_cast<std::size_t>(i)];
      check_triple(t[0], t[1], t[2], partial[static_cast<std::size_t>(omp_get_thread_num())]);
    }
  }
  for (auto& p : partial)
    for (auto& f : p.failures) report.failures.push_back(std::move(f));
  // order-independent merge: normalize for deterministic output
  std::sort(report.failures.begin(), report.failures.end(),
            [](const VerifyFailure& a, const VerifyFailure& b) {
              return std::tie(a.t0, a.t1, a.t2, a.message) <
                     std::tie(b.t0, b.t1, b.t2, b.message);
            });
#else
  for (const auto& t : triples) check_triple(t[0], t[1], t[2], report);
#endif
  return report;
}

std::vector<MountainFamily> mountain_range(long long fixed1, long long fixed2,
                                           long long lo, long long hi,
                                           MountainAxis axis) {
  if (axis == MountainAxis::k2 && fixed2 != 0)
    throw ParameterOutOfRange("the K2 axis applies only when t1 = 0");

  struct Key {
    std::string a, b, d;
    bool operator<(const Key& o) const { return std::tie(a, b, d) < std::tie(o.a, o.b, o.d); }
  };
  std::map<Key, MountainFamily> families;

  for (long long v = lo; v <= hi; ++v) {
    std::vector<LegendrianClass> classes =
        axis == MountainAxis::k0 ? classify(v, fixed1, fixed2) : classify(fixed1, 0, v);
    for (const auto& c : classes) {
      Int fa = axis == MountainAxis::k0 ? c.r.r1 : c.r.r0;
      Int fb = axis == MountainAxis::k0 ? c.r.r2 : c.r.r1;
      Int moving = axis == MountainAxis::k0 ? c.r.r0 : c.r.r2;
      Key key{fa.str(), fb.str(), rat_to_string(c.d3)};
      auto& fam = families[key];
      fam.fixed_a = fa;
      fam.fixed_b = fb;
      fam.d3 = c.d3;
      fam.nodes.push_back(MountainNode{v, moving, c.d3});
    }
  }

  // families with a known drawn shape; everything else is rule-derived
  auto depicted = [&](const MountainFamily& f) {
    if (axis == MountainAxis::k2) return true;
    const long long t1 = fixed1, t2 = fixed2;
    auto is_pm = [&](long long a, long long b) {
      return (f.fixed_a == a && f.fixed_b == b) || (f.fixed_a == -a && f.fixed_b == -b);
    };
    if (t1 == 1 && t2 == 1 && f.fixed_a == 0 && f.fixed_b == 0 && f.d3 == Rat(5, 2))
      return true;
    if (t1 >= 3 && t2 >= 3 && f.d3 == Rat(5, 2) &&
        (is_pm(t1 - 1, 1 - t2) || is_pm(1 - t1, 1 - t2)))
      return true;
    if (t1 >= 3 && t2 >= 3 && f.d3 == Rat(1, 2) && is_pm(1 - t1, t2 + 1)) return true;
    return false;
  };

  std::vector<MountainFamily> out;
  for (auto& [key, fam] : families) {
    const bool dep = depicted(fam);
    for (std::size_t i = 0; i < fam.nodes.size(); ++i)
      for (std::size_t j = 0; j < fam.nodes.size(); ++j) {
        if (fam.nodes[j].tb != fam.nodes[i].tb - 1) continue;
        Int diff = fam.nodes[j].rot - fam.nodes[i].rot;
        if (diff == 1 || diff == -1)
          fam.edges.push_back(MountainEdge{i, j, !dep});
      }
    out.push_back(std::move(fam));
  }
  return out;
}

std::string mountain_to_dot(const std::vector<MountainFamily>& families,
                            MountainAxis axis) {
  const char* moving = axis == MountainAxis::k0 ? "t0" : "t2";
  const char* fixed_a = axis == MountainAxis::k0 ? "r1" : "r0";
  const char* fixed_b = axis == MountainAxis::k0 ? "r2" : "r1";
  std::ostringstream out;
  out << "digraph mountain {\n  rankdir=BT;\n  node [shape=point];\n";
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto& fam = families[f];
    out << "  subgraph cluster_" << f << " {\n";
    out << "    label=\"" << fixed_a << "=" << fam.fixed_a.str() << " " << fixed_b << "="
        << fam.fixed_b.str() << " d3=" << rat_to_string(fam.d3) << "\";\n";
    for (std::size_t i = 0; i < fam.nodes.size(); ++i)
      out << "    n" << f << "_" << i << " [label=\"(" << moving << "="
          << fam.nodes[i].tb << ", rot=" << fam.nodes[i].rot.str()
          << ")\", shape=circle];\n";
    for (const auto& e : fam.edges) {
      out << "    n" << f << "_" << e.parent << " -> n" << f << "_" << e.child;
      if (e.inferred) out << " [style=dashed, comment=\"inferred\"]";
      out << ";\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string classes_to_structured(const std::vector<LegendrianClass>& classes) {
  std::ostringstream out;
  for (const auto& c : classes) {
    json j;
    j["t"] = {c.t0, c.t1, c.t2};
    j["r"] = {c.r.r0.convert_to<long long>(), c.r.r1.convert_to<long long>(),
              c.r.r2.convert_to<long long>()};
    j["d3"] = rat_to_string(c.d3);
    j["ambient"] = c.ambient == Ambient::tight ? "tight" : "overtwisted";
    j["provenance"] = c.provenance;
    out << j.dump() << "\n";
  }
  return out.str();
}

std::vector<LegendrianClass> parse_structured_classes(const std::string& text) {
  std::vector<LegendrianClass> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad class record: ") + e.what());
    }
    LegendrianClass c;
    c.t0 = j.at("t").at(0).get<long long>();
    c.t1 = j.at("t").at(1).get<long long>();
    c.t2 = j.at("t").at(2).get<long long>();
    c.r.r0 = Int(j.at("r").at(0).get<long long>());
    c.r.r1 = Int(j.at("r").at(1).get<long long>());
    c.r.r2 = Int(j.at("r").at(2).get<long long>());
    c.d3 = parse_rat(j.at("d3").get<std::string>());
    c.ambient = j.at("ambient").get<std::string>() == "tight" ? Ambient::tight
                                                              : Ambient::overtwisted;
    c.provenance = j.at("provenance").get<std::string>();
    out.push_back(std::move(c));
  }
  return out;
}

std::string classes_to_table(const std::vector<LegendrianClass>& classes) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"(t0,t1,t2)", "r0", "r1", "r2", "d3", "ambient"});
  for (const auto& c : classes)
    rows.push_back({"(" + std::to_string(c.t0) + "," + std::to_string(c.t1) + "," +
                        std::to_string(c.t2) + ")",
                    c.r.r0.str(), c.r.r1.str(), c.r.r2.str(), rat_to_string(c.d3),
                    c.ambient == Ambient::tight ? "tight" : "overtwisted"});
  std::array<std::size_t, 6> width{};
  for (const auto& r : rows)
    for (int i = 0; i < 6; ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream out;
  for (const auto& r : rows) {
    for (int i = 0; i < 6; ++i) {
      out << r[i] << std::string(width[i] - r[i].size(), ' ');
      out << (i == 5 ? "" : "  ");
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace a3

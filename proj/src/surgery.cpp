#include "a3/surgery.hpp"

#include <nlohmann/json.hpp>

#include "a3/errors.hpp"

namespace a3 {

using nlohmann::json;

void validate(const SurgeryDiagram& d) {
  const std::size_t n = d.size();
  if (d.linking.size() != n)
    throw ParseError("linking matrix must have one row per surgery knot");
  for (const auto& row : d.linking)
    if (row.size() != n) throw ParseError("linking matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d.linking[i][j] != d.linking[j][i])
        throw ParseError("linking matrix must be symmetric");
  for (const auto& k : d.knots) {
    if (k.tb == 0) throw ParseError("surgery knots must have nonzero tb");
    if (k.coeff != 1 && k.coeff != -1)
      throw ParseError("contact surgery coefficients must be +1 or -1");
  }
  for (const auto& c : d.components)
    if (c.lk.size() != n)
      throw ParseError("component '" + c.name + "' needs one linking number per knot");
}

IMatrix linking_matrix(const SurgeryDiagram& d) {
  const std::size_t n = d.size();
  IMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? Int(0) : d.linking[i][j];
    m[i][i] = d.knots[i].tb + d.knots[i].coeff;
  }
  return m;
}

Int det_exact(const IMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int signature_exact(const IMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
  std::vector<bool> done(n, false);
  int sig = 0;

  auto clear_with_pivot = [&](std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == k || a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k];
    }
  };

  while (true) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n && k == n; ++i)
      if (!done[i] && a[i][i] != 0) k = i;
    if (k < n) {
      sig += a[k][k] > 0 ? 1 : -1;
      clear_with_pivot(k);
      done[k] = true;
      continue;
    }
    // all remaining diagonal entries vanish; a nonzero off-diagonal entry
    // spans a hyperbolic plane contributing (+1, -1)
    std::size_t p = n, q = n;
    for (std::size_t i = 0; i < n && p == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (!done[j] && a[i][j] != 0) {
          p = i;
          q = j;
          break;
        }
    }
    if (p == n) break;  // zero form on the rest
    const Rat u = a[p][q];
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || i == q) continue;
      Rat fp = a[i][q] / u;  // coefficient on row p
      Rat fq = a[i][p] / u;  // coefficient on row q
      if (fp != 0 || fq != 0) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] -= fp * a[p][j] + fq * a[q][j];
        for (std::size_t j = 0; j < n; ++j) a[j][i] -= fp * a[j][p] + fq * a[j][q];
      }
    }
    done[p] = done[q] = true;  // net signature contribution 0
  }
  return sig;
}

std::vector<Rat> solve_exact(const IMatrix& m, const std::vector<Int>& v) {
  const std::size_t n = m.size();
  if (v.size() != n) throw ParseError("right-hand side has wrong length");
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n] = Rat(v[i]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw SingularMatrix();
    std::swap(a[k], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

namespace {

std::vector<Int> rot_vector(const SurgeryDiagram& d) {
  std::vector<Int> rot;
  rot.reserve(d.size());
  for (const auto& k : d.knots) rot.push_back(k.rot);
  return rot;
}

Rat dot(const std::vector<Int>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

}  // namespace

Rat c_squared(const SurgeryDiagram& d) {
  if (d.size() == 0) return 0;
  IMatrix m = linking_matrix(d);
  if (det_exact(m) == 0) throw SingularMatrix();
  auto rot = rot_vector(d);
  return dot(rot, solve_exact(m, rot));
}

Rat d3(const SurgeryDiagram& d) {
  validate(d);
  const Rat c2 = c_squared(d);
  const int sigma = d.size() ? signature_exact(linking_matrix(d)) : 0;
  const Int chi = 1 + Int(static_cast<long long>(d.size()));
  Int q = 0;
  for (const auto& k : d.knots)
    if (k.coeff == 1) ++q;
  return (c2 - 3 * Rat(sigma) - 2 * Rat(chi)) / 4 + Rat(q);
}

Rat tb_after(const SurgeryDiagram& d, const TrackedComponent& component) {
  const std::size_t n = d.size();
  IMatrix m = linking_matrix(d);
  Int det_m = det_exact(m);
  if (det_m == 0) throw SingularMatrix();
  IMatrix bordered(n + 1, std::vector<Int>(n + 1, 0));
  bordered[0][0] = 0;  // lk(L, L) = 0 convention
  for (std::size_t i = 0; i < n; ++i) {
    bordered[0][i + 1] = component.lk[i];
    bordered[i + 1][0] = component.lk[i];
    for (std::size_t j = 0; j < n; ++j) bordered[i + 1][j + 1] = m[i][j];
  }
  return Rat(component.tb) + make_rat(det_exact(bordered), det_m);
}

Rat rot_after(const SurgeryDiagram& d, const TrackedComponent& component) {
  IMatrix m = linking_matrix(d);
  if (det_exact(m) == 0) throw SingularMatrix();
  return Rat(component.rot) - dot(rot_vector(d), solve_exact(m, component.lk));
}

SurgeryDiagram build_a3_surgery_family(long long t0) {
  if (t0 < 4) throw ParameterOutOfRange("the diagram family needs t0 >= 4");
  const std::size_t n = static_cast<std::size_t>(t0 - 1);
  SurgeryDiagram d;
  d.knots.resize(n);
  // bottom to top: push-offs of K2 and K1, a chain of -1 unknots, push-off
  // of K0 on top
  d.knots[0] = SurgeryKnot{Int(-3), Int(2), +1};
  d.knots[1] = SurgeryKnot{Int(-3), Int(-2), +1};
  for (std::size_t i = 2; i + 1 < n; ++i) d.knots[i] = SurgeryKnot{Int(-1), Int(0), -1};
  d.knots[n - 1] = SurgeryKnot{Int(-2), Int(1), +1};

  d.linking.assign(n, std::vector<Int>(n, 0));
  auto link = [&](std::size_t i, std::size_t j) {
    d.linking[i][j] = -1;
    d.linking[j][i] = -1;
  };
  link(0, 1);
  link(0, 2);
  link(1, 2);
  for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);

  const int par = t0 % 2 == 0 ? 1 : -1;  // (-1)^t0
  TrackedComponent k0{"K0", Int(-2), Int(1), std::vector<Int>(n, 0)};
  if (n == 3) {
    // the clasp curve merges with the leading block when there is no chain
    k0.lk = {Int(-1), Int(-1), Int(-2)};
  } else {
    k0.lk[n - 2] = -1;
    k0.lk[n - 1] = -2;
  }
  TrackedComponent k1{"K1", Int(-3), Int(2 * par), std::vector<Int>(n, 0)};
  k1.lk[0] = par;
  k1.lk[1] = 3 * par;
  k1.lk[2] = par;
  TrackedComponent k2{"K2", Int(-3), Int(-2 * par), std::vector<Int>(n, 0)};
  k2.lk[0] = 3 * par;
  k2.lk[1] = par;
  k2.lk[2] = par;
  d.components = {k0, k1, k2};
  validate(d);
  return d;
}

SurgeryDiagram parse_diagram(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("diagram is not valid JSON: ") + e.what());
  }
  auto to_int = [](const json& v, const char* what) -> Int {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
      try {
        return Int(v.get<std::string>());
      } catch (const std::exception&) {
      }
    }
    throw ParseError(std::string(what) + " must be an integer");
  };

  SurgeryDiagram d;
  if (!j.is_object() || !j.contains("surgery_knots") || !j.contains("linking"))
    throw ParseError("diagram needs 'surgery_knots' and 'linking'");
  for (const auto& k : j.at("surgery_knots")) {
    SurgeryKnot knot;
    knot.tb = to_int(k.at("tb"), "knot tb");
    knot.rot = to_int(k.at("rot"), "knot rot");
    knot.coeff = static_cast<int>(to_int(k.at("coefficient"), "knot coefficient")
                                      .convert_to<long long>());
    d.knots.push_back(std::move(knot));
  }
  for (const auto& row : j.at("linking")) {
    std::vector<Int> r;
    for (const auto& v : row) r.push_back(to_int(v, "linking entry"));
    d.linking.push_back(std::move(r));
  }
  if (j.contains("components"))
    for (const auto& c : j.at("components")) {
      TrackedComponent comp;
      comp.name = c.at("name").get<std::string>();
      comp.tb = to_int(c.at("tb"), "component tb");
      comp.rot = to_int(c.at("rot"), "component rot");
      for (const auto& v : c.at("lk")) comp.lk.push_back(to_int(v, "component lk"));
      d.components.push_back(std::move(comp));
    }
  validate(d);
  return d;
}

std::string diagram_to_json(const SurgeryDiagram& d) {
  json j;
  j["surgery_knots"] = json::array();
  for (const auto& k : d.knots)
    j["surgery_knots"].push_back({{"tb", k.tb.convert_to<long long>()},
                                  {"rot", k.rot.convert_to<long long>()},
                                  {"coefficient", k.coeff}});
  json linking = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < d.size(); ++k)
      row.push_back(i == k ? 0LL : d.linking[i][k].convert_to<long long>());
    linking.push_back(std::move(row));
  }
  j["linking"] = std::move(linking);
  j["components"] = json::array();
  for (const auto& c : d.components) {
    json lk = json::array();
    for (const auto& v : c.lk) lk.push_back(v.convert_to<long long>());
    j["components"].push_back({{"name", c.name},
                               {"tb", c.tb.convert_to<long long>()},
                               {"rot", c.rot.convert_to<long long>()},
                               {"lk", std::move(lk)}});
  }
  return j.dump(2);
}

}  // namespace a3

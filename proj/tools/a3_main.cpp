#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "a3/classify.hpp"
#include "a3/farey.hpp"
#include "a3/slope.hpp"
#include "a3/surgery.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitUsage = 64;

struct Options {
  long long t0 = 0, t1 = 0, t2 = 0;
  std::string format = "table";
  std::string diagram_path;
  std::string slope_s, slope_r, side = "back";
  std::string from, to;
  std::string grid = "default";
  bool serial = false;
  std::string axis = "k0";
  long long lo = 0, hi = 0;
};

void print_classes(const std::vector<a3::LegendrianClass>& classes,
                   const std::string& format) {
  if (format == "structured")
    std::cout << a3::classes_to_structured(classes);
  else
    std::cout << a3::classes_to_table(classes);
}

int run_invariants(const Options& opt) {
  std::ifstream f(opt.diagram_path);
  if (!f) throw a3::ParseError("cannot open diagram file " + opt.diagram_path);
  std::ostringstream buf;
  buf << f.rdbuf();
  a3::SurgeryDiagram d = a3::parse_diagram(buf.str());

  a3::IMatrix m = a3::linking_matrix(d);
  const a3::Int det = a3::det_exact(m);
  const a3::Rat d3v = a3::d3(d);
  if (opt.format == "structured") {
    std::cout << "{\"det\":" << det.str() << ",\"signature\":" << a3::signature_exact(m)
              << ",\"c2\":\"" << a3::rat_to_string(a3::c_squared(d)) << "\",\"d3\":\""
              << a3::rat_to_string(d3v) << "\",\"components\":[";
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      const auto& c = d.components[i];
      std::cout << (i ? "," : "") << "{\"name\":\"" << c.name << "\",\"tb\":\""
                << a3::rat_to_string(a3::tb_after(d, c)) << "\",\"rot\":\""
                << a3::rat_to_string(a3::rot_after(d, c)) << "\"}";
    }
    std::cout << "]}\n";
    return kExitOk;
  }
  std::cout << "det M     = " << det.str() << "\n";
  std::cout << "signature = " << a3::signature_exact(m) << "\n";
  std::cout << "c^2       = " << a3::rat_to_string(a3::c_squared(d)) << "\n";
  std::cout << "d3        = " << a3::rat_to_string(d3v) << "\n";
  for (const auto& c : d.components)
    std::cout << c.name << ": tb = " << a3::rat_to_string(a3::tb_after(d, c))
              << ", rot = " << a3::rat_to_string(a3::rot_after(d, c)) << "\n";
  return kExitOk;
}

int run_verify(const Options& opt) {
  a3::GridBounds bounds;
  if (opt.grid != "default") {
    // grid spec t0min:t0max:t1min:t1max:t2min:t2max
    std::istringstream in(opt.grid);
    std::string part;
    long long vals[6];
    int k = 0;
    while (std::getline(in, part, ':') && k < 6) vals[k++] = std::stoll(part);
    if (k != 6) throw a3::ParseError("grid spec must be six colon-separated integers");
    bounds = a3::GridBounds{vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]};
  }
  const auto report = a3::verify_counts(
      bounds, opt.serial ? a3::Execution::serial : a3::Execution::parallel);
  std::cout << "checked " << report.triples_checked << " parameter triples: "
            << (report.ok() ? "all consistent" : "FAILURES") << "\n";
  for (const auto& f : report.failures)
    std::cout << "  (" << f.t0 << "," << f.t1 << "," << f.t2 << "): " << f.message << "\n";
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification tables and surgery invariants for Legendrian A3 links"};
  app.require_subcommand(1);
  Options opt;

  auto add_triple = [&](CLI::App* cmd) {
    cmd->add_option("--t0", opt.t0, "tb of the central component")->required();
    cmd->add_option("--t1", opt.t1, "tb of the first meridian")->required();
    cmd->add_option("--t2", opt.t2, "tb of the second meridian")->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "structured"}));
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "list all links for one tb triple");
  add_triple(classify_cmd);
  add_format(classify_cmd);

  CLI::App* count_cmd = app.add_subcommand("count", "count links for one tb triple");
  add_triple(count_cmd);
  add_format(count_cmd);

  CLI::App* inv_cmd = app.add_subcommand("invariants", "tb/rot/d3 from a surgery diagram file");
  inv_cmd->add_option("diagram", opt.diagram_path, "diagram JSON file")->required();
  add_format(inv_cmd);

  CLI::App* bypass_cmd = app.add_subcommand("farey-bypass", "dividing slope after a bypass");
  bypass_cmd->add_option("--s", opt.slope_s, "surface slope (p/q or inf)")->required();
  bypass_cmd->add_option("--r", opt.slope_r, "ruling slope")->required();
  bypass_cmd->add_option("--side", opt.side, "front or back")
      ->check(CLI::IsMember({"front", "back"}));

  CLI::App* path_cmd = app.add_subcommand("farey-path", "slice path between two slopes");
  path_cmd->add_option("--from", opt.from, "start slope")->required();
  path_cmd->add_option("--to", opt.to, "end slope")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "check tables against count formulas");
  verify_cmd->add_option("--grid", opt.grid,
                         "'default' or t0min:t0max:t1min:t1max:t2min:t2max");
  verify_cmd->add_flag("--serial", opt.serial, "disable the parallel sweep");

  CLI::App* mountain_cmd = app.add_subcommand("mountain", "stabilization graph (DOT)");
  mountain_cmd->add_option("--t1", opt.t1, "fixed t1 (K0 axis) / must be 0 for K2 axis");
  mountain_cmd->add_option("--t2", opt.t2, "fixed t2 (K0 axis)");
  mountain_cmd->add_option("--t0", opt.t0, "fixed t0 (K2 axis)");
  mountain_cmd->add_option("--lo", opt.lo, "range lower bound")->required();
  mountain_cmd->add_option("--hi", opt.hi, "range upper bound")->required();
  mountain_cmd->add_option("--axis", opt.axis, "k0 or k2")
      ->check(CLI::IsMember({"k0", "k2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) {
      print_classes(a3::classify(opt.t0, opt.t1, opt.t2), opt.format);
      return kExitOk;
    }
    if (count_cmd->parsed()) {
      const auto c = a3::count_strongly_exceptional(opt.t0, opt.t1, opt.t2);
      if (opt.format == "structured")
        std::cout << "{\"count\":" << c.formula_value.str() << ",\"branch\":\"" << c.branch
                  << "\"}\n";
      else
        std::cout << c.formula_value.str() << "  [" << c.branch << "]\n";
      return kExitOk;
    }
    if (inv_cmd->parsed()) return run_invariants(opt);
    if (bypass_cmd->parsed()) {
      const a3::Slope out = a3::bypass_attach(
          a3::parse_slope(opt.slope_s), a3::parse_slope(opt.slope_r),
          opt.side == "front" ? a3::BypassSide::front : a3::BypassSide::back);
      std::cout << a3::slope_to_string(out) << "\n";
      return kExitOk;
    }
    if (path_cmd->parsed()) {
      const a3::FareyPath p =
          a3::shortest_farey_path(a3::parse_slope(opt.from), a3::parse_slope(opt.to));
      for (std::size_t i = 0; i < p.nodes.size(); ++i)
        std::cout << (i ? " " : "") << a3::slope_to_string(p.nodes[i]);
      std::cout << "\n";
      for (const auto& b : a3::block_decompose(p))
        std::cout << "block edges " << b.first_edge << ".." << b.last_edge << " (size "
                  << b.size() << ")\n";
      return kExitOk;
    }
    if (verify_cmd->parsed()) return run_verify(opt);
    if (mountain_cmd->parsed()) {
      const auto axis = opt.axis == "k2" ? a3::MountainAxis::k2 : a3::MountainAxis::k0;
      const auto fams =
          axis == a3::MountainAxis::k0
              ? a3::mountain_range(opt.t1, opt.t2, opt.lo, opt.hi, axis)
              : a3::mountain_range(opt.t0, 0, opt.lo, opt.hi, axis);
      std::cout << a3::mountain_to_dot(fams, axis);
      return kExitOk;
    }
  } catch (const a3::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsage;
}

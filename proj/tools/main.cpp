// hydrocomp CLI: single-orbital reports, figure sweeps, bound-ratio tables,
// density profiles, quadratic fits and the closed-form-vs-oracle validation
// suite.  Exit codes: 0 success, 1 validation failure or runtime error,
// 2 usage/domain error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hydrocomp/entropy.hpp"
#include "hydrocomp/measures.hpp"
#include "hydrocomp/oracle.hpp"
#include "hydrocomp/orbital.hpp"
#include "table.hpp"

namespace {

using hydrocomp::cli::csv_rounded;
using hydrocomp::cli::format_number;
using hydrocomp::cli::OutputStream;
using hydrocomp::cli::Table;
using hydrocomp::entropy::QuadratureSettings;
using hydrocomp::measures::MeasureKind;
using hydrocomp::measures::MeasureReport;
using hydrocomp::orbital::QuantumNumbers;
using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

QuadratureSettings make_settings(int quad_max_order) {
  QuadratureSettings settings;
  if (quad_max_order > 0) {
    std::erase_if(settings.order_ladder,
                  [&](int o) { return o > quad_max_order; });
    if (settings.order_ladder.empty())
      throw std::invalid_argument(
          "quad-max-order below the smallest ladder order (64)");
  }
  return settings;
}

void run_parallel(int jobs, int count, const std::function<void(int)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min(jobs, count);
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

json report_to_json(const MeasureReport& rep) {
  json j;
  j["n"] = rep.q.n;
  j["l"] = rep.q.l;
  j["m"] = rep.q.m;
  j["Z"] = csv_rounded(rep.q.Z);
  j["energy"] = csv_rounded(hydrocomp::orbital::energy(rep.q));
  j["variance"] = csv_rounded(rep.variance);
  j["fisher"] = csv_rounded(rep.fisher);
  j["shannon"] = csv_rounded(rep.shannon);
  j["entropic_power"] = csv_rounded(rep.entropic_power);
  j["disequilibrium"] = csv_rounded(rep.disequilibrium);
  j["cramer_rao"] = csv_rounded(rep.cramer_rao);
  j["fisher_shannon"] = csv_rounded(rep.fisher_shannon);
  j["shape_complexity"] = csv_rounded(rep.shape_complexity);
  j["bound_fs"] = csv_rounded(rep.bound_fs);
  j["bound_sc"] = csv_rounded(rep.bound_sc);
  j["xi_fs"] = csv_rounded(rep.xi_fs);
  j["xi_sc"] = csv_rounded(rep.xi_sc);
  j["quadrature"] = {{"e1_order", rep.entropy.e1_order},
                     {"e1_delta", csv_rounded(rep.entropy.e1_delta)},
                     {"eg_order", rep.entropy.eg_order},
                     {"eg_delta", csv_rounded(rep.entropy.eg_delta)}};
  return j;
}

int cmd_orbital(int n, int l, int m, double Z, const std::string& format,
                const std::string& out, int quad_max_order) {
  const QuadratureSettings settings = make_settings(quad_max_order);
  const QuantumNumbers q(n, l, m, Z);
  const MeasureReport rep = hydrocomp::measures::report(q, settings);
  OutputStream os(out);
  if (format == "json") {
    os.get() << report_to_json(rep).dump(2) << '\n';
    return 0;
  }
  Table table({"n", "l", "m", "Z", "energy", "variance", "fisher", "shannon",
               "entropic_power", "disequilibrium", "cramer_rao",
               "fisher_shannon", "shape_complexity", "bound_fs", "bound_sc",
               "xi_fs", "xi_sc", "e1_order", "e1_delta", "eg_order",
               "eg_delta"});
  table.row()
      .add(q.n)
      .add(q.l)
      .add(q.m)
      .add(q.Z)
      .add(hydrocomp::orbital::energy(q))
      .add(rep.variance)
      .add(rep.fisher)
      .add(rep.shannon)
      .add(rep.entropic_power)
      .add(rep.disequilibrium)
      .add(rep.cramer_rao)
      .add(rep.fisher_shannon)
      .add(rep.shape_complexity)
      .add(rep.bound_fs)
      .add(rep.bound_sc)
      .add(rep.xi_fs)
      .add(rep.xi_sc)
      .add(rep.entropy.e1_order)
      .add(rep.entropy.e1_delta)
      .add(rep.entropy.eg_order)
      .add(rep.entropy.eg_delta);
  table.write_csv(os.get());
  return 0;
}

struct SweepOptions {
  std::string vary;
  int from = 0;
  int to = 0;
  int fixed_n = 1;
  int fixed_l = 0;
  int fixed_m = 0;
  double Z = 1.0;
  std::vector<std::string> measures;
  bool normalize = true;
  int jobs = 1;
  int quad_max_order = 0;
  std::string format = "csv";
  std::string out;
};

int cmd_sweep(const SweepOptions& opt) {
  static const std::vector<std::string> kMeasureColumns = {
      "V", "I", "S", "H", "deseq", "C_CR", "C_FS", "C_SC"};
  std::vector<std::string> selected =
      opt.measures.empty() ? kMeasureColumns : opt.measures;
  for (const auto& m : selected) {
    if (std::find(kMeasureColumns.begin(), kMeasureColumns.end(), m) ==
        kMeasureColumns.end())
      throw std::invalid_argument("unknown measure selector: " + m);
  }
  if (opt.from > opt.to)
    throw std::invalid_argument("sweep range requires from <= to");

  const QuadratureSettings settings = make_settings(opt.quad_max_order);

  // Ground-state denominators under the same quadrature settings as the rows.
  const QuantumNumbers gs(1, 0, 0, opt.Z);
  const double den_cr = hydrocomp::measures::cramer_rao(gs);
  const double den_fs = hydrocomp::measures::fisher_shannon(gs, settings);
  const double den_sc = hydrocomp::measures::shape_complexity(gs, settings);

  struct Row {
    int n, l, m;
    std::string error;
    std::map<std::string, double> values;
  };
  const int count = opt.to - opt.from + 1;
  std::vector<Row> rows(count);
  run_parallel(opt.jobs, count, [&](int i) {
    Row& row = rows[i];
    const int v = opt.from + i;
    row.n = opt.vary == "n" ? v : opt.fixed_n;
    row.l = opt.vary == "l" ? v : opt.fixed_l;
    row.m = opt.vary == "m" ? v : opt.fixed_m;
    try {
      const QuantumNumbers q(row.n, row.l, row.m, opt.Z);
      const MeasureReport rep = hydrocomp::measures::report(q, settings);
      row.values["V"] = rep.variance;
      row.values["I"] = rep.fisher;
      row.values["S"] = rep.shannon;
      row.values["H"] = rep.entropic_power;
      row.values["deseq"] = rep.disequilibrium;
      row.values["C_CR"] = rep.cramer_rao;
      row.values["C_FS"] = rep.fisher_shannon;
      row.values["C_SC"] = rep.shape_complexity;
      row.values["zeta_CR"] = rep.cramer_rao / den_cr;
      row.values["zeta_FS"] = rep.fisher_shannon / den_fs;
      row.values["zeta_SC"] = rep.shape_complexity / den_sc;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });

  std::vector<std::string> header = {"n", "l", "m", "Z"};
  header.insert(header.end(), selected.begin(), selected.end());
  if (opt.normalize)
    header.insert(header.end(), {"zeta_CR", "zeta_FS", "zeta_SC"});
  header.push_back("error");

  OutputStream os(opt.out);
  if (opt.format == "json") {
    json arr = json::array();
    for (const Row& row : rows) {
      json j;
      j["n"] = row.n;
      j["l"] = row.l;
      j["m"] = row.m;
      j["Z"] = csv_rounded(opt.Z);
      for (std::size_t c = 4; c + 1 < header.size(); ++c) {
        const std::string& name = header[c];
        if (row.error.empty())
          j[name] = csv_rounded(row.values.at(name));
        else
          j[name] = nullptr;
      }
      j["error"] = row.error;
      arr.push_back(std::move(j));
    }
    os.get() << arr.dump(2) << '\n';
    return 0;
  }

  Table table(header);
  for (const Row& row : rows) {
    auto builder = table.row();
    builder.add(row.n).add(row.l).add(row.m).add(opt.Z);
    for (std::size_t c = 4; c + 1 < header.size(); ++c) {
      if (row.error.empty())
        builder.add(row.values.at(header[c]));
      else
        builder.add(std::string());
    }
    builder.add(row.error);
  }
  table.write_csv(os.get());
  return 0;
}

int cmd_bounds(int n_max, double Z, const std::string& format,
               const std::string& out, int quad_max_order, int jobs) {
  if (n_max < 1) throw std::invalid_argument("bounds requires n-max >= 1");
  const QuadratureSettings settings = make_settings(quad_max_order);

  std::vector<std::pair<int, int>> orbitals;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 0; l < n; ++l) orbitals.emplace_back(n, l);

  struct Row {
    int n, l;
    double cfs, bfs, xfs, csc, bsc, xsc;
  };
  std::vector<Row> rows(orbitals.size());
  run_parallel(jobs, static_cast<int>(orbitals.size()), [&](int i) {
    const auto [n, l] = orbitals[i];
    const QuantumNumbers q(n, l, 0, Z);
    const double cfs = hydrocomp::measures::fisher_shannon(q, settings);
    const double csc = hydrocomp::measures::shape_complexity(q, settings);
    const auto b = hydrocomp::measures::bounds(q, settings);
    rows[i] = Row{n, l, cfs, b.bound_fs, b.xi_fs, csc, b.bound_sc, b.xi_sc};
  });

  OutputStream os(out);
  if (format == "json") {
    json arr = json::array();
    for (const Row& r : rows) {
      arr.push_back({{"n", r.n},
                     {"l", r.l},
                     {"m", 0},
                     {"C_FS", csv_rounded(r.cfs)},
                     {"B_FS", csv_rounded(r.bfs)},
                     {"xi_FS", csv_rounded(r.xfs)},
                     {"C_SC", csv_rounded(r.csc)},
                     {"B_SC", csv_rounded(r.bsc)},
                     {"xi_SC", csv_rounded(r.xsc)}});
    }
    os.get() << arr.dump(2) << '\n';
    return 0;
  }
  Table table({"n", "l", "m", "C_FS", "B_FS", "xi_FS", "C_SC", "B_SC",
               "xi_SC"});
  for (const Row& r : rows) {
    table.row()
        .add(r.n)
        .add(r.l)
        .add(0)
        .add(r.cfs)
        .add(r.bfs)
        .add(r.xfs)
        .add(r.csc)
        .add(r.bsc)
        .add(r.xsc);
  }
  table.write_csv(os.get());
  return 0;
}

int cmd_profiles(int n, int l, int m, double Z, double r_max,
                 int radial_points, int angular_points,
                 const std::string& out) {
  const QuantumNumbers q(n, l, m, Z);
  hydrocomp::orbital::GridSpec grid = hydrocomp::orbital::default_grid(q);
  if (r_max > 0.0) grid.r_max = r_max;
  if (radial_points > 0) grid.radial_points = radial_points;
  if (angular_points > 0) grid.angular_points = angular_points;
  const auto profiles = hydrocomp::orbital::sample_profiles(q, grid);

  Table radial({"r", "D"});
  for (std::size_t i = 0; i < profiles.radial.abscissas.size(); ++i)
    radial.row()
        .add(profiles.radial.abscissas[i])
        .add(profiles.radial.values[i]);
  Table angular({"theta", "Theta"});
  for (std::size_t i = 0; i < profiles.angular.abscissas.size(); ++i)
    angular.row()
        .add(profiles.angular.abscissas[i])
        .add(profiles.angular.values[i]);

  if (out.empty()) {
    radial.write_csv(std::cout);
    std::cout << '\n';
    angular.write_csv(std::cout);
    return 0;
  }
  OutputStream ros(out + "_radial.csv");
  radial.write_csv(ros.get());
  OutputStream aos(out + "_angular.csv");
  angular.write_csv(aos.get());
  return 0;
}

int cmd_fit(int l, int m, int n_from, int n_to, const std::string& format,
            const std::string& out, int quad_max_order) {
  const QuadratureSettings settings = make_settings(quad_max_order);
  if (n_from <= 0) n_from = l + 1;
  if (n_to <= 0) n_to = hydrocomp::measures::kDefaultFitLastN;
  const auto fit = hydrocomp::measures::fit_fisher_shannon_quadratic(
      l, m, n_from, n_to, settings);

  OutputStream os(out);
  if (format == "csv") {
    Table table({"l", "m", "n_from", "n_to", "a", "b", "c", "R"});
    table.row()
        .add(l)
        .add(m)
        .add(n_from)
        .add(n_to)
        .add(fit.a)
        .add(fit.b)
        .add(fit.c)
        .add(fit.r);
    table.write_csv(os.get());
    return 0;
  }
  const double ground = hydrocomp::measures::fisher_shannon(
      QuantumNumbers(1, 0, 0), settings);
  json points = json::array();
  for (int n = n_from; n <= n_to; ++n) {
    const double cfs = hydrocomp::measures::fisher_shannon(
        QuantumNumbers(n, l, m), settings);
    points.push_back({{"n", n},
                      {"c_fs", csv_rounded(cfs)},
                      {"zeta_fs", csv_rounded(cfs / ground)}});
  }
  const json j = {{"l", l},
                  {"m", m},
                  {"n_from", n_from},
                  {"n_to", n_to},
                  {"fitted_quantity", "zeta_fs"},
                  {"a", csv_rounded(fit.a)},
                  {"b", csv_rounded(fit.b)},
                  {"c", csv_rounded(fit.c)},
                  {"R", csv_rounded(fit.r)},
                  {"r_definition", "pearson(fitted, computed)"},
                  {"points", points}};
  os.get() << j.dump(2) << '\n';
  return 0;
}

int cmd_validate(int n_max, double Z, double tol_override, bool allow_large,
                 int jobs, const std::string& format, const std::string& out,
                 int quad_max_order) {
  if (n_max < 1) throw std::invalid_argument("validate requires n-max >= 1");
  if (n_max > 8 && !allow_large)
    throw std::invalid_argument(
        "validate n-max > 8 is slow; pass --allow-large to override");
  const QuadratureSettings settings = make_settings(quad_max_order);

  std::vector<QuantumNumbers> orbitals;
  for (int n = 1; n <= n_max; ++n)
    for (int l = 0; l < n; ++l)
      for (int m = 0; m <= l; ++m) orbitals.emplace_back(n, l, m, Z);

  struct Check {
    int n, l, m;
    std::string quantity;
    double closed = 0.0, oracle = 0.0, abs_diff = 0.0, rel_diff = 0.0;
    double tol = 0.0;
    std::string mode;  // "rel" or "abs"
    bool pass = false;
    std::string error;
  };
  std::vector<std::array<Check, 4>> all(orbitals.size());

  run_parallel(jobs, static_cast<int>(orbitals.size()), [&](int i) {
    const QuantumNumbers& q = orbitals[i];
    auto make = [&](const std::string& quantity, double closed, double oracle,
                    double tol, bool rel) {
      Check c;
      c.n = q.n;
      c.l = q.l;
      c.m = q.m;
      c.quantity = quantity;
      c.closed = closed;
      c.oracle = oracle;
      c.abs_diff = std::abs(closed - oracle);
      c.rel_diff = oracle != 0.0 ? c.abs_diff / std::abs(oracle) : c.abs_diff;
      c.tol = tol_override >= 0.0 ? tol_override : tol;
      c.mode = rel ? "rel" : "abs";
      c.pass = (rel ? c.rel_diff : c.abs_diff) <= c.tol;
      return c;
    };
    try {
      const auto m1 = hydrocomp::oracle::moment(q, 1);
      const auto m2 = hydrocomp::oracle::moment(q, 2);
      const double v_oracle = m2.value - m1.value * m1.value;
      all[i][0] = make("V", hydrocomp::measures::variance(q), v_oracle, 1e-8,
                       true);
      all[i][1] = make("I", hydrocomp::measures::fisher(q),
                       hydrocomp::oracle::fisher(q).value, 1e-6, true);
      all[i][2] = make("deseq", hydrocomp::measures::disequilibrium(q),
                       hydrocomp::oracle::disequilibrium(q).value, 1e-8, true);
      all[i][3] =
          make("S", hydrocomp::entropy::shannon_entropy(q, settings).s_total,
               hydrocomp::oracle::shannon(q).value, 1e-7, false);
    } catch (const std::exception& e) {
      for (auto& c : all[i]) {
        if (c.quantity.empty()) {
          c.n = q.n;
          c.l = q.l;
          c.m = q.m;
          c.quantity = "error";
          c.error = e.what();
          c.pass = false;
        }
      }
    }
  });

  bool all_pass = true;
  OutputStream os(out);
  Table table({"n", "l", "m", "Z", "quantity", "closed_form", "oracle",
               "abs_diff", "rel_diff", "tolerance", "mode", "pass"});
  json arr = json::array();
  for (const auto& checks : all) {
    for (const Check& c : checks) {
      if (c.quantity.empty()) continue;
      all_pass = all_pass && c.pass;
      if (format == "json") {
        json j = {{"n", c.n},
                  {"l", c.l},
                  {"m", c.m},
                  {"Z", csv_rounded(Z)},
                  {"quantity", c.quantity},
                  {"closed_form", csv_rounded(c.closed)},
                  {"oracle", csv_rounded(c.oracle)},
                  {"abs_diff", csv_rounded(c.abs_diff)},
                  {"rel_diff", csv_rounded(c.rel_diff)},
                  {"tolerance", csv_rounded(c.tol)},
                  {"mode", c.mode},
                  {"pass", c.pass}};
        if (!c.error.empty()) j["error"] = c.error;
        arr.push_back(std::move(j));
      } else {
        table.row()
            .add(c.n)
            .add(c.l)
            .add(c.m)
            .add(Z)
            .add(c.error.empty() ? c.quantity : c.quantity + ": " + c.error)
            .add(c.closed)
            .add(c.oracle)
            .add(c.abs_diff)
            .add(c.rel_diff)
            .add(c.tol)
            .add(c.mode)
            .add(c.pass ? 1 : 0);
      }
    }
  }
  if (format == "json")
    os.get() << arr.dump(2) << '\n';
  else
    table.write_csv(os.get());
  return all_pass ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hydrocomp: information-theoretic measures and complexities of "
      "hydrogenic orbitals (n, l, m, Z)"};
  app.require_subcommand(1);

  // orbital
  int n = 1, l = 0, m = 0;
  double Z = 1.0;
  std::string format = "csv", out;
  int quad_max_order = 0;
  auto* orbital_cmd =
      app.add_subcommand("orbital", "Full measure report for one orbital");
  orbital_cmd->add_option("n", n, "principal quantum number")->required();
  orbital_cmd->add_option("l", l, "orbital quantum number")->required();
  orbital_cmd->add_option("m", m, "magnetic quantum number")->required();
  orbital_cmd->add_option("--Z", Z, "nuclear charge (default 1)");
  orbital_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  orbital_cmd->add_option("--out", out, "output path (default stdout)");
  orbital_cmd->add_option("--quad-max-order", quad_max_order,
                          "cap the quadrature order ladder");

  // sweep
  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Measure table over a range of one quantum number");
  sweep_cmd->add_option("--vary", sweep.vary, "quantum number to vary")
      ->required()
      ->check(CLI::IsMember({"n", "l", "m"}));
  sweep_cmd->add_option("--from", sweep.from, "range start (inclusive)")
      ->required();
  sweep_cmd->add_option("--to", sweep.to, "range end (inclusive)")->required();
  sweep_cmd->add_option("--n", sweep.fixed_n, "fixed n");
  sweep_cmd->add_option("--l", sweep.fixed_l, "fixed l");
  sweep_cmd->add_option("--m", sweep.fixed_m, "fixed m");
  sweep_cmd->add_option("--Z", sweep.Z, "nuclear charge (default 1)");
  sweep_cmd->add_option("--measures", sweep.measures,
                        "subset of V,I,S,H,deseq,C_CR,C_FS,C_SC")
      ->delimiter(',');
  sweep_cmd->add_flag("!--no-normalize", sweep.normalize,
                      "drop the zeta ratio columns");
  sweep_cmd->add_option("--jobs", sweep.jobs, "worker threads (default 1)");
  sweep_cmd->add_option("--quad-max-order", sweep.quad_max_order,
                        "cap the quadrature order ladder");
  sweep_cmd->add_option("--format", sweep.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--out", sweep.out, "output path (default stdout)");

  // bounds
  int bounds_n_max = 6;
  int bounds_jobs = 1;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Upper-bound ratios xi_FS, xi_SC for all (n, l, m=0)");
  bounds_cmd->add_option("--n-max", bounds_n_max, "largest n (default 6)");
  bounds_cmd->add_option("--Z", Z, "nuclear charge (default 1)");
  bounds_cmd->add_option("--jobs", bounds_jobs, "worker threads (default 1)");
  bounds_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  bounds_cmd->add_option("--out", out, "output path (default stdout)");
  bounds_cmd->add_option("--quad-max-order", quad_max_order,
                         "cap the quadrature order ladder");

  // profiles
  double r_max = 0.0;
  int radial_points = 0, angular_points = 0;
  auto* profiles_cmd = app.add_subcommand(
      "profiles", "Radial D(r) and angular Theta(theta) density tables");
  profiles_cmd->add_option("n", n, "principal quantum number")->required();
  profiles_cmd->add_option("l", l, "orbital quantum number")->required();
  profiles_cmd->add_option("m", m, "magnetic quantum number")->required();
  profiles_cmd->add_option("--Z", Z, "nuclear charge (default 1)");
  profiles_cmd->add_option("--r-max", r_max,
                           "radial extent (default 5 n^2/Z)");
  profiles_cmd->add_option("--radial-points", radial_points,
                           "radial grid points (default 2000)");
  profiles_cmd->add_option("--angular-points", angular_points,
                           "angular grid points (default 1000)");
  profiles_cmd->add_option(
      "--out", out, "output prefix; writes <out>_radial.csv and "
                    "<out>_angular.csv (default: both tables to stdout)");

  // fit
  int fit_l = 0, fit_m = 0, n_from = 0, n_to = 0;
  std::string fit_format = "json";
  auto* fit_cmd = app.add_subcommand(
      "fit",
      "Quadratic fit of the ground-state-normalized Fisher-Shannon measure, "
      "zeta_FS(n) = a n^2 + b n + c, at fixed (l, m)");
  fit_cmd->add_option("--l", fit_l, "orbital quantum number")->required();
  fit_cmd->add_option("--m", fit_m, "magnetic quantum number")->required();
  fit_cmd->add_option("--n-from", n_from, "first n (default l+1)");
  fit_cmd->add_option("--n-to", n_to, "last n (default 20)");
  fit_cmd->add_option("--format", fit_format, "json or csv")
      ->check(CLI::IsMember({"csv", "json"}));
  fit_cmd->add_option("--out", out, "output path (default stdout)");
  fit_cmd->add_option("--quad-max-order", quad_max_order,
                      "cap the quadrature order ladder");

  // validate
  int validate_n_max = 6;
  double tol_override = -1.0;
  bool allow_large = false;
  int validate_jobs = 1;
  auto* validate_cmd = app.add_subcommand(
      "validate",
      "Check closed forms against the brute-force oracle; exit 0 iff all "
      "checks pass");
  validate_cmd->add_option("--n-max", validate_n_max,
                           "validate all orbitals up to n (default 6)");
  validate_cmd->add_option("--Z", Z, "nuclear charge (default 1)");
  validate_cmd->add_option(
      "--tol", tol_override,
      "override every per-quantity tolerance with this value");
  validate_cmd->add_flag("--allow-large", allow_large,
                         "lift the n-max <= 8 runtime guard");
  validate_cmd->add_option("--jobs", validate_jobs,
                           "worker threads (default 1)");
  validate_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  validate_cmd->add_option("--out", out, "output path (default stdout)");
  validate_cmd->add_option("--quad-max-order", quad_max_order,
                           "cap the quadrature order ladder");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (orbital_cmd->parsed())
      return cmd_orbital(n, l, m, Z, format, out, quad_max_order);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep);
    if (bounds_cmd->parsed())
      return cmd_bounds(bounds_n_max, Z, format, out, quad_max_order,
                        bounds_jobs);
    if (profiles_cmd->parsed())
      return cmd_profiles(n, l, m, Z, r_max, radial_points, angular_points,
                          out);
    if (fit_cmd->parsed())
      return cmd_fit(fit_l, fit_m, n_from, n_to, fit_format, out,
                     quad_max_order);
    if (validate_cmd->parsed())
      return cmd_validate(validate_n_max, Z, tol_override, allow_large,
                          validate_jobs, format, out, quad_max_order);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

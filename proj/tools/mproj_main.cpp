// mproj: masked projection error bounds on the benchmark problems.

#include "mproj/experiment.hpp"
#include "mproj/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

namespace {

using namespace mproj;

int finish(const std::vector<ExperimentRow>& rows, OutputFormat format,
           const std::string& out, bool strict, bool timing) {
  emit_table(rows, format, out, timing);
  bool failed = false;
  for (const ExperimentRow& row : rows) {
    if (!row.ok) {
      failed = true;
      std::cerr << "m=" << row.report.m << " failed: " << row.failure << '\n';
    }
  }
  return failed && strict ? 2 : 0;
}

int print_suite(const std::vector<CheckResult>& results) {
  bool ok = true;
  for (const CheckResult& r : results) {
    if (r.informational) {
      std::cout << "[INFO] " << r.name << ": " << r.detail << '\n';
      continue;
    }
    ok = ok && r.passed;
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " ("
              << r.cases << " cases, worst/tol " << std::setprecision(3)
              << r.worst << ")\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Masked projection error bounds"};
  app.require_subcommand(1);

  const std::map<std::string, ExampleKind> examples{
      {"1", ExampleKind::One}, {"2", ExampleKind::Two},
      {"external", ExampleKind::External}};
  const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

  ExperimentConfig cfg;
  cfg.m_list = {4, 6, 8, 10, 12};
  bool strict = false;
  bool no_timing = false;
  double mu_lo = 0.0, mu_hi = 0.0;

  auto* run = app.add_subcommand("run", "Run a custom sweep over m");
  run->add_option("--example", cfg.example, "1, 2 or external")
      ->transform(CLI::CheckedTransformer(examples))
      ->required();
  run->add_option("--nx", cfg.nx, "Grid points in x");
  run->add_option("--ny", cfg.ny, "Grid points in y (example 1)");
  run->add_option("--train", cfg.n_train, "Training parameter count");
  run->add_option("--test", cfg.n_test, "Test parameter count");
  run->add_option("--m", cfg.m_list, "Interpolation point counts")
      ->delimiter(',');
  auto* lo_opt = run->add_option("--mu-lo", mu_lo, "Parameter interval start");
  auto* hi_opt = run->add_option("--mu-hi", mu_hi, "Parameter interval end");
  run->add_option("--train-file", cfg.train_file, "Training snapshot CSV");
  run->add_option("--test-file", cfg.test_file, "Test snapshot CSV");
  run->add_option("--out", cfg.output, "Output path ('-' for stdout)")
      ->default_val("-");
  run->add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(formats));
  run->add_flag("--strict", strict, "Exit nonzero if any row failed");
  run->add_flag("--no-timing", no_timing, "Write runtime_ms as 0");

  int table = 1;
  std::string table_out = "-";
  OutputFormat table_format = OutputFormat::Csv;
  auto* tab = app.add_subcommand("table", "Reproduce a benchmark table (1-4)");
  tab->add_option("table", table, "Table number")
      ->check(CLI::Range(1, 4))
      ->required();
  tab->add_option("--out", table_out, "Output path ('-' for stdout)");
  tab->add_option("--format", table_format, "csv or json")
      ->transform(CLI::CheckedTransformer(formats));
  tab->add_flag("--strict", strict, "Exit nonzero if any row failed");
  tab->add_flag("--no-timing", no_timing, "Write runtime_ms as 0");

  VerifyOptions vopt;
  auto* ver = app.add_subcommand("verify", "Run the randomized property suite");
  ver->add_option("--seed", vopt.seed, "RNG seed");
  ver->add_option("--instances", vopt.instances, "Number of random instances")
      ->check(CLI::PositiveNumber);

  int export_m = 0;
  std::string basis_out, mask_out;
  auto* exp = app.add_subcommand(
      "export", "Write training snapshots (and optionally U1 / mask) as CSV");
  exp->add_option("--example", cfg.example, "1 or 2")
      ->transform(CLI::CheckedTransformer(examples))
      ->required();
  exp->add_option("--nx", cfg.nx, "Grid points in x");
  exp->add_option("--ny", cfg.ny, "Grid points in y (example 1)");
  exp->add_option("--train", cfg.n_train, "Parameter count");
  exp->add_option("--out", cfg.output, "Snapshot CSV path")->required();
  exp->add_option("--m", export_m, "Basis rank for --basis-out/--mask-out");
  exp->add_option("--basis-out", basis_out, "U1 CSV path");
  exp->add_option("--mask-out", mask_out, "DEIM mask path (1-based indices)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      if (*lo_opt) cfg.mu_lo = mu_lo;
      if (*hi_opt) cfg.mu_hi = mu_hi;
      return finish(run_experiment(cfg), cfg.format, cfg.output, strict,
                    !no_timing);
    }
    if (*tab) {
      return finish(run_experiment(table_preset(table)), table_format,
                    table_out, strict, !no_timing);
    }
    if (*ver) {
      return print_suite(run_property_suite(vopt));
    }
    if (*exp) {
      if (cfg.example == ExampleKind::External) {
        throw ConfigError("export supports examples 1 and 2 only");
      }
      const double lo = cfg.example == ExampleKind::One ? Example1Domain::mu_lo
                                                        : Example2Domain::mu_lo;
      const double hi = cfg.example == ExampleKind::One ? Example1Domain::mu_hi
                                                        : Example2Domain::mu_hi;
      const Grid1D mu(lo, hi, cfg.n_train);
      const SnapshotMatrix s = cfg.example == ExampleKind::One
                                   ? build_snapshots_ex1(cfg.nx, cfg.ny, mu)
                                   : build_snapshots_ex2(cfg.nx, mu);
      write_snapshot_csv(cfg.output, s);
      if (!basis_out.empty() || !mask_out.empty()) {
        const PodBasis basis = pod_basis(s, export_m);
        if (!basis_out.empty()) write_matrix_csv(basis_out, basis.u1, "pod-u1");
        if (!mask_out.empty()) {
          std::ofstream os(mask_out);
          if (!os) throw Error("cannot open '" + mask_out + "'");
          os << deim_select(basis.u1).to_csv_line() << '\n';
        }
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#include "mproj/experiment.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace mproj {

namespace {

struct Domain {
  double lo;
  double hi;
};

Domain mu_domain(const ExperimentConfig& cfg) {
  Domain d{Example1Domain::mu_lo, Example1Domain::mu_hi};
  if (cfg.example == ExampleKind::Two) {
    d = {Example2Domain::mu_lo, Example2Domain::mu_hi};
  }
  if (cfg.mu_lo) d.lo = *cfg.mu_lo;
  if (cfg.mu_hi) d.hi = *cfg.mu_hi;
  return d;
}

SnapshotMatrix build(const ExperimentConfig& cfg, int count) {
  const Domain d = mu_domain(cfg);
  const Grid1D mu(d.lo, d.hi, count);
  if (cfg.example == ExampleKind::One) {
    return build_snapshots_ex1(cfg.nx, cfg.ny, mu);
  }
  return build_snapshots_ex2(cfg.nx, mu);
}

Index read_csv_rows(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open '" + path + "'");
  std::string line;
  std::getline(is, line);
  try {
    return static_cast<Index>(std::stoll(line.substr(0, line.find(','))));
  } catch (const std::exception&) {
    throw ConfigError("'" + path + "': bad matrix csv header");
  }
}

}  // namespace

Index config_dimension(const ExperimentConfig& cfg) {
  switch (cfg.example) {
    case ExampleKind::One:
      return static_cast<Index>(cfg.nx) * cfg.ny;
    case ExampleKind::Two:
      return cfg.nx;
    case ExampleKind::External:
      return read_csv_rows(cfg.train_file);
  }
  return 0;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.example == ExampleKind::External) {
    if (cfg.train_file.empty() || cfg.test_file.empty()) {
      throw ConfigError("external example needs --train-file and --test-file");
    }
  } else {
    if (cfg.nx < 2) throw ConfigError("nx must be >= 2");
    if (cfg.example == ExampleKind::One && cfg.ny < 2) {
      throw ConfigError("ny must be >= 2");
    }
    if (cfg.n_train < 2) throw ConfigError("train count must be >= 2");
    if (cfg.n_test < 2) throw ConfigError("test count must be >= 2");
    const Domain d = mu_domain(cfg);
    if (!(d.lo < d.hi)) throw ConfigError("parameter interval must have lo < hi");
  }
  if (cfg.m_list.empty()) throw ConfigError("empty m list");
  const Index n = config_dimension(cfg);
  for (int m : cfg.m_list) {
    if (m < 1 || m >= n) {
      throw ConfigError("m=" + std::to_string(m) + " outside [1, n) with n=" +
                        std::to_string(n));
    }
  }
}

ExperimentConfig table_preset(int table) {
  ExperimentConfig cfg;
  switch (table) {
    case 1:
      cfg.example = ExampleKind::One;
      cfg.nx = cfg.ny = 30;
      cfg.n_train = 225;
      cfg.n_test = 400;
      cfg.m_list = {4, 6, 8, 10, 12};
      break;
    case 2:
      cfg.example = ExampleKind::One;
      cfg.nx = cfg.ny = 40;
      cfg.n_train = 225;
      cfg.n_test = 400;
      cfg.m_list = {4, 6, 8, 10, 12, 14};
      break;
    case 3:
      cfg.example = ExampleKind::Two;
      cfg.nx = 100;
      cfg.ny = 0;
      cfg.n_train = 50;
      cfg.n_test = 101;
      cfg.m_list = {4, 6, 8, 10, 14};
      break;
    case 4:
      cfg.example = ExampleKind::Two;
      cfg.nx = 200;
      cfg.ny = 0;
      cfg.n_train = 50;
      cfg.n_test = 101;
      cfg.m_list = {4, 6, 10, 14, 16};
      break;
    default:
      throw ConfigError("unknown table " + std::to_string(table) +
                        " (expected 1..4)");
  }
  return cfg;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  SnapshotMatrix train;
  SnapshotMatrix test;
  if (cfg.example == ExampleKind::External) {
    train = read_snapshot_csv(cfg.train_file);
    test = read_snapshot_csv(cfg.test_file);
    if (test.rows() != train.rows()) {
      throw ConfigError("train and test files disagree on n");
    }
  } else {
    train = build(cfg, cfg.n_train);
    test = build(cfg, cfg.n_test);
  }
  const PodFactorization pod(train);

  std::vector<ExperimentRow> rows;
  rows.reserve(cfg.m_list.size());
  for (int m : cfg.m_list) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentRow row;
    row.report.m = m;
    row.report.n = train.rows();
    row.report.n_samples = test.cols();
    try {
      const PodBasis basis = pod.basis(m);
      const SelectionOperator p = deim_select(basis.u1);
      row.report = evaluate_all(basis, p, test).report;
    } catch (const Error& e) {
      row.ok = false;
      row.failure = e.what();
    } catch (const std::invalid_argument& e) {
      row.ok = false;
      row.failure = e.what();
    }
    row.report.runtime_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<ExperimentRow>& rows, bool include_timing) {
  std::ostringstream os;
  os << kTableHeader << '\n';
  for (const ExperimentRow& row : rows) {
    const BoundReport& r = row.report;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto val = [&](double v) { return format_double(row.ok ? v : nan); };
    os << r.m << ',' << val(r.avg_err) << ',' << val(r.b_thm1) << ','
       << val(r.b_thm2) << ',' << val(r.b_qdeim) << ',' << val(r.sigma_min)
       << ',' << r.n << ',' << r.n_samples << ','
       << format_double(include_timing ? r.runtime_ms : 0.0) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const std::vector<ExperimentRow>& rows,
                       bool include_timing) {
  nlohmann::json out = nlohmann::json::array();
  for (const ExperimentRow& row : rows) {
    const BoundReport& r = row.report;
    nlohmann::json j{{"m", r.m},
                     {"n", r.n},
                     {"N", r.n_samples},
                     {"runtime_ms", include_timing ? r.runtime_ms : 0.0},
                     {"status", row.ok ? "ok" : "failed"}};
    if (row.ok) {
      j["avg_err"] = r.avg_err;
      j["b_thm1"] = r.b_thm1;
      j["b_thm2"] = r.b_thm2;
      j["b_qdeim"] = r.b_qdeim;
      j["sigma_min"] = r.sigma_min;
    } else {
      j["error"] = row.failure;
    }
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<ExperimentRow> rows_from_json(const nlohmann::json& j) {
  std::vector<ExperimentRow> rows;
  for (const auto& item : j) {
    ExperimentRow row;
    BoundReport& r = row.report;
    r.m = item.at("m").get<int>();
    r.n = item.at("n").get<Index>();
    r.n_samples = item.at("N").get<Index>();
    r.runtime_ms = item.at("runtime_ms").get<double>();
    row.ok = item.at("status").get<std::string>() == "ok";
    if (row.ok) {
      r.avg_err = item.at("avg_err").get<double>();
      r.b_thm1 = item.at("b_thm1").get<double>();
      r.b_thm2 = item.at("b_thm2").get<double>();
      r.b_qdeim = item.at("b_qdeim").get<double>();
      r.sigma_min = item.at("sigma_min").get<double>();
    } else {
      row.failure = item.value("error", "");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_table(const std::vector<ExperimentRow>& rows, OutputFormat format,
                const std::string& path, bool include_timing) {
  if (rows.empty()) throw std::invalid_argument("emit_table: no rows");
  const std::string text = format == OutputFormat::Csv
                               ? to_csv(rows, include_timing)
                               : to_json(rows, include_timing).dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw Error("write to '" + path + "' failed");
}

}  // namespace mproj

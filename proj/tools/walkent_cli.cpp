// Command-line front end: corpus scans to CSV, temperature sweeps,
// small-graph enumeration, extremal search, correlations, classification
// and the maximal-entropy conjecture scan.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "walkent/analysis.hpp"
#include "walkent/canonical.hpp"
#include "walkent/graph6.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;

// "-" selects the standard stream.
std::istream& open_input(const std::string& path, std::unique_ptr<std::ifstream>& holder) {
  if (path.empty() || path == "-") return std::cin;
  holder = std::make_unique<std::ifstream>(path);
  if (!*holder) throw std::invalid_argument("cannot open input file: " + path);
  return *holder;
}

std::ostream& open_output(const std::string& path, std::unique_ptr<std::ofstream>& holder) {
  if (path.empty() || path == "-") return std::cout;
  holder = std::make_unique<std::ofstream>(path);
  if (!*holder) throw std::invalid_argument("cannot open output file: " + path);
  return *holder;
}

void report_line_errors(
    const std::vector<std::pair<std::size_t, std::string>>& errors) {
  for (const auto& [line, message] : errors)
    std::cerr << "parse error at line " << line << ": " << message << "\n";
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"walk entropies of graphs and line graphs"};
  app.require_subcommand(1);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "compute per-graph metrics as CSV");
  std::string scan_in = "-", scan_out = "-", vn_norm = "trace";
  walkent::ScanOptions scan_opts;
  scan_cmd->add_option("--input", scan_in, "graph6 file ('-' = stdin)");
  scan_cmd->add_option("--beta", scan_opts.beta, "inverse temperature")
      ->capture_default_str();
  scan_cmd->add_option("--output", scan_out, "CSV file ('-' = stdout)");
  scan_cmd->add_option("--vn-norm", vn_norm, "von Neumann normalization")
      ->check(CLI::IsMember({"trace", "raw"}))
      ->capture_default_str();

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "walk entropy over a beta grid");
  std::string sweep_g6;
  double beta_min = 1e-3, beta_max = 1e2;
  int points = 200;
  bool linear = false;
  sweep_cmd->add_option("--graph", sweep_g6, "graph6 string")->required();
  sweep_cmd->add_option("--beta-min", beta_min, "")->capture_default_str();
  sweep_cmd->add_option("--beta-max", beta_max, "")->capture_default_str();
  sweep_cmd->add_option("--points", points, "grid size")->capture_default_str();
  sweep_cmd->add_flag("--linear", linear, "linear grid instead of log-spaced");

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "emit graph6 lines, one per isomorphism class");
  int enum_n = 0;
  bool connected_only = false;
  enum_cmd->add_option("--n", enum_n, "node count (1..7)")->required();
  enum_cmd->add_flag("--connected", connected_only, "connected graphs only");

  // extremal
  auto* ext_cmd = app.add_subcommand("extremal", "rank graphs by a metric");
  std::string ext_in = "-", ext_metric;
  bool ext_min = false, ext_max = false;
  std::size_t ext_top = 10;
  double ext_beta = 1.0;
  ext_cmd->add_option("--input", ext_in, "graph6 file ('-' = stdin)");
  ext_cmd->add_option("--metric", ext_metric, "metric field name")->required();
  ext_cmd->add_flag("--min", ext_min, "rank ascending");
  ext_cmd->add_flag("--max", ext_max, "rank descending");
  ext_cmd->add_option("--top", ext_top, "entries to keep")->capture_default_str();
  ext_cmd->add_option("--beta", ext_beta, "inverse temperature")->capture_default_str();

  // corr
  auto* corr_cmd = app.add_subcommand("corr", "correlation table from a scan CSV");
  std::string corr_in = "-";
  corr_cmd->add_option("--input", corr_in, "metrics CSV ('-' = stdin)");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "walk-regularity class of one graph");
  std::string classify_g6;
  classify_cmd->add_option("--graph", classify_g6, "graph6 string")->required();

  // conjecture
  auto* conj_cmd = app.add_subcommand("conjecture", "maximal-entropy counterexample scan");
  std::string conj_in = "-";
  double conj_beta = 1.0, conj_tol = 1e-9;
  conj_cmd->add_option("--input", conj_in, "graph6 file ('-' = stdin)");
  conj_cmd->add_option("--beta", conj_beta, "")->capture_default_str();
  conj_cmd->add_option("--tol", conj_tol, "entropy gap tolerance")->capture_default_str();

  // localize
  auto* loc_cmd = app.add_subcommand("localize", "diagonal communicability per node");
  std::string loc_g6;
  double loc_beta = 1.0;
  loc_cmd->add_option("--graph", loc_g6, "graph6 string")->required();
  loc_cmd->add_option("--beta", loc_beta, "")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (scan_cmd->parsed()) {
    scan_opts.vn_norm = vn_norm == "raw" ? walkent::VnNormalization::Raw
                                         : walkent::VnNormalization::Trace;
    std::unique_ptr<std::ifstream> in_file;
    std::unique_ptr<std::ofstream> out_file;
    std::istream& in = open_input(scan_in, in_file);
    std::ostream& out = open_output(scan_out, out_file);
    walkent::write_csv_header(out);
    const auto outcome = walkent::scan(
        in, scan_opts, [&](const walkent::MetricsRecord& r) { walkent::write_csv_record(out, r); });
    out.flush();
    std::cerr << "scanned " << outcome.records << " graphs";
    if (outcome.skipped_disconnected > 0)
      std::cerr << ", skipped " << outcome.skipped_disconnected << " disconnected";
    std::cerr << "\n";
    report_line_errors(outcome.line_errors);
    return outcome.line_errors.empty() ? kExitOk : kExitParse;
  }

  if (sweep_cmd->parsed()) {
    const walkent::Graph g = walkent::parse_graph6(sweep_g6);
    const auto result = walkent::sweep(g, beta_min, beta_max, points, !linear);
    std::cout << "beta,s_walk\n";
    for (std::size_t i = 0; i < result.beta_grid.size(); ++i)
      std::cout << format_value(result.beta_grid[i]) << ','
                << format_value(result.s_values[i]) << "\n";
    std::cerr << "shape=" << to_string(result.shape);
    if (result.argmin_beta)
      std::cerr << " argmin_beta=" << format_value(*result.argmin_beta);
    std::cerr << " grid=" << points << (linear ? "@linear[" : "@log[") << beta_min
              << ',' << beta_max << "]\n";
    return kExitOk;
  }

  if (enum_cmd->parsed()) {
    const auto emit = [](const walkent::Graph& g) {
      std::cout << walkent::write_graph6(g) << "\n";
    };
    if (connected_only)
      walkent::enumerate_connected(enum_n, emit);
    else
      walkent::enumerate_all(enum_n, emit);
    return kExitOk;
  }

  if (ext_cmd->parsed()) {
    if (ext_min == ext_max)
      throw std::invalid_argument("extremal: exactly one of --min/--max is required");
    std::unique_ptr<std::ifstream> in_file;
    std::istream& in = open_input(ext_in, in_file);
    std::vector<walkent::MetricsRecord> records;
    const auto outcome =
        walkent::scan(in, {ext_beta, walkent::VnNormalization::Trace},
                      [&](const walkent::MetricsRecord& r) { records.push_back(r); });
    report_line_errors(outcome.line_errors);
    const auto ranked = walkent::extremal(records, ext_metric, ext_max, ext_top);
    std::cout << "graph6," << ext_metric << "\n";
    for (const auto& e : ranked)
      std::cout << e.graph6 << ',' << format_value(e.value) << "\n";
    return outcome.line_errors.empty() ? kExitOk : kExitParse;
  }

  if (corr_cmd->parsed()) {
    std::unique_ptr<std::ifstream> in_file;
    std::istream& in = open_input(corr_in, in_file);
    const auto records = walkent::read_metrics_csv(in);
    const auto report = walkent::correlations_report(records);
    std::cout << "pair,r\n";
    for (const auto& [name, r] : report.named)
      std::cout << name << ',' << format_value(r) << "\n";
    std::cout << "\nmetric";
    for (const auto& f : report.fields) std::cout << ',' << f;
    std::cout << "\n";
    for (std::size_t i = 0; i < report.fields.size(); ++i) {
      std::cout << report.fields[i];
      for (std::size_t j = 0; j < report.fields.size(); ++j)
        std::cout << ',' << format_value(report.matrix(i, j));
      std::cout << "\n";
    }
    return kExitOk;
  }

  if (classify_cmd->parsed()) {
    const walkent::Graph g = walkent::parse_graph6(classify_g6);
    std::cout << to_string(walkent::classify(g)) << "\n";
    return kExitOk;
  }

  if (conj_cmd->parsed()) {
    std::unique_ptr<std::ifstream> in_file;
    std::istream& in = open_input(conj_in, in_file);
    const auto outcome = walkent::conjecture_scan(in, conj_beta, conj_tol);
    for (const auto& g6 : outcome.counterexamples) std::cout << g6 << "\n";
    std::cerr << "scanned " << outcome.scanned << " graphs, "
              << outcome.counterexamples.size() << " counterexample candidates\n";
    report_line_errors(outcome.line_errors);
    return outcome.line_errors.empty() ? kExitOk : kExitParse;
  }

  if (loc_cmd->parsed()) {
    const walkent::Graph g = walkent::parse_graph6(loc_g6);
    const auto report = walkent::communicability_localization(g, loc_beta);
    std::cout << "node,G_pp\n";
    for (int p = 0; p < report.diagonal.size(); ++p)
      std::cout << p << ',' << format_value(report.diagonal[p]) << "\n";
    std::cerr << "ratio=" << format_value(report.ratio) << "\n";
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const walkent::Graph6ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

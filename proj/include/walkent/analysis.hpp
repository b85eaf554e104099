#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "walkent/entropy.hpp"
#include "walkent/regularity.hpp"

namespace walkent {

/// One CSV row per scanned graph. Entropy columns are in bits; the edge
/// and Laplacian columns are NaN for edgeless graphs (m = 0).
struct MetricsRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  GraphClass graph_class = GraphClass::NonRegular;
  double s_walk = 0.0;         // node walk entropy at the scan beta
  double s_walk_inf = 0.0;     // zero-temperature limit
  double s_edge = 0.0;         // edge walk entropy at the scan beta
  double s_line_direct = 0.0;  // node walk entropy of the line graph
  double s_vn = 0.0;           // von Neumann (Laplacian) entropy
  double s_shannon = 0.0;      // eigenvalue Shannon entropy at the scan beta
  double mean_ipr = 0.0;
};

struct ScanOptions {
  double beta = 1.0;
  VnNormalization vn_norm = VnNormalization::Trace;
};

struct ScanOutcome {
  std::size_t records = 0;
  std::size_t skipped_disconnected = 0;
  std::vector<std::pair<std::size_t, std::string>> line_errors;  // (line no, message)
};

MetricsRecord compute_metrics(const Graph& g, const std::string& graph6,
                              const ScanOptions& opts);

/// One record per connected graph, in input order. Unparseable lines are
/// collected in the outcome and skipped; only stream failure aborts.
ScanOutcome scan(std::istream& in, const ScanOptions& opts,
                 const std::function<void(const MetricsRecord&)>& emit);

// CSV schema is fixed: header names match the MetricsRecord fields, floats
// carry 12 significant digits, lines end with LF.
void write_csv_header(std::ostream& out);
void write_csv_record(std::ostream& out, const MetricsRecord& r);
std::vector<MetricsRecord> read_metrics_csv(std::istream& in);

/// Numeric fields usable as an extremal/correlation metric.
const std::vector<std::string>& metric_names();
std::optional<double> metric_value(const MetricsRecord& r, const std::string& name);

/// Sample Pearson product-moment coefficient. Both series need length
/// >= 2 and nonzero variance (std::domain_error otherwise).
double pearson(std::span<const double> x, std::span<const double> y);

struct ExtremalEntry {
  std::string graph6;
  double value = 0.0;
};

/// Records ranked by the metric (ties by graph6 string), best first.
std::vector<ExtremalEntry> extremal(const std::vector<MetricsRecord>& records,
                                    const std::string& metric, bool maximize,
                                    std::size_t top_k);

/// Diagonal communicability per node plus the max/min ratio.
struct LocalizationReport {
  Vector diagonal;
  double ratio = 0.0;
};

LocalizationReport communicability_localization(const Graph& g, double beta);

enum class SweepShape { Constant, MonotoneDecreasing, InteriorMinimum, Other };
const char* to_string(SweepShape s);

struct SweepResult {
  std::vector<double> beta_grid;
  std::vector<double> s_values;
  SweepShape shape = SweepShape::Other;
  std::optional<double> argmin_beta;  // present only for InteriorMinimum
};

/// Walk entropy over a beta grid (log-spaced by default), with the curve
/// shape classified at grid resolution: Constant when max-min <= 1e-9,
/// MonotoneDecreasing when every step falls or rises by at most 1e-12,
/// InteriorMinimum when the grid argmin is strictly interior.
SweepResult sweep(const Graph& g, double beta_min, double beta_max, int points,
                  bool log_spacing = true);

struct ConjectureOutcome {
  std::vector<std::string> counterexamples;  // maximal entropy yet not walk-regular
  std::size_t scanned = 0;
  std::vector<std::pair<std::size_t, std::string>> line_errors;
};

/// Graphs whose walk entropy reaches log2 n within tol while failing the
/// walk-regularity test. Expected empty on small corpora.
ConjectureOutcome conjecture_scan(std::istream& in, double beta, double tol);

struct CorrelationReport {
  std::vector<std::pair<std::string, double>> named;  // headline pairs
  std::vector<std::string> fields;
  Matrix matrix;  // pairwise coefficients; NaN when undefined
};

CorrelationReport correlations_report(const std::vector<MetricsRecord>& records);

}  // namespace walkent

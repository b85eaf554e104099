#include "walkent/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "walkent/communicability.hpp"
#include "walkent/graph6.hpp"

namespace walkent {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

GraphClass class_from_string(const std::string& s) {
  if (s == "WalkRegular") return GraphClass::WalkRegular;
  if (s == "RegularNotWalkRegular") return GraphClass::RegularNotWalkRegular;
  if (s == "NonRegular") return GraphClass::NonRegular;
  throw std::runtime_error("unknown graph class: " + s);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

// Shared line loop for the graph6 corpus consumers.
void for_each_corpus_graph(
    std::istream& in,
    std::vector<std::pair<std::size_t, std::string>>& line_errors,
    const std::function<void(const Graph&, const std::string&)>& visit) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || is_graph6_header_line(line)) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Graph6ParseError& e) {
      line_errors.emplace_back(line_no, e.what());
      continue;
    }
    visit(g, line);
  }
  if (in.bad()) throw std::runtime_error("corpus stream I/O failure");
}

}  // namespace

MetricsRecord compute_metrics(const Graph& g, const std::string& graph6,
                              const ScanOptions& opts) {
  MetricsRecord r;
  r.graph6 = graph6;
  r.n = g.node_count();
  r.m = g.edge_count();
  r.graph_class = classify(g);

  const Spectrum s = adjacency_spectrum(g);
  r.s_walk = walk_entropy(s, opts.beta);
  r.s_walk_inf = zero_temp_walk_entropy(g);
  r.s_shannon = spectral_shannon_entropy(g, opts.beta);
  r.mean_ipr = mean_ipr(s);
  if (r.m > 0) {
    r.s_edge = edge_walk_entropy(g, opts.beta);
    r.s_line_direct = line_walk_entropy_direct(g, opts.beta);
    r.s_vn = von_neumann_entropy(g, opts.vn_norm);
  } else {
    r.s_edge = r.s_line_direct = r.s_vn = kNaN;
  }
  return r;
}

ScanOutcome scan(std::istream& in, const ScanOptions& opts,
                 const std::function<void(const MetricsRecord&)>& emit) {
  ScanOutcome outcome;
  for_each_corpus_graph(in, outcome.line_errors,
                        [&](const Graph& g, const std::string& line) {
                          if (!g.is_connected()) {
                            ++outcome.skipped_disconnected;
                            return;
                          }
                          emit(compute_metrics(g, line, opts));
                          ++outcome.records;
                        });
  return outcome;
}

void write_csv_header(std::ostream& out) {
  out << "graph6,n,m,class,s_walk,s_walk_inf,s_edge,s_line_direct,s_vn,"
         "s_shannon,mean_ipr\n";
}

void write_csv_record(std::ostream& out, const MetricsRecord& r) {
  out << r.graph6 << ',' << r.n << ',' << r.m << ',' << to_string(r.graph_class)
      << ',' << format_double(r.s_walk) << ',' << format_double(r.s_walk_inf)
      << ',' << format_double(r.s_edge) << ',' << format_double(r.s_line_direct)
      << ',' << format_double(r.s_vn) << ',' << format_double(r.s_shannon) << ','
      << format_double(r.mean_ipr) << '\n';
}

std::vector<MetricsRecord> read_metrics_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("metrics CSV: empty input");
  const auto header = split_csv_line(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* required :
       {"graph6", "n", "m", "class", "s_walk", "s_walk_inf", "s_edge",
        "s_line_direct", "s_vn", "s_shannon", "mean_ipr"})
    if (!col.count(required))
      throw std::runtime_error(std::string("metrics CSV: missing column ") + required);

  std::vector<MetricsRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() < header.size())
      throw std::runtime_error("metrics CSV: short row at line " +
                               std::to_string(line_no));
    MetricsRecord r;
    r.graph6 = f[col["graph6"]];
    r.n = std::stoi(f[col["n"]]);
    r.m = std::stoi(f[col["m"]]);
    r.graph_class = class_from_string(f[col["class"]]);
    r.s_walk = std::stod(f[col["s_walk"]]);
    r.s_walk_inf = std::stod(f[col["s_walk_inf"]]);
    r.s_edge = std::stod(f[col["s_edge"]]);
    r.s_line_direct = std::stod(f[col["s_line_direct"]]);
    r.s_vn = std::stod(f[col["s_vn"]]);
    r.s_shannon = std::stod(f[col["s_shannon"]]);
    r.mean_ipr = std::stod(f[col["mean_ipr"]]);
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<std::string>& metric_names() {
  static const std::vector<std::string> names = {
      "n",      "m",    "s_walk",    "s_walk_inf", "s_edge",
      "s_line_direct", "s_vn", "s_shannon", "mean_ipr"};
  return names;
}

std::optional<double> metric_value(const MetricsRecord& r, const std::string& name) {
  if (name == "n") return static_cast<double>(r.n);
  if (name == "m") return static_cast<double>(r.m);
  if (name == "s_walk") return r.s_walk;
  if (name == "s_walk_inf") return r.s_walk_inf;
  if (name == "s_edge") return r.s_edge;
  if (name == "s_line_direct") return r.s_line_direct;
  if (name == "s_vn") return r.s_vn;
  if (name == "s_shannon") return r.s_shannon;
  if (name == "mean_ipr") return r.mean_ipr;
  return std::nullopt;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("pearson: length mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("pearson: need at least 2 samples");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw std::domain_error("pearson: zero variance");
  return sxy / std::sqrt(sxx * syy);
}

std::vector<ExtremalEntry> extremal(const std::vector<MetricsRecord>& records,
                                    const std::string& metric, bool maximize,
                                    std::size_t top_k) {
  if (!metric_value(MetricsRecord{}, metric))
    throw std::invalid_argument("extremal: unknown metric " + metric);
  std::vector<ExtremalEntry> entries;
  for (const auto& r : records) {
    const double v = *metric_value(r, metric);
    if (std::isfinite(v)) entries.push_back({r.graph6, v});
  }
  if (entries.empty()) throw std::domain_error("extremal: empty corpus");
  std::sort(entries.begin(), entries.end(),
            [maximize](const ExtremalEntry& a, const ExtremalEntry& b) {
              if (a.value != b.value)
                return maximize ? a.value > b.value : a.value < b.value;
              return a.graph6 < b.graph6;
            });
  if (entries.size() > top_k) entries.resize(top_k);
  return entries;
}

LocalizationReport communicability_localization(const Graph& g, double beta) {
  const Communicability c = communicability(g, beta);
  LocalizationReport r;
  r.diagonal = c.matrix.diagonal();
  r.ratio = r.diagonal.maxCoeff() / r.diagonal.minCoeff();
  return r;
}

const char* to_string(SweepShape s) {
  switch (s) {
    case SweepShape::Constant: return "Constant";
    case SweepShape::MonotoneDecreasing: return "MonotoneDecreasing";
    case SweepShape::InteriorMinimum: return "InteriorMinimum";
    case SweepShape::Other: return "Other";
  }
  return "?";
}

SweepResult sweep(const Graph& g, double beta_min, double beta_max, int points,
                  bool log_spacing) {
  if (!(beta_min > 0.0) || !(beta_max > beta_min))
    throw std::invalid_argument("sweep: need 0 < beta_min < beta_max");
  if (points < 3) throw std::invalid_argument("sweep: need at least 3 points");

  SweepResult result;
  result.beta_grid.resize(points);
  result.s_values.resize(points);
  const Spectrum s = adjacency_spectrum(g);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    const double beta =
        log_spacing ? std::exp(std::log(beta_min) +
                               t * (std::log(beta_max) - std::log(beta_min)))
                    : beta_min + t * (beta_max - beta_min);
    result.beta_grid[i] = beta;
    result.s_values[i] = walk_entropy(s, beta);
  }
  // Pin the endpoints exactly (the log/exp round trip can wobble the ends).
  result.beta_grid.front() = beta_min;
  result.beta_grid.back() = beta_max;

  const auto [lo, hi] =
      std::minmax_element(result.s_values.begin(), result.s_values.end());
  if (*hi - *lo <= 1e-9) {
    result.shape = SweepShape::Constant;
    return result;
  }
  bool nonincreasing = true;
  for (std::size_t i = 0; i + 1 < result.s_values.size(); ++i) {
    if (result.s_values[i + 1] > result.s_values[i] + 1e-12) {
      nonincreasing = false;
      break;
    }
  }
  if (nonincreasing) {
    result.shape = SweepShape::MonotoneDecreasing;
    return result;
  }
  const std::size_t argmin = static_cast<std::size_t>(
      std::min_element(result.s_values.begin(), result.s_values.end()) -
      result.s_values.begin());
  if (argmin > 0 && argmin + 1 < result.s_values.size()) {
    result.shape = SweepShape::InteriorMinimum;
    result.argmin_beta = result.beta_grid[argmin];
  } else {
    result.shape = SweepShape::Other;
  }
  return result;
}

ConjectureOutcome conjecture_scan(std::istream& in, double beta, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("conjecture_scan: tol must be > 0");
  ConjectureOutcome outcome;
  for_each_corpus_graph(in, outcome.line_errors,
                        [&](const Graph& g, const std::string& line) {
                          ++outcome.scanned;
                          const double s = walk_entropy(g, beta);
                          const double max = std::log2(g.node_count());
                          if (std::abs(s - max) <= tol && !is_walk_regular(g))
                            outcome.counterexamples.push_back(line);
                        });
  return outcome;
}

CorrelationReport correlations_report(const std::vector<MetricsRecord>& records) {
  if (records.size() < 2)
    throw std::invalid_argument("correlations_report: need at least 2 records");
  CorrelationReport report;
  report.fields = metric_names();
  const int k = static_cast<int>(report.fields.size());
  report.matrix = Matrix::Constant(k, k, kNaN);

  auto column = [&](const std::string& name) {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(*metric_value(r, name));
    return out;
  };
  auto corr = [&](const std::string& a, const std::string& b) -> double {
    const auto xa = column(a), xb = column(b);
    std::vector<double> fa, fb;
    for (std::size_t i = 0; i < xa.size(); ++i) {
      if (std::isfinite(xa[i]) && std::isfinite(xb[i])) {
        fa.push_back(xa[i]);
        fb.push_back(xb[i]);
      }
    }
    try {
      return pearson(fa, fb);
    } catch (const std::exception&) {
      return kNaN;  // undefined coefficient
    }
  };

  for (int i = 0; i < k; ++i) {
    report.matrix(i, i) = 1.0;
    for (int j = i + 1; j < k; ++j) {
      const double r = corr(report.fields[i], report.fields[j]);
      report.matrix(i, j) = r;
      report.matrix(j, i) = r;
    }
  }
  report.named = {
      {"s_walk~m", corr("s_walk", "m")},
      {"s_vn~m", corr("s_vn", "m")},
      {"s_shannon~m", corr("s_shannon", "m")},
      {"s_walk~mean_ipr", corr("s_walk", "mean_ipr")},
      {"s_vn~mean_ipr", corr("s_vn", "mean_ipr")},
  };
  return report;
}

}  // namespace walkent

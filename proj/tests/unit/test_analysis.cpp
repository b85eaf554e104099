#include <doctest.h>

#include <cmath>
#include <sstream>

#include "walkent/analysis.hpp"
#include "walkent/canonical.hpp"
#include "walkent/graph6.hpp"

using walkent::Graph;
using walkent::MetricsRecord;

namespace {

std::string corpus_text(int n) {
  std::ostringstream out;
  walkent::enumerate_connected(
      n, [&](const Graph& g) { out << walkent::write_graph6(g) << "\n"; });
  return out.str();
}

std::string scan_to_csv(const std::string& corpus, double beta = 1.0) {
  std::istringstream in(corpus);
  std::ostringstream out;
  walkent::write_csv_header(out);
  walkent::scan(in, {beta, walkent::VnNormalization::Trace},
                [&](const MetricsRecord& r) { walkent::write_csv_record(out, r); });
  return out.str();
}

}  // namespace

TEST_CASE("pearson coefficient") {
  const std::vector<double> x{1, 2, 3}, y{2, 4, 6}, z{3, 2, 1};
  CHECK(walkent::pearson(x, y) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(walkent::pearson(x, z) == doctest::Approx(-1.0).epsilon(1e-12));

  const std::vector<double> a{1, 2, 3, 4}, b{1, 3, 2, 4};
  CHECK(walkent::pearson(a, b) == doctest::Approx(0.8).epsilon(1e-12));

  const std::vector<double> flat{5, 5, 5};
  CHECK_THROWS_AS(walkent::pearson(x, flat), std::domain_error);
  CHECK_THROWS_AS(walkent::pearson(x, a), std::invalid_argument);
  const std::vector<double> one{1};
  CHECK_THROWS_AS(walkent::pearson(one, one), std::invalid_argument);
}

TEST_CASE("scan emits one record per connected graph, in input order") {
  std::istringstream in(corpus_text(4));
  std::vector<MetricsRecord> records;
  const auto outcome =
      walkent::scan(in, {}, [&](const MetricsRecord& r) { records.push_back(r); });
  CHECK(outcome.records == 6);
  CHECK(records.size() == 6);
  CHECK(outcome.skipped_disconnected == 0);
  CHECK(outcome.line_errors.empty());
  for (const auto& r : records) {
    CHECK(r.n == 4);
    CHECK(r.s_walk <= 2.0 + 1e-9);
    CHECK(r.s_edge <= std::log2(r.m) + 1e-9);
    CHECK(r.mean_ipr >= 1.0 - 1e-9);
    CHECK(r.mean_ipr <= 4.0 + 1e-9);
  }
}

TEST_CASE("scan skips disconnected graphs and collects bad lines") {
  // 2K2 = "C`"; one malformed line in the middle.
  std::istringstream in("A_\nC`\n!!!\nBw\n");
  std::vector<MetricsRecord> records;
  const auto outcome =
      walkent::scan(in, {}, [&](const MetricsRecord& r) { records.push_back(r); });
  CHECK(outcome.records == 2);
  CHECK(outcome.skipped_disconnected == 1);
  REQUIRE(outcome.line_errors.size() == 1);
  CHECK(outcome.line_errors[0].first == 3);
  CHECK(records[0].graph6 == "A_");
  CHECK(records[1].graph6 == "Bw");
}

TEST_CASE("scan output is deterministic and the CSV round-trips") {
  const std::string corpus = corpus_text(5);
  const std::string csv1 = scan_to_csv(corpus);
  const std::string csv2 = scan_to_csv(corpus);
  CHECK(csv1 == csv2);
  CHECK(csv1.substr(0, csv1.find('\n')) ==
        "graph6,n,m,class,s_walk,s_walk_inf,s_edge,s_line_direct,s_vn,s_shannon,"
        "mean_ipr");

  std::istringstream parse_back(csv1);
  const auto records = walkent::read_metrics_csv(parse_back);
  CHECK(records.size() == 21);
  CHECK(records[0].n == 5);
}

TEST_CASE("the one-node record carries NaN edge columns") {
  std::istringstream in("@\n");
  std::vector<MetricsRecord> records;
  walkent::scan(in, {}, [&](const MetricsRecord& r) { records.push_back(r); });
  REQUIRE(records.size() == 1);
  CHECK(records[0].m == 0);
  CHECK(std::isnan(records[0].s_edge));
  CHECK(std::isnan(records[0].s_vn));
  CHECK(records[0].s_walk == doctest::Approx(0.0));
  std::ostringstream out;
  walkent::write_csv_record(out, records[0]);
  CHECK(out.str().find("nan") != std::string::npos);
}

TEST_CASE("extremal ranking") {
  std::istringstream in(corpus_text(5));
  std::vector<MetricsRecord> records;
  walkent::scan(in, {}, [&](const MetricsRecord& r) { records.push_back(r); });

  const auto min_walk = walkent::extremal(records, "s_walk", false, 3);
  REQUIRE(min_walk.size() == 3);
  CHECK(min_walk[0].value <= min_walk[1].value);
  CHECK(min_walk[1].value <= min_walk[2].value);

  // Walk-regular graphs top the maximum at exactly log2 n.
  const auto max_walk = walkent::extremal(records, "s_walk", true, 2);
  CHECK(max_walk[0].value == doctest::Approx(std::log2(5.0)).epsilon(1e-12));

  CHECK_THROWS_AS(walkent::extremal(records, "bogus", false, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(walkent::extremal({}, "s_walk", false, 3), std::domain_error);
}

TEST_CASE("localization report") {
  const auto kn = walkent::communicability_localization(walkent::complete_graph(5), 1.0);
  CHECK(kn.ratio == doctest::Approx(1.0).epsilon(1e-12));

  const auto p3 = walkent::communicability_localization(walkent::path_graph(3), 1.0);
  const double expected = std::cosh(std::sqrt(2.0)) /
                          ((std::cosh(std::sqrt(2.0)) + 1.0) / 2.0);
  CHECK(p3.ratio == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(1.3707).epsilon(1e-4));
}

TEST_CASE("sweep shapes of the named graphs") {
  const auto k4 = walkent::sweep(walkent::complete_graph(4), 1e-3, 50.0, 120);
  CHECK(k4.shape == walkent::SweepShape::Constant);
  CHECK(k4.s_values.front() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_FALSE(k4.argmin_beta.has_value());

  const auto p3 = walkent::sweep(walkent::path_graph(3), 1e-3, 50.0, 120);
  CHECK(p3.shape == walkent::SweepShape::MonotoneDecreasing);
  CHECK(p3.s_values.front() == doctest::Approx(std::log2(3.0)).epsilon(1e-6));
  CHECK(p3.s_values.back() == doctest::Approx(1.5).epsilon(1e-6));

  CHECK(p3.beta_grid.front() == 1e-3);
  CHECK(p3.beta_grid.back() == 50.0);

  CHECK_THROWS_AS(walkent::sweep(walkent::path_graph(3), 0.0, 1.0, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(walkent::sweep(walkent::path_graph(3), 1.0, 2.0, 2),
                  std::invalid_argument);
}

TEST_CASE("linear sweep spacing") {
  const auto lin = walkent::sweep(walkent::path_graph(3), 1.0, 3.0, 3, false);
  CHECK(lin.beta_grid[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("conjecture scan finds nothing on the small corpus") {
  for (int n = 1; n <= 6; ++n) {
    std::istringstream in(corpus_text(n));
    const auto outcome = walkent::conjecture_scan(in, 1.0, 1e-9);
    CHECK(outcome.counterexamples.empty());
  }
  // P3 in particular stays well below the maximum.
  std::istringstream in("Bg\n");
  const auto outcome = walkent::conjecture_scan(in, 1.0, 1e-2);
  CHECK(outcome.scanned == 1);
  CHECK(outcome.counterexamples.empty());
}

TEST_CASE("correlations report structure") {
  std::istringstream in(corpus_text(5));
  std::vector<MetricsRecord> records;
  walkent::scan(in, {}, [&](const MetricsRecord& r) { records.push_back(r); });
  const auto report = walkent::correlations_report(records);

  REQUIRE(report.named.size() == 5);
  CHECK(report.named[0].first == "s_walk~m");
  for (const auto& [name, r] : report.named) {
    CHECK(std::isfinite(r));
    CHECK(std::abs(r) <= 1.0 + 1e-12);
  }
  const auto k = static_cast<int>(report.fields.size());
  for (int i = 0; i < k; ++i) {
    CHECK(report.matrix(i, i) == doctest::Approx(1.0));
    for (int j = 0; j < k; ++j) {
      if (std::isfinite(report.matrix(i, j)))
        CHECK(report.matrix(i, j) == doctest::Approx(report.matrix(j, i)));
    }
  }
  // n is constant on this corpus: its off-diagonal row is undefined.
  CHECK(std::isnan(report.matrix(0, 1)));
}

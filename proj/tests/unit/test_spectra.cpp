#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "walkent/canonical.hpp"
#include "walkent/communicability.hpp"
#include "walkent/spectrum.hpp"

using walkent::Graph;
using walkent::Matrix;

TEST_CASE("eigenvalues of the classic small graphs") {
  const auto k2 = walkent::adjacency_spectrum(walkent::complete_graph(2));
  CHECK(k2.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(k2.eigenvalues[1] == doctest::Approx(-1.0));

  const auto k3 = walkent::adjacency_spectrum(walkent::complete_graph(3));
  CHECK(k3.eigenvalues[0] == doctest::Approx(2.0));
  CHECK(k3.eigenvalues[1] == doctest::Approx(-1.0));
  CHECK(k3.eigenvalues[2] == doctest::Approx(-1.0));

  const auto p3 = walkent::adjacency_spectrum(walkent::path_graph(3));
  CHECK(p3.eigenvalues[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(p3.eigenvalues[1] == doctest::Approx(0.0));
  CHECK(p3.eigenvalues[2] == doctest::Approx(-std::sqrt(2.0)));
}

TEST_CASE("sym_eig rejects asymmetric input") {
  Matrix m(2, 2);
  m << 0, 1, 0.5, 0;
  CHECK_THROWS_AS(walkent::sym_eig(m), std::invalid_argument);
}

TEST_CASE("spectrum invariants over the small corpus") {
  for (int n = 1; n <= 6; ++n) {
    walkent::enumerate_connected(n, [&](const Graph& g) {
      const Matrix a = g.adjacency();
      const auto s = walkent::sym_eig(a);
      const Matrix lambda = s.eigenvalues.asDiagonal();
      const double recon =
          (a - s.eigenvectors * lambda * s.eigenvectors.transpose())
              .cwiseAbs()
              .maxCoeff();
      CHECK(recon <= 1e-10 * n * std::max(1.0, a.cwiseAbs().maxCoeff()));
      const double ortho = (s.eigenvectors.transpose() * s.eigenvectors -
                            Matrix::Identity(n, n))
                               .cwiseAbs()
                               .maxCoeff();
      CHECK(ortho <= 1e-10);
      // Perron-Frobenius on connected graphs: simple top eigenvalue with a
      // positive eigenvector.
      if (n >= 2) CHECK(s.eigenvalues[0] > s.eigenvalues[1] + 1e-9);
      CHECK(s.eigenvectors.col(0).minCoeff() > 0.0);
    });
  }
}

TEST_CASE("communicability of K2 has the cosh/sinh closed form") {
  const auto c = walkent::communicability(walkent::complete_graph(2), 1.0);
  CHECK(c.matrix(0, 0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
  CHECK(c.matrix(1, 1) == doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
  CHECK(c.matrix(0, 1) == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
}

TEST_CASE("communicability at beta=0 is the identity") {
  for (const auto& g : walkent::enumerate_connected(5)) {
    const auto c = walkent::communicability(g, 0.0);
    CHECK((c.matrix - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("communicability diagonal of P3 matches the spectral closed form") {
  const auto c = walkent::communicability(walkent::path_graph(3), 1.0);
  const double mid = std::cosh(std::sqrt(2.0));
  const double end = (std::cosh(std::sqrt(2.0)) + 1.0) / 2.0;
  CHECK(c.matrix(0, 0) == doctest::Approx(end).epsilon(1e-12));   // ~1.5891
  CHECK(c.matrix(1, 1) == doctest::Approx(mid).epsilon(1e-12));   // ~2.1782
  CHECK(c.matrix(2, 2) == doctest::Approx(end).epsilon(1e-12));
}

TEST_CASE("communicability rejects out-of-range beta") {
  const Graph k2 = walkent::complete_graph(2);
  CHECK_THROWS_AS(walkent::communicability(k2, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(walkent::communicability(k2, 50.1), std::invalid_argument);
}

TEST_CASE("spectral exponential agrees with the series oracle") {
  for (int n = 2; n <= 6; ++n) {
    walkent::enumerate_connected(n, [&](const Graph& g) {
      for (const double beta : {0.5, 1.0, 2.0}) {
        const Matrix via_spectrum = walkent::communicability(g, beta).matrix;
        const Matrix via_series = oracles::series_expm(g.adjacency(), beta);
        CHECK((via_spectrum - via_series).cwiseAbs().maxCoeff() <= 1e-9);
      }
    });
  }
}

TEST_CASE("communicability is positive definite with diagonal >= 1") {
  for (const auto& g : walkent::enumerate_connected(6)) {
    const auto c = walkent::communicability(g, 1.0);
    CHECK(c.matrix.diagonal().minCoeff() >= 1.0);
    const auto s = walkent::sym_eig(c.matrix);
    CHECK(s.eigenvalues.minCoeff() > 0.0);
  }
}

TEST_CASE("partition function equals the communicability trace") {
  for (const auto& g : walkent::enumerate_connected(5)) {
    for (const double beta : {0.5, 2.0}) {
      CHECK(walkent::partition_function(g, beta) ==
            doctest::Approx(walkent::communicability(g, beta).matrix.trace())
                .epsilon(1e-13));
    }
  }
}

TEST_CASE("partition function closed forms") {
  CHECK(walkent::partition_function(walkent::complete_graph(2), 1.0) ==
        doctest::Approx(2.0 * std::cosh(1.0)).epsilon(1e-12));
  CHECK(walkent::partition_function(walkent::complete_graph(1), 3.7) ==
        doctest::Approx(1.0));
  CHECK(walkent::partition_function(walkent::complete_graph(3), 1.0) ==
        doctest::Approx(std::exp(2.0) + 2.0 * std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("average energy closed forms") {
  CHECK(walkent::average_energy(walkent::complete_graph(2), 1.0) ==
        doctest::Approx(-std::tanh(1.0)).epsilon(1e-12));
  CHECK(walkent::average_energy(walkent::complete_graph(1), 2.0) ==
        doctest::Approx(0.0));
  const double z = std::exp(2.0) + 2.0 * std::exp(-1.0);
  CHECK(walkent::average_energy(walkent::complete_graph(3), 1.0) ==
        doctest::Approx(-(2.0 * std::exp(2.0) - 2.0 * std::exp(-1.0)) / z)
            .epsilon(1e-12));
}

TEST_CASE("average energy matches the log-partition finite difference") {
  std::mt19937 rng(7);
  std::vector<Graph> pool;
  for (int n = 4; n <= 6; ++n)
    for (const auto& g : walkent::enumerate_connected(n)) pool.push_back(g);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(50);
  const double h = 1e-5;
  for (const auto& g : pool) {
    for (const double beta : {0.5, 1.0, 2.0}) {
      const double diff = (std::log(walkent::partition_function(g, beta + h)) -
                           std::log(walkent::partition_function(g, beta - h))) /
                          (2.0 * h);
      const double energy = walkent::average_energy(g, beta);
      CHECK(std::abs(-diff - energy) <= 1e-6 * std::abs(energy));
    }
  }
}

TEST_CASE("inverse participation ratio") {
  // Localized and uniform reference states.
  Matrix id = Matrix::Identity(4, 4);
  walkent::Spectrum localized{walkent::Vector::Zero(4), id};
  CHECK(walkent::ipr(localized)[0] == doctest::Approx(1.0));

  const auto k2 = walkent::adjacency_spectrum(walkent::complete_graph(2));
  const auto i2 = walkent::ipr(k2);
  CHECK(i2[0] == doctest::Approx(2.0));
  CHECK(i2[1] == doctest::Approx(2.0));
  CHECK(walkent::mean_ipr(k2) == doctest::Approx(2.0));

  // Uniform state in any dimension scores n.
  for (int n = 2; n <= 6; ++n) {
    const auto kn = walkent::adjacency_spectrum(walkent::complete_graph(n));
    CHECK(walkent::ipr(kn)[0] == doctest::Approx(static_cast<double>(n)));
  }
}

TEST_CASE("ipr bounds hold for every eigenstate of the small corpus") {
  for (int n = 1; n <= 6; ++n) {
    walkent::enumerate_connected(n, [&](const Graph& g) {
      const auto i = walkent::ipr(walkent::adjacency_spectrum(g));
      CHECK(i.minCoeff() >= 1.0 - 1e-9);
      CHECK(i.maxCoeff() <= n + 1e-9);
    });
  }
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "walkent/analysis.hpp"
#include "walkent/canonical.hpp"
#include "walkent/communicability.hpp"
#include "walkent/entropy.hpp"
#include "walkent/graph6.hpp"
#include "walkent/regularity.hpp"
#include "walkent/transforms.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<double>> to_rows(const walkent::Matrix& m) {
  std::vector<std::vector<double>> rows(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    rows[i].resize(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

std::vector<double> to_list(const walkent::Vector& v) {
  return {v.data(), v.data() + v.size()};
}

walkent::VnNormalization vn_from_string(const std::string& norm) {
  if (norm == "trace") return walkent::VnNormalization::Trace;
  if (norm == "raw") return walkent::VnNormalization::Raw;
  throw std::invalid_argument("norm must be 'trace' or 'raw'");
}

}  // namespace

PYBIND11_MODULE(_walkent, m) {
  m.doc() = "Walk entropies of graphs and line graphs";

  py::class_<walkent::Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &walkent::Graph::node_count)
      .def_property_readonly("m", &walkent::Graph::edge_count)
      .def("add_edge", &walkent::Graph::add_edge)
      .def("has_edge", &walkent::Graph::has_edge)
      .def("degrees", &walkent::Graph::degrees)
      .def("is_regular", &walkent::Graph::is_regular)
      .def("is_connected", &walkent::Graph::is_connected)
      .def("edges", &walkent::Graph::edges)
      .def("adjacency",
           [](const walkent::Graph& g) { return to_rows(g.adjacency()); })
      .def("__eq__", [](const walkent::Graph& a, const walkent::Graph& b) { return a == b; })
      .def("__repr__", [](const walkent::Graph& g) {
        std::ostringstream out;
        out << "Graph(n=" << g.node_count() << ", m=" << g.edge_count();
        if (g.node_count() <= 62) out << ", graph6='" << walkent::write_graph6(g) << '\'';
        out << ")";
        return out.str();
      });

  m.def("parse_graph6", &walkent::parse_graph6, py::arg("text"));
  m.def("write_graph6", &walkent::write_graph6, py::arg("graph"));

  m.def("complete_graph", &walkent::complete_graph);
  m.def("cycle_graph", &walkent::cycle_graph);
  m.def("path_graph", &walkent::path_graph);
  m.def("star_graph", &walkent::star_graph);
  m.def("complete_bipartite", &walkent::complete_bipartite);
  m.def("petersen_graph", &walkent::petersen_graph);
  m.def("disjoint_union", &walkent::disjoint_union);

  m.def("line_graph", [](const walkent::Graph& g) {
    auto r = walkent::line_graph(g);
    return py::make_tuple(r.graph, r.edges);
  });
  m.def("tensor_product", &walkent::tensor_product);
  m.def("laplacian",
        [](const walkent::Graph& g) { return to_rows(walkent::laplacian(g)); });

  m.def("canonical_form", &walkent::canonical_form);
  m.def("are_isomorphic", &walkent::are_isomorphic);
  m.def("enumerate_connected",
        py::overload_cast<int>(&walkent::enumerate_connected), py::arg("n"));

  m.def("adjacency_eigenvalues", [](const walkent::Graph& g) {
    return to_list(walkent::adjacency_spectrum(g).eigenvalues);
  });
  m.def("ipr", [](const walkent::Graph& g) {
    return to_list(walkent::ipr(walkent::adjacency_spectrum(g)));
  });
  m.def("mean_ipr", [](const walkent::Graph& g) {
    return walkent::mean_ipr(walkent::adjacency_spectrum(g));
  });

  m.def("communicability", [](const walkent::Graph& g, double beta) {
    return to_rows(walkent::communicability(g, beta).matrix);
  }, py::arg("graph"), py::arg("beta"));
  m.def("partition_function", &walkent::partition_function);
  m.def("average_energy", &walkent::average_energy);

  m.def("node_walk_probabilities", [](const walkent::Graph& g, double beta) {
    return to_list(walkent::node_walk_probabilities(g, beta).p);
  }, py::arg("graph"), py::arg("beta"));
  m.def("walk_entropy",
        py::overload_cast<const walkent::Graph&, double>(&walkent::walk_entropy),
        py::arg("graph"), py::arg("beta"));
  m.def("zero_temp_walk_entropy", &walkent::zero_temp_walk_entropy);
  m.def("edge_walk_probabilities", [](const walkent::Graph& g, double beta) {
    auto r = walkent::edge_walk_probabilities(g, beta);
    return py::make_tuple(r.edges, to_list(r.p));
  }, py::arg("graph"), py::arg("beta"));
  m.def("edge_walk_entropy", &walkent::edge_walk_entropy);
  m.def("line_walk_entropy_direct", &walkent::line_walk_entropy_direct);
  m.def("zero_temp_edge_entropy", &walkent::zero_temp_edge_entropy);
  m.def("von_neumann_entropy", [](const walkent::Graph& g, const std::string& norm) {
    return walkent::von_neumann_entropy(g, vn_from_string(norm));
  }, py::arg("graph"), py::arg("norm") = "trace");
  m.def("spectral_shannon_entropy", &walkent::spectral_shannon_entropy,
        py::arg("graph"), py::arg("beta") = 1.0);

  m.def("is_walk_regular", &walkent::is_walk_regular);
  m.def("is_edge_walk_regular", &walkent::is_edge_walk_regular);
  m.def("classify", [](const walkent::Graph& g) {
    return std::string(walkent::to_string(walkent::classify(g)));
  });

  py::class_<walkent::TensorEntropyReport>(m, "TensorEntropyReport")
      .def_readonly("product_entropy", &walkent::TensorEntropyReport::product_entropy)
      .def_readonly("sum_of_entropies", &walkent::TensorEntropyReport::sum_of_entropies)
      .def_readonly("difference", &walkent::TensorEntropyReport::difference)
      .def_readonly("g_walk_regular", &walkent::TensorEntropyReport::g_walk_regular)
      .def_readonly("h_walk_regular", &walkent::TensorEntropyReport::h_walk_regular)
      .def_readonly("product_walk_regular",
                    &walkent::TensorEntropyReport::product_walk_regular);
  m.def("walk_entropy_tensor_check", &walkent::walk_entropy_tensor_check,
        py::arg("g"), py::arg("h"), py::arg("beta") = 1.0);

  py::class_<walkent::SweepResult>(m, "SweepResult")
      .def_readonly("beta_grid", &walkent::SweepResult::beta_grid)
      .def_readonly("s_values", &walkent::SweepResult::s_values)
      .def_property_readonly("shape", [](const walkent::SweepResult& r) {
        return std::string(walkent::to_string(r.shape));
      })
      .def_readonly("argmin_beta", &walkent::SweepResult::argmin_beta);
  m.def("sweep", &walkent::sweep, py::arg("graph"), py::arg("beta_min") = 1e-3,
        py::arg("beta_max") = 1e2, py::arg("points") = 200,
        py::arg("log_spacing") = true);

  m.def("pearson", [](const std::vector<double>& x, const std::vector<double>& y) {
    return walkent::pearson(x, y);
  });

  m.def("metrics", [](const walkent::Graph& g, double beta) {
    const auto r = walkent::compute_metrics(g, walkent::write_graph6(g),
                                            {beta, walkent::VnNormalization::Trace});
    py::dict d;
    d["graph6"] = r.graph6;
    d["n"] = r.n;
    d["m"] = r.m;
    d["class"] = std::string(walkent::to_string(r.graph_class));
    d["s_walk"] = r.s_walk;
    d["s_walk_inf"] = r.s_walk_inf;
    d["s_edge"] = r.s_edge;
    d["s_line_direct"] = r.s_line_direct;
    d["s_vn"] = r.s_vn;
    d["s_shannon"] = r.s_shannon;
    d["mean_ipr"] = r.mean_ipr;
    return d;
  }, py::arg("graph"), py::arg("beta") = 1.0);
}

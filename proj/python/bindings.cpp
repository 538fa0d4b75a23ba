#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diskpoly/cli.hpp"
#include "diskpoly/fit.hpp"
#include "diskpoly/jacobi.hpp"
#include "diskpoly/poly_io.hpp"
#include "diskpoly/quadrature.hpp"
#include "diskpoly/sobolev.hpp"

#include <sstream>

namespace py = pybind11;

namespace {

using namespace diskpoly;

Rational rational_arg(const std::string& text, const char* what) {
    auto parsed = Rational::parse(text);
    if (!parsed) throw py::value_error(std::string(what) + ": expected 'p/q', got '" + text + "'");
    return *parsed;
}

std::vector<std::tuple<int, int, std::string, std::string>> zernike_terms(int k, int j,
                                                                          const std::string& mu) {
    const BiPoly q = zernike_q(k, j, Scalar(rational_arg(mu, "mu")));
    std::vector<std::tuple<int, int, std::string, std::string>> out;
    out.reserve(q.terms().size());
    for (const auto& [key, c] : q.terms()) {
        out.emplace_back(key.a, key.b, c.re().str(), c.im().str());
    }
    return out;
}

py::dict fit_to_dict(const FitResult& fit) {
    py::list coefficients;
    for (const FitCoefficient& c : fit.coefficients) {
        coefficients.append(py::make_tuple(c.k, c.j, c.value));
    }
    py::dict out;
    out["coefficients"] = std::move(coefficients);
    out["residual_rms"] = fit.residual_rms;
    out["condition"] = fit.condition;
    return out;
}

SampleSet samples_from_lists(const std::vector<double>& xs, const std::vector<double>& ys,
                             const std::vector<std::complex<double>>& values) {
    if (xs.size() != ys.size() || xs.size() != values.size()) {
        throw py::value_error("xs, ys and values must have equal length");
    }
    SampleSet set;
    set.source = "python";
    for (std::size_t i = 0; i < xs.size(); ++i) set.samples.push_back({xs[i], ys[i], values[i]});
    return set;
}

}  // namespace

PYBIND11_MODULE(_diskpoly, m) {
    m.doc() = "generalized Zernike (disk) polynomials: evaluation, exact identity verification, "
              "quadrature and fitting";

    m.def("zernike_eval",
          [](int k, int j, double mu, double x, double y) {
              return eval(zernike_q(k, j, Scalar(mu)), {x, y});
          },
          py::arg("k"), py::arg("j"), py::arg("mu"), py::arg("x"), py::arg("y"),
          "Evaluate Q^mu_{k,j} at x + iy.");

    m.def("zernike_terms", &zernike_terms, py::arg("k"), py::arg("j"), py::arg("mu"),
          "Exact coefficients of Q^mu_{k,j} as (a, b, re, im) tuples with rational strings; mu is "
          "'p/q'.");

    m.def("zernike_json",
          [](int k, int j, const std::string& mu) {
              return to_json(zernike_q(k, j, Scalar(rational_arg(mu, "mu")))).dump();
          },
          py::arg("k"), py::arg("j"), py::arg("mu"), "Polynomial JSON document for Q^mu_{k,j}.");

    m.def("zernike_norm",
          [](const std::string& mu, int k, int j) {
              return zernike_norm(rational_arg(mu, "mu"), k, j).str();
          },
          py::arg("mu"), py::arg("k"), py::arg("j"),
          "Exact squared norm h^mu_{k,j} as a rational string.");

    m.def("zernike_real_norm",
          [](const std::string& mu, int n, int j) {
              return zernike_real_norm(rational_arg(mu, "mu"), n, j).str();
          },
          py::arg("mu"), py::arg("n"), py::arg("j"),
          "Exact squared norm of the real (cos/sin) forms as a rational string.");

    m.def("jacobi_eval", &jacobi_eval_recurrence, py::arg("alpha"), py::arg("beta"), py::arg("n"),
          py::arg("t"), "P_n^{(alpha,beta)}(t) through the three-term recurrence.");

    m.def("gauss_jacobi",
          [](double alpha, double beta, int n) {
              const QuadRule1D rule = gauss_jacobi(alpha, beta, n);
              return py::make_tuple(rule.nodes, rule.weights);
          },
          py::arg("alpha"), py::arg("beta"), py::arg("n"),
          "Nodes and weights of the n-point Gauss-Jacobi rule on [-1,1].");

    m.def("disk_rule",
          [](double mu, int n_radial, int n_angular) {
              const DiskRule rule = disk_rule(mu, n_radial, n_angular);
              std::vector<std::tuple<double, double, double>> nodes;
              nodes.reserve(rule.nodes.size());
              for (const DiskNode& node : rule.nodes) nodes.emplace_back(node.x, node.y, node.weight);
              return nodes;
          },
          py::arg("mu"), py::arg("n_radial"), py::arg("n_angular"),
          "Disk quadrature nodes (x, y, weight) against (1-x^2-y^2)^mu.");

    m.def("fit",
          [](const std::vector<double>& xs, const std::vector<double>& ys,
             const std::vector<std::complex<double>>& values, int degree, double mu,
             const std::string& method) {
              const SampleSet samples = samples_from_lists(xs, ys, values);
              if (method == "projection") return fit_to_dict(fit_projection(samples, degree, mu));
              if (method == "least-squares") return fit_to_dict(fit_least_squares(samples, degree, mu));
              throw py::value_error("method must be 'projection' or 'least-squares'");
          },
          py::arg("xs"), py::arg("ys"), py::arg("values"), py::arg("degree"), py::arg("mu") = 0.0,
          py::arg("method") = "projection",
          "Fit disk-polynomial coefficients to samples; returns coefficients, residual and "
          "condition estimate.");

    m.def("run",
          [](const std::vector<std::string>& args) {
              std::ostringstream out;
              std::ostringstream err;
              const int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"),
          "Run a command-line invocation in-process; returns (exit_code, stdout, stderr).");
}

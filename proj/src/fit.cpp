#include "diskpoly/fit.hpp"

#include "diskpoly/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace diskpoly {

bool SampleSet::inside_disk(double slack) const {
    for (const Sample& s : samples) {
        if (s.x * s.x + s.y * s.y > 1.0 + slack) return false;
    }
    return true;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

double parse_double(const std::string& text) {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) throw std::invalid_argument("samples CSV: bad number '" + text + "'");
    return value;
}

std::vector<std::pair<int, int>> graded_indices(int degree) {
    std::vector<std::pair<int, int>> out;
    for (int total = 0; total <= degree; ++total) {
        for (int k = 0; k <= total; ++k) out.emplace_back(k, total - k);
    }
    return out;
}

double norm_h_value(double mu, int k, int j) {
    double poch_k = 1.0;
    for (int i = 0; i < k; ++i) poch_k *= mu + 1.0 + i;
    double poch_j = 1.0;
    for (int i = 0; i < j; ++i) poch_j *= mu + 1.0 + i;
    return (mu + 1.0) / (mu + k + j + 1.0) * std::tgamma(k + 1.0) * std::tgamma(j + 1.0) /
           (poch_k * poch_j);
}

double residual_rms_of(const SampleSet& samples, const std::vector<BiPoly>& basis,
                       const Eigen::VectorXcd& coeffs) {
    if (samples.samples.empty()) return 0.0;
    double acc = 0.0;
    for (const Sample& s : samples.samples) {
        std::complex<double> fitted = 0.0;
        for (std::size_t col = 0; col < basis.size(); ++col) {
            fitted += coeffs[static_cast<Eigen::Index>(col)] * eval(basis[col], {s.x, s.y});
        }
        acc += std::norm(fitted - s.value);
    }
    return std::sqrt(acc / static_cast<double>(samples.samples.size()));
}

}  // namespace

SampleSet read_samples_csv(std::istream& in, std::string source) {
    SampleSet set;
    set.source = std::move(source);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("samples CSV: empty input");
    const std::vector<std::string> header = split_csv_line(line);
    const bool has_imag = header.size() == 4;
    if (header.size() < 3 || header.size() > 4 || header[0] != "x" || header[1] != "y" ||
        header[2] != "re" || (has_imag && header[3] != "im")) {
        throw std::invalid_argument("samples CSV: header must be x,y,re[,im]");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw std::invalid_argument("samples CSV: row width does not match header");
        }
        Sample s;
        s.x = parse_double(fields[0]);
        s.y = parse_double(fields[1]);
        s.value = {parse_double(fields[2]), has_imag ? parse_double(fields[3]) : 0.0};
        set.samples.push_back(s);
    }
    return set;
}

SampleSet read_samples_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open samples file '" + path + "'");
    return read_samples_csv(in, path);
}

FitResult fit_projection(const SampleSet& samples, int degree, double mu, int n_radial,
                         int n_angular) {
    if (degree < 0) throw std::invalid_argument("fit_projection: negative degree");
    if (n_radial <= 0) n_radial = degree + 2;
    if (n_angular <= 0) n_angular = 4 * degree + 5;
    const DiskRule rule = disk_rule(mu, n_radial, n_angular);

    // Match every rule node to a sample; projection needs the full grid.
    std::vector<std::complex<double>> node_values(rule.nodes.size());
    constexpr double kMatchTolerance = 1e-8;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const DiskNode& node = rule.nodes[i];
        bool found = false;
        for (const Sample& s : samples.samples) {
            if (std::hypot(s.x - node.x, s.y - node.y) <= kMatchTolerance) {
                node_values[i] = s.value;
                found = true;
                break;
            }
        }
        if (!found) {
            throw NodeCoverageError("projection grid node (" + std::to_string(node.x) + ", " +
                                    std::to_string(node.y) + ") has no matching sample");
        }
    }

    const std::vector<std::pair<int, int>> indices = graded_indices(degree);
    std::vector<BiPoly> basis;
    basis.reserve(indices.size());
    for (const auto& [k, j] : indices) basis.push_back(zernike_q(k, j, Scalar(mu)));

    const double b_mu = (mu + 1.0) / std::numbers::pi;
    Eigen::VectorXcd coeffs(static_cast<Eigen::Index>(indices.size()));
    double h_min = 0.0;
    double h_max = 0.0;
    for (std::size_t col = 0; col < indices.size(); ++col) {
        const auto [k, j] = indices[col];
        std::complex<double> inner = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const DiskNode& node = rule.nodes[i];
            inner += node.weight * node_values[i] * std::conj(eval(basis[col], {node.x, node.y}));
        }
        const double h = norm_h_value(mu, k, j);
        coeffs[static_cast<Eigen::Index>(col)] = b_mu * inner / h;
        h_min = col == 0 ? h : std::min(h_min, h);
        h_max = col == 0 ? h : std::max(h_max, h);
    }

    FitResult result;
    result.degree = degree;
    result.mu = mu;
    result.method = FitMethod::projection;
    result.condition = h_max / h_min;
    for (std::size_t col = 0; col < indices.size(); ++col) {
        result.coefficients.push_back({indices[col].first, indices[col].second,
                                       coeffs[static_cast<Eigen::Index>(col)]});
    }
    result.residual_rms = residual_rms_of(samples, basis, coeffs);
    return result;
}

FitResult fit_least_squares(const SampleSet& samples, int degree, double mu) {
    if (degree < 0) throw std::invalid_argument("fit_least_squares: negative degree");
    const std::vector<std::pair<int, int>> indices = graded_indices(degree);
    const Eigen::Index n_samples = static_cast<Eigen::Index>(samples.samples.size());
    const Eigen::Index n_coeffs = static_cast<Eigen::Index>(indices.size());
    if (n_samples < n_coeffs) {
        throw UnderdeterminedError("least squares: " + std::to_string(samples.samples.size()) +
                                   " samples for " + std::to_string(indices.size()) + " coefficients");
    }

    std::vector<BiPoly> basis;
    basis.reserve(indices.size());
    for (const auto& [k, j] : indices) basis.push_back(zernike_q(k, j, Scalar(mu)));

    Eigen::MatrixXcd vandermonde(n_samples, n_coeffs);
    Eigen::VectorXcd rhs(n_samples);
    for (Eigen::Index row = 0; row < n_samples; ++row) {
        const Sample& s = samples.samples[static_cast<std::size_t>(row)];
        rhs[row] = s.value;
        for (Eigen::Index col = 0; col < n_coeffs; ++col) {
            vandermonde(row, col) = eval(basis[static_cast<std::size_t>(col)], {s.x, s.y});
        }
    }

    Eigen::MatrixXcd normal = vandermonde.adjoint() * vandermonde;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eigen(normal);
    const double lambda_max = eigen.eigenvalues().maxCoeff();
    const double lambda_min = std::max(eigen.eigenvalues().minCoeff(), 0.0);
    constexpr double kRegularization = 1e-12;
    normal.diagonal().array() += kRegularization;
    const Eigen::VectorXcd coeffs = normal.ldlt().solve(vandermonde.adjoint() * rhs);

    FitResult result;
    result.degree = degree;
    result.mu = mu;
    result.method = FitMethod::least_squares;
    result.condition = std::sqrt(lambda_max / std::max(lambda_min, kRegularization));
    for (std::size_t col = 0; col < indices.size(); ++col) {
        result.coefficients.push_back({indices[col].first, indices[col].second,
                                       coeffs[static_cast<Eigen::Index>(col)]});
    }
    result.residual_rms = residual_rms_of(samples, basis, coeffs);
    return result;
}

std::complex<double> fit_eval(const FitResult& fit, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (const FitCoefficient& c : fit.coefficients) {
        acc += c.value * eval(zernike_q(c.k, c.j, Scalar(fit.mu)), z);
    }
    return acc;
}

}  // namespace diskpoly

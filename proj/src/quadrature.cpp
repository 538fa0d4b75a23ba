#include "diskpoly/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diskpoly {

namespace {

// Three-term recurrence coefficients of the monic Jacobi polynomials:
// p_{n+1} = (t - a_n) p_n - b_n p_{n-1}.
double jacobi_recurrence_a(double alpha, double beta, int n) {
    if (n == 0) return (beta - alpha) / (alpha + beta + 2.0);
    const double s = 2.0 * n + alpha + beta;
    return (beta * beta - alpha * alpha) / (s * (s + 2.0));
}

double jacobi_recurrence_b(double alpha, double beta, int n) {
    if (n == 1) {
        const double s = alpha + beta + 2.0;
        return 4.0 * (alpha + 1.0) * (beta + 1.0) / (s * s * (s + 1.0));
    }
    const double s = 2.0 * n + alpha + beta;
    return 4.0 * n * (n + alpha) * (n + beta) * (n + alpha + beta) /
           (s * s * (s + 1.0) * (s - 1.0));
}

double jacobi_total_mass(double alpha, double beta) {
    return std::exp((alpha + beta + 1.0) * std::numbers::ln2 + std::lgamma(alpha + 1.0) +
                    std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
}

}  // namespace

QuadRule1D gauss_jacobi(double alpha, double beta, int n_points) {
    if (alpha <= -1.0 || beta <= -1.0) throw std::domain_error("gauss_jacobi: parameters must exceed -1");
    if (n_points < 1) throw std::invalid_argument("gauss_jacobi: need at least one point");

    Eigen::VectorXd diag(n_points);
    Eigen::VectorXd subdiag(std::max(n_points - 1, 0));
    for (int i = 0; i < n_points; ++i) diag[i] = jacobi_recurrence_a(alpha, beta, i);
    for (int i = 0; i + 1 < n_points; ++i) subdiag[i] = std::sqrt(jacobi_recurrence_b(alpha, beta, i + 1));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigensolve failed");

    const double mass = jacobi_total_mass(alpha, beta);
    QuadRule1D rule;
    rule.alpha = alpha;
    rule.beta = beta;
    rule.n_points = n_points;
    rule.nodes.resize(n_points);
    rule.weights.resize(n_points);
    for (int i = 0; i < n_points; ++i) {
        rule.nodes[i] = solver.eigenvalues()[i];
        const double first = solver.eigenvectors()(0, i);
        rule.weights[i] = mass * first * first;
    }
    return rule;
}

double integrate(const QuadRule1D& rule, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (int i = 0; i < rule.n_points; ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

DiskRule disk_rule(double mu, int n_radial, int n_angular) {
    if (mu <= -1.0) throw std::domain_error("disk_rule: requires mu > -1");
    if (n_radial < 1 || n_angular < 1) throw std::invalid_argument("disk_rule: empty rule");

    // int_0^1 g(2r^2-1) (1-r^2)^mu r dr = 2^{-(mu+2)} int_{-1}^1 g(t) (1-t)^mu dt
    const QuadRule1D radial = gauss_jacobi(mu, 0.0, n_radial);
    const double radial_scale = std::pow(2.0, -(mu + 2.0));
    const double angular_weight = 2.0 * std::numbers::pi / n_angular;

    DiskRule rule;
    rule.mu = mu;
    rule.n_radial = n_radial;
    rule.n_angular = n_angular;
    rule.nodes.reserve(static_cast<std::size_t>(n_radial) * n_angular);
    for (int i = 0; i < n_radial; ++i) {
        const double r = std::sqrt((1.0 + radial.nodes[i]) / 2.0);
        const double w = radial_scale * radial.weights[i] * angular_weight;
        for (int m = 0; m < n_angular; ++m) {
            const double theta = angular_weight * m;
            rule.nodes.push_back({r * std::cos(theta), r * std::sin(theta), w});
        }
    }
    return rule;
}

std::complex<double> integrate(const DiskRule& rule,
                               const std::function<std::complex<double>(std::complex<double>)>& f) {
    std::complex<double> acc = 0.0;
    for (const DiskNode& node : rule.nodes) acc += node.weight * f({node.x, node.y});
    return acc;
}

CircleRule circle_rule(int n_angular) {
    if (n_angular < 1) throw std::invalid_argument("circle_rule: empty rule");
    CircleRule rule;
    rule.n_angular = n_angular;
    rule.angles.resize(n_angular);
    for (int m = 0; m < n_angular; ++m) rule.angles[m] = 2.0 * std::numbers::pi * m / n_angular;
    return rule;
}

std::complex<double> integrate_boundary(
    const CircleRule& rule, const std::function<std::complex<double>(std::complex<double>)>& f) {
    std::complex<double> acc = 0.0;
    for (double theta : rule.angles) acc += f(std::polar(1.0, theta));
    return acc * (2.0 / rule.n_angular);
}

}  // namespace diskpoly

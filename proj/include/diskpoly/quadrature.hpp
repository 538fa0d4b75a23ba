#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace diskpoly {

/// Gauss-Jacobi rule on [-1,1] against (1-t)^alpha (1+t)^beta. Exact for
/// polynomials of degree <= 2 n_points - 1.
struct QuadRule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
    double alpha = 0.0;
    double beta = 0.0;
    int n_points = 0;
};

QuadRule1D gauss_jacobi(double alpha, double beta, int n_points);

double integrate(const QuadRule1D& rule, const std::function<double(double)>& f);

/// Product rule for integrals over the unit disk against (1-x^2-y^2)^mu,
/// without the b_mu normalization. Radially this is the t = 2r^2 - 1 image of
/// a Gauss-Jacobi rule with parameters (mu, 0); angularly a trapezoid with
/// n_angular equispaced points, exact through harmonic order n_angular - 1.
struct DiskNode {
    double x;
    double y;
    double weight;
};

struct DiskRule {
    std::vector<DiskNode> nodes;
    double mu = 0.0;
    int n_radial = 0;
    int n_angular = 0;
};

DiskRule disk_rule(double mu, int n_radial, int n_angular);

std::complex<double> integrate(const DiskRule& rule,
                               const std::function<std::complex<double>(std::complex<double>)>& f);

/// Equispaced rule evaluating (1/pi) * integral over the unit circle of
/// f(e^{i theta}, e^{-i theta}); exact for Laurent polynomials with
/// |order| < n_angular.
struct CircleRule {
    std::vector<double> angles;
    int n_angular = 0;
};

CircleRule circle_rule(int n_angular);

std::complex<double> integrate_boundary(
    const CircleRule& rule, const std::function<std::complex<double>(std::complex<double>)>& f);

}  // namespace diskpoly

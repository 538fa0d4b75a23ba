#pragma once

#include "diskpoly/zernike.hpp"

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskpoly {

struct Sample {
    double x = 0.0;
    double y = 0.0;
    std::complex<double> value;
};

/// Scattered or grid samples of a function on the unit disk.
struct SampleSet {
    std::vector<Sample> samples;
    std::string source;

    bool inside_disk(double slack = 1e-12) const;
};

/// Parses "x,y,re[,im]" CSV with a header line. Throws std::invalid_argument
/// on malformed content.
SampleSet read_samples_csv(std::istream& in, std::string source);
SampleSet read_samples_csv_file(const std::string& path);

enum class FitMethod { projection, least_squares };

struct FitCoefficient {
    int k = 0;
    int j = 0;
    std::complex<double> value;
};

struct FitResult {
    std::vector<FitCoefficient> coefficients;  // graded (k+j, k) order
    double residual_rms = 0.0;
    double condition = 0.0;
    int degree = 0;
    double mu = 0.0;
    FitMethod method = FitMethod::projection;
};

/// Projection fitting requires samples on a quadrature grid.
class NodeCoverageError : public std::runtime_error {
public:
    explicit NodeCoverageError(const std::string& what) : std::runtime_error(what) {}
};

/// Fewer samples than coefficients.
class UnderdeterminedError : public std::runtime_error {
public:
    explicit UnderdeterminedError(const std::string& what) : std::runtime_error(what) {}
};

/// Coefficients via the orthogonality shortcut: each c_{k,j} is the weighted
/// inner product of the samples with Q^mu_{k,j} over the rule, divided by the
/// closed-form norm. The samples must cover the rule nodes (1e-8 matching);
/// rule sizes default from the degree when left at zero.
FitResult fit_projection(const SampleSet& samples, int degree, double mu, int n_radial = 0,
                         int n_angular = 0);

/// Normal-equations least squares on arbitrary points, with 1e-12 diagonal
/// regularization. The condition estimate is the 2-norm condition of the
/// Vandermonde matrix.
FitResult fit_least_squares(const SampleSet& samples, int degree, double mu);

/// Reconstruction at a point from fitted coefficients.
std::complex<double> fit_eval(const FitResult& fit, std::complex<double> z);

}  // namespace diskpoly

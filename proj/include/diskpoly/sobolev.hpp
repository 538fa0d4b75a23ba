#pragma once

#include "diskpoly/quadrature.hpp"
#include "diskpoly/report.hpp"
#include "diskpoly/zernike.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace diskpoly {

/// Basis for the gradient-plus-boundary inner product: zernike_q_minus_one.
BiPoly sobolev_basis_1(int k, int j);

/// Basis for the Laplacian-style inner product: 1 at (0,0) and
/// (1 - z zbar) Q^2_{k-1,j-1} for k,j >= 1.
BiPoly sobolev_basis_2(int k, int j);

/// (f,g)_1 = (lambda/pi) int_D df/dz conj(dg/dz) + (1/pi) int_0^{2pi} f conj(g);
/// derivatives are taken exactly before any quadrature.
std::complex<double> inner_product_1(const BiPoly& f, const BiPoly& g, double lambda);

/// (f,g)_2 = (1/pi) int_D d2/dzdzbar[(1-z zbar) f] conj(same of g).
std::complex<double> inner_product_2(const BiPoly& f, const BiPoly& g);

/// Exact rational-mode checks of the three derivative lemmas tying the two
/// Sobolev bases to the mu = 0 disk polynomials.
VerificationReport verify_sobolev_dz_lemma(int k, int j);          // d/dz basis1 = -Q^0_{k-1,j}
VerificationReport verify_sobolev_projection_lemma(int k, int j);  // dzdzbar[(1-zw) U] = c Q^0
VerificationReport verify_sobolev_inverse_lemma(int k, int j);     // (1-zw) dzdzbar Q^0 = d U
VerificationReport verify_sobolev_lemmas(int kmax, int jmax);

/// Closed-form Gram diagonals the numerical matrices are checked against.
Rational sobolev1_expected_diag(int k, int j, const Rational& lambda);
Rational sobolev2_expected_diag(int k, int j);

struct GramMatrix {
    std::vector<std::pair<int, int>> indices;
    std::vector<std::vector<std::complex<double>>> values;
};

inline constexpr int kGramDegreeCapLimit = 20;

/// Gram of arbitrary polynomials under the b_mu-normalized disk inner product;
/// rule sizes picked from max_degree (a 0 lets them default from the basis).
std::vector<std::vector<std::complex<double>>> weighted_gram(const std::vector<BiPoly>& basis,
                                                             double mu, int max_degree = 0);

/// Gram of {Q^mu_{k,j} : k+j <= degree_cap} under its own weighted product.
GramMatrix gram_weight(double mu, int degree_cap);

/// Gram of basis 1 restricted to defined indices with k+j <= degree_cap.
GramMatrix gram_sobolev1(int degree_cap, double lambda);

/// Gram of basis 2, same index policy.
GramMatrix gram_sobolev2(int degree_cap);

}  // namespace diskpoly

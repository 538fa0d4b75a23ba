#pragma once

#include "diskpoly/bipoly.hpp"
#include "diskpoly/jacobi.hpp"

#include <utility>

namespace diskpoly {

/// Index triple of a disk polynomial Q^mu_{k,j}. Orthogonality statements need
/// mu > -1; construction is otherwise formal and the flag records validity.
struct ZernikeIndex {
    int k = 0;
    int j = 0;
    Scalar mu;

    bool orthogonal_range() const { return mu > Scalar::from_int(-1, mu.mode()); }
};

/// Q^mu_{k,j}(z, zbar), normalized so Q(1,1) = 1. For k >= j this expands
///   (j!/(mu+1)_j) z^{k-j} P_j^{(mu,k-j)}(2 z zbar - 1)
/// and for k < j the conjugate-variable companion with the roles of k and j
/// swapped. Throws std::domain_error when (mu+1)_min(k,j) = 0, where the
/// normalization breaks down (negative integer mu close to the index).
BiPoly zernike_q(int k, int j, const Scalar& mu);
BiPoly zernike_q(const ZernikeIndex& index);

/// The two raw construction formulas, each expanded for arbitrary index order.
/// Outside its natural range a formula starts from a negative monomial
/// exponent and relies on leading radial coefficients cancelling; both land on
/// the same polynomial, which the tests pin down.
BiPoly zernike_q_z_form(int k, int j, const Scalar& mu);
BiPoly zernike_q_zbar_form(int k, int j, const Scalar& mu);

/// Real-valued pair (cosine-like, sine-like) spanning the same span as
/// Q^mu_{n-j,j}: ((mu+1)_j/j!) (Re Q, Im Q) as polynomials in (z, zbar).
/// Requires 0 <= 2j <= n; the second component is zero when n = 2j.
std::pair<BiPoly, BiPoly> zernike_real_forms(int n, int j, const Scalar& mu);

/// Squared norm h^mu_{k,j} of Q^mu_{k,j} under the b_mu-normalized disk inner
/// product: (mu+1)/(mu+k+j+1) * k! j! / ((mu+1)_k (mu+1)_j). Requires mu > -1.
Rational zernike_norm(const Rational& mu, int k, int j);

/// Squared norm of the real form with indices (n, j), either component:
///   (mu+1)_j (n-j)! (n-j+mu+1) / (j! (mu+2)_{n-j} (n+mu+1)), halved when n != 2j.
/// Equal to ((mu+1)_j/j!)^2 h^mu_{n-j,j} times 1/2 (or 1 when n = 2j).
Rational zernike_real_norm(const Rational& mu, int n, int j);

/// A commonly quoted variant of the real-form norm with (n+2)_{n-j} in the
/// denominator and a doubling instead of a halving. Disagrees with direct
/// integration for every n >= 1; retained so the discrepancy stays on record.
Rational zernike_real_norm_printed(const Rational& mu, int n, int j);

/// Numerator of the weight normalization b_mu = (mu+1)/pi; pi is applied at
/// quadrature time. Requires mu > -1.
Rational disk_weight_normalization(const Rational& mu);

/// The mu = -1 companion system (exact mode): 1 at (0,0) and
/// (1 - z zbar) Q^1_{k-1,j-1} for k,j >= 1. Every member with k,j >= 1
/// vanishes on the unit circle. Indices with exactly one zero are undefined.
BiPoly zernike_q_minus_one(int k, int j);

}  // namespace diskpoly

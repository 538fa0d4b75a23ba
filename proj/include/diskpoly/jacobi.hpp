#pragma once

#include "diskpoly/unipoly.hpp"

namespace diskpoly {

/// Parameter bundle for P_n^{(alpha,beta)}. Orthogonality needs alpha,beta > -1,
/// but the polynomials exist for any parameters via the explicit formula; the
/// flags record validity instead of enforcing it, since ladder operators step
/// outside the orthogonality range on purpose.
struct JacobiParams {
    Scalar alpha;
    Scalar beta;
    int n = 0;

    bool alpha_orthogonal() const { return alpha > Scalar::from_int(-1, alpha.mode()); }
    bool beta_orthogonal() const { return beta > Scalar::from_int(-1, beta.mode()); }
};

/// P_n^{(alpha,beta)}(t) from the hypergeometric-sum expansion
///   (1/n!) sum_k C(n,k) (k+alpha+1)_{n-k} (n+alpha+beta+1)_k ((t-1)/2)^k,
/// expanded into powers of t. Exact in rational mode.
UniPoly jacobi_explicit(const Scalar& alpha, const Scalar& beta, int n);
UniPoly jacobi_explicit(const JacobiParams& params);

/// Numerically stable evaluation through the standard three-term recurrence.
double jacobi_eval_recurrence(double alpha, double beta, int n, double t);

/// (1-t^2) u'' + (beta - alpha - (alpha+beta+2) t) u'. The Jacobi polynomials
/// are its eigenfunctions with eigenvalue -n(n+alpha+beta+1).
UniPoly apply_jacobi_operator(const Scalar& alpha, const Scalar& beta, const UniPoly& u);

/// (1-t)^alpha (1+t)^beta on the open interval.
double jacobi_weight(double alpha, double beta, double t);

/// Exact coefficient check of P_n^{(alpha,beta)}(t) == (-1)^n P_n^{(beta,alpha)}(-t).
bool reflection_check(const Scalar& alpha, const Scalar& beta, int n);

}  // namespace diskpoly

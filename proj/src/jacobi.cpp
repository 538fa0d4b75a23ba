#include "diskpoly/jacobi.hpp"

#include <cmath>
#include <stdexcept>

namespace diskpoly {

UniPoly jacobi_explicit(const Scalar& alpha, const Scalar& beta, int n) {
    require_same_mode(alpha, beta, "jacobi_explicit");
    if (n < 0) throw std::invalid_argument("jacobi_explicit: negative degree");
    const Mode mode = alpha.mode();
    const Scalar half = Scalar::one(mode) / Scalar::from_int(2, mode);
    // (t-1)/2 and its powers
    const UniPoly base(mode, {-half, half});
    UniPoly base_pow = UniPoly::constant(Scalar::one(mode));
    UniPoly sum = UniPoly::zero(mode);
    for (int k = 0; k <= n; ++k) {
        Scalar c = to_mode(binomial(n, k), mode);
        c *= pochhammer(alpha + Scalar::from_int(k + 1, mode), n - k);
        c *= pochhammer(alpha + beta + Scalar::from_int(n + 1, mode), k);
        sum = sum + base_pow.scaled(c);
        if (k < n) base_pow = base_pow * base;
    }
    return sum.scaled(Scalar::one(mode) / to_mode(factorial(n), mode));
}

UniPoly jacobi_explicit(const JacobiParams& params) {
    return jacobi_explicit(params.alpha, params.beta, params.n);
}

double jacobi_eval_recurrence(double alpha, double beta, int n, double t) {
    if (n < 0) throw std::invalid_argument("jacobi_eval_recurrence: negative degree");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = (alpha + 1.0) + (alpha + beta + 2.0) * (t - 1.0) / 2.0;
    for (int m = 2; m <= n; ++m) {
        const double s = 2.0 * m + alpha + beta;
        const double c1 = 2.0 * m * (m + alpha + beta) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * t + alpha * alpha - beta * beta);
        const double c3 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * s;
        const double next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    return cur;
}

UniPoly apply_jacobi_operator(const Scalar& alpha, const Scalar& beta, const UniPoly& u) {
    require_same_mode(alpha, beta, "apply_jacobi_operator");
    require_mode(alpha.mode(), u.mode(), "apply_jacobi_operator");
    const Mode mode = u.mode();
    const Scalar one = Scalar::one(mode);
    // 1 - t^2
    const UniPoly second(mode, {one, Scalar::zero(mode), -one});
    // beta - alpha - (alpha + beta + 2) t
    const UniPoly first(mode, {beta - alpha, -(alpha + beta + Scalar::from_int(2, mode))});
    return second * u.derivative().derivative() + first * u.derivative();
}

double jacobi_weight(double alpha, double beta, double t) {
    if ((t <= -1.0 || t >= 1.0) && (alpha < 0.0 || beta < 0.0)) {
        throw std::domain_error("jacobi_weight: t outside (-1,1) with a negative parameter");
    }
    return std::pow(1.0 - t, alpha) * std::pow(1.0 + t, beta);
}

bool reflection_check(const Scalar& alpha, const Scalar& beta, int n) {
    const Mode mode = alpha.mode();
    const UniPoly lhs = jacobi_explicit(alpha, beta, n);
    UniPoly rhs = jacobi_explicit(beta, alpha, n).substitute_affine(-Scalar::one(mode), Scalar::zero(mode));
    if (n % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

}  // namespace diskpoly

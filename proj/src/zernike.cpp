#include "diskpoly/zernike.hpp"

#include <stdexcept>

namespace diskpoly {

BiPoly zernike_q_z_form(int k, int j, const Scalar& mu) {
    if (k < 0 || j < 0) throw std::invalid_argument("zernike_q: negative index");
    const Mode mode = mu.mode();
    const Scalar poch = pochhammer(mu + Scalar::one(mode), j);
    if (poch.is_zero()) throw std::domain_error("zernike_q: degenerate parameter (mu+1)_j = 0");
    const Scalar prefactor = to_mode(factorial(j), mode) / poch;
    const UniPoly radial = jacobi_explicit(mu, Scalar::from_int(k - j, mode), j);
    const UniPoly radial_u = radial.substitute_affine(Scalar::from_int(2, mode), -Scalar::one(mode));
    return BiPoly::from_radial(radial_u.scaled(prefactor), k - j, 0);
}

BiPoly zernike_q_zbar_form(int k, int j, const Scalar& mu) {
    if (k < 0 || j < 0) throw std::invalid_argument("zernike_q: negative index");
    const Mode mode = mu.mode();
    const Scalar poch = pochhammer(mu + Scalar::one(mode), k);
    if (poch.is_zero()) throw std::domain_error("zernike_q: degenerate parameter (mu+1)_k = 0");
    const Scalar prefactor = to_mode(factorial(k), mode) / poch;
    const UniPoly radial = jacobi_explicit(mu, Scalar::from_int(j - k, mode), k);
    const UniPoly radial_u = radial.substitute_affine(Scalar::from_int(2, mode), -Scalar::one(mode));
    return BiPoly::from_radial(radial_u.scaled(prefactor), 0, j - k);
}

BiPoly zernike_q(int k, int j, const Scalar& mu) {
    return k >= j ? zernike_q_z_form(k, j, mu) : zernike_q_zbar_form(k, j, mu);
}

BiPoly zernike_q(const ZernikeIndex& index) { return zernike_q(index.k, index.j, index.mu); }

std::pair<BiPoly, BiPoly> zernike_real_forms(int n, int j, const Scalar& mu) {
    if (j < 0 || 2 * j > n) throw std::invalid_argument("zernike_real_forms: need 0 <= 2j <= n");
    const Mode mode = mu.mode();
    const Scalar scale = pochhammer(mu + Scalar::one(mode), j) / to_mode(factorial(j), mode);
    const BiPoly p = zernike_q(n - j, j, mu).scaled(scale);
    const BiPoly p_conj = swap_conj(p);
    const Scalar half = Scalar::one(mode) / Scalar::from_int(2, mode);
    const BiPoly cosine_part = (p + p_conj).scaled(half);
    const BiPoly sine_part = (p - p_conj).scaled(CScalar(Scalar::zero(mode), -half));
    return {cosine_part, sine_part};
}

Rational zernike_norm(const Rational& mu, int k, int j) {
    if (k < 0 || j < 0) throw std::invalid_argument("zernike_norm: negative index");
    if (mu <= Rational(-1)) throw std::domain_error("zernike_norm: requires mu > -1");
    const Rational one(1);
    return (mu + one) / (mu + Rational(k + j + 1)) * factorial(k) * factorial(j) /
           (pochhammer(mu + one, k) * pochhammer(mu + one, j));
}

Rational zernike_real_norm(const Rational& mu, int n, int j) {
    if (j < 0 || 2 * j > n) throw std::invalid_argument("zernike_real_norm: need 0 <= 2j <= n");
    if (mu <= Rational(-1)) throw std::domain_error("zernike_real_norm: requires mu > -1");
    const Rational base = pochhammer(mu + Rational(1), j) * factorial(n - j) * (mu + Rational(n - j + 1)) /
                          (factorial(j) * pochhammer(mu + Rational(2), n - j) * (mu + Rational(n + 1)));
    return n == 2 * j ? base : base / Rational(2);
}

Rational zernike_real_norm_printed(const Rational& mu, int n, int j) {
    if (j < 0 || 2 * j > n) throw std::invalid_argument("zernike_real_norm_printed: need 0 <= 2j <= n");
    if (mu <= Rational(-1)) throw std::domain_error("zernike_real_norm_printed: requires mu > -1");
    const Rational base = pochhammer(mu + Rational(1), j) * factorial(n - j) * (mu + Rational(n - j + 1)) /
                          (factorial(j) * pochhammer(Rational(n + 2), n - j) * (mu + Rational(n + 1)));
    return n == 2 * j ? base : base * Rational(2);
}

Rational disk_weight_normalization(const Rational& mu) {
    if (mu <= Rational(-1)) throw std::domain_error("disk_weight_normalization: requires mu > -1");
    return mu + Rational(1);
}

BiPoly zernike_q_minus_one(int k, int j) {
    const Mode mode = Mode::rational;
    if (k == 0 && j == 0) return BiPoly::constant(CScalar(Scalar::one(mode)));
    if (k < 1 || j < 1) {
        throw std::invalid_argument("zernike_q_minus_one: defined only for (0,0) or k,j >= 1");
    }
    const BiPoly envelope = BiPoly::constant(CScalar(Scalar::one(mode))) -
                            BiPoly::monomial(CScalar(Scalar::one(mode)), 1, 1);
    return envelope * zernike_q(k - 1, j - 1, Scalar(Rational(1)));
}

}  // namespace diskpoly

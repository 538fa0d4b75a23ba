#include "diskpoly/bipoly.hpp"

#include <sstream>
#include <vector>

namespace diskpoly {

void BiPoly::insert(const TermKey& key, const CScalar& c) {
    if (key.a < 0 || key.b < 0) throw std::invalid_argument("BiPoly: negative exponent");
    if (key.a + key.b > kMaxTotalDegree) throw std::invalid_argument("BiPoly: exponent bound exceeded");
    require_mode(mode_, c.mode(), "BiPoly");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::constant(const CScalar& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const CScalar& c, int a, int b) {
    BiPoly p(c.mode());
    p.insert({a, b}, c);
    return p;
}

BiPoly BiPoly::from_radial(const UniPoly& radial_in_u, int shift_z, int shift_zbar) {
    BiPoly out(radial_in_u.mode());
    for (int m = 0; m <= radial_in_u.degree(); ++m) {
        const Scalar c = radial_in_u.coeff(m);
        if (c.is_zero()) continue;
        if (m + shift_z < 0 || m + shift_zbar < 0) {
            throw std::invalid_argument("BiPoly::from_radial: nonzero coefficient on negative exponent");
        }
        out.insert({m + shift_z, m + shift_zbar}, CScalar(c));
    }
    return out;
}

int BiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const TermKey& last = terms_.rbegin()->first;
    return last.a + last.b;
}

CScalar BiPoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    if (it == terms_.end()) return CScalar::zero(mode_);
    return it->second;
}

BiPoly BiPoly::operator-() const {
    BiPoly out(mode_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    require_mode(mode_, o.mode_, "BiPoly::operator+");
    BiPoly out = *this;
    for (const auto& [key, c] : o.terms_) out.insert(key, c);
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    require_mode(mode_, o.mode_, "BiPoly::operator*");
    BiPoly out(mode_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            out.insert({ka.a + kb.a, ka.b + kb.b}, ca * cb);
        }
    }
    return out;
}

BiPoly BiPoly::scaled(const CScalar& c) const {
    require_mode(mode_, c.mode(), "BiPoly::scaled");
    BiPoly out(mode_);
    if (c.is_zero()) return out;
    for (const auto& [key, x] : terms_) out.insert(key, x * c);
    return out;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (key.a > 0) os << "*z" << (key.a > 1 ? "^" + std::to_string(key.a) : "");
        if (key.b > 0) os << "*w" << (key.b > 1 ? "^" + std::to_string(key.b) : "");
        first = false;
    }
    return os.str();
}

BiPoly d_z(const BiPoly& p) {
    BiPoly out(p.mode());
    for (const auto& [key, c] : p.terms()) {
        if (key.a == 0) continue;
        out = out + BiPoly::monomial(c * CScalar(Scalar::from_int(key.a, p.mode())), key.a - 1, key.b);
    }
    return out;
}

BiPoly d_zbar(const BiPoly& p) {
    BiPoly out(p.mode());
    for (const auto& [key, c] : p.terms()) {
        if (key.b == 0) continue;
        out = out + BiPoly::monomial(c * CScalar(Scalar::from_int(key.b, p.mode())), key.a, key.b - 1);
    }
    return out;
}

BiPoly swap_conj(const BiPoly& p) {
    BiPoly out(p.mode());
    for (const auto& [key, c] : p.terms()) {
        out = out + BiPoly::monomial(c.conj(), key.b, key.a);
    }
    return out;
}

BiPoly compose_radial(const UniPoly& p, int m_z, int m_zbar) {
    if (m_z < 0 || m_zbar < 0) throw std::invalid_argument("compose_radial: negative exponent");
    if (m_z != 0 && m_zbar != 0) throw std::invalid_argument("compose_radial: both monomial exponents nonzero");
    const Mode mode = p.mode();
    const UniPoly in_u = p.substitute_affine(Scalar::from_int(2, mode), -Scalar::one(mode));
    return BiPoly::from_radial(in_u, m_z, m_zbar);
}

std::complex<double> eval(const BiPoly& p, std::complex<double> z) {
    int max_a = 0;
    int max_b = 0;
    for (const auto& [key, c] : p.terms()) {
        max_a = std::max(max_a, key.a);
        max_b = std::max(max_b, key.b);
    }
    std::vector<std::complex<double>> zp(max_a + 1), wp(max_b + 1);
    zp[0] = wp[0] = 1.0;
    const std::complex<double> w = std::conj(z);
    for (int i = 1; i <= max_a; ++i) zp[i] = zp[i - 1] * z;
    for (int i = 1; i <= max_b; ++i) wp[i] = wp[i - 1] * w;
    std::complex<double> acc = 0.0;
    for (const auto& [key, c] : p.terms()) acc += c.to_complex() * zp[key.a] * wp[key.b];
    return acc;
}

CScalar eval_exact(const BiPoly& p, const CScalar& z) {
    require_mode(p.mode(), z.mode(), "eval_exact");
    int max_a = 0;
    int max_b = 0;
    for (const auto& [key, c] : p.terms()) {
        max_a = std::max(max_a, key.a);
        max_b = std::max(max_b, key.b);
    }
    const Mode mode = p.mode();
    std::vector<CScalar> zp(max_a + 1, CScalar(Scalar::one(mode)));
    std::vector<CScalar> wp(max_b + 1, CScalar(Scalar::one(mode)));
    const CScalar w = z.conj();
    for (int i = 1; i <= max_a; ++i) zp[i] = zp[i - 1] * z;
    for (int i = 1; i <= max_b; ++i) wp[i] = wp[i - 1] * w;
    CScalar acc = CScalar::zero(mode);
    for (const auto& [key, c] : p.terms()) acc += c * zp[key.a] * wp[key.b];
    return acc;
}

}  // namespace diskpoly

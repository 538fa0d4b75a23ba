#include "diskpoly/unipoly.hpp"

#include <sstream>

namespace diskpoly {

UniPoly::UniPoly(Mode mode, std::vector<Scalar> coeffs) : mode_(mode), coeffs_(std::move(coeffs)) {
    for (const Scalar& c : coeffs_) require_mode(mode_, c.mode(), "UniPoly");
    trim();
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(c.mode(), {c}); }

UniPoly UniPoly::monomial(const Scalar& c, int power) {
    if (power < 0) throw std::invalid_argument("UniPoly::monomial: negative power");
    std::vector<Scalar> coeffs(power + 1, Scalar::zero(c.mode()));
    coeffs[power] = c;
    return UniPoly(c.mode(), std::move(coeffs));
}

Scalar UniPoly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Scalar::zero(mode_);
    return coeffs_[power];
}

Scalar UniPoly::leading_coeff() const {
    if (is_zero()) return Scalar::zero(mode_);
    return coeffs_.back();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const Scalar& c : coeffs_) out.push_back(-c);
    return UniPoly(mode_, std::move(out));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    require_mode(mode_, o.mode_, "UniPoly::operator+");
    std::vector<Scalar> out(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(mode_));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
    }
    return UniPoly(mode_, std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    require_mode(mode_, o.mode_, "UniPoly::operator*");
    if (is_zero() || o.is_zero()) return zero(mode_);
    std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(mode_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return UniPoly(mode_, std::move(out));
}

UniPoly UniPoly::scaled(const Scalar& c) const {
    require_mode(mode_, c.mode(), "UniPoly::scaled");
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const Scalar& x : coeffs_) out.push_back(x * c);
    return UniPoly(mode_, std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return zero(mode_);
    std::vector<Scalar> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out.push_back(coeffs_[i] * Scalar::from_int(static_cast<long long>(i), mode_));
    }
    return UniPoly(mode_, std::move(out));
}

Scalar UniPoly::eval(const Scalar& t) const {
    require_mode(mode_, t.mode(), "UniPoly::eval");
    Scalar acc = Scalar::zero(mode_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double UniPoly::eval(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
}

UniPoly UniPoly::substitute_affine(const Scalar& inner_scale, const Scalar& inner_shift) const {
    require_mode(mode_, inner_scale.mode(), "UniPoly::substitute_affine");
    require_mode(mode_, inner_shift.mode(), "UniPoly::substitute_affine");
    UniPoly inner(mode_, {inner_shift, inner_scale});
    UniPoly acc = zero(mode_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + constant(*it);
    }
    return acc;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = 0; p <= degree(); ++p) {
        if (coeff(p).is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeff(p).str() << ")";
        if (p >= 1) os << "*t";
        if (p >= 2) os << "^" << p;
        first = false;
    }
    return os.str();
}

}  // namespace diskpoly

#include "diskpoly/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace diskpoly {

void require_mode(Mode a, Mode b, const char* where) {
    if (a != b) {
        throw ModeError(std::string(where) + ": mode mismatch (" + mode_name(a) + " vs " + mode_name(b) + ")");
    }
}

void require_same_mode(const Scalar& a, const Scalar& b, const char* where) {
    require_mode(a.mode(), b.mode(), where);
}

std::string Scalar::str() const {
    if (mode() == Mode::rational) return rat().str();
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", f64());
    return buf;
}

Scalar Scalar::operator-() const {
    if (mode() == Mode::rational) return Scalar(-std::get<Rational>(v_));
    return Scalar(-std::get<double>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_mode(*this, o, "Scalar::operator+");
    if (mode() == Mode::rational) {
        std::get<Rational>(v_) += std::get<Rational>(o.v_);
    } else {
        std::get<double>(v_) += std::get<double>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_mode(*this, o, "Scalar::operator-");
    if (mode() == Mode::rational) {
        std::get<Rational>(v_) -= std::get<Rational>(o.v_);
    } else {
        std::get<double>(v_) -= std::get<double>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_mode(*this, o, "Scalar::operator*");
    if (mode() == Mode::rational) {
        std::get<Rational>(v_) *= std::get<Rational>(o.v_);
    } else {
        std::get<double>(v_) *= std::get<double>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_mode(*this, o, "Scalar::operator/");
    if (mode() == Mode::rational) {
        std::get<Rational>(v_) /= std::get<Rational>(o.v_);
    } else {
        if (std::get<double>(o.v_) == 0.0) throw std::domain_error("Scalar: division by zero");
        std::get<double>(v_) /= std::get<double>(o.v_);
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) return false;
    if (a.mode() == Mode::rational) return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
    return std::get<double>(a.v_) == std::get<double>(b.v_);
}

bool operator<(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "Scalar::operator<");
    if (a.mode() == Mode::rational) return std::get<Rational>(a.v_) < std::get<Rational>(b.v_);
    return std::get<double>(a.v_) < std::get<double>(b.v_);
}

Scalar pochhammer(const Scalar& a, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative k");
    if (a.mode() == Mode::rational) return Scalar(pochhammer(a.rat(), k));
    double value = 1.0;
    for (int i = 0; i < k; ++i) value *= a.f64() + i;
    return Scalar(value);
}

std::string CScalar::str() const {
    if (im_.is_zero()) return re_.str();
    return re_.str() + (im_.is_zero() ? "" : "+(" + im_.str() + ")i");
}

CScalar& CScalar::operator+=(const CScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

CScalar& CScalar::operator-=(const CScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

CScalar& CScalar::operator*=(const CScalar& o) {
    Scalar re = re_ * o.re_ - im_ * o.im_;
    Scalar im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

CScalar imaginary_unit(Mode m) { return CScalar(Scalar::zero(m), Scalar::one(m)); }

}  // namespace diskpoly

#pragma once

#include "diskpoly/rational.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

namespace diskpoly {

/// Coefficient mode. Every polynomial is entirely exact or entirely float64;
/// the two never mix inside one expression.
enum class Mode { rational, f64 };

inline const char* mode_name(Mode m) { return m == Mode::rational ? "rational" : "float"; }

/// Thrown when exact and float values meet in one arithmetic expression.
class ModeError : public std::logic_error {
public:
    explicit ModeError(const std::string& what) : std::logic_error(what) {}
};

/// A real scalar in one of the two modes. Integers promote to either mode,
/// so operator coefficients like (n + alpha + beta + 1) read naturally.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(const Rational& r) : v_(r) {}  // NOLINT: implicit by design
    Scalar(long long n) : v_(Rational(n)) {}
    Scalar(int n) : v_(Rational(n)) {}
    explicit Scalar(double x) : v_(x) {}

    static Scalar zero(Mode m) { return m == Mode::rational ? Scalar(Rational(0)) : Scalar(0.0); }
    static Scalar one(Mode m) { return m == Mode::rational ? Scalar(Rational(1)) : Scalar(1.0); }
    static Scalar from_int(long long n, Mode m) {
        return m == Mode::rational ? Scalar(Rational(n)) : Scalar(static_cast<double>(n));
    }

    Mode mode() const { return std::holds_alternative<Rational>(v_) ? Mode::rational : Mode::f64; }
    bool is_zero() const {
        return mode() == Mode::rational ? std::get<Rational>(v_).is_zero() : std::get<double>(v_) == 0.0;
    }

    const Rational& rat() const {
        if (mode() != Mode::rational) throw ModeError("Scalar: float value used as rational");
        return std::get<Rational>(v_);
    }
    double f64() const {
        if (mode() != Mode::f64) throw ModeError("Scalar: rational value used as float");
        return std::get<double>(v_);
    }
    double to_double() const {
        return mode() == Mode::rational ? std::get<Rational>(v_).to_double() : std::get<double>(v_);
    }

    /// Exact decimal-free text: "p/q" in rational mode, shortest round-trip float otherwise.
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b);
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

private:
    std::variant<Rational, double> v_;
};

/// Carries a rational value into the requested mode.
inline Scalar to_mode(const Rational& r, Mode m) {
    return m == Mode::rational ? Scalar(r) : Scalar(r.to_double());
}

/// Checks the two operands share one mode, promoting int-born rationals is not
/// done here: a Scalar already carries its mode.
void require_same_mode(const Scalar& a, const Scalar& b, const char* where);
void require_mode(Mode a, Mode b, const char* where);

/// Rising factorial in either mode.
Scalar pochhammer(const Scalar& a, int k);

/// Complex scalar; real and imaginary parts always share one mode.
class CScalar {
public:
    CScalar() = default;
    CScalar(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {
        require_same_mode(re_, im_, "CScalar");
    }
    CScalar(const Scalar& re) : CScalar(re, Scalar::zero(re.mode())) {}  // NOLINT
    CScalar(const Rational& re) : CScalar(Scalar(re)) {}                 // NOLINT

    static CScalar zero(Mode m) { return CScalar(Scalar::zero(m), Scalar::zero(m)); }
    static CScalar from(std::complex<double> z) { return CScalar(Scalar(z.real()), Scalar(z.imag())); }

    Mode mode() const { return re_.mode(); }
    const Scalar& re() const { return re_; }
    const Scalar& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    CScalar conj() const { return CScalar(re_, -im_); }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    std::string str() const;

    CScalar operator-() const { return CScalar(-re_, -im_); }
    CScalar& operator+=(const CScalar& o);
    CScalar& operator-=(const CScalar& o);
    CScalar& operator*=(const CScalar& o);

    friend CScalar operator+(CScalar a, const CScalar& b) { return a += b; }
    friend CScalar operator-(CScalar a, const CScalar& b) { return a -= b; }
    friend CScalar operator*(CScalar a, const CScalar& b) { return a *= b; }

    friend bool operator==(const CScalar& a, const CScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const CScalar& a, const CScalar& b) { return !(a == b); }

private:
    Scalar re_, im_;
};

/// The imaginary unit in the given mode.
CScalar imaginary_unit(Mode m);

}  // namespace diskpoly

#pragma once

#include "diskpoly/scalar.hpp"

#include <vector>

namespace diskpoly {

/// Dense univariate polynomial in t. Trailing zero coefficients are trimmed;
/// the zero polynomial has an empty coefficient list and degree -1.
/// Values are immutable after construction; all operations are pure.
class UniPoly {
public:
    explicit UniPoly(Mode mode) : mode_(mode) {}
    UniPoly(Mode mode, std::vector<Scalar> coeffs);

    static UniPoly zero(Mode mode) { return UniPoly(mode); }
    static UniPoly constant(const Scalar& c);
    static UniPoly monomial(const Scalar& c, int power);
    /// The polynomial t.
    static UniPoly variable(Mode mode) { return monomial(Scalar::one(mode), 1); }

    Mode mode() const { return mode_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coeff(int power) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar leading_coeff() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Scalar& c) const;

    UniPoly derivative() const;
    Scalar eval(const Scalar& t) const;
    double eval(double t) const;

    /// p(inner_scale * u + inner_shift) expanded as a polynomial in u.
    UniPoly substitute_affine(const Scalar& inner_scale, const Scalar& inner_shift) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.mode_ == b.mode_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void trim();

    Mode mode_;
    std::vector<Scalar> coeffs_;
};

}  // namespace diskpoly

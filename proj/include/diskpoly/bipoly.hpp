#pragma once

#include "diskpoly/scalar.hpp"
#include "diskpoly/unipoly.hpp"

#include <complex>
#include <map>

namespace diskpoly {

/// Monomial exponents: z^a zbar^b.
struct TermKey {
    int a = 0;
    int b = 0;
    friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Graded order: by total degree a+b, then by a. This is the canonical term
/// order everywhere, including serialized output.
struct TermOrder {
    bool operator()(const TermKey& x, const TermKey& y) const {
        if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
        return x.a < y.a;
    }
};

/// Sparse bivariate polynomial in the conjugate pair (z, zbar) with complex
/// coefficients. Zero coefficients are never stored. Immutable after
/// construction; all operations are pure.
class BiPoly {
public:
    using TermMap = std::map<TermKey, CScalar, TermOrder>;

    /// Construction rejects exponents with a+b above this bound.
    static constexpr int kMaxTotalDegree = 4096;

    explicit BiPoly(Mode mode) : mode_(mode) {}

    static BiPoly zero(Mode mode) { return BiPoly(mode); }
    static BiPoly constant(const CScalar& c);
    static BiPoly monomial(const CScalar& c, int a, int b);
    static BiPoly variable_z(Mode mode) { return monomial(CScalar(Scalar::one(mode)), 1, 0); }
    static BiPoly variable_zbar(Mode mode) { return monomial(CScalar(Scalar::one(mode)), 0, 1); }

    /// radial_in_u interpreted as a polynomial in u = z*zbar; each u^m term
    /// lands on exponents (m + shift_z, m + shift_zbar). Negative shifts are
    /// accepted only where the corresponding coefficients vanish.
    static BiPoly from_radial(const UniPoly& radial_in_u, int shift_z, int shift_zbar);

    Mode mode() const { return mode_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree max(a+b); -1 for the zero polynomial.
    int total_degree() const;
    CScalar coeff(int a, int b) const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(const CScalar& c) const;
    BiPoly scaled(const Scalar& c) const { return scaled(CScalar(c)); }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.mode_ == b.mode_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void insert(const TermKey& key, const CScalar& c);

    Mode mode_;
    TermMap terms_;
};

/// Formal Wirtinger-style partials: z and zbar are independent variables.
BiPoly d_z(const BiPoly& p);
BiPoly d_zbar(const BiPoly& p);

/// Coefficient transpose-and-conjugate: result.coeff(a,b) = conj(p.coeff(b,a)).
/// As a function of z this realizes complex conjugation, and p represents a
/// real-valued function on the disk iff swap_conj(p) == p.
BiPoly swap_conj(const BiPoly& p);

/// z^{m_z} zbar^{m_zbar} * p(2 z zbar - 1), fully expanded. Exactly one of the
/// two monomial exponents may be nonzero.
BiPoly compose_radial(const UniPoly& p, int m_z, int m_zbar);

/// Numerical evaluation with zbar = conj(z).
std::complex<double> eval(const BiPoly& p, std::complex<double> z);

/// Exact evaluation at a rational Gaussian point z = re + i*im, zbar = conj(z).
CScalar eval_exact(const BiPoly& p, const CScalar& z);

}  // namespace diskpoly

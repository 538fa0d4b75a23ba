#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diskpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always in lowest terms, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    /// Accepts "p", "-p", "p/q" with optional leading sign on p. Returns nullopt on anything else.
    static std::optional<Rational> parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return denominator() == 1; }
    long long to_long() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        return numerator().convert_to<long long>();
    }
    double to_double() const { return v_.convert_to<double>(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.str(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Integer powers; negative exponents invert (throws on zero base).
    static Rational pow(const Rational& base, int exponent);

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

/// Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, int k);

/// n! as an exact integer-valued rational.
Rational factorial(int n);

/// Binomial coefficient C(n, k) for 0 <= k <= n.
Rational binomial(int n, int k);

}  // namespace diskpoly

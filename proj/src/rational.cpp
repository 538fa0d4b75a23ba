#include "diskpoly/rational.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <utility>

namespace diskpoly {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) return false;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return false;
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    out = BigInt(std::string(text));
    if (negative) out = -out;
    return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) return std::nullopt;
        return Rational(std::move(num), BigInt(1));
    }
    BigInt den;
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(std::move(num), std::move(den));
}

Rational Rational::pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw std::domain_error("Rational::pow: zero to negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational result(1);
    Rational square = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= square;
        square *= square;
        e >>= 1;
    }
    return result;
}

namespace {

// Memo for rising factorials; guarded so concurrent verification batches can share it.
class PochhammerCache {
public:
    Rational get(const Rational& a, int k) {
        if (k == 0) return Rational(1);
        std::lock_guard<std::mutex> lock(mutex_);
        const auto key = std::make_pair(a, k);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Rational value = get_unlocked(a, k);
        memo_.emplace(key, value);
        return value;
    }

private:
    Rational get_unlocked(const Rational& a, int k) {
        if (k == 0) return Rational(1);
        const auto key = std::make_pair(a, k);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Rational value = get_unlocked(a, k - 1) * (a + Rational(k - 1));
        memo_.emplace(key, value);
        return value;
    }

    std::mutex mutex_;
    std::map<std::pair<Rational, int>, Rational> memo_;
};

PochhammerCache& pochhammer_cache() {
    static PochhammerCache cache;
    return cache;
}

}  // namespace

Rational pochhammer(const Rational& a, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative k");
    return pochhammer_cache().get(a, k);
}

Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative n");
    return pochhammer(Rational(1), n);
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("binomial: k out of range");
    return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace diskpoly

#include "diskpoly/poly_io.hpp"

namespace diskpoly {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
    if (s.mode() == Mode::rational) return s.rat().str();
    return s.f64();
}

Scalar scalar_from_json(const json& j, Mode mode) {
    if (mode == Mode::rational) {
        if (!j.is_string()) throw std::invalid_argument("polynomial JSON: rational scalar must be a string");
        auto r = Rational::parse(j.get<std::string>());
        if (!r) throw std::invalid_argument("polynomial JSON: bad rational '" + j.get<std::string>() + "'");
        return Scalar(*r);
    }
    if (!j.is_number()) throw std::invalid_argument("polynomial JSON: float scalar must be a number");
    return Scalar(j.get<double>());
}

json to_json(const BiPoly& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) {
        json term{{"a", key.a}, {"b", key.b}, {"re", scalar_to_json(c.re())}};
        if (!c.im().is_zero()) term["im"] = scalar_to_json(c.im());
        terms.push_back(std::move(term));
    }
    return json{{"mode", mode_name(p.mode())}, {"terms", std::move(terms)}};
}

json to_json(const UniPoly& p) {
    json terms = json::array();
    for (int power = 0; power <= p.degree(); ++power) {
        const Scalar c = p.coeff(power);
        if (c.is_zero()) continue;
        terms.push_back(json{{"a", power}, {"b", 0}, {"re", scalar_to_json(c)}});
    }
    return json{{"mode", mode_name(p.mode())}, {"terms", std::move(terms)}};
}

namespace {

Mode mode_from_json(const json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "rational") return Mode::rational;
    if (mode == "float") return Mode::f64;
    throw std::invalid_argument("polynomial JSON: unknown mode '" + mode + "'");
}

}  // namespace

BiPoly bipoly_from_json(const json& j) {
    const Mode mode = mode_from_json(j);
    BiPoly out(mode);
    for (const auto& term : j.at("terms")) {
        const int a = term.at("a").get<int>();
        const int b = term.at("b").get<int>();
        Scalar re = scalar_from_json(term.at("re"), mode);
        Scalar im = term.contains("im") ? scalar_from_json(term.at("im"), mode) : Scalar::zero(mode);
        out = out + BiPoly::monomial(CScalar(std::move(re), std::move(im)), a, b);
    }
    return out;
}

UniPoly unipoly_from_json(const json& j) {
    const Mode mode = mode_from_json(j);
    UniPoly out = UniPoly::zero(mode);
    for (const auto& term : j.at("terms")) {
        const int a = term.at("a").get<int>();
        if (term.at("b").get<int>() != 0) {
            throw std::invalid_argument("polynomial JSON: univariate term with b != 0");
        }
        if (term.contains("im") && !scalar_from_json(term.at("im"), mode).is_zero()) {
            throw std::invalid_argument("polynomial JSON: univariate term with imaginary part");
        }
        out = out + UniPoly::monomial(scalar_from_json(term.at("re"), mode), a);
    }
    return out;
}

}  // namespace diskpoly

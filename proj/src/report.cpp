#include "diskpoly/report.hpp"

namespace diskpoly {

using nlohmann::json;

json to_json(const VerificationReport& report) {
    json params = json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    json out{{"identity", report.identity}, {"params", std::move(params)}, {"pass", report.pass}};
    if (report.skipped) out["skipped"] = true;
    if (report.witness) {
        out["witness"] = json{{"a", report.witness->a},
                              {"b", report.witness->b},
                              {"lhs", report.witness->lhs},
                              {"rhs", report.witness->rhs}};
    }
    return out;
}

VerificationReport compare_polys(std::string identity, const UniPoly& lhs, const UniPoly& rhs) {
    VerificationReport report;
    report.identity = std::move(identity);
    report.pass = lhs == rhs;
    if (!report.pass) {
        const int top = std::max(lhs.degree(), rhs.degree());
        for (int power = 0; power <= top; ++power) {
            if (lhs.coeff(power) != rhs.coeff(power)) {
                report.witness = Witness{power, 0, lhs.coeff(power).str(), rhs.coeff(power).str()};
                break;
            }
        }
    }
    return report;
}

VerificationReport compare_polys(std::string identity, const BiPoly& lhs, const BiPoly& rhs) {
    VerificationReport report;
    report.identity = std::move(identity);
    report.pass = lhs == rhs;
    if (!report.pass) {
        const BiPoly diff = lhs - rhs;
        const TermKey key = diff.terms().begin()->first;
        report.witness = Witness{key.a, key.b, lhs.coeff(key.a, key.b).str(), rhs.coeff(key.a, key.b).str()};
    }
    return report;
}

}  // namespace diskpoly

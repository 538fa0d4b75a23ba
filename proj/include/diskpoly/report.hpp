#pragma once

#include "diskpoly/bipoly.hpp"
#include "diskpoly/unipoly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diskpoly {

/// First differing coefficient of a failed identity check.
struct Witness {
    int a = 0;
    int b = 0;  // stays 0 for univariate identities
    std::string lhs;
    std::string rhs;
};

/// Machine-readable outcome of one identity check. Failure is data, not an
/// exception; batches aggregate these into the verify report.
struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = true;
    bool skipped = false;
    std::optional<Witness> witness;

    VerificationReport& with_param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
        return *this;
    }
};

nlohmann::json to_json(const VerificationReport& report);

/// Equality check producing a report; on mismatch the witness carries the
/// first term (in graded order) where the two sides differ.
VerificationReport compare_polys(std::string identity, const UniPoly& lhs, const UniPoly& rhs);
VerificationReport compare_polys(std::string identity, const BiPoly& lhs, const BiPoly& rhs);

}  // namespace diskpoly

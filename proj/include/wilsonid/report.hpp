#pragma once

// Serialized form of every result the command-line tool emits. One report is
// one JSON object (one line in --json mode) or one text block; both renderings
// are produced from the same field list so they always agree on values.
//
// Integers travel as decimal strings, rationals as "num/den" strings and
// polynomials as arrays of rational strings, ascending power.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wilsonid/identity.hpp"
#include "wilsonid/modular.hpp"

namespace wilsonid {

inline constexpr const char* kSchemaVersion = "1";

enum class Status { holds, violated, error };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CliReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    Status status = Status::holds;

    /// Flat object: schema_version, check, params, payload fields, status.
    nlohmann::ordered_json to_json() const;
    /// Inverse of to_json. Throws std::invalid_argument on a malformed object.
    static CliReport from_json(const nlohmann::ordered_json& j);

    /// Head line `check k=v ... status`, then indented lines for entries and
    /// a right-aligned table for difference columns.
    std::string to_text() const;

    friend bool operator==(const CliReport&, const CliReport&) = default;
};

CliReport make_theorem1_report(const VerificationResult& r, std::optional<std::uint64_t> seed);
CliReport make_corollary2_report(const VerificationResult& r, std::optional<std::uint64_t> seed);

/// Symbolic collapse of the expanded sum against the expected polynomial.
CliReport make_symbolic_report(std::string check, std::vector<std::pair<std::string, std::string>> params,
                               const Polynomial& actual, const Polynomial& expected);

CliReport make_wilson_report(const PrimalityVerdict& v);
CliReport make_wilson_range_summary(const Integer& lo, const Integer& hi, std::uint64_t primes,
                                    std::uint64_t composites, bool all_agree);

CliReport make_congruence_report(const CongruenceReport& r);
CliReport make_zero_point_report(const ZeroPointReport& r);

/// Columns of the classic difference table of x^degree at x = 0..points-1.
/// Column c holds the c-th backward differences, defined for x >= c.
CliReport make_difftable_report(std::int64_t degree, std::int64_t points);

}  // namespace wilsonid

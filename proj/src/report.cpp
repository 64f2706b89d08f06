#include "wilsonid/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wilsonid/combinatorics.hpp"

namespace wilsonid {
namespace {

using nlohmann::ordered_json;

Status status_of(bool holds) { return holds ? Status::holds : Status::violated; }

ordered_json poly_json(const Polynomial& p) { return ordered_json(p.to_strings()); }

std::string scalar_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k != 0) s += ", ";
            s += scalar_text(v[k]);
        }
        return s + "]";
    }
    return v.dump();
}

bool is_object_array(const ordered_json& v) {
    return v.is_array() && !v.empty() && v.front().is_object();
}

bool is_nested_array(const ordered_json& v) {
    return v.is_array() && !v.empty() && v.front().is_array();
}

void write_table(std::ostringstream& os, const ordered_json& columns) {
    std::vector<std::string> header{"x"};
    for (std::size_t c = 0; c < columns.size(); ++c) {
        header.push_back(c == 0 ? "f" : "d" + std::to_string(c));
    }
    const std::size_t rows = columns.front().size();
    std::vector<std::vector<std::string>> cells(rows, std::vector<std::string>(header.size()));
    for (std::size_t x = 0; x < rows; ++x) {
        cells[x][0] = std::to_string(x);
        for (std::size_t c = 0; c < columns.size(); ++c) {
            // column c starts at x = c
            if (x >= c) cells[x][c + 1] = columns[c][x - c].get<std::string>();
        }
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    auto emit = [&](const std::vector<std::string>& row) {
        std::string line = " ";
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += ' ';
            line += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    };
    emit(header);
    for (const auto& row : cells) emit(row);
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::violated: return "violated";
        case Status::error: return "error";
    }
    return "error";
}

Status status_from_string(const std::string& s) {
    if (s == "holds") return Status::holds;
    if (s == "violated") return Status::violated;
    if (s == "error") return Status::error;
    throw std::invalid_argument("unknown status '" + s + "'");
}

ordered_json CliReport::to_json() const {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["check"] = check;
    ordered_json p = ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = std::move(p);
    for (const auto& [k, v] : payload.items()) j[k] = v;
    j["status"] = wilsonid::to_string(status);
    return j;
}

CliReport CliReport::from_json(const ordered_json& j) {
    try {
        if (j.at("schema_version").get<std::string>() != kSchemaVersion) {
            throw std::invalid_argument("unsupported schema_version");
        }
        CliReport r;
        r.check = j.at("check").get<std::string>();
        for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
        r.status = status_from_string(j.at("status").get<std::string>());
        for (const auto& [k, v] : j.items()) {
            if (k == "schema_version" || k == "check" || k == "params" || k == "status") continue;
            r.payload[k] = v;
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

std::string CliReport::to_text() const {
    std::ostringstream os;
    os << check;
    for (const auto& [k, v] : params) {
        if (payload.contains(k) && payload[k].is_string() && payload[k].get<std::string>() == v) continue;
        os << ' ' << k << '=' << v;
    }
    for (const auto& [k, v] : payload.items()) {
        if (k == "holds" || is_object_array(v) || is_nested_array(v)) continue;
        os << ' ' << k << '=' << scalar_text(v);
    }
    os << ' ' << wilsonid::to_string(status) << '\n';
    for (const auto& [k, v] : payload.items()) {
        if (is_object_array(v)) {
            for (const auto& row : v) {
                os << ' ';
                for (const auto& [rk, rv] : row.items()) os << ' ' << rk << '=' << scalar_text(rv);
                os << '\n';
            }
        } else if (is_nested_array(v)) {
            write_table(os, v);
        }
    }
    return os.str();
}

namespace {

CliReport verification_report(const VerificationResult& r, std::optional<std::uint64_t> seed) {
    CliReport rep;
    rep.check = r.check;
    rep.params.emplace_back("n", std::to_string(r.n));
    if (r.j) rep.params.emplace_back("j", std::to_string(*r.j));
    if (r.x) rep.params.emplace_back("x", r.x->to_string());
    if (seed) rep.params.emplace_back("seed", std::to_string(*seed));
    rep.payload["lhs"] = r.lhs.to_string();
    rep.payload["rhs"] = r.rhs.to_string();
    rep.payload["holds"] = r.holds;
    rep.status = status_of(r.holds);
    return rep;
}

}  // namespace

CliReport make_theorem1_report(const VerificationResult& r, std::optional<std::uint64_t> seed) {
    return verification_report(r, seed);
}

CliReport make_corollary2_report(const VerificationResult& r, std::optional<std::uint64_t> seed) {
    return verification_report(r, seed);
}

CliReport make_symbolic_report(std::string check, std::vector<std::pair<std::string, std::string>> params,
                               const Polynomial& actual, const Polynomial& expected) {
    CliReport rep;
    rep.check = std::move(check);
    rep.params = std::move(params);
    const bool holds = actual == expected;
    rep.payload["lhs"] = poly_json(actual);
    rep.payload["rhs"] = poly_json(expected);
    rep.payload["holds"] = holds;
    rep.status = status_of(holds);
    return rep;
}

CliReport make_wilson_report(const PrimalityVerdict& v) {
    CliReport rep;
    rep.check = "wilson";
    rep.params.emplace_back("n", v.n.to_string());
    rep.payload["n"] = v.n.to_string();
    rep.payload["residue"] = v.wilson_residue.to_string();
    rep.payload["is_prime"] = v.is_prime;
    rep.payload["oracle_agrees"] = v.oracle_agrees;
    rep.payload["holds"] = v.oracle_agrees;
    rep.status = status_of(v.oracle_agrees);
    return rep;
}

CliReport make_wilson_range_summary(const Integer& lo, const Integer& hi, std::uint64_t primes,
                                    std::uint64_t composites, bool all_agree) {
    CliReport rep;
    rep.check = "wilson-range";
    rep.params.emplace_back("lo", lo.to_string());
    rep.params.emplace_back("hi", hi.to_string());
    rep.payload["primes"] = std::to_string(primes);
    rep.payload["composites"] = std::to_string(composites);
    rep.payload["holds"] = all_agree;
    rep.status = status_of(all_agree);
    return rep;
}

namespace {

ordered_json entries_json(const CongruenceReport& r) {
    ordered_json rows = ordered_json::array();
    for (const auto& e : r.entries) {
        rows.push_back(ordered_json{{"index", e.index.to_string()},
                                    {"residue", e.residue.to_string()},
                                    {"expected", e.expected.to_string()}});
    }
    return rows;
}

}  // namespace

CliReport make_congruence_report(const CongruenceReport& r) {
    CliReport rep;
    rep.check = r.check;
    rep.params.emplace_back("p", r.modulus.to_string());
    rep.payload["modulus"] = r.modulus.to_string();
    if (r.entries.size() == 1) {
        // Single-comparison checks also expose the two sides directly.
        rep.payload["lhs"] = r.entries.front().residue.to_string();
        rep.payload["rhs"] = r.entries.front().expected.to_string();
    }
    rep.payload["entries"] = entries_json(r);
    rep.payload["holds"] = r.holds;
    rep.status = status_of(r.holds);
    return rep;
}

CliReport make_zero_point_report(const ZeroPointReport& r) {
    CliReport rep;
    rep.check = r.congruence.check;
    rep.params.emplace_back("p", r.congruence.modulus.to_string());
    rep.payload["modulus"] = r.congruence.modulus.to_string();
    rep.payload["lhs"] = r.exact_lhs.to_string();
    rep.payload["rhs"] = r.exact_rhs.to_string();
    rep.payload["exact_holds"] = r.exact_holds;
    rep.payload["entries"] = entries_json(r.congruence);
    rep.payload["holds"] = r.holds();
    rep.status = status_of(r.holds());
    return rep;
}

CliReport make_difftable_report(std::int64_t degree, std::int64_t points) {
    const auto table = difference_table(degree, points);
    const Integer expected = factorial(degree);
    const auto& last = table.back();
    const bool complete = static_cast<std::int64_t>(table.size()) == degree + 1;
    const bool holds = complete && std::all_of(last.begin(), last.end(),
                                               [&](const Integer& v) { return v == expected; });

    CliReport rep;
    rep.check = "difftable";
    rep.params.emplace_back("degree", std::to_string(degree));
    rep.params.emplace_back("points", std::to_string(points));
    ordered_json columns = ordered_json::array();
    for (const auto& col : table) {
        ordered_json c = ordered_json::array();
        for (const auto& v : col) c.push_back(v.to_string());
        columns.push_back(std::move(c));
    }
    rep.payload["lhs"] = last.front().to_string();
    rep.payload["rhs"] = expected.to_string();
    rep.payload["columns"] = std::move(columns);
    rep.payload["holds"] = holds;
    rep.status = status_of(holds);
    return rep;
}

}  // namespace wilsonid

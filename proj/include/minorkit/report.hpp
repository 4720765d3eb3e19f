#pragma once

/**
 * @file report.hpp
 * @brief Outcome of a single verification claim.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace minorkit {

enum class Status { verified, refuted, error };

std::string to_string(Status s);
Status parse_status(const std::string& s);

struct CertificateReport {
    std::string claim;            // e.g. "johnson_symbolic_n6"
    Status status = Status::error;
    std::string residual;         // polynomial text, or a numeric magnitude
    nlohmann::json instance;      // parameters or serialized input
    std::optional<std::uint64_t> seed;
    std::optional<double> tolerance;

    bool verified() const { return status == Status::verified; }
};

/// Formats a double so that identical values always print identically.
std::string format_double(double v);

nlohmann::json to_json(const CertificateReport& r);
CertificateReport report_from_json(const nlohmann::json& j);

/// Stable ordering by claim label.
void sort_reports(std::vector<CertificateReport>& reports);

bool all_verified(const std::vector<CertificateReport>& reports);

} // namespace minorkit

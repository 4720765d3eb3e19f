#include "minorkit/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "minorkit/errors.hpp"

namespace minorkit {

std::string to_string(Status s) {
    switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::error: return "error";
    }
    return "error";
}

Status parse_status(const std::string& s) {
    if (s == "verified") return Status::verified;
    if (s == "refuted") return Status::refuted;
    if (s == "error") return Status::error;
    throw InputError("unknown report status '" + s + "'");
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json to_json(const CertificateReport& r) {
    nlohmann::json j;
    j["claim"] = r.claim;
    j["status"] = to_string(r.status);
    j["residual"] = r.residual;
    j["instance"] = r.instance;
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    j["tolerance"] = r.tolerance ? nlohmann::json(*r.tolerance) : nlohmann::json(nullptr);
    return j;
}

CertificateReport report_from_json(const nlohmann::json& j) {
    CertificateReport r;
    try {
        r.claim = j.at("claim").get<std::string>();
        r.status = parse_status(j.at("status").get<std::string>());
        r.residual = j.at("residual").get<std::string>();
        r.instance = j.value("instance", nlohmann::json::object());
        if (j.contains("seed") && !j["seed"].is_null()) r.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("tolerance") && !j["tolerance"].is_null()) r.tolerance = j["tolerance"].get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("report: ") + e.what());
    }
    return r;
}

namespace {

// "n9" < "n10": digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            unsigned long long va = std::stoull(a.substr(i, ie - i));
            unsigned long long vb = std::stoull(b.substr(j, je - j));
            if (va != vb) return va < vb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

} // namespace

void sort_reports(std::vector<CertificateReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CertificateReport& x, const CertificateReport& y) { return natural_less(x.claim, y.claim); });
}

bool all_verified(const std::vector<CertificateReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CertificateReport& r) { return r.verified(); });
}

} // namespace minorkit

#pragma once

/**
 * @file matrix_io.hpp
 * @brief JSON matrix format and report files.
 *
 *   {"rows": n, "cols": m, "scalar": "int|rat|poly|real|complex", "data": [...]}
 *
 * data is row-major. int entries are JSON integers (decimal strings when they
 * exceed 64 bits), rat entries are "p/q" strings, poly entries use the
 * polynomial text form (an optional "nvars" field fixes the ring; otherwise it
 * is the largest variable index present), real entries are numbers, complex
 * entries are [re, im] pairs.
 */

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "minorkit/matrix.hpp"
#include "minorkit/report.hpp"

namespace minorkit {

using AnyMatrix = std::variant<Matrix<Integer>, Matrix<Rational>, Matrix<MultiPoly>, Matrix<Real>, Matrix<Complex>>;

nlohmann::json matrix_to_json(const Matrix<Integer>& a);
nlohmann::json matrix_to_json(const Matrix<Rational>& a);
nlohmann::json matrix_to_json(const Matrix<MultiPoly>& a);
nlohmann::json matrix_to_json(const Matrix<Real>& a);
nlohmann::json matrix_to_json(const Matrix<Complex>& a);
nlohmann::json matrix_to_json(const AnyMatrix& a);

/// Throws InputError naming the offending field.
AnyMatrix matrix_from_json(const nlohmann::json& j);

AnyMatrix load_matrix(const std::string& path);
void save_matrix(const AnyMatrix& a, const std::string& path);

/// Reports as a JSON array, pretty-printed with two-space indentation and a trailing newline.
std::string reports_to_string(const std::vector<CertificateReport>& reports);
void save_report(const std::vector<CertificateReport>& reports, const std::string& path);
std::vector<CertificateReport> load_report(const std::string& path);

} // namespace minorkit

#include "minorkit/matrix_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "minorkit/errors.hpp"

namespace minorkit {

using nlohmann::json;

namespace {

json header(std::size_t rows, std::size_t cols, const char* scalar) {
    return json{{"rows", rows}, {"cols", cols}, {"scalar", scalar}};
}

json integer_entry(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

std::string where(std::size_t k) { return "data[" + std::to_string(k) + "]"; }

Integer parse_integer(const json& e, std::size_t k) {
    if (e.is_number_integer()) return Integer(std::to_string(e.get<long long>()));
    if (e.is_string()) {
        Integer v;
        if (v.set_str(e.get<std::string>(), 10) != 0) throw InputError("matrix: " + where(k) + " is not an integer");
        return v;
    }
    throw InputError("matrix: " + where(k) + " is not an integer");
}

Rational parse_rational(const json& e, std::size_t k) {
    if (e.is_number_integer()) return Rational(parse_integer(e, k));
    if (!e.is_string()) throw InputError("matrix: " + where(k) + " is not a rational string");
    Rational q;
    if (q.set_str(e.get<std::string>(), 10) != 0) throw InputError("matrix: " + where(k) + " is not a rational");
    if (q.get_den() == 0) throw InputError("matrix: " + where(k) + " has zero denominator");
    q.canonicalize();
    return q;
}

double parse_real(const json& e, const std::string& field) {
    if (!e.is_number()) throw InputError("matrix: " + field + " is not a number");
    return e.get<double>();
}

std::size_t require_size(const json& j, const char* field) {
    if (!j.contains(field)) throw InputError(std::string("matrix: missing field \"") + field + "\"");
    const json& v = j.at(field);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw InputError(std::string("matrix: field \"") + field + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

} // namespace

json matrix_to_json(const Matrix<Integer>& a) {
    json j = header(a.rows(), a.cols(), "int");
    json d = json::array();
    for (const auto& v : a.data()) d.push_back(integer_entry(v));
    j["data"] = std::move(d);
    return j;
}

json matrix_to_json(const Matrix<Rational>& a) {
    json j = header(a.rows(), a.cols(), "rat");
    json d = json::array();
    for (const auto& v : a.data()) d.push_back(v.get_str());
    j["data"] = std::move(d);
    return j;
}

json matrix_to_json(const Matrix<MultiPoly>& a) {
    json j = header(a.rows(), a.cols(), "poly");
    j["nvars"] = a.zero().nvars();
    json d = json::array();
    for (const auto& v : a.data()) d.push_back(v.to_string());
    j["data"] = std::move(d);
    return j;
}

json matrix_to_json(const Matrix<Real>& a) {
    json j = header(a.rows(), a.cols(), "real");
    json d = json::array();
    for (double v : a.data()) d.push_back(v);
    j["data"] = std::move(d);
    return j;
}

json matrix_to_json(const Matrix<Complex>& a) {
    json j = header(a.rows(), a.cols(), "complex");
    json d = json::array();
    for (const auto& v : a.data()) d.push_back(json::array({v.real(), v.imag()}));
    j["data"] = std::move(d);
    return j;
}

json matrix_to_json(const AnyMatrix& a) {
    return std::visit([](const auto& m) { return matrix_to_json(m); }, a);
}

AnyMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw InputError("matrix: top level must be an object");
    const std::size_t rows = require_size(j, "rows");
    const std::size_t cols = require_size(j, "cols");
    if (!j.contains("scalar") || !j.at("scalar").is_string()) throw InputError("matrix: missing field \"scalar\"");
    const std::string scalar = j.at("scalar").get<std::string>();
    if (!j.contains("data") || !j.at("data").is_array()) throw InputError("matrix: missing field \"data\"");
    const json& data = j.at("data");
    if (data.size() != rows * cols)
        throw InputError("matrix: field \"data\" has " + std::to_string(data.size()) + " entries, expected rows*cols = " +
                         std::to_string(rows * cols));

    if (scalar == "int") {
        std::vector<Integer> v;
        for (std::size_t k = 0; k < data.size(); ++k) v.push_back(parse_integer(data[k], k));
        return Matrix<Integer>::from_data(rows, cols, std::move(v), Integer(0));
    }
    if (scalar == "rat") {
        std::vector<Rational> v;
        for (std::size_t k = 0; k < data.size(); ++k) v.push_back(parse_rational(data[k], k));
        return Matrix<Rational>::from_data(rows, cols, std::move(v), Rational(0));
    }
    if (scalar == "poly") {
        std::vector<std::string> texts;
        for (std::size_t k = 0; k < data.size(); ++k) {
            if (!data[k].is_string()) throw InputError("matrix: " + where(k) + " is not a polynomial string");
            texts.push_back(data[k].get<std::string>());
        }
        std::size_t nvars = 0;
        if (j.contains("nvars")) {
            nvars = require_size(j, "nvars");
        } else {
            // Smallest ring holding every variable that appears.
            for (std::size_t k = 0; k < texts.size(); ++k)
                nvars = std::max(nvars, MultiPoly::parse(texts[k], Monomial::kMaxVars).max_variable_index());
        }
        if (nvars > Monomial::kMaxVars) throw InputError("matrix: field \"nvars\" exceeds the variable cap");
        std::vector<MultiPoly> v;
        for (std::size_t k = 0; k < texts.size(); ++k) {
            try {
                v.push_back(MultiPoly::parse(texts[k], nvars));
            } catch (const InputError& e) {
                throw InputError("matrix: " + where(k) + ": " + e.what());
            }
        }
        return Matrix<MultiPoly>::from_data(rows, cols, std::move(v), MultiPoly(nvars));
    }
    if (scalar == "real") {
        std::vector<double> v;
        for (std::size_t k = 0; k < data.size(); ++k) v.push_back(parse_real(data[k], where(k)));
        return Matrix<Real>::from_data(rows, cols, std::move(v), 0.0);
    }
    if (scalar == "complex") {
        std::vector<Complex> v;
        for (std::size_t k = 0; k < data.size(); ++k) {
            const json& e = data[k];
            if (!e.is_array() || e.size() != 2) throw InputError("matrix: " + where(k) + " must be a [re, im] pair");
            v.emplace_back(parse_real(e[0], where(k) + "[0]"), parse_real(e[1], where(k) + "[1]"));
        }
        return Matrix<Complex>::from_data(rows, cols, std::move(v), Complex{});
    }
    throw InputError("matrix: field \"scalar\" has unknown tag \"" + scalar + "\"");
}

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": malformed JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("write failed: " + path);
}

} // namespace

AnyMatrix load_matrix(const std::string& path) { return matrix_from_json(read_json_file(path)); }

void save_matrix(const AnyMatrix& a, const std::string& path) {
    write_text_file(path, matrix_to_json(a).dump(2) + "\n");
}

std::string reports_to_string(const std::vector<CertificateReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

void save_report(const std::vector<CertificateReport>& reports, const std::string& path) {
    write_text_file(path, reports_to_string(reports));
}

std::vector<CertificateReport> load_report(const std::string& path) {
    const json j = read_json_file(path);
    if (!j.is_array()) throw InputError(path + ": report file must hold a JSON array");
    std::vector<CertificateReport> out;
    for (const auto& e : j) out.push_back(report_from_json(e));
    return out;
}

} // namespace minorkit

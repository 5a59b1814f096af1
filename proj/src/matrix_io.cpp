#include "epkit/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace epkit::io {

namespace {

GaussianRational scalar_from(const nlohmann::json& v) {
    if (v.is_string()) return GaussianRational::parse(v.get<std::string>());
    if (v.is_number_integer()) return GaussianRational(Rational(v.get<long>()));
    throw ParseError("matrix entry must be a string or an integer, got " + v.dump());
}

std::size_t dim_from(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_unsigned()) {
        if (doc.contains(key) && doc[key].is_number_integer() && doc[key].get<long>() == 0) return 0;
        throw ParseError(std::string("matrix file needs a non-negative integer \"") + key + "\"");
    }
    return doc[key].get<std::size_t>();
}

}  // namespace

MatrixQ parse_matrix_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("matrix file must be a JSON object");
    const std::size_t rows = dim_from(doc, "rows");
    const std::size_t cols = dim_from(doc, "cols");
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("matrix file needs an \"entries\" array");
    const auto& entries = doc["entries"];
    if (entries.size() != rows) {
        throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(entries.size()));
    }
    MatrixQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError("row " + std::to_string(i) + " must hold " + std::to_string(cols) + " entries");
        }
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar_from(row[j]);
    }
    return m;
}

MatrixQ read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

std::string write_matrix_json(const MatrixQ& m) {
    std::ostringstream out;
    out << "{\n  \"rows\": " << m.rows() << ",\n  \"cols\": " << m.cols() << ",\n  \"entries\": [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i ? ",\n    [" : "\n    [");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ", ";
            out << nlohmann::json(m(i, j).to_string()).dump();
        }
        out << "]";
    }
    out << (m.rows() ? "\n  ]\n}\n" : "]\n}\n");
    return out.str();
}

}  // namespace epkit::io

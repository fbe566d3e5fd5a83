#pragma once

// Text and JSON serialization of matrices, codes and transforms.
//
// Text format:
//     [optional header line: "code <label> p=.. N=.. k=.. d=.." or "transform form=.. lambda=.. code=.."]
//     p N M
//     N lines of M space-separated residues
// JSON format: {"p": 3, "rows": [[...], ...]} with optional "form", "lambda", "code" keys.
// Negative entries are accepted and normalized into [0, p).

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "matrix.hpp"
#include "transforms.hpp"

namespace perfectntt {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string spaceless(std::string s) {
    for (auto& c : s)
        if (std::isspace(static_cast<unsigned char>(c))) c = '_';
    return s;
}

} // namespace detail

inline void write_matrix(std::ostream& os, const FieldMatrix& m) {
    os << m.modulus().value() << ' ' << m.rows() << ' ' << m.cols() << '\n' << m;
}

inline std::string code_header(const CodeSpec& spec) {
    std::ostringstream os;
    os << "code " << detail::spaceless(spec.label) << " p=" << spec.modulus.value() << " N=" << spec.length
       << " k=" << spec.dimension << " d=" << spec.distance;
    return os.str();
}

inline std::string transform_header(const TransformSpec& t) {
    std::ostringstream os;
    os << "transform form=" << to_string(t.form()) << " lambda=" << t.lambda().value()
       << " code=" << detail::spaceless(t.source().label);
    return os.str();
}

inline void write_code(std::ostream& os, const CodeSpec& spec) {
    os << code_header(spec) << '\n';
    write_matrix(os, spec.parity_check);
}

inline void write_transform(std::ostream& os, const TransformSpec& t) {
    os << transform_header(t) << '\n';
    write_matrix(os, t.matrix());
}

struct MatrixDocument {
    std::string kind;                           // "code", "transform" or empty
    std::map<std::string, std::string> fields;  // header key=value pairs
    FieldMatrix matrix;
};

namespace detail {

inline MatrixDocument parse_json_matrix(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON matrix: ") + e.what());
    }
    if (!j.contains("p") || !j.contains("rows")) throw parse_error("JSON matrix needs \"p\" and \"rows\"");
    std::vector<std::vector<std::int64_t>> rows;
    try {
        rows = j.at("rows").get<std::vector<std::vector<std::int64_t>>>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("JSON \"rows\" must be a list of integer lists: ") + e.what());
    }
    const auto p = j.at("p").get<std::int64_t>();
    if (p < 2 || p > std::numeric_limits<std::int32_t>::max()) throw parse_error("JSON \"p\" out of range");
    MatrixDocument doc{"", {}, FieldMatrix(PrimeModulus(static_cast<std::uint32_t>(p)), rows)};
    for (const char* key : {"form", "lambda", "code"}) {
        if (!j.contains(key)) continue;
        doc.kind = "transform";
        const auto& v = j.at(key);
        doc.fields[key] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return doc;
}

} // namespace detail

inline MatrixDocument parse_matrix_document(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("empty matrix document");
    if (text[first] == '{') return detail::parse_json_matrix(text);

    std::istringstream in(text);
    std::string line;
    std::string kind;
    std::map<std::string, std::string> fields;
    std::optional<std::istringstream> dims;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream words(line);
        std::string head;
        words >> head;
        if (head == "code" || head == "transform") {
            kind = head;
            std::string word;
            bool first_word = true;
            while (words >> word) {
                const auto eq = word.find('=');
                if (eq == std::string::npos) {
                    if (head == "code" && first_word) fields["label"] = word;
                } else {
                    fields[word.substr(0, eq)] = word.substr(eq + 1);
                }
                first_word = false;
            }
            continue;
        }
        dims.emplace(line);
        break;
    }
    if (!dims) throw parse_error("missing \"p N M\" line");
    std::int64_t p = 0, rows = 0, cols = 0;
    if (!(*dims >> p >> rows >> cols) || p < 2 || rows < 0 || cols < 0)
        throw parse_error("malformed \"p N M\" line");
    std::vector<std::vector<std::int64_t>> data;
    for (std::int64_t i = 0; i < rows; ++i) {
        if (!std::getline(in, line)) throw parse_error("expected " + std::to_string(rows) + " matrix rows");
        std::istringstream words(line);
        std::vector<std::int64_t> row;
        std::int64_t v = 0;
        while (words >> v) row.push_back(v);
        if (!words.eof()) throw parse_error("non-numeric entry in matrix row " + std::to_string(i));
        if (static_cast<std::int64_t>(row.size()) != cols)
            throw parse_error("row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(cols));
        data.push_back(std::move(row));
    }
    FieldMatrix m(PrimeModulus(static_cast<std::uint32_t>(p)), static_cast<std::size_t>(rows),
                  static_cast<std::size_t>(cols));
    if (rows > 0) m = FieldMatrix(PrimeModulus(static_cast<std::uint32_t>(p)), data);
    return {kind, std::move(fields), std::move(m)};
}

inline FieldMatrix parse_matrix(const std::string& text) { return parse_matrix_document(text).matrix; }

inline std::string to_json(const FieldMatrix& m) {
    nlohmann::json j;
    j["p"] = m.modulus().value();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<std::uint32_t>(m.row_span(i).begin(), m.row_span(i).end()));
    j["rows"] = rows;
    return j.dump();
}

/// Comma-separated residues, index 0 first. Each entry must lie in [0, p).
inline FieldVector parse_vector(const std::string& text, PrimeModulus m) {
    std::vector<std::int64_t> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw parse_error("empty vector entry");
        item = item.substr(b, e - b + 1);
        for (char c : item)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw parse_error("vector entry \"" + item + "\" is not a digit string");
        const auto v = std::stoll(item);
        if (v >= static_cast<std::int64_t>(m.value()))
            throw parse_error("vector entry " + item + " is not below p=" + std::to_string(m.value()));
        values.push_back(v);
    }
    return FieldVector(m, values);
}

} // namespace perfectntt

#include "epscan/cli/family_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace epscan::cli {

namespace {

using nlohmann::json;

std::string where(std::string_view source, std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col);
}

Rational entry(const json& v, const std::string& path) {
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Rational(v.get<unsigned long long>()) : Rational(v.get<long long>());
    }
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    throw ParseError(path + ": expected an integer or a rational string, got " + std::string(v.type_name()));
}

Matrix<Rational> matrix(const json& doc, const char* key, std::size_t n, std::string_view source) {
    const std::string base = std::string(source) + ": " + key;
    if (!doc.contains(key)) throw ParseError(base + " is missing");
    const json& rows = doc.at(key);
    if (!rows.is_array() || rows.size() != n) throw ParseError(base + " must be an array of " + std::to_string(n) + " rows");
    Matrix<Rational> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string row_path = base + "[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != n) {
            throw ParseError(row_path + " must be an array of " + std::to_string(n) + " entries");
        }
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rows[i][j], row_path + "[" + std::to_string(j) + "]");
    }
    return m;
}

}  // namespace

AffineFamily parse_family(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        std::string msg = e.what();
        // drop nlohmann's own "[json.exception...] parse error at line L, column C: " prefix
        if (const auto p = msg.find(": ", msg.find("parse error")); p != std::string::npos) msg = msg.substr(p + 2);
        throw ParseError(where(source, text, offset) + ": " + msg);
    }
    if (!doc.is_object()) throw ParseError(std::string(source) + ": family must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw ParseError(std::string(source) + ": \"n\" must be an integer");
    }
    const long long n = doc["n"].get<long long>();
    if (n < 1 || n > static_cast<long long>(kMaxDimension)) {
        throw DimensionError(std::string(source) + ": n = " + std::to_string(n) + " outside [1, " +
                             std::to_string(kMaxDimension) + "]");
    }
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError(std::string(source) + ": \"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    const auto dim = static_cast<std::size_t>(n);
    return AffineFamily(matrix(doc, "A", dim, source), matrix(doc, "B", dim, source), name);
}

AffineFamily load_family(const std::string& source) {
    if (source == "paper") return AffineFamily::paper();
    std::ifstream in(source, std::ios::binary);
    if (!in) throw IoError("cannot open family file " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    AffineFamily fam = parse_family(buf.str(), source);
    if (fam.name().empty()) {
        return AffineFamily(fam.constant_part(), fam.linear_part(), std::filesystem::path(source).stem().string());
    }
    return fam;
}

Rational parse_beta(std::string_view text) {
    return Rational::parse(text);
}

}  // namespace epscan::cli

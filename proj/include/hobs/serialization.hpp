#pragma once

/**
 * @file serialization.hpp
 * @brief Text formats for states and sampled orientation fields.
 *
 * StateSpec JSON:
 *   {"sphere":"B","theta_lambda":..,"phi_lambda":..,"l":..,"m":..,"theta":..,"phi":..}
 *
 * FieldDocument JSON:
 *   {"state":StateSpec,"samples":n,"rows":[[phi,s1,s2,s3],...]}
 *
 * FieldDocument CSV (LF line endings, no state header):
 *   phi,s1,s2,s3
 *   <17 significant digits>,...
 *
 * JSON keys are written in a fixed order. Every double written by this header
 * parses back to the same bits.
 */

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hobs/orientation_field.hpp"

namespace hobs::io {

using Json = nlohmann::ordered_json;

/// %.17g, with negative zero written as 0.
inline std::string format_double(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Parses a strict decimal literal; trailing garbage is an error.
inline double parse_double(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v)) throw DomainError("not a finite number: '" + text + "'");
    return v;
}

/// Angle literal in radians: plain decimals ("0.5", "-1e-3") or rational
/// multiples of pi ("pi", "-pi/2", "3pi/4", "3*pi/4", "0.5pi", "2π/3").
inline double parse_angle(const std::string& text) {
    static const std::regex pattern(
        R"(^\s*([+-]?)\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*(pi|π)?\s*(?:/\s*((?:\d+\.?\d*|\.\d+)))?\s*$)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern) || (!match[2].matched && !match[3].matched))
        throw DomainError("cannot parse angle '" + text + "'");
    double v = match[2].matched ? parse_double(match[2].str()) : 1.0;
    if (match[3].matched) v *= pi;
    if (match[4].matched) {
        const double d = parse_double(match[4].str());
        if (d == 0.0) throw DomainError("zero denominator in angle '" + text + "'");
        v /= d;
    }
    if (match[1].str() == "-") v = -v;
    if (!std::isfinite(v)) throw DomainError("angle '" + text + "' is not finite");
    return v;
}

inline SphereKind parse_sphere(const std::string& text) {
    if (text == "P" || text == "p") return SphereKind::P;
    if (text == "B" || text == "b") return SphereKind::B;
    throw DomainError("sphere must be P or B, got '" + text + "'");
}

inline Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

inline Json vec_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

inline Json state_to_json(const HigherOrderState& st) {
    Json j;
    j["sphere"] = std::string(to_string(st.kind()));
    j["theta_lambda"] = st.frame.basis.coords.theta;
    j["phi_lambda"] = st.frame.basis.coords.phi;
    j["l"] = st.frame.charges.l;
    j["m"] = st.frame.charges.m;
    j["theta"] = st.coords.theta;
    j["phi"] = st.coords.phi;
    return j;
}

inline HigherOrderState state_from_json(const Json& j) {
    try {
        const HigherOrderFrame frame{
            {{j.at("theta_lambda").get<double>(), j.at("phi_lambda").get<double>()},
             parse_sphere(j.at("sphere").get<std::string>())},
            {j.at("l").get<int>(), j.at("m").get<int>()}};
        return make_state(frame, {j.at("theta").get<double>(), j.at("phi").get<double>()});
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed state: ") + e.what());
    }
}

inline Json ring_to_json(const BSRing& r) {
    Json j;
    j["axis"] = vec_json(r.axis);
    j["offset"] = r.offset;
    j["radius"] = r.radius;
    j["winding"] = r.winding;
    j["anchor"] = vec_json(r.anchor);
    j["degenerate"] = r.degenerate;
    return j;
}

/// Serialized orientation field. CSV files carry no state.
struct FieldDocument {
    std::optional<HigherOrderState> state;
    std::vector<FieldPoint> rows;

    static FieldDocument from_field(const OrientationField& f) {
        return {HigherOrderState{f.frame, f.coords}, f.points};
    }
};

/// Rows must be finite with unit-norm vectors; phi strictly increasing.
inline void validate(const FieldDocument& doc) {
    if (doc.rows.empty()) throw DomainError("field document has no rows");
    for (std::size_t k = 0; k < doc.rows.size(); ++k) {
        const auto& r = doc.rows[k];
        detail::require_finite(r.phi, "phi");
        require_unit(r.s);
        if (k > 0 && !(r.phi > doc.rows[k - 1].phi)) throw DomainError("phi must be strictly increasing");
    }
}

inline Json rows_json(const std::vector<FieldPoint>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(Json::array({r.phi, r.s.x, r.s.y, r.s.z}));
    return out;
}

inline std::string to_json_text(const FieldDocument& doc) {
    Json j;
    if (doc.state) j["state"] = state_to_json(*doc.state);
    j["samples"] = doc.rows.size();
    j["rows"] = rows_json(doc.rows);
    return j.dump(2) + "\n";
}

inline std::string to_csv_text(const FieldDocument& doc) {
    std::string out = "phi,s1,s2,s3\n";
    for (const auto& r : doc.rows) {
        out += format_double(r.phi) + ',' + format_double(r.s.x) + ',' + format_double(r.s.y) + ',' +
               format_double(r.s.z) + '\n';
    }
    return out;
}

inline FieldDocument field_from_json_text(const std::string& text) {
    FieldDocument doc;
    try {
        const Json j = Json::parse(text);
        if (j.contains("state")) doc.state = state_from_json(j.at("state"));
        const auto n = j.at("samples").get<std::size_t>();
        for (const auto& row : j.at("rows")) {
            if (!row.is_array() || row.size() != 4) throw DomainError("field row must have 4 entries");
            doc.rows.push_back({row[0].get<double>(), {row[1].get<double>(), row[2].get<double>(), row[3].get<double>()}});
        }
        if (doc.rows.size() != n) throw DomainError("row count does not match 'samples'");
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed field document: ") + e.what());
    }
    validate(doc);
    return doc;
}

inline FieldDocument field_from_csv_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "phi,s1,s2,s3") throw DomainError("CSV header must be 'phi,s1,s2,s3'");
    FieldDocument doc;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(parse_double(cell));
        if (cells.size() != 4) throw DomainError("CSV row must have 4 columns: '" + line + "'");
        doc.rows.push_back({cells[0], {cells[1], cells[2], cells[3]}});
    }
    validate(doc);
    return doc;
}

/// Dispatches on the first non-blank character: '{' means JSON, anything else CSV.
inline FieldDocument field_from_text(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? field_from_json_text(text) : field_from_csv_text(text);
    }
    throw DomainError("empty field document");
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes to a sibling temporary file, then renames it over `path`.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
        out << content;
        out.flush();
        if (!out) throw IoError("write to '" + path.string() + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot replace '" + path.string() + "'");
    }
}

}  // namespace hobs::io

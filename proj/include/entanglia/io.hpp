#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "error.hpp"
#include "majorize.hpp"
#include "numkernel.hpp"
#include "qstate.hpp"

namespace entanglia {

using json = nlohmann::json;

inline std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// "0.4,0.4,0.2" -> {0.4, 0.4, 0.2}
inline RealVec parse_vector(std::string_view s) {
    RealVec out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t end = std::min(s.find(',', pos), s.size());
        std::string tok(s.substr(pos, end - pos));
        const auto b = tok.find_first_not_of(" \t"), e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) fail(ErrorKind::BadFormat, "empty entry in vector '" + std::string(s) + "'");
        tok = tok.substr(b, e - b + 1);
        double v = 0;
        const auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (r.ec != std::errc{} || r.ptr != tok.data() + tok.size())
            fail(ErrorKind::BadFormat, "not a number: '" + tok + "'");
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

// ── Matrix documents: {"dims":[...], "re":[[...]], "im":[[...]]} ──────

inline std::string matrix_to_text(const CMatrix& m) {
    std::ostringstream os;
    os << "{\"dims\":[";
    if (m.has_dims()) {
        const Dims& d = *m.dims();
        for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "," : "") << d[k];
    }
    os << "],";
    for (int part = 0; part < 2; ++part) {
        os << (part == 0 ? "\n\"re\":[" : ",\n\"im\":[");
        for (std::size_t i = 0; i < m.rows(); ++i) {
            os << (i ? ",\n  [" : "\n  [");
            for (std::size_t j = 0; j < m.cols(); ++j)
                os << (j ? "," : "") << fmt17(part == 0 ? m(i, j).real() : m(i, j).imag());
            os << "]";
        }
        os << "]";
    }
    os << "}\n";
    return os.str();
}

namespace detail {
inline json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::BadFormat, std::string("malformed document: ") + e.what());
    }
}

inline Dims read_dims(const json& doc) {
    if (!doc.contains("dims")) return {};
    if (!doc["dims"].is_array()) fail(ErrorKind::BadFormat, "\"dims\" must be an array");
    Dims d;
    for (const auto& x : doc["dims"]) {
        if (!x.is_number_integer() || x.get<long long>() < 1) fail(ErrorKind::BadDims, "dims must be positive integers");
        d.push_back(x.get<std::size_t>());
    }
    return d;
}

inline double read_number(const json& x) {
    if (!x.is_number()) fail(ErrorKind::BadFormat, "expected a number");
    return x.get<double>();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::BadFormat, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
} // namespace detail

inline CMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("re")) fail(ErrorKind::BadFormat, "matrix document needs \"re\"");
    const json& re = doc["re"];
    if (!re.is_array() || re.empty()) fail(ErrorKind::BadFormat, "\"re\" must be a non-empty array of rows");
    const std::size_t rows = re.size(), cols = re[0].size();
    const bool has_im = doc.contains("im");
    const json& im = has_im ? doc["im"] : re;
    if (has_im && im.size() != rows) fail(ErrorKind::BadDims, "\"im\" row count differs from \"re\"");
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!re[i].is_array() || re[i].size() != cols) fail(ErrorKind::BadDims, "ragged \"re\" rows");
        if (has_im && (!im[i].is_array() || im[i].size() != cols)) fail(ErrorKind::BadDims, "ragged \"im\" rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Cx(detail::read_number(re[i][j]), has_im ? detail::read_number(im[i][j]) : 0.0);
    }
    Dims d = detail::read_dims(doc);
    if (!d.empty()) {
        if (product(d) != rows) fail(ErrorKind::BadDims, "product of dims does not match matrix size");
        m.set_dims(std::move(d));
    }
    return m;
}

inline CMatrix matrix_from_text(const std::string& text) { return matrix_from_json(detail::parse_document(text)); }

// ── State documents: {"dims":[...], "amp":[[re,im],...]} ──────────────

inline std::string state_to_text(const PureState& psi) {
    std::ostringstream os;
    os << "{\"dims\":[";
    for (std::size_t k = 0; k < psi.dims().size(); ++k) os << (k ? "," : "") << psi.dims()[k];
    os << "],\n\"amp\":[";
    for (std::size_t i = 0; i < psi.size(); ++i)
        os << (i ? ",\n  [" : "\n  [") << fmt17(psi[i].real()) << "," << fmt17(psi[i].imag()) << "]";
    os << "]}\n";
    return os.str();
}

inline PureState state_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("amp")) fail(ErrorKind::BadFormat, "state document needs \"amp\"");
    Dims d = detail::read_dims(doc);
    if (d.empty()) fail(ErrorKind::MissingDims, "state document needs \"dims\"");
    CVec v;
    for (const auto& p : doc["amp"]) {
        if (p.is_number()) {
            v.emplace_back(p.get<double>(), 0.0);
            continue;
        }
        if (!p.is_array() || p.size() != 2) fail(ErrorKind::BadFormat, "amplitudes must be [re, im] pairs");
        v.emplace_back(detail::read_number(p[0]), detail::read_number(p[1]));
    }
    return PureState(std::move(v), std::move(d));
}

inline PureState state_from_text(const std::string& text) { return state_from_json(detail::parse_document(text)); }

// A density matrix from either document kind; pure states are turned into projectors.
inline CMatrix density_from_text(const std::string& text) {
    const json doc = detail::parse_document(text);
    if (doc.is_object() && doc.contains("amp")) return state_from_json(doc).density();
    return matrix_from_json(doc);
}

inline CMatrix load_matrix(const std::string& path) { return matrix_from_text(detail::read_file(path)); }
inline PureState load_state(const std::string& path) { return state_from_text(detail::read_file(path)); }
inline CMatrix load_density(const std::string& path) { return density_from_text(detail::read_file(path)); }

inline void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::BadFormat, "cannot write '" + path + "'");
    out << text;
}

} // namespace entanglia

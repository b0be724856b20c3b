// JSON file formats. Emission is canonical (sorted keys, reduced rational
// text, fixed entry order) so that identical inputs produce byte-identical
// files and reports.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <tuple>

#include <json.hpp>

#include "qpb/bialgebra.hpp"
#include "qpb/catalog.hpp"
#include "qpb/numeric_plan.hpp"

namespace qpb {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file '" + path + "'");
    out << content;
}

// FNV-1a over the raw bytes; embedded in reports as the input digest.
inline std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline Json parse_json(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("malformed JSON in " + what);
    return j;
}

namespace detail {

inline Rational json_rational(const Json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw input_error("expected a rational literal in " + what);
}

inline int json_index(const Json& j, const std::string& what) {
    if (!j.is_number_integer()) throw input_error("expected an integer index in " + what);
    return j.get<int>();
}

}  // namespace detail

// {"name":..., "dim": n, "basis": [...], "structure": [[i,j,k,"p/q"]...], "unit": [...]|null}
inline Json algebra_to_json(const Algebra& alg) {
    Json j;
    j["name"] = alg.name();
    j["dim"] = alg.dim();
    if (!alg.labels().empty()) j["basis"] = alg.labels();
    Json structure = Json::array();
    for (const auto& e : alg.entries()) structure.push_back(Json::array({e.i, e.j, e.k, emit_rational(e.value)}));
    j["structure"] = structure;
    if (alg.has_unit()) {
        Json u = Json::array();
        for (const auto& v : alg.unit()) u.push_back(emit_rational(v));
        j["unit"] = u;
    } else {
        j["unit"] = nullptr;
    }
    return j;
}

inline Algebra algebra_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim")) throw input_error("algebra file needs an object with 'dim'");
    int dim = detail::json_index(j.at("dim"), "algebra dim");
    std::string name = j.value("name", std::string("algebra"));
    std::vector<std::string> labels;
    if (j.contains("basis") && !j.at("basis").is_null()) labels = j.at("basis").get<std::vector<std::string>>();
    std::vector<StructureEntry> entries;
    for (const auto& row : j.value("structure", Json::array())) {
        if (!row.is_array() || row.size() != 4) throw input_error("algebra structure rows must be [i,j,k,value]");
        entries.push_back({detail::json_index(row[0], "structure"), detail::json_index(row[1], "structure"),
                           detail::json_index(row[2], "structure"), detail::json_rational(row[3], "structure")});
    }
    std::optional<Vector> unit;
    if (j.contains("unit") && !j.at("unit").is_null()) {
        Vector u;
        for (const auto& v : j.at("unit")) u.push_back(detail::json_rational(v, "unit"));
        unit = std::move(u);
    }
    return Algebra(std::move(name), dim, entries, std::move(unit), std::move(labels));
}

// {"dim": n, "r": [[i,j,"p/q"]...]} storing the strict upper triangle.
inline Json rmatrix_to_json(const RMatrix& r) {
    Json j;
    j["dim"] = r.dim();
    Json rows = Json::array();
    for (const auto& [k, v] : r.tensor().coeffs())
        if (k[0] < k[1]) rows.push_back(Json::array({k[0], k[1], emit_rational(v)}));
    j["r"] = rows;
    return j;
}

// Accepts entries anywhere but rejects inconsistent (i,j)/(j,i) pairs and
// nonzero diagonal entries; completes antisymmetrically.
inline RMatrix rmatrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim")) throw input_error("r-matrix file needs an object with 'dim'");
    int dim = detail::json_index(j.at("dim"), "r-matrix dim");
    if (dim < 1) throw input_error("r-matrix dimension must be >= 1");
    std::map<std::array<int, 2>, Rational> given;
    for (const auto& row : j.value("r", Json::array())) {
        if (!row.is_array() || row.size() != 3) throw input_error("r-matrix rows must be [i,j,value]");
        int a = detail::json_index(row[0], "r"), b = detail::json_index(row[1], "r");
        if (a < 0 || a >= dim || b < 0 || b >= dim) throw input_error("r-matrix index out of range");
        if (a == b) throw input_error("r-matrix diagonal entries must be absent (antisymmetry)");
        given[{a, b}] += detail::json_rational(row[2], "r");
    }
    Tensor2 t(dim);
    for (const auto& [k, v] : given) {
        if (k[0] > k[1]) continue;
        auto mirror = given.find({k[1], k[0]});
        if (mirror != given.end() && mirror->second != -v)
            throw input_error("inconsistent (i,j)/(j,i) pair in r-matrix file");
        t.add({k[0], k[1]}, v);
        t.add({k[1], k[0]}, -v);
    }
    for (const auto& [k, v] : given)
        if (k[0] > k[1] && given.find({k[1], k[0]}) == given.end()) {
            t.add({k[0], k[1]}, v);
            t.add({k[1], k[0]}, -v);
        }
    return RMatrix(std::move(t));
}

// {"degree": d, "dim": n, "c": [[i,j,k_1..k_d,"p/q"]...]}; canonicalized on load.
inline Json bracket_to_json(const PolyTensor& pi) {
    Json j;
    j["degree"] = pi.degree();
    j["dim"] = pi.dim();
    Json rows = Json::array();
    for (const auto& [key, v] : pi.coeffs()) {
        Json row = Json::array({key.first[0], key.first[1]});
        for (int k : key.second) row.push_back(k);
        row.push_back(emit_rational(v));
        rows.push_back(row);
    }
    j["c"] = rows;
    return j;
}

inline PolyTensor bracket_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("degree"))
        throw input_error("bracket file needs an object with 'dim' and 'degree'");
    int dim = detail::json_index(j.at("dim"), "bracket dim");
    int degree = detail::json_index(j.at("degree"), "bracket degree");
    std::vector<RawPolyEntry> raw;
    for (const auto& row : j.value("c", Json::array())) {
        if (!row.is_array() || static_cast<int>(row.size()) != degree + 3)
            throw input_error("bracket rows must be [i,j,k_1..k_d,value]");
        RawPolyEntry e;
        e.i = detail::json_index(row[0], "bracket");
        e.j = detail::json_index(row[1], "bracket");
        for (int d = 0; d < degree; ++d) e.lower.push_back(detail::json_index(row[2 + d], "bracket"));
        e.value = detail::json_rational(row[degree + 2], "bracket");
        raw.push_back(std::move(e));
    }
    return canonicalize(dim, degree, raw);
}

// {"dim": n, "delta": [[k,i,j,"p/q"]...]} with strict i < j.
inline Json cobracket_to_json(const Cobracket& cb) {
    Json j;
    j["dim"] = cb.dim;
    Json rows = Json::array();
    for (int k = 0; k < cb.dim; ++k)
        for (const auto& [ij, v] : cb.delta[k].coeffs())
            if (ij[0] < ij[1]) rows.push_back(Json::array({k, ij[0], ij[1], emit_rational(v)}));
    j["delta"] = rows;
    return j;
}

inline Cobracket cobracket_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim")) throw input_error("cobracket file needs an object with 'dim'");
    int dim = detail::json_index(j.at("dim"), "cobracket dim");
    Cobracket cb;
    cb.dim = dim;
    cb.delta.assign(dim, Tensor2(dim));
    for (const auto& row : j.value("delta", Json::array())) {
        if (!row.is_array() || row.size() != 4) throw input_error("cobracket rows must be [k,i,j,value]");
        int k = detail::json_index(row[0], "delta");
        int a = detail::json_index(row[1], "delta");
        int b = detail::json_index(row[2], "delta");
        if (k < 0 || k >= dim) throw input_error("cobracket index out of range");
        if (a >= b) throw input_error("cobracket rows need strict i < j");
        Rational v = detail::json_rational(row[3], "delta");
        cb.delta[k].add({a, b}, v);
        cb.delta[k].add({b, a}, -v);
    }
    return cb;
}

inline Json lie_to_json(const LieStructure& lie, const std::string& name) {
    // dual Lie structure in the algebra file format, "structure" holding l_{ij}^k
    Json j;
    j["name"] = name;
    j["dim"] = lie.dim();
    Json structure = Json::array();
    for (const auto& [ij, row] : lie.rows())
        for (const auto& [k, v] : row) structure.push_back(Json::array({ij[0], ij[1], k, emit_rational(v)}));
    j["structure"] = structure;
    j["unit"] = nullptr;
    return j;
}

inline Json residual_report_to_json(const ResidualReport& r, std::size_t max_entries = 32) {
    Json j;
    j["pass"] = r.pass();
    j["checked"] = r.checked;
    j["nonzero"] = r.entries.size();
    if (r.seed != 0) j["seed"] = r.seed;
    Json entries = Json::array();
    for (std::size_t i = 0; i < r.entries.size() && i < max_entries; ++i)
        entries.push_back(Json::object({{"index", r.entries[i].first}, {"value", emit_rational(r.entries[i].second)}}));
    j["entries"] = entries;
    return j;
}

inline Json validation_report_to_json(const ValidationReport& r, std::size_t max_entries = 32) {
    Json j;
    j["pass"] = r.pass();
    j["checked"] = r.checked;
    j["violations"] = r.violations.size();
    Json entries = Json::array();
    for (std::size_t i = 0; i < r.violations.size() && i < max_entries; ++i) {
        const auto& v = r.violations[i];
        entries.push_back(Json::object({{"kind", v.kind},
                                        {"index", v.indices},
                                        {"lhs", emit_rational(v.lhs)},
                                        {"rhs", emit_rational(v.rhs)}}));
    }
    j["entries"] = entries;
    return j;
}

inline Json numeric_report_to_json(const NumericReport& r) {
    Json j;
    j["pass"] = r.pass;
    j["samples"] = r.samples;
    j["tolerance"] = r.tolerance;
    j["max_abs_residual"] = r.max_abs;
    j["max_rel_residual"] = r.max_rel;
    j["worst_sample"] = r.worst_sample;
    return j;
}

}  // namespace qpb

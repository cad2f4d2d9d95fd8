#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nalab/algebra.hpp"
#include "nalab/coalgebra.hpp"
#include "nalab/quadratic.hpp"

namespace nalab {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// On-disk formats. One JSON schema, versioned, human-editable. Indices are
// 1-based; omitted entries are zero; duplicate index tuples are rejected.
// Rational coefficients are integers or "p/q" strings — never decimals.
// Canonical serialization orders entries by (i, j, k).
// ---------------------------------------------------------------------------

constexpr const char* kSchemaVersion = "1";

enum class DocKind { algebra, coproduct, form, rmatrix };

inline const char* kind_name(DocKind k) {
    switch (k) {
        case DocKind::algebra: return "algebra";
        case DocKind::coproduct: return "coproduct";
        case DocKind::form: return "form";
        case DocKind::rmatrix: return "rmatrix";
    }
    return "?";
}

struct Document {
    DocKind kind = DocKind::algebra;
    std::size_t dim = 0;
    std::string label;
    std::vector<std::string> basis_names;
    std::string algebra_ref; // for coproduct/rmatrix fixtures: companion algebra file
    std::string note;
    json expect; // optional expected-verdict metadata, kept verbatim

    Tensor3 t3; // algebra products / coproduct entries
    Tensor2 t2; // form / rmatrix entries

    Algebra as_algebra() const {
        if (kind != DocKind::algebra) throw error("document is not an algebra");
        Algebra a(dim, label);
        a.c = t3;
        return a;
    }
    Comultiplication as_coproduct() const {
        if (kind != DocKind::coproduct) throw error("document is not a coproduct");
        Comultiplication c(dim);
        c.d = t3;
        return c;
    }
    BilinearForm as_form() const {
        if (kind != DocKind::form) throw error("document is not a form");
        Mat g(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) g.at(i, j) = t2.at(i, j);
        return {g};
    }
    Tensor2 as_rmatrix() const {
        if (kind != DocKind::rmatrix) throw error("document is not an r-matrix");
        return t2;
    }
};

namespace detail {

inline Rat coeff_from_json(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    throw parse_error("coefficient must be an integer or \"p/q\" string at " + where);
}

inline json coeff_to_json(const Rat& c) {
    if (c.is_integer()) {
        try {
            const long long v = std::stoll(c.str());
            return json(v);
        } catch (...) {
            return json(c.str()); // integer too large for the number type
        }
    }
    return json(c.str());
}

inline std::size_t index_from_json(const json& v, std::size_t dim, const std::string& where) {
    if (!v.is_number_integer()) throw parse_error("index must be an integer at " + where);
    const long long i = v.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > dim)
        throw index_out_of_range(where + ": " + std::to_string(i) + " not in [1, " +
                                 std::to_string(dim) + "]");
    return static_cast<std::size_t>(i) - 1;
}

} // namespace detail

inline Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(e.what());
    }
    if (!j.is_object()) throw parse_error("top level must be an object");
    Document doc;
    if (!j.contains("schema_version") || !j["schema_version"].is_string())
        throw parse_error("missing schema_version");
    if (j["schema_version"].get<std::string>() != kSchemaVersion)
        throw parse_error("unsupported schema_version");
    if (!j.contains("kind") || !j["kind"].is_string()) throw parse_error("missing kind");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "algebra") doc.kind = DocKind::algebra;
    else if (kind == "coproduct") doc.kind = DocKind::coproduct;
    else if (kind == "form") doc.kind = DocKind::form;
    else if (kind == "rmatrix") doc.kind = DocKind::rmatrix;
    else throw parse_error("unknown kind '" + kind + "'");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1 ||
        j["dim"].get<long long>() > 64)
        throw parse_error("dim must be an integer in [1, 64]");
    doc.dim = j["dim"].get<std::size_t>();
    if (j.contains("label")) doc.label = j["label"].get<std::string>();
    if (j.contains("basis_names")) {
        for (const auto& b : j["basis_names"]) doc.basis_names.push_back(b.get<std::string>());
        if (doc.basis_names.size() != doc.dim) throw parse_error("basis_names length != dim");
    }
    if (j.contains("algebra")) doc.algebra_ref = j["algebra"].get<std::string>();
    if (j.contains("note")) doc.note = j["note"].get<std::string>();
    if (j.contains("expect")) doc.expect = j["expect"];

    const bool rank3 = doc.kind == DocKind::algebra || doc.kind == DocKind::coproduct;
    const char* entries_key = doc.kind == DocKind::algebra ? "products" : "entries";
    if (!j.contains(entries_key) || !j[entries_key].is_array())
        throw parse_error(std::string("missing ") + entries_key + " array");

    if (rank3) doc.t3 = Tensor3(doc.dim);
    else doc.t2 = Tensor2(doc.dim);

    std::size_t line = 0;
    std::vector<bool> seen(rank3 ? doc.dim * doc.dim * doc.dim : doc.dim * doc.dim, false);
    for (const auto& ent : j[entries_key]) {
        ++line;
        const std::string where = std::string(entries_key) + "[" + std::to_string(line) + "]";
        if (!ent.is_object() || !ent.contains("i") || !ent.contains("j") || !ent.contains("c"))
            throw parse_error(where + " must be an object with i, j" +
                              (rank3 ? ", k" : "") + ", c");
        const std::size_t i = detail::index_from_json(ent["i"], doc.dim, where + ".i");
        const std::size_t jj = detail::index_from_json(ent["j"], doc.dim, where + ".j");
        const Rat c = detail::coeff_from_json(ent["c"], where + ".c");
        if (rank3) {
            if (!ent.contains("k")) throw parse_error(where + " missing k");
            const std::size_t k = detail::index_from_json(ent["k"], doc.dim, where + ".k");
            const std::size_t flat = (i * doc.dim + jj) * doc.dim + k;
            if (seen[flat])
                throw duplicate_entry(where + " repeats (" + std::to_string(i + 1) + "," +
                                      std::to_string(jj + 1) + "," + std::to_string(k + 1) + ")");
            seen[flat] = true;
            doc.t3.at(i, jj, k) = c;
        } else {
            if (ent.contains("k")) throw parse_error(where + " has a spurious k index");
            const std::size_t flat = i * doc.dim + jj;
            if (seen[flat])
                throw duplicate_entry(where + " repeats (" + std::to_string(i + 1) + "," +
                                      std::to_string(jj + 1) + ")");
            seen[flat] = true;
            doc.t2.at(i, jj) = c;
        }
    }
    return doc;
}

/// Canonical serialization: fixed key order, entries sorted by (i, j, k),
/// two-space indentation. Stable byte-for-byte across runs.
inline std::string serialize_document(const Document& doc) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind_name(doc.kind);
    j["dim"] = doc.dim;
    if (!doc.label.empty()) j["label"] = doc.label;
    if (!doc.basis_names.empty()) j["basis_names"] = doc.basis_names;
    if (!doc.algebra_ref.empty()) j["algebra"] = doc.algebra_ref;
    if (!doc.note.empty()) j["note"] = doc.note;

    json entries = json::array();
    const bool rank3 = doc.kind == DocKind::algebra || doc.kind == DocKind::coproduct;
    if (rank3) {
        for (std::size_t i = 0; i < doc.dim; ++i)
            for (std::size_t jj = 0; jj < doc.dim; ++jj)
                for (std::size_t k = 0; k < doc.dim; ++k)
                    if (!doc.t3.at(i, jj, k).is_zero()) {
                        json e;
                        e["i"] = i + 1;
                        e["j"] = jj + 1;
                        e["k"] = k + 1;
                        e["c"] = detail::coeff_to_json(doc.t3.at(i, jj, k));
                        entries.push_back(std::move(e));
                    }
    } else {
        for (std::size_t i = 0; i < doc.dim; ++i)
            for (std::size_t jj = 0; jj < doc.dim; ++jj)
                if (!doc.t2.at(i, jj).is_zero()) {
                    json e;
                    e["i"] = i + 1;
                    e["j"] = jj + 1;
                    e["c"] = detail::coeff_to_json(doc.t2.at(i, jj));
                    entries.push_back(std::move(e));
                }
    }
    j[doc.kind == DocKind::algebra ? "products" : "entries"] = std::move(entries);
    if (!doc.expect.is_null()) j["expect"] = doc.expect;
    return j.dump(2) + "\n";
}

inline Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

inline Document document_from_algebra(const Algebra& a, std::string label = "") {
    Document doc;
    doc.kind = DocKind::algebra;
    doc.dim = a.dim;
    doc.label = label.empty() ? a.label : std::move(label);
    doc.t3 = a.c;
    return doc;
}

inline Document document_from_coproduct(const Comultiplication& c, std::string label = "") {
    Document doc;
    doc.kind = DocKind::coproduct;
    doc.dim = c.dim;
    doc.label = std::move(label);
    doc.t3 = c.d;
    return doc;
}

inline Document document_from_rmatrix(const Tensor2& r, std::string label = "") {
    Document doc;
    doc.kind = DocKind::rmatrix;
    doc.dim = r.n;
    doc.label = std::move(label);
    doc.t2 = r;
    return doc;
}

} // namespace nalab

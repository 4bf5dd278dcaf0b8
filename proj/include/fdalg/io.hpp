#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fdalg/examples.hpp"

namespace fdalg {

using json = nlohmann::json;

// The algebra file format. Top-level keys:
//   "field"          "Q" or {"Fp": p}
//   "dim"            basis size
//   "basis"          labels
//   "unit"           scalar texts
//   "mult"           sparse triples [i, j, [[scalar-text, k], ...]]; pairs
//                    with i <= j come first, each group in row-major order;
//                    unlisted pairs are zero products
//   "frobenius_form" optional functional (scalar texts)
//   "idempotents"    optional list of coefficient vectors
//   "modules"        optional name -> list of action matrices (rows of texts)
//   "expected"       optional name -> {value, provenance}
// Scalars use the canonical text encoding of their field, so serialization
// is byte-stable.

inline FieldSpec parse_field_spec(const json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return FieldSpec::rationals();
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned())
        return FieldSpec::prime(j["Fp"].get<std::uint32_t>());
    throw input_error("field must be \"Q\" or {\"Fp\": p}");
}

inline json field_spec_to_json(const FieldSpec& fs) {
    if (fs.kind == FieldSpec::Kind::rationals) return "Q";
    return json{{"Fp", fs.p}};
}

namespace detail {

template <class F>
Vec<F> parse_vec(const F& f, const json& j, std::size_t expect, const std::string& what) {
    if (!j.is_array() || j.size() != expect)
        throw input_error(what + " must be an array of " + std::to_string(expect) + " scalars");
    Vec<F> out;
    out.reserve(expect);
    for (const auto& s : j) {
        if (!s.is_string()) throw input_error(what + " entries must be scalar texts");
        out.push_back(f.parse(s.get<std::string>()));
    }
    return out;
}

template <class F>
json vec_to_json(const F& f, const Vec<F>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(f.to_text(x));
    return out;
}

} // namespace detail

template <class F>
Bundle<F> parse_bundle_as(F f, const json& j) {
    if (!j.is_object()) throw input_error("algebra file must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw input_error("missing or bad \"dim\"");
    int n = j["dim"].get<int>();
    if (!j.contains("basis") || !j["basis"].is_array() ||
        static_cast<int>(j["basis"].size()) != n)
        throw input_error("\"basis\" must list exactly dim labels");
    std::vector<std::string> labels;
    for (const auto& l : j["basis"]) {
        if (!l.is_string()) throw input_error("basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    if (!j.contains("unit")) throw input_error("missing \"unit\"");
    Vec<F> unit = detail::parse_vec(f, j["unit"], n, "unit");
    if (!j.contains("mult") || !j["mult"].is_array())
        throw input_error("missing or bad \"mult\"");
    std::vector<MultTriple<F>> triples;
    for (const auto& entry : j["mult"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() ||
            !entry[1].is_number_unsigned() || !entry[2].is_array())
            throw input_error("mult entries must be [i, j, [[scalar, k], ...]]");
        int i = entry[0].get<int>(), jj = entry[1].get<int>();
        for (const auto& term : entry[2]) {
            if (!term.is_array() || term.size() != 2 || !term[0].is_string() ||
                !term[1].is_number_unsigned())
                throw input_error("mult terms must be [scalar-text, k]");
            triples.push_back({i, jj, term[1].get<int>(), f.parse(term[0].get<std::string>())});
        }
    }
    Bundle<F> b{Algebra<F>(f, std::move(labels), std::move(unit), triples),
                std::nullopt, std::nullopt, {}, json::object()};
    if (j.contains("frobenius_form"))
        b.frobenius_form = detail::parse_vec(f, j["frobenius_form"], n, "frobenius_form");
    if (j.contains("idempotents")) {
        if (!j["idempotents"].is_array()) throw input_error("\"idempotents\" must be an array");
        std::vector<Vec<F>> idem;
        for (const auto& e : j["idempotents"])
            idem.push_back(detail::parse_vec(f, e, n, "idempotent"));
        b.idempotents = std::move(idem);
    }
    if (j.contains("modules")) {
        if (!j["modules"].is_object()) throw input_error("\"modules\" must be an object");
        for (const auto& [name, mats] : j["modules"].items()) {
            if (!mats.is_array() || static_cast<int>(mats.size()) != n)
                throw input_error("module '" + name + "' needs one matrix per basis element");
            ModuleRep<F> mod;
            mod.name = name;
            for (const auto& mj : mats) {
                if (!mj.is_array() || mj.empty())
                    throw input_error("module '" + name + "' has an empty action matrix");
                int m = static_cast<int>(mj.size());
                Matrix<F> mat(f, m, m);
                for (int r = 0; r < m; ++r) {
                    Vec<F> row = detail::parse_vec(f, mj[r], m, "module row");
                    mat.set_row(r, row);
                }
                if (mod.action.empty()) mod.dim = m;
                else if (m != mod.dim)
                    throw input_error("module '" + name + "' mixes matrix sizes");
                mod.action.push_back(std::move(mat));
            }
            b.modules.push_back({name, std::move(mod)});
        }
    }
    if (j.contains("expected")) {
        if (!j["expected"].is_object()) throw input_error("\"expected\" must be an object");
        b.expected = j["expected"];
    }
    return b;
}

using AnyBundle = std::variant<Bundle<RationalField>, Bundle<PrimeField>>;

inline AnyBundle parse_bundle(const json& j) {
    if (!j.is_object() || !j.contains("field")) throw input_error("missing \"field\"");
    FieldSpec fs = parse_field_spec(j["field"]);
    if (fs.kind == FieldSpec::Kind::rationals)
        return parse_bundle_as(RationalField{}, j);
    return parse_bundle_as(PrimeField{fs.p}, j);
}

template <class F>
json bundle_to_json(const Bundle<F>& b) {
    const F& f = b.alg.field();
    int n = b.alg.dim();
    json out;
    out["field"] = field_spec_to_json(f.spec());
    out["dim"] = n;
    out["basis"] = b.alg.labels();
    out["unit"] = detail::vec_to_json(f, b.alg.unit());
    json mult = json::array();
    auto emit = [&](int i, int j) {
        const auto& row = b.alg.row(i, j);
        if (row.empty()) return;
        json terms = json::array();
        for (const auto& [k, c] : row) terms.push_back(json::array({f.to_text(c), k}));
        mult.push_back(json::array({i, j, terms}));
    };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) emit(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) emit(i, j);
    out["mult"] = std::move(mult);
    if (b.frobenius_form) out["frobenius_form"] = detail::vec_to_json(f, *b.frobenius_form);
    if (b.idempotents) {
        json idem = json::array();
        for (const auto& e : *b.idempotents) idem.push_back(detail::vec_to_json(f, e));
        out["idempotents"] = std::move(idem);
    }
    if (!b.modules.empty()) {
        json mods = json::object();
        for (const auto& [name, mod] : b.modules) {
            json mats = json::array();
            for (const auto& mat : mod.action) {
                json rows = json::array();
                for (int r = 0; r < mat.rows(); ++r)
                    rows.push_back(detail::vec_to_json(f, mat.row(r)));
                mats.push_back(std::move(rows));
            }
            mods[name] = std::move(mats);
        }
        out["modules"] = std::move(mods);
    }
    if (!b.expected.empty()) out["expected"] = b.expected;
    return out;
}

inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace fdalg

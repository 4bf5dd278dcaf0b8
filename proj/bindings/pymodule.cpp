// Python bindings: the main operations exchanged as JSON strings, decoded to
// dicts by the fdalg package wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "fdalg/report.hpp"

namespace py = pybind11;
using namespace fdalg;

namespace {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
}

std::string analyze_json(const std::string& text, std::uint64_t seed, bool with_frobenius) {
    AnyBundle any = parse_bundle(parse_text(text));
    return std::visit(
        [&](const auto& bundle) {
            AnalyzeOptions opts;
            opts.with_frobenius = with_frobenius;
            AnalysisReport rep = analyze(bundle, seed, opts);
            json out = report_to_json(rep);
            out["exit_code"] = rep.exit_code();
            return canonical_dump(out);
        },
        any);
}

std::string analyze_file(const std::string& path, std::uint64_t seed, bool with_frobenius) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return analyze_json(ss.str(), seed, with_frobenius);
}

std::string validate_json_text(const std::string& text) {
    AnyBundle any = parse_bundle(parse_text(text));
    return std::visit(
        [&](const auto& bundle) {
            json out;
            ValidationResult vr = validate_algebra(bundle.alg);
            out["ok"] = vr.ok;
            out["message"] = vr.ok ? "" : vr.violation->message();
            if (vr.ok) {
                for (const auto& [name, mod] : bundle.modules) {
                    ModuleValidationResult mv = validate_module(bundle.alg, mod);
                    if (!mv.ok) {
                        out["ok"] = false;
                        out["message"] = mv.violation->message;
                        break;
                    }
                }
            }
            return canonical_dump(out);
        },
        any);
}

std::string example_json(const std::string& name, const std::string& field, int n,
                         const std::string& c, std::uint32_t p) {
    auto build = [&]() -> json {
        if (name == "usl2") return bundle_to_json(build_usl2(p));
        FieldSpec fs = field == "Q" ? FieldSpec::rationals()
                                    : FieldSpec::prime(static_cast<std::uint32_t>(
                                          std::stoul(field.substr(1))));
        auto dispatch = [&](auto f) -> json {
            using F = decltype(f);
            if (name == "group-c2") return bundle_to_json(build_group_c2(f));
            if (name == "group-c3") return bundle_to_json(build_group_c3(f));
            if (name == "group-s3") return bundle_to_json(build_group_s3(f));
            if (name == "smash") return bundle_to_json(build_smash(n, f));
            if (name == "rrca-c2") return bundle_to_json(build_rrca_c2(f.parse(c), f));
            throw input_error("unknown example '" + name + "'");
        };
        if (fs.kind == FieldSpec::Kind::rationals) return dispatch(RationalField{});
        return dispatch(PrimeField{fs.p});
    };
    return canonical_dump(build());
}

std::string bgg_json(const std::string& text, const std::vector<std::string>& names,
                     std::uint64_t seed) {
    AnyBundle any = parse_bundle(parse_text(text));
    return std::visit(
        [&](const auto& bundle) {
            using F = std::decay_t<decltype(bundle.alg.field())>;
            std::vector<std::pair<std::string, ModuleRep<F>>> vermas;
            for (const auto& want : names) {
                bool found = false;
                for (const auto& [n2, mod] : bundle.modules)
                    if (n2 == want) {
                        vermas.push_back({n2, mod});
                        found = true;
                    }
                if (!found) throw input_error("module '" + want + "' not present");
            }
            const auto& alg = bundle.alg;
            ValidationResult vr = validate_algebra(alg);
            if (!vr.ok) throw validation_error(vr.violation->message());
            RadicalData<F> rad = radical(alg);
            IdempotentData<F> idem = primitive_decomposition(alg, rad, bundle.idempotents, seed);
            SplitCheckResult sc = split_check(alg, rad, idem);
            if (!sc.ok) throw not_split_error(sc.detail);
            BlockData<F> blk = blocks(alg, idem, seed);
            CartanData<F> cart = cartan_matrix(alg, rad, idem, blk);
            BggReport rep = multiplicity_report(alg, rad, idem, blk, cart, vermas);
            json out;
            out["vermas"] = rep.verma_names;
            out["verma_dims"] = rep.verma_dims;
            out["matrix"] = int_matrix_to_json(rep.m);
            out["bgg_holds"] = rep.bgg_holds;
            out["eq32_holds"] = rep.eq32_holds;
            out["rank_equivalence_holds"] = rep.rank_equivalence_holds;
            return canonical_dump(out);
        },
        any);
}

// exact rational row reduction on scalar texts, handy from notebooks
std::string rref_q(const std::vector<std::vector<std::string>>& rows) {
    RationalField f;
    if (rows.empty()) throw input_error("rref: empty matrix");
    int r = static_cast<int>(rows.size()), c = static_cast<int>(rows[0].size());
    Matrix<RationalField> m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw input_error("rref: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = f.parse(rows[i][j]);
    }
    RrefResult<RationalField> res = rref(std::move(m));
    json out;
    out["rank"] = res.rank;
    out["pivots"] = res.pivots;
    json mat = json::array();
    for (int i = 0; i < res.mat.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < res.mat.cols(); ++j) row.push_back(f.to_text(res.mat.at(i, j)));
        mat.push_back(std::move(row));
    }
    out["rref"] = std::move(mat);
    return canonical_dump(out);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact structure analysis of finite-dimensional associative algebras";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<not_split_error>(m, "NotSplitError", PyExc_RuntimeError);
    py::register_exception<needs_supplied_error>(m, "NeedsSuppliedDataError", PyExc_RuntimeError);
    py::register_exception<retry_exhausted_error>(m, "RetryExhaustedError", PyExc_RuntimeError);

    m.def("analyze_json", &analyze_json, py::arg("text"), py::arg("seed") = 0,
          py::arg("with_frobenius") = true,
          "Analyze an algebra file given as JSON text; returns the report as JSON text.");
    m.def("analyze_file", &analyze_file, py::arg("path"), py::arg("seed") = 0,
          py::arg("with_frobenius") = true);
    m.def("validate_json", &validate_json_text, py::arg("text"));
    m.def("example_json", &example_json, py::arg("name"), py::arg("field") = "Q",
          py::arg("n") = 2, py::arg("c") = "0", py::arg("p") = 3,
          "Build a named example bundle; returns the algebra file as JSON text.");
    m.def("bgg_json", &bgg_json, py::arg("text"), py::arg("vermas"), py::arg("seed") = 0);
    m.def("rref_q", &rref_q, py::arg("rows"),
          "Reduced row echelon form over Q; rows are lists of scalar texts.");
}

// fdalg: exact structure analysis of finite-dimensional associative algebras
// given by structure constants. Subcommands: validate, analyze, rank-one,
// example, bgg. Exit codes: 0 analyzed clean (or informational), 1 rank-one
// violated or an identity check failed, 2 invalid input, 3 unsupported
// (not split / needs supplied idempotents / search budget exhausted).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fdalg/report.hpp"

namespace {

using namespace fdalg;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << text;
}

FieldSpec parse_field_flag(const std::string& s) {
    if (s == "Q" || s == "q") return FieldSpec::rationals();
    if ((s.size() > 1 && (s[0] == 'F' || s[0] == 'f'))) {
        try {
            return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(s.substr(1))));
        } catch (const input_error&) {
            throw;
        } catch (const std::exception&) {
            throw input_error("bad field '" + s + "'; use Q or F<p>");
        }
    }
    throw input_error("bad field '" + s + "'; use Q or F<p>");
}

template <class Fn>
auto with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldSpec::Kind::rationals) return fn(RationalField{});
    return fn(PrimeField{fs.p});
}

int run_validate(const std::string& path) {
    AnyBundle any = parse_bundle(read_json_file(path));
    return std::visit(
        [&](const auto& bundle) {
            ValidationResult vr = validate_algebra(bundle.alg);
            if (!vr.ok) {
                std::cout << "violation: " << vr.violation->message() << "\n";
                return 2;
            }
            for (const auto& [name, mod] : bundle.modules) {
                ModuleValidationResult mv = validate_module(bundle.alg, mod);
                if (!mv.ok) {
                    std::cout << "violation: " << mv.violation->message << "\n";
                    return 2;
                }
            }
            std::cout << "ok: algebra of dimension " << bundle.alg.dim();
            if (!bundle.modules.empty())
                std::cout << " with " << bundle.modules.size() << " valid module(s)";
            std::cout << "\n";
            return 0;
        },
        any);
}

int run_analyze(const std::string& path, std::uint64_t seed, bool as_json) {
    AnyBundle any = parse_bundle(read_json_file(path));
    return std::visit(
        [&](const auto& bundle) {
            AnalysisReport rep = analyze(bundle, seed);
            if (as_json)
                std::cout << canonical_dump(report_to_json(rep));
            else
                std::cout << report_to_text(rep);
            return rep.exit_code();
        },
        any);
}

int run_rank_one(const std::string& path, std::uint64_t seed) {
    AnyBundle any = parse_bundle(read_json_file(path));
    return std::visit(
        [&](const auto& bundle) {
            AnalyzeOptions opts;
            opts.with_frobenius = false;
            AnalysisReport rep = analyze(bundle, seed, opts);
            for (std::size_t b = 0; b < rep.verdict.per_block.size(); ++b)
                std::cout << "block " << b << ": rank " << rep.ranks[b].p_rank << " -> "
                          << to_string(rep.verdict.per_block[b]) << "\n";
            std::cout << "global: " << to_string(rep.verdict.global) << "\n";
            return rep.exit_code();
        },
        any);
}

int run_example(const std::string& name, const std::string& field_flag, int n,
                const std::string& cparam, std::uint32_t p, const std::string& out_path) {
    json out;
    if (name == "usl2") {
        out = bundle_to_json(build_usl2(p));
    } else {
        FieldSpec fs = parse_field_flag(field_flag);
        out = with_field(fs, [&](auto f) -> json {
            using F = decltype(f);
            if (name == "group-c2") return bundle_to_json(build_group_c2(f));
            if (name == "group-c3") return bundle_to_json(build_group_c3(f));
            if (name == "group-s3") return bundle_to_json(build_group_s3(f));
            if (name == "smash") return bundle_to_json(build_smash(n, f));
            if (name == "rrca-c2") return bundle_to_json(build_rrca_c2(f.parse(cparam), f));
            throw input_error("unknown example '" + name +
                              "'; choose from group-c2, group-c3, group-s3, smash, rrca-c2, usl2");
        });
    }
    write_output(canonical_dump(out), out_path);
    return 0;
}

int run_bgg(const std::string& path, const std::string& verma_csv, std::uint64_t seed) {
    AnyBundle any = parse_bundle(read_json_file(path));
    return std::visit(
        [&](const auto& bundle) {
            using F = std::decay_t<decltype(bundle.alg.field())>;
            std::vector<std::pair<std::string, ModuleRep<F>>> vermas;
            std::stringstream names_in(verma_csv);
            std::string name;
            while (std::getline(names_in, name, ',')) {
                bool found = false;
                for (const auto& [n2, mod] : bundle.modules)
                    if (n2 == name) {
                        vermas.push_back({n2, mod});
                        found = true;
                    }
                if (!found) throw input_error("module '" + name + "' not present in file");
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
            std::string mm = "multiplicity matrix:";
            for (const auto& row : rep.m) {
                mm += " [";
                for (std::size_t i = 0; i < row.size(); ++i) mm += (i ? " " : "") + row[i].get_str();
                mm += "]";
            }
            std::cout << mm << "\n";
            std::cout << "bgg_holds: " << (rep.bgg_holds ? "true" : "false") << "\n";
            std::cout << "eq32_holds: " << (rep.eq32_holds ? "true" : "false") << "\n";
            std::cout << "rank_equivalence_holds: "
                      << (rep.rank_equivalence_holds ? "true" : "false") << "\n";
            return (rep.bgg_holds && rep.eq32_holds && rep.rank_equivalence_holds) ? 0 : 1;
        },
        any);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure analysis of finite-dimensional algebras"};
    app.require_subcommand(1);

    std::string path, out_path, field_flag = "Q", name, cparam = "0", verma_csv;
    std::uint64_t seed = 0;
    bool as_json = false;
    int smash_n = 2;
    std::uint32_t usl2_p = 3;

    auto* validate = app.add_subcommand("validate", "check a presentation file");
    validate->add_option("file", path)->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "run the full analysis pipeline");
    analyze_cmd->add_option("file", path)->required();
    analyze_cmd->add_option("--seed", seed, "seed for randomized subroutines");
    analyze_cmd->add_flag("--json", as_json, "machine-readable report on stdout");

    auto* rank_one = app.add_subcommand("rank-one", "report per-block rank verdicts");
    rank_one->add_option("file", path)->required();
    rank_one->add_option("--seed", seed);

    auto* example = app.add_subcommand("example", "emit a built-in example file");
    example->add_option("name", name, "group-c2 | group-c3 | group-s3 | smash | rrca-c2 | usl2")
        ->required();
    example->add_option("--field", field_flag, "Q or F<p> (default Q)");
    example->add_option("--n", smash_n, "smash: truncation degree (default 2)");
    example->add_option("--c", cparam, "rrca-c2: parameter as a scalar text (default 0)");
    example->add_option("--p", usl2_p, "usl2: prime (default 3)");
    example->add_option("-o,--output", out_path, "output path (default stdout)");

    auto* bgg = app.add_subcommand("bgg", "multiplicity matrix and reciprocity checks");
    bgg->add_option("file", path)->required();
    bgg->add_option("--vermas", verma_csv, "comma-separated module names")->required();
    bgg->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(path);
        if (analyze_cmd->parsed()) return run_analyze(path, seed, as_json);
        if (rank_one->parsed()) return run_rank_one(path, seed);
        if (example->parsed())
            return run_example(name, field_flag, smash_n, cparam, usl2_p, out_path);
        if (bgg->parsed()) return run_bgg(path, verma_csv, seed);
    } catch (const validation_error& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_split_error& e) {
        std::cerr << "not-split: " << e.what() << "\n";
        return 3;
    } catch (const needs_supplied_error& e) {
        std::cerr << "needs-supplied-data: " << e.what() << "\n";
        return 3;
    } catch (const retry_exhausted_error& e) {
        std::cerr << "retry-budget-exhausted: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

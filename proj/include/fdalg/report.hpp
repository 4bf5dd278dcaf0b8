#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/io.hpp"

namespace fdalg {

// Per-block and global verdicts on the rank-one property. A block over a
// field of characteristic p can have p-rank zero, which is reported as a
// failed hypothesis rather than a counterexample; a rank above one is only a
// counterexample *candidate* since the hypotheses on the ambient extension
// cannot be checked from the finite-dimensional quotient alone.
struct Verdict {
    enum class Block { rank_one_confirmed, p_rank_zero_hypothesis_failed, rank_one_violated };
    enum class Global { consistent_with_theorem, hypothesis5_failed, counterexample_candidate };
    std::vector<Block> per_block;
    Global global = Global::consistent_with_theorem;
};

inline const char* to_string(Verdict::Block b) {
    switch (b) {
        case Verdict::Block::rank_one_confirmed: return "rank-one-confirmed";
        case Verdict::Block::p_rank_zero_hypothesis_failed: return "p-rank-zero-hypothesis-failed";
        default: return "rank-one-violated";
    }
}
inline const char* to_string(Verdict::Global g) {
    switch (g) {
        case Verdict::Global::consistent_with_theorem: return "consistent-with-theorem";
        case Verdict::Global::hypothesis5_failed: return "hypothesis-(5)-failed";
        default: return "counterexample-candidate";
    }
}

inline Verdict rank_one_verdict(const std::vector<BlockRank>& ranks) {
    Verdict v;
    bool any_zero = false, any_big = false;
    for (const auto& r : ranks) {
        if (r.p_rank == 0) {
            v.per_block.push_back(Verdict::Block::p_rank_zero_hypothesis_failed);
            any_zero = true;
        } else if (r.p_rank == 1) {
            v.per_block.push_back(Verdict::Block::rank_one_confirmed);
        } else {
            v.per_block.push_back(Verdict::Block::rank_one_violated);
            any_big = true;
        }
    }
    if (any_zero) v.global = Verdict::Global::hypothesis5_failed;
    else if (any_big) v.global = Verdict::Global::counterexample_candidate;
    else v.global = Verdict::Global::consistent_with_theorem;
    return v;
}

struct BggReport {
    std::vector<std::string> verma_names;
    IntMatrix m;            // m[verma][class]
    std::vector<int> verma_dims;
    std::vector<int> verma_block;
    bool bgg_holds = false;              // C = M^T M entrywise
    bool eq32_holds = false;             // cross-multiplicity identity within blocks
    bool rank_equivalence_holds = false; // per block, rank M = 1 iff rank C = 1
};

// Multiplicity matrix of the named modules against the simple classes, plus
// the reciprocity and rank-encoding checks.
template <class F>
BggReport multiplicity_report(const Algebra<F>& alg, const RadicalData<F>& rad,
                              const IdempotentData<F>& idem, const BlockData<F>& blk,
                              const CartanData<F>& cart,
                              const std::vector<std::pair<std::string, ModuleRep<F>>>& vermas) {
    int r = idem.class_count();
    if (static_cast<int>(vermas.size()) != r)
        throw input_error("multiplicity report needs exactly one module per simple class (got " +
                          std::to_string(vermas.size()) + " for " + std::to_string(r) + " classes)");
    BggReport out;
    out.m.assign(vermas.size(), std::vector<mpz_class>(r, 0));
    for (std::size_t v = 0; v < vermas.size(); ++v) {
        const auto& [name, mod] = vermas[v];
        ModuleValidationResult mv = validate_module(alg, mod);
        if (!mv.ok) throw validation_error(mv.violation->message);
        out.verma_names.push_back(name);
        out.verma_dims.push_back(mod.dim);
        for (int mu = 0; mu < r; ++mu)
            out.m[v][mu] = idempotent_multiplicity(alg, idem.representative(mu), mod);
        int block = -1;
        for (int mu = 0; mu < r; ++mu) {
            if (out.m[v][mu] == 0) continue;
            int bmu = blk.block_of_class[mu];
            if (block < 0) block = bmu;
            else if (block != bmu)
                throw input_error("module '" + name + "' has composition factors in two blocks");
        }
        if (block < 0) throw input_error("module '" + name + "' has no composition factors");
        out.verma_block.push_back(block);
    }
    (void)rad;

    out.bgg_holds = true;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            mpz_class acc = 0;
            for (std::size_t v = 0; v < vermas.size(); ++v) acc += out.m[v][a] * out.m[v][b];
            if (acc != cart.matrix[a][b]) out.bgg_holds = false;
        }

    out.eq32_holds = true;
    for (std::size_t l = 0; l < vermas.size(); ++l)
        for (std::size_t mu = 0; mu < vermas.size(); ++mu)
            for (int rho = 0; rho < r; ++rho) {
                if (out.verma_block[l] != out.verma_block[mu] ||
                    out.verma_block[l] != blk.block_of_class[rho])
                    continue;
                if (out.m[l][rho] * out.verma_dims[mu] != out.m[mu][rho] * out.verma_dims[l])
                    out.eq32_holds = false;
            }

    out.rank_equivalence_holds = true;
    for (std::size_t b = 0; b < cart.block_classes.size(); ++b) {
        std::vector<int> vs;
        for (std::size_t v = 0; v < vermas.size(); ++v)
            if (out.verma_block[v] == static_cast<int>(b)) vs.push_back(static_cast<int>(v));
        const auto& cls = cart.block_classes[b];
        RationalField qf;
        Matrix<RationalField> mb(qf, static_cast<int>(vs.size()), static_cast<int>(cls.size()));
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t c = 0; c < cls.size(); ++c)
                mb.at(static_cast<int>(a), static_cast<int>(c)) = mpq_class(out.m[vs[a]][cls[c]]);
        int rank_m = rank(mb);
        bool m_one = rank_m == 1, c_one = cart.ranks[b].q_rank == 1;
        if (m_one != c_one) out.rank_equivalence_holds = false;
    }
    return out;
}

struct AnalyzeOptions {
    bool with_frobenius = true;
    int frobenius_trials = 32;
};

// Everything analyze computes, ready for canonical serialization.
struct AnalysisReport {
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> labels;
    int radical_dim = 0;
    int nilpotency_index = 1;
    int centre_dim = 0;
    int socle_dim = 0;
    int block_count = 0;
    std::vector<std::string> class_labels;
    std::vector<int> class_dims;
    std::vector<int> class_multiplicities;
    std::vector<int> class_blocks;
    IntMatrix cartan;
    std::vector<std::vector<int>> block_classes;
    std::vector<BlockRank> ranks;
    bool idempotents_supplied = false;

    std::string frobenius_source; // "file" | "searched(...)" | "not-found(...)"
    std::vector<std::string> lambda_text;
    std::optional<int> higman_image_dim;
    std::optional<int> casimir_image_dim;
    std::optional<int> nakayama_order;
    std::optional<int> twisted_centre_dim;

    std::map<std::string, bool> identity_checks;
    std::optional<BggReport> bgg;
    Verdict verdict;
    std::uint64_t seed = 0;

    bool all_checks_pass() const {
        for (const auto& [k, v] : identity_checks)
            if (!v) return false;
        return true;
    }
    bool any_rank_violated() const {
        for (auto b : verdict.per_block)
            if (b == Verdict::Block::rank_one_violated) return true;
        return false;
    }
    // 0 = clean or informational, 1 = violated verdict or failed check
    int exit_code() const { return (any_rank_violated() || !all_checks_pass()) ? 1 : 0; }
};

// The full pipeline: validation, radical, idempotents, blocks, Cartan,
// Frobenius structure, the Higman/Casimir maps and their containment checks,
// and the rank-one verdicts. Deterministic given (bundle bytes, seed).
template <class F>
AnalysisReport analyze(const Bundle<F>& bundle, std::uint64_t seed,
                       const AnalyzeOptions& opts = {}) {
    const Algebra<F>& alg = bundle.alg;
    const F& f = alg.field();
    AnalysisReport rep;
    rep.field = f.spec();
    rep.dim = alg.dim();
    rep.labels = alg.labels();
    rep.seed = seed;

    ValidationResult vr = validate_algebra(alg);
    if (!vr.ok) throw validation_error(vr.violation->message());
    for (const auto& [name, mod] : bundle.modules) {
        ModuleValidationResult mv = validate_module(alg, mod);
        if (!mv.ok) throw validation_error(mv.violation->message);
    }

    RadicalData<F> rad = radical(alg);
    rep.radical_dim = rad.radical.dim();
    rep.nilpotency_index = rad.nilpotency_index;
    Subspace<F> z = centre(alg);
    rep.centre_dim = z.dim();
    Subspace<F> soc = socle(alg, rad);
    rep.socle_dim = soc.dim();

    IdempotentData<F> idem = primitive_decomposition(alg, rad, bundle.idempotents, seed);
    rep.idempotents_supplied = idem.supplied;
    SplitCheckResult sc = split_check(alg, rad, idem);
    if (!sc.ok) throw not_split_error(sc.detail);
    BlockData<F> blk = blocks(alg, idem, seed);
    CartanData<F> cart = cartan_matrix(alg, rad, idem, blk);

    rep.block_count = blk.count;
    rep.class_labels = idem.class_labels;
    rep.class_dims = idem.class_dims;
    for (const auto& cls : idem.classes) rep.class_multiplicities.push_back(static_cast<int>(cls.size()));
    rep.class_blocks = blk.block_of_class;
    rep.cartan = cart.matrix;
    rep.block_classes = cart.block_classes;
    rep.ranks = cart.ranks;

    if (opts.with_frobenius) {
        std::optional<Vec<F>> lambda;
        if (bundle.frobenius_form) {
            lambda = *bundle.frobenius_form;
            rep.frobenius_source = "file";
        } else {
            FrobeniusSearchOutcome outcome;
            lambda = find_frobenius_form(alg, seed, opts.frobenius_trials, &outcome);
            rep.frobenius_source =
                lambda ? "searched(seed=" + std::to_string(seed) + ", trials=" +
                             std::to_string(outcome.trials_used) + ")"
                       : "not-found(seed=" + std::to_string(seed) + ", trials=" +
                             std::to_string(outcome.trials_used) + "); inconclusive";
        }
        if (lambda) {
            for (const auto& x : *lambda) rep.lambda_text.push_back(f.to_text(x));
            FrobeniusStructure<F> frob = dual_bases(alg, *lambda);
            NakayamaData<F> nak = nakayama_automorphism(alg, frob);
            rep.nakayama_order = nak.order;
            Subspace<F> tw = twisted_centre(alg, nak.automorphism);
            rep.twisted_centre_dim = tw.dim();
            CentralMap<F> tau = higman_map(alg, frob);
            CentralMap<F> cas = casimir_map(alg, frob);
            rep.higman_image_dim = tau.image.dim();
            rep.casimir_image_dim = cas.image.dim();

            rep.identity_checks["lf_identity"] = tau.image.dim() == cart.total_p_rank;
            rep.identity_checks["higman_image_in_socle"] = soc.contains(tau.image);
            rep.identity_checks["higman_image_in_twisted_centre"] = tw.contains(tau.image);
            rep.identity_checks["casimir_image_in_centre"] = z.contains(cas.image);
            rep.identity_checks["casimir_image_in_socle"] = soc.contains(cas.image);
            bool tau_rad = true, cas_rad = true;
            for (int b = 0; b < rad.radical.dim(); ++b) {
                Vec<F> rb = rad.radical.basis_vector(b);
                if (!vec_is_zero(f, tau.map.apply(rb))) tau_rad = false;
                if (!vec_is_zero(f, cas.map.apply(rb))) cas_rad = false;
            }
            rep.identity_checks["higman_vanishes_on_radical"] = tau_rad;
            rep.identity_checks["casimir_vanishes_on_radical"] = cas_rad;
            bool fixes = true;
            for (int b = 0; b < z.dim(); ++b) {
                Vec<F> zb = z.basis_vector(b);
                if (!vec_eq(f, nak.automorphism.apply(zb), zb)) fixes = false;
            }
            rep.identity_checks["nakayama_fixes_centre"] = fixes;
        }
    }

    if (!bundle.modules.empty() &&
        static_cast<int>(bundle.modules.size()) == idem.class_count()) {
        BggReport bgg = multiplicity_report(alg, rad, idem, blk, cart, bundle.modules);
        rep.identity_checks["bgg_holds"] = bgg.bgg_holds;
        rep.identity_checks["eq32_holds"] = bgg.eq32_holds;
        rep.identity_checks["rank_equivalence_holds"] = bgg.rank_equivalence_holds;
        rep.bgg = std::move(bgg);
    }

    rep.verdict = rank_one_verdict(cart.ranks);
    return rep;
}

inline json int_matrix_to_json(const IntMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.get_si());
        out.push_back(std::move(r));
    }
    return out;
}

inline json report_to_json(const AnalysisReport& r) {
    json out;
    out["algebra"] = {{"dim", r.dim},
                      {"field", field_spec_to_json(r.field)},
                      {"labels", r.labels}};
    out["radical"] = {{"dim", r.radical_dim}, {"nilpotency_index", r.nilpotency_index}};
    out["centre_dim"] = r.centre_dim;
    out["socle_dim"] = r.socle_dim;
    out["blocks"] = r.block_count;
    json classes = json::array();
    for (std::size_t c = 0; c < r.class_labels.size(); ++c)
        classes.push_back({{"label", r.class_labels[c]},
                           {"dim", r.class_dims[c]},
                           {"multiplicity", r.class_multiplicities[c]},
                           {"block", r.class_blocks[c]}});
    out["classes"] = std::move(classes);
    json per_block = json::array();
    for (std::size_t b = 0; b < r.block_classes.size(); ++b) {
        IntMatrix sub;
        for (int a : r.block_classes[b]) {
            std::vector<mpz_class> row;
            for (int c : r.block_classes[b]) row.push_back(r.cartan[a][c]);
            sub.push_back(std::move(row));
        }
        json cls = json::array();
        for (int c : r.block_classes[b]) cls.push_back(r.class_labels[c]);
        per_block.push_back({{"classes", std::move(cls)},
                             {"matrix", int_matrix_to_json(sub)},
                             {"q_rank", r.ranks[b].q_rank},
                             {"p_rank", r.ranks[b].p_rank}});
    }
    out["cartan"] = {{"matrix", int_matrix_to_json(r.cartan)}, {"per_block", std::move(per_block)}};
    json frob;
    frob["form_source"] = r.frobenius_source.empty() ? json() : json(r.frobenius_source);
    frob["lambda"] = r.lambda_text.empty() ? json() : json(r.lambda_text);
    frob["higman_image_dim"] = r.higman_image_dim ? json(*r.higman_image_dim) : json();
    frob["casimir_image_dim"] = r.casimir_image_dim ? json(*r.casimir_image_dim) : json();
    frob["nakayama_order"] = r.nakayama_order ? json(*r.nakayama_order) : json();
    frob["twisted_centre_dim"] = r.twisted_centre_dim ? json(*r.twisted_centre_dim) : json();
    out["frobenius"] = std::move(frob);
    out["identity_checks"] = r.identity_checks;
    if (r.bgg) {
        json bgg;
        bgg["vermas"] = r.bgg->verma_names;
        bgg["verma_dims"] = r.bgg->verma_dims;
        bgg["matrix"] = int_matrix_to_json(r.bgg->m);
        bgg["bgg_holds"] = r.bgg->bgg_holds;
        bgg["eq32_holds"] = r.bgg->eq32_holds;
        bgg["rank_equivalence_holds"] = r.bgg->rank_equivalence_holds;
        out["bgg"] = std::move(bgg);
    } else {
        out["bgg"] = json();
    }
    json verdict;
    json pb = json::array();
    for (auto b : r.verdict.per_block) pb.push_back(to_string(b));
    verdict["per_block"] = std::move(pb);
    verdict["global"] = to_string(r.verdict.global);
    out["verdict"] = std::move(verdict);
    out["seed"] = r.seed;
    return out;
}

inline std::string report_to_text(const AnalysisReport& r) {
    std::string s;
    auto line = [&](const std::string& l) { s += l + "\n"; };
    std::string field = r.field.kind == FieldSpec::Kind::rationals
                            ? std::string("Q")
                            : "F" + std::to_string(r.field.p);
    line("algebra: dim " + std::to_string(r.dim) + " over " + field);
    line("radical: dim " + std::to_string(r.radical_dim) + ", nilpotency index " +
         std::to_string(r.nilpotency_index));
    line("centre: dim " + std::to_string(r.centre_dim) + "; socle: dim " +
         std::to_string(r.socle_dim));
    std::string cls;
    for (std::size_t c = 0; c < r.class_labels.size(); ++c) {
        if (!cls.empty()) cls += ", ";
        cls += r.class_labels[c] + " (dim " + std::to_string(r.class_dims[c]) + ", block " +
               std::to_string(r.class_blocks[c]) + ")";
    }
    line("simple classes: " + cls);
    line("blocks: " + std::to_string(r.block_count));
    std::string cm = "cartan:";
    for (const auto& row : r.cartan) {
        cm += " [";
        for (std::size_t i = 0; i < row.size(); ++i)
            cm += (i ? " " : "") + row[i].get_str();
        cm += "]";
    }
    line(cm);
    for (std::size_t b = 0; b < r.block_classes.size(); ++b)
        line("block " + std::to_string(b) + ": q-rank " + std::to_string(r.ranks[b].q_rank) +
             ", ground-field rank " + std::to_string(r.ranks[b].p_rank) + " -> " +
             to_string(r.verdict.per_block[b]));
    if (!r.frobenius_source.empty()) {
        line("frobenius form: " + r.frobenius_source);
        if (r.higman_image_dim)
            line("higman image dim " + std::to_string(*r.higman_image_dim) +
                 ", casimir image dim " + std::to_string(*r.casimir_image_dim) +
                 ", nakayama order " +
                 (r.nakayama_order ? std::to_string(*r.nakayama_order) : std::string("not found")));
    }
    for (const auto& [k, v] : r.identity_checks)
        line("check " + k + ": " + (v ? "true" : "FALSE"));
    if (r.bgg) {
        std::string mm = "multiplicity matrix:";
        for (const auto& row : r.bgg->m) {
            mm += " [";
            for (std::size_t i = 0; i < row.size(); ++i) mm += (i ? " " : "") + row[i].get_str();
            mm += "]";
        }
        line(mm);
    }
    line("verdict: " + std::string(to_string(r.verdict.global)));
    return s;
}

} // namespace fdalg

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdalg/frobenius.hpp"
#include "fdalg/module.hpp"
#include "fdalg/structure.hpp"

namespace fdalg {

// A constructed example: the algebra plus whatever optional data the
// construction knows (a Frobenius form, verified idempotents, modules) and a
// map of expected quantities for test suites. Every component is validated
// before the bundle leaves the constructor.
template <class F>
struct Bundle {
    Algebra<F> alg;
    std::optional<Vec<F>> frobenius_form;
    std::optional<std::vector<Vec<F>>> idempotents;
    std::vector<std::pair<std::string, ModuleRep<F>>> modules;
    nlohmann::json expected = nlohmann::json::object();
};

namespace detail {

template <class F>
void check_bundle(Bundle<F>& b) {
    ValidationResult vr = validate_algebra(b.alg);
    if (!vr.ok) throw internal_error("constructor produced an invalid algebra: " +
                                     vr.violation->message());
    if (b.frobenius_form) dual_bases(b.alg, *b.frobenius_form); // throws if degenerate
    if (b.idempotents) {
        RadicalData<F> rad = radical(b.alg);
        primitive_decomposition(b.alg, rad,
                                std::optional<std::vector<Vec<F>>>(*b.idempotents), 0);
    }
    for (auto& [name, mod] : b.modules) {
        ModuleValidationResult mv = validate_module(b.alg, mod);
        if (!mv.ok) throw internal_error("constructor produced an invalid module: " +
                                         mv.violation->message);
    }
}

inline nlohmann::json expect(nlohmann::json value, const std::string& provenance) {
    return nlohmann::json{{"value", std::move(value)}, {"provenance", provenance}};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Group algebras

// Multiplication table of a finite group: table[i][j] = index of g_i g_j.
// The table is checked to be a group before anything else happens.
template <class F>
Bundle<F> build_group_algebra(F f, const std::vector<std::vector<int>>& table,
                              const std::vector<std::string>& labels) {
    int k = static_cast<int>(table.size());
    if (k == 0) throw input_error("group table is empty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != k) throw input_error("group table is not square");
        for (int v : row)
            if (v < 0 || v >= k) throw input_error("group table entry out of range");
    }
    int id = -1;
    for (int e = 0; e < k; ++e) {
        bool ok = true;
        for (int i = 0; i < k; ++i)
            if (table[e][i] != i || table[i][e] != i) { ok = false; break; }
        if (ok) { id = e; break; }
    }
    if (id < 0) throw input_error("group table has no identity");
    for (int i = 0; i < k; ++i) {
        bool has_inv = false;
        for (int j = 0; j < k; ++j)
            if (table[i][j] == id && table[j][i] == id) has_inv = true;
        if (!has_inv) throw input_error("group table element " + std::to_string(i) +
                                        " has no inverse");
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (table[table[i][j]][l] != table[i][table[j][l]])
                    throw input_error("group table is not associative at (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ", " + std::to_string(l) + ")");

    std::vector<MultTriple<F>> triples;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) triples.push_back({i, j, table[i][j], f.one()});
    Vec<F> unit(k, f.zero());
    unit[id] = f.one();
    Bundle<F> b{Algebra<F>(f, labels, unit, triples), std::nullopt, std::nullopt, {}, {}};
    Vec<F> lambda(k, f.zero());
    lambda[id] = f.one(); // coefficient-of-identity functional
    b.frobenius_form = lambda;
    detail::check_bundle(b);
    return b;
}

template <class F>
Bundle<F> build_group_c2(F f) {
    Bundle<F> b = build_group_algebra(f, {{0, 1}, {1, 0}}, {"e", "s"});
    b.expected["blocks"] = detail::expect(f.characteristic() == 2 ? 1 : 2, "trivial");
    return b;
}

template <class F>
Bundle<F> build_group_c3(F f) {
    return build_group_algebra(f, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {"e", "g", "g2"});
}

// S3 with composition (ab)(x) = a(b(x)); the rational bundle ships a complete
// orthogonal primitive idempotent set assembled from the sign characters and
// a split of the two-dimensional block.
template <class F>
Bundle<F> build_group_s3(F f) {
    // permutations of {0,1,2}: e, (01), (02), (12), (012), (021)
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto compose = [&](int a, int b) {
        std::array<int, 3> c{};
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (int i = 0; i < 6; ++i)
            if (perms[i] == c) return i;
        throw internal_error("permutation composition fell outside S3");
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) table[i][j] = compose(i, j);
    std::vector<std::string> labels = {"e", "s01", "s02", "s12", "r012", "r021"};
    Bundle<F> b = build_group_algebra(f, table, labels);

    std::uint32_t p = f.characteristic();
    if (p != 2 && p != 3) {
        auto sgn = [&](int i) { return i >= 1 && i <= 3 ? f.neg(f.one()) : f.one(); };
        typename F::Elem sixth = f.inv(f.from_int(6));
        Vec<F> etriv(6, f.zero()), esgn(6, f.zero());
        for (int i = 0; i < 6; ++i) {
            etriv[i] = sixth;
            esgn[i] = f.mul(sixth, sgn(i));
        }
        Vec<F> z = b.alg.unit();
        z = vec_sub(f, z, etriv);
        z = vec_sub(f, z, esgn);
        // split the 2x2 block by the transposition s01: f1 = (z + z s01)/2
        Vec<F> zs = b.alg.multiply(z, b.alg.basis_element(1));
        typename F::Elem half = f.inv(f.from_int(2));
        Vec<F> f1 = vec_scale(f, half, vec_add(f, z, zs));
        Vec<F> f2 = vec_sub(f, z, f1);
        b.idempotents = std::vector<Vec<F>>{etriv, esgn, f1, f2};
        b.expected["blocks"] = detail::expect(3, "derived");
        b.expected["cartan"] = detail::expect(nlohmann::json::array({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                                              "derived");
        detail::check_bundle(b);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Truncated polynomial smash products K[x]/(x^n) with the sign action of C2:
// s x s = -x, x^n = 0, s^2 = 1. Basis x^a s^b ordered (a, b) row-major.

template <class F>
Bundle<F> build_smash(int n, F f) {
    if (n < 2) throw input_error("smash truncation degree must be at least 2");
    if (f.characteristic() == 2)
        throw input_error("smash construction degenerates in characteristic 2");
    int dim = 2 * n;
    auto idx = [&](int a, int b) { return 2 * a + b; };
    std::vector<MultTriple<F>> triples;
    for (int a1 = 0; a1 < n; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < n; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    // (x^a1 s^b1)(x^a2 s^b2) = (-1)^(b1 a2) x^(a1+a2) s^(b1+b2)
                    if (a1 + a2 >= n) continue;
                    typename F::Elem c = (b1 * a2) % 2 ? f.neg(f.one()) : f.one();
                    triples.push_back({idx(a1, b1), idx(a2, b2), idx(a1 + a2, (b1 + b2) % 2), c});
                }
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b) {
            std::string s;
            if (a == 1) s = "x";
            else if (a > 1) s = "x" + std::to_string(a);
            if (b) s += "s";
            if (s.empty()) s = "1";
            labels.push_back(s);
        }
    Vec<F> unit(dim, f.zero());
    unit[idx(0, 0)] = f.one();
    Bundle<F> b{Algebra<F>(f, labels, unit, triples), std::nullopt, std::nullopt, {}, {}};
    Vec<F> lambda(dim, f.zero());
    lambda[idx(n - 1, 0)] = f.one();
    b.frobenius_form = lambda;
    if (n == 2) {
        b.expected["higman_image_dim"] = detail::expect(1, "reference");
        b.expected["casimir_is_zero"] = detail::expect(true, "reference");
        b.expected["tau_image_central"] = detail::expect(false, "reference");
        b.expected["cartan"] = detail::expect(nlohmann::json::array({{1, 1}, {1, 1}}), "derived");
        b.expected["blocks"] = detail::expect(1, "derived");
    }
    detail::check_bundle(b);
    return b;
}

// ---------------------------------------------------------------------------
// Restricted rational Cherednik algebra of W = Z/2 at t = 0. PBW basis
// x^a s^b y^c with a, c < 2, b < 2; relations s x = -x s, s y = -y s,
// s^2 = 1, x^2 = y^2 = 0 and the commutation y x = x y - 2c s.

template <class F>
Bundle<F> build_rrca_c2(const typename F::Elem& cparam, F f) {
    std::uint32_t p = f.characteristic();
    if (p != 0 && p <= 3) throw input_error("rrca-c2 needs characteristic 0 or p > 3");
    int dim = 8;
    auto idx = [&](int a, int b, int c) { return 4 * a + 2 * b + c; };
    using Elt = Vec<F>;
    auto mul_x = [&](const Elt& v) {
        Elt out(dim, f.zero());
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    const auto& w = v[idx(a, b, c)];
                    if (f.is_zero(w)) continue;
                    typename F::Elem sign = b ? f.neg(f.one()) : f.one();
                    if (c == 0) {
                        if (a + 1 < 2)
                            out[idx(a + 1, b, 0)] = f.add(out[idx(a + 1, b, 0)], f.mul(sign, w));
                    } else {
                        // x^a s^b y x = (-1)^b x^(a+1) s^b y - 2c x^a s^(b+1)
                        if (a + 1 < 2)
                            out[idx(a + 1, b, 1)] = f.add(out[idx(a + 1, b, 1)], f.mul(sign, w));
                        typename F::Elem t = f.neg(f.mul(f.from_int(2), cparam));
                        out[idx(a, (b + 1) % 2, 0)] =
                            f.add(out[idx(a, (b + 1) % 2, 0)], f.mul(t, w));
                    }
                }
        return out;
    };
    auto mul_s = [&](const Elt& v) {
        Elt out(dim, f.zero());
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    const auto& w = v[idx(a, b, c)];
                    if (f.is_zero(w)) continue;
                    typename F::Elem sign = c ? f.neg(f.one()) : f.one();
                    out[idx(a, (b + 1) % 2, c)] =
                        f.add(out[idx(a, (b + 1) % 2, c)], f.mul(sign, w));
                }
        return out;
    };
    auto mul_y = [&](const Elt& v) {
        Elt out(dim, f.zero());
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const auto& w = v[idx(a, b, 0)];
                if (f.is_zero(w)) continue;
                out[idx(a, b, 1)] = f.add(out[idx(a, b, 1)], w);
            }
        return out;
    };
    std::vector<MultTriple<F>> triples;
    for (int i = 0; i < dim; ++i) {
        int a2, b2, c2;
        for (int j = 0; j < dim; ++j) {
            a2 = j / 4; b2 = (j / 2) % 2; c2 = j % 2;
            Elt v(dim, f.zero());
            v[i] = f.one();
            for (int t = 0; t < a2; ++t) v = mul_x(v);
            for (int t = 0; t < b2; ++t) v = mul_s(v);
            for (int t = 0; t < c2; ++t) v = mul_y(v);
            for (int k = 0; k < dim; ++k)
                if (!f.is_zero(v[k])) triples.push_back({i, j, k, v[k]});
        }
    }
    std::vector<std::string> labels;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                std::string s;
                if (a) s += "x";
                if (b) s += "s";
                if (c) s += "y";
                if (s.empty()) s = "1";
                labels.push_back(s);
            }
    Vec<F> unit(dim, f.zero());
    unit[0] = f.one();
    Bundle<F> b{Algebra<F>(f, labels, unit, triples), std::nullopt, std::nullopt, {}, {}};

    // supplied idempotents: (1 +- s)/2, refined by xy/(2c) when c != 0
    typename F::Elem half = f.inv(f.from_int(2));
    Vec<F> eplus(dim, f.zero()), eminus(dim, f.zero());
    eplus[idx(0, 0, 0)] = half; eplus[idx(0, 1, 0)] = half;
    eminus[idx(0, 0, 0)] = half; eminus[idx(0, 1, 0)] = f.neg(half);
    if (f.is_zero(cparam)) {
        b.idempotents = std::vector<Vec<F>>{eplus, eminus};
        b.expected["blocks"] = detail::expect(1, "derived");
        b.expected["cartan"] = detail::expect(nlohmann::json::array({{2, 2}, {2, 2}}), "derived");
    } else {
        Vec<F> xy(dim, f.zero());
        xy[idx(1, 0, 1)] = f.inv(f.mul(f.from_int(2), cparam)); // xy / (2c)
        Vec<F> wplus = b.alg.multiply(xy, eplus);
        Vec<F> wminus = b.alg.multiply(xy, eminus);
        std::vector<Vec<F>> idem = {vec_sub(f, eplus, wplus), wplus,
                                    vec_scale(f, f.neg(f.one()), wminus),
                                    vec_add(f, eminus, wminus)};
        b.idempotents = idem;
        b.expected["blocks"] = detail::expect(2, "derived");
        b.expected["cartan"] = detail::expect(nlohmann::json::array({{1, 0}, {0, 1}}), "derived");
    }
    b.expected["bgg_holds"] = detail::expect(true, "derived");

    // baby Verma modules, induced from the subalgebra generated by s and y
    for (int sign = 0; sign < 2; ++sign) {
        typename F::Elem lam = sign ? f.neg(f.one()) : f.one();
        Matrix<F> X(f, 2, 2), S(f, 2, 2), Y(f, 2, 2);
        X.at(1, 0) = f.one();
        S.at(0, 0) = lam; S.at(1, 1) = f.neg(lam);
        Y.at(0, 1) = f.neg(f.mul(f.from_int(2), f.mul(cparam, lam)));
        ModuleRep<F> mod;
        mod.name = sign ? "delta_sign" : "delta_triv";
        mod.dim = 2;
        for (int i = 0; i < dim; ++i) {
            int a = i / 4, bb = (i / 2) % 2, c = i % 2;
            Matrix<F> m = Matrix<F>::identity(f, 2);
            for (int t = 0; t < a; ++t) m = m.mul(X);
            for (int t = 0; t < bb; ++t) m = m.mul(S);
            for (int t = 0; t < c; ++t) m = m.mul(Y);
            mod.action.push_back(m);
        }
        b.modules.push_back({mod.name, mod});
    }
    detail::check_bundle(b);
    return b;
}

template <class F>
std::vector<ModuleRep<F>> baby_verma_modules(const Bundle<F>& rrca_bundle) {
    std::vector<ModuleRep<F>> out;
    for (const auto& [name, mod] : rrca_bundle.modules)
        if (name.rfind("delta_", 0) == 0) out.push_back(mod);
    if (out.size() != 2) throw input_error("bundle does not carry the two baby Verma modules");
    return out;
}

// ---------------------------------------------------------------------------
// Restricted enveloping algebra of sl2 over F_p, zero character. PBW basis
// e^a h^b f^c with a, b, c < p; [h,e] = 2e, [h,f] = -2f, [e,f] = h and the
// restricted relations e^p = f^p = 0, h^p = h.

inline Bundle<PrimeField> build_usl2(std::uint32_t p) {
    if (p < 3 || !is_prime_u32(p)) throw input_error("usl2 needs an odd prime p >= 3");
    PrimeField f(p);
    int ip = static_cast<int>(p);
    int n = ip * ip * ip;
    auto idx = [&](int a, int b, int c) { return (a * ip + b) * ip + c; };
    using Elt = Vec<PrimeField>;
    // h-exponent arithmetic uses h^p = h
    auto add_h_reduced = [&](Elt& out, int a, int b, int c, std::uint64_t coef) {
        if (b == ip) b = 1;
        out[idx(a, b, c)] = f.add(out[idx(a, b, c)], coef);
    };
    auto mul_f = [&](const Elt& v) {
        Elt out(n, 0);
        for (int a = 0; a < ip; ++a)
            for (int b = 0; b < ip; ++b)
                for (int c = 0; c + 1 < ip; ++c) {
                    auto w = v[idx(a, b, c)];
                    if (w) out[idx(a, b, c + 1)] = f.add(out[idx(a, b, c + 1)], w);
                }
        return out;
    };
    auto mul_h = [&](const Elt& v) {
        // e^a h^b f^c h = e^a h^(b+1) f^c + 2c e^a h^b f^c
        Elt out(n, 0);
        for (int a = 0; a < ip; ++a)
            for (int b = 0; b < ip; ++b)
                for (int c = 0; c < ip; ++c) {
                    auto w = v[idx(a, b, c)];
                    if (!w) continue;
                    add_h_reduced(out, a, b + 1, c, w);
                    if (c) out[idx(a, b, c)] = f.add(out[idx(a, b, c)], f.mul(f.from_int(2 * c), w));
                }
        return out;
    };
    // Pascal rows mod p for the (h+2)^b expansion
    std::vector<std::vector<std::uint64_t>> binom(ip);
    for (int b = 0; b < ip; ++b) {
        binom[b].assign(b + 1, 1);
        for (int k = 1; k < b; ++k)
            binom[b][k] = f.add(binom[b - 1][k - 1], binom[b - 1][k]);
    }
    auto mul_e = [&](const Elt& v) {
        // e^a h^b f^c e = e^(a+1) (h+2)^b f^c - c e^a h^b (h + c - 1) f^(c-1)
        Elt out(n, 0);
        for (int a = 0; a < ip; ++a)
            for (int b = 0; b < ip; ++b)
                for (int c = 0; c < ip; ++c) {
                    auto w = v[idx(a, b, c)];
                    if (!w) continue;
                    if (a + 1 < ip) {
                        std::uint64_t pw = 1;
                        for (int k = b; k >= 0; --k) {
                            std::uint64_t coef = f.mul(binom[b][k], pw);
                            out[idx(a + 1, k, c)] =
                                f.add(out[idx(a + 1, k, c)], f.mul(coef, w));
                            pw = f.mul(pw, 2);
                        }
                    }
                    if (c) {
                        std::uint64_t mc = f.neg(f.from_int(c));
                        add_h_reduced(out, a, b + 1, c - 1, f.mul(mc, w));
                        std::uint64_t cc = f.mul(mc, f.from_int(c - 1));
                        out[idx(a, b, c - 1)] = f.add(out[idx(a, b, c - 1)], f.mul(cc, w));
                    }
                }
        return out;
    };
    std::vector<MultTriple<PrimeField>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a2 = j / (ip * ip), b2 = (j / ip) % ip, c2 = j % ip;
            Elt v(n, 0);
            v[i] = 1;
            for (int t = 0; t < a2; ++t) v = mul_e(v);
            for (int t = 0; t < b2; ++t) v = mul_h(v);
            for (int t = 0; t < c2; ++t) v = mul_f(v);
            for (int k = 0; k < n; ++k)
                if (v[k]) triples.push_back({i, j, k, v[k]});
        }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        int a = i / (ip * ip), b = (i / ip) % ip, c = i % ip;
        std::string s;
        auto app = [&](const char* g, int e) {
            if (!e) return;
            s += g;
            if (e > 1) s += std::to_string(e);
        };
        app("e", a); app("h", b); app("f", c);
        if (s.empty()) s = "1";
        labels.push_back(s);
    }
    Vec<PrimeField> unit(n, 0);
    unit[0] = 1;
    Bundle<PrimeField> b{Algebra<PrimeField>(f, labels, unit, triples),
                         std::nullopt, std::nullopt, {}, {}};
    Vec<PrimeField> lambda(n, 0);
    lambda[n - 1] = 1; // coefficient of the top monomial e^(p-1) h^(p-1) f^(p-1)
    b.frobenius_form = lambda;
    int expected_blocks = static_cast<int>((p + 1) / 2);
    b.expected["blocks"] = detail::expect(expected_blocks, "derived");
    b.expected["higman_image_dim"] = detail::expect(expected_blocks, "derived");
    b.expected["all_block_ranks_one"] = detail::expect(true, "derived");
    detail::check_bundle(b);
    return b;
}

// ---------------------------------------------------------------------------
// Twisted truncated constructions K[x]/(x^m) # C_k with g x g^-1 = zeta x.
// Frobenius with lambda = coefficient of x^(m-1), split whenever x^k - 1
// splits in the ground field. The workhorse behind randomized suites.

template <class F>
Bundle<F> build_twisted_truncated(int m, int k, long long zeta_int, F f) {
    if (m < 1 || k < 1) throw input_error("twisted construction needs m, k >= 1");
    typename F::Elem zeta = f.from_int(zeta_int);
    typename F::Elem zk = f.one();
    for (int t = 0; t < k; ++t) zk = f.mul(zk, zeta);
    if (!f.eq(zk, f.one()))
        throw input_error("twist scalar must satisfy zeta^k = 1");
    int dim = m * k;
    auto idx = [&](int a, int bb) { return a * k + bb; };
    std::vector<MultTriple<F>> triples;
    for (int a1 = 0; a1 < m; ++a1)
        for (int b1 = 0; b1 < k; ++b1)
            for (int a2 = 0; a2 < m; ++a2)
                for (int b2 = 0; b2 < k; ++b2) {
                    if (a1 + a2 >= m) continue;
                    // (x^a1 g^b1)(x^a2 g^b2) = zeta^(b1 a2) x^(a1+a2) g^(b1+b2)
                    typename F::Elem c = f.one();
                    for (int t = 0; t < b1 * a2; ++t) c = f.mul(c, zeta);
                    triples.push_back({idx(a1, b1), idx(a2, b2),
                                       idx(a1 + a2, (b1 + b2) % k), c});
                }
    std::vector<std::string> labels;
    for (int a = 0; a < m; ++a)
        for (int bb = 0; bb < k; ++bb) {
            std::string s;
            if (a == 1) s = "x";
            else if (a > 1) s = "x" + std::to_string(a);
            if (bb == 1) s += "g";
            else if (bb > 1) s += "g" + std::to_string(bb);
            if (s.empty()) s = "1";
            labels.push_back(s);
        }
    Vec<F> unit(dim, f.zero());
    unit[0] = f.one();
    Bundle<F> b{Algebra<F>(f, labels, unit, triples), std::nullopt, std::nullopt, {}, {}};
    Vec<F> lambda(dim, f.zero());
    lambda[idx(m - 1, 0)] = f.one();
    b.frobenius_form = lambda;
    detail::check_bundle(b);
    return b;
}

// Direct product of two bundles (block-diagonal structure constants, summed
// units, concatenated Frobenius forms).
template <class F>
Bundle<F> product_bundle(const Bundle<F>& b1, const Bundle<F>& b2) {
    const F& f = b1.alg.field();
    int n1 = b1.alg.dim(), n2 = b2.alg.dim();
    std::vector<MultTriple<F>> triples;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            for (const auto& [k, c] : b1.alg.row(i, j)) triples.push_back({i, j, k, c});
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j)
            for (const auto& [k, c] : b2.alg.row(i, j))
                triples.push_back({n1 + i, n1 + j, n1 + k, c});
    std::vector<std::string> labels;
    for (const auto& l : b1.alg.labels()) labels.push_back("a." + l);
    for (const auto& l : b2.alg.labels()) labels.push_back("b." + l);
    Vec<F> unit(n1 + n2, f.zero());
    for (int i = 0; i < n1; ++i) unit[i] = b1.alg.unit()[i];
    for (int i = 0; i < n2; ++i) unit[n1 + i] = b2.alg.unit()[i];
    Bundle<F> out{Algebra<F>(f, labels, unit, triples), std::nullopt, std::nullopt, {}, {}};
    if (b1.frobenius_form && b2.frobenius_form) {
        Vec<F> lambda(n1 + n2, f.zero());
        for (int i = 0; i < n1; ++i) lambda[i] = (*b1.frobenius_form)[i];
        for (int i = 0; i < n2; ++i) lambda[n1 + i] = (*b2.frobenius_form)[i];
        out.frobenius_form = lambda;
    }
    detail::check_bundle(out);
    return out;
}

} // namespace fdalg

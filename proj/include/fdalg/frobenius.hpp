#pragma once

#include <optional>
#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/prng.hpp"

namespace fdalg {

// A Frobenius structure on an algebra: functional lambda with invertible
// Gram matrix gram[i][j] = lambda(e_i e_j), and the dual bases it induces.
// The left dual basis is pinned to the presentation basis (g_i = e_i); the
// right duals satisfy lambda(g_i h_j) = delta_ij.
template <class F>
struct FrobeniusStructure {
    Vec<F> lambda;
    Matrix<F> gram;
    Matrix<F> gram_inv;
    std::vector<Vec<F>> dual_right; // h_j = sum_k gram_inv[k][j] e_k
};

template <class F>
Matrix<F> gram_matrix(const Algebra<F>& alg, const Vec<F>& lambda) {
    const F& f = alg.field();
    int n = alg.dim();
    if (static_cast<int>(lambda.size()) != n)
        throw input_error("gram_matrix: functional has wrong length");
    Matrix<F> g(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            typename F::Elem acc = f.zero();
            for (const auto& [k, c] : alg.row(i, j)) acc = f.add(acc, f.mul(c, lambda[k]));
            g.at(i, j) = acc;
        }
    return g;
}

// Builds dual bases after checking the Gram matrix is invertible; the duality
// pairing is re-verified exactly before returning.
template <class F>
FrobeniusStructure<F> dual_bases(const Algebra<F>& alg, const Vec<F>& lambda) {
    const F& f = alg.field();
    int n = alg.dim();
    Matrix<F> g = gram_matrix(alg, lambda);
    auto gi = inverse(g);
    if (!gi) throw input_error("functional is degenerate: Gram matrix is singular");
    FrobeniusStructure<F> out{lambda, std::move(g), std::move(*gi), {}};
    out.dual_right.reserve(n);
    for (int j = 0; j < n; ++j) out.dual_right.push_back(out.gram_inv.col(j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<F> prod = alg.multiply_basis_left(i, out.dual_right[j]);
            typename F::Elem val = f.zero();
            for (int k = 0; k < n; ++k) val = f.add(val, f.mul(prod[k], lambda[k]));
            bool want_one = i == j;
            if (want_one ? !f.eq(val, f.one()) : !f.is_zero(val))
                throw internal_error("dual basis pairing failed verification");
        }
    return out;
}

struct FrobeniusSearchOutcome {
    bool found = false;
    int trials_used = 0;
};

// Randomized search for a functional with invertible Gram. Coefficients are
// drawn from a splitmix64 stream as integers in [-B, B] mapped into the
// field, with B = 2 + trial so later trials range wider. A not-found outcome
// is inconclusive: over a small prime field the search can miss forms that
// exist, and for non-Frobenius algebras no form exists at all.
template <class F>
std::optional<Vec<F>> find_frobenius_form(const Algebra<F>& alg, std::uint64_t seed, int trials,
                                          FrobeniusSearchOutcome* outcome = nullptr) {
    if (trials < 1) throw input_error("find_frobenius_form: trials must be >= 1");
    const F& f = alg.field();
    int n = alg.dim();
    SplitMix64 rng(seed);
    for (int t = 1; t <= trials; ++t) {
        long long bound = 2 + t;
        Vec<F> lambda(n, f.zero());
        for (int i = 0; i < n; ++i) lambda[i] = f.from_int(rng.centered(bound));
        Matrix<F> g = gram_matrix(alg, lambda);
        if (rank(g) == n) {
            if (outcome) *outcome = {true, t};
            return lambda;
        }
    }
    if (outcome) *outcome = {false, trials};
    return std::nullopt;
}

// Checks that the matrix alpha (acting on coefficient vectors) is an algebra
// automorphism: invertible, fixes the unit, and L(alpha(e_i)) = A L_i A^-1.
template <class F>
bool is_algebra_automorphism(const Algebra<F>& alg, const Matrix<F>& alpha) {
    const F& f = alg.field();
    int n = alg.dim();
    if (alpha.rows() != n || alpha.cols() != n) return false;
    auto ainv = inverse(alpha);
    if (!ainv) return false;
    if (!vec_eq(f, alpha.apply(alg.unit()), alg.unit())) return false;
    for (int i = 0; i < n; ++i) {
        Vec<F> img = alpha.col(i); // alpha(e_i)
        Matrix<F> lhs = alg.left_matrix(img);
        Matrix<F> rhs = alpha.mul(alg.left_matrix(alg.basis_element(i))).mul(*ainv);
        if (lhs != rhs) return false;
    }
    return true;
}

template <class F>
struct NakayamaData {
    Matrix<F> automorphism;  // action on coefficients
    std::optional<int> order; // least k <= 2*dim with alpha^k = id, if found
};

// The automorphism alpha' with lambda(ab) = lambda(b alpha'(a)). On basis
// vectors the defining system reads G alpha'(e_i) = (row i of G), so the
// matrix is G^-1 G^T; the automorphism property is verified before returning.
template <class F>
NakayamaData<F> nakayama_automorphism(const Algebra<F>& alg, const FrobeniusStructure<F>& frob) {
    int n = alg.dim();
    Matrix<F> alpha = frob.gram_inv.mul(frob.gram.transpose());
    if (!is_algebra_automorphism(alg, alpha))
        throw internal_error("Nakayama solution is not an algebra automorphism; "
                             "the Frobenius structure is inconsistent");
    NakayamaData<F> out{std::move(alpha), std::nullopt};
    Matrix<F> id = Matrix<F>::identity(alg.field(), n);
    Matrix<F> pw = out.automorphism;
    for (int k = 1; k <= 2 * n; ++k) {
        if (pw == id) { out.order = k; break; }
        pw = pw.mul(out.automorphism);
    }
    return out;
}

// The alpha-twisted centre {h : h a = alpha(a) h for all a}; with the
// identity automorphism this is the ordinary centre.
template <class F>
Subspace<F> twisted_centre(const Algebra<F>& alg, const Matrix<F>& alpha) {
    if (!is_algebra_automorphism(alg, alpha))
        throw input_error("twisted_centre: matrix is not an algebra automorphism");
    const F& f = alg.field();
    int n = alg.dim();
    Matrix<F> sys(f, n * n, n);
    for (int i = 0; i < n; ++i) {
        Matrix<F> d = alg.right_matrix(alg.basis_element(i)).sub(alg.left_matrix(alpha.col(i)));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) sys.at(i * n + r, c) = d.at(r, c);
    }
    return nullspace(sys);
}

template <class F>
struct CentralMap {
    Matrix<F> map;      // action on coefficient vectors
    Subspace<F> image;
};

// x -> sum_j g_j x h_j as a matrix on the basis: sum_j L(e_j) R(h_j).
template <class F>
CentralMap<F> higman_map(const Algebra<F>& alg, const FrobeniusStructure<F>& frob) {
    const F& f = alg.field();
    int n = alg.dim();
    Matrix<F> m(f, n, n);
    for (int j = 0; j < n; ++j) {
        Matrix<F> term = alg.left_matrix(alg.basis_element(j)).mul(alg.right_matrix(frob.dual_right[j]));
        m = m.add(term);
    }
    Subspace<F> img = Subspace<F>::column_space(m);
    return {std::move(m), std::move(img)};
}

// a -> sum_j h_j a g_j as a matrix on the basis: sum_j L(h_j) R(e_j).
template <class F>
CentralMap<F> casimir_map(const Algebra<F>& alg, const FrobeniusStructure<F>& frob) {
    const F& f = alg.field();
    int n = alg.dim();
    Matrix<F> m(f, n, n);
    for (int j = 0; j < n; ++j) {
        Matrix<F> term = alg.left_matrix(frob.dual_right[j]).mul(alg.right_matrix(alg.basis_element(j)));
        m = m.add(term);
    }
    Subspace<F> img = Subspace<F>::column_space(m);
    return {std::move(m), std::move(img)};
}

} // namespace fdalg

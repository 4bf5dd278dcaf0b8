#pragma once

// Shared helpers for the test suites: small hand-built algebras, seeded
// random constructions, and basis-change machinery.

#include "fdalg/io.hpp"
#include "fdalg/report.hpp"

namespace fdalg::testsupport {

// K[x]/(x^2): basis 1, x.
template <class F>
Algebra<F> dual_numbers(F f) {
    std::vector<MultTriple<F>> t = {{0, 0, 0, f.one()},
                                    {0, 1, 1, f.one()},
                                    {1, 0, 1, f.one()}};
    return Algebra<F>(f, {"1", "x"}, {f.one(), f.zero()}, t);
}

// K[x]/(x^3): basis 1, x, x2.
template <class F>
Algebra<F> truncated_cubic(F f) {
    std::vector<MultTriple<F>> t;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a + b < 3) t.push_back({a, b, a + b, f.one()});
    return Algebra<F>(f, {"1", "x", "x2"}, {f.one(), f.zero(), f.zero()}, t);
}

// Upper triangular 2x2 matrices: basis E11, E12, E22. Not Frobenius.
template <class F>
Algebra<F> upper_triangular(F f) {
    std::vector<MultTriple<F>> t = {{0, 0, 0, f.one()},
                                    {0, 1, 1, f.one()},
                                    {1, 2, 1, f.one()},
                                    {2, 2, 2, f.one()}};
    return Algebra<F>(f, {"E11", "E12", "E22"},
                      {f.one(), f.zero(), f.one()}, t);
}

template <class F>
Matrix<F> random_matrix(F f, SplitMix64& rng, int rows, int cols, long long bound) {
    Matrix<F> m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = f.from_int(rng.centered(bound));
    return m;
}

template <class F>
Matrix<F> random_invertible(F f, SplitMix64& rng, int n) {
    for (int tries = 0; tries < 200; ++tries) {
        Matrix<F> m = random_matrix(f, rng, n, n, 2);
        if (rank(m) == n) return m;
    }
    throw internal_error("could not draw an invertible matrix");
}

// The presentation of the same algebra on the basis f_j = sum_k P[k][j] e_k.
template <class F>
Algebra<F> change_basis(const Algebra<F>& alg, const Matrix<F>& p) {
    const F& f = alg.field();
    int n = alg.dim();
    auto pinv = inverse(p);
    if (!pinv) throw input_error("basis change matrix is singular");
    std::vector<MultTriple<F>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<F> prod = alg.multiply(p.col(i), p.col(j));
            Vec<F> coords = pinv->apply(prod);
            for (int k = 0; k < n; ++k)
                if (!f.is_zero(coords[k])) triples.push_back({i, j, k, coords[k]});
        }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    return Algebra<F>(f, labels, pinv->apply(alg.unit()), triples);
}

// Pull a functional back through the basis change: lambda'(f_j) = lambda(P f_j).
template <class F>
Vec<F> change_basis_functional(const F& f, const Vec<F>& lambda, const Matrix<F>& p) {
    int n = static_cast<int>(lambda.size());
    Vec<F> out(n, f.zero());
    for (int j = 0; j < n; ++j) {
        typename F::Elem acc = f.zero();
        for (int k = 0; k < n; ++k) acc = f.add(acc, f.mul(p.at(k, j), lambda[k]));
        out[j] = acc;
    }
    return out;
}

// Seeded random split Frobenius algebra over F5: a twisted truncated factor,
// optionally times a second one, total dimension <= 12.
inline Bundle<PrimeField> random_twisted_f5(std::uint64_t seed) {
    PrimeField f5(5);
    SplitMix64 rng(seed);
    auto draw_factor = [&](int max_dim) {
        const int ks[] = {1, 2, 4};
        while (true) {
            int k = ks[rng.below(3)];
            int m = 1 + static_cast<int>(rng.below(6));
            if (m * k > max_dim) continue;
            long long zeta;
            if (k == 1) zeta = 1;
            else if (k == 2) zeta = (rng.below(2) == 0) ? 4 : 1;
            else zeta = (rng.below(2) == 0) ? 2 : 3;
            return build_twisted_truncated(m, k, zeta, f5);
        }
    };
    Bundle<PrimeField> b = draw_factor(12);
    if (rng.below(2) == 0 && b.alg.dim() <= 10) {
        Bundle<PrimeField> b2 = draw_factor(12 - b.alg.dim());
        b = product_bundle(b, b2);
    }
    return b;
}

} // namespace fdalg::testsupport

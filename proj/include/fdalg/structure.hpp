#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fdalg/algebra.hpp"
#include "fdalg/poly.hpp"
#include "fdalg/prng.hpp"

namespace fdalg {

namespace detail {

// Trace of L(e_k) for every k, read off the sparse rows.
template <class F>
Vec<F> basis_traces(const Algebra<F>& alg) {
    const F& f = alg.field();
    Vec<F> tr(alg.dim(), f.zero());
    for (int k = 0; k < alg.dim(); ++k) {
        typename F::Elem acc = f.zero();
        for (int j = 0; j < alg.dim(); ++j)
            for (const auto& [t, c] : alg.row(k, j))
                if (t == j) acc = f.add(acc, c);
        tr[k] = acc;
    }
    return tr;
}

// Kernel of the regular trace form tr(L(e_i e_j)).
template <class F>
Subspace<F> trace_form_kernel(const Algebra<F>& alg) {
    const F& f = alg.field();
    int n = alg.dim();
    Vec<F> tr = basis_traces(alg);
    Matrix<F> d(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            typename F::Elem acc = f.zero();
            for (const auto& [k, c] : alg.row(i, j)) acc = f.add(acc, f.mul(c, tr[k]));
            d.at(i, j) = acc;
        }
    return nullspace(d);
}

// trace of (lift of m)^e modulo q, entries lifted to [0, p) as integers.
inline std::uint64_t lifted_power_trace(const std::vector<std::uint64_t>& m, int n,
                                        std::uint64_t e, std::uint64_t q) {
    auto matmul = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        std::vector<std::uint64_t> out(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                std::uint64_t x = a[static_cast<std::size_t>(i) * n + k];
                if (!x) continue;
                const std::uint64_t* brow = b.data() + static_cast<std::size_t>(k) * n;
                std::uint64_t* orow = out.data() + static_cast<std::size_t>(i) * n;
                for (int j = 0; j < n; ++j) orow[j] = (orow[j] + x * brow[j]) % q;
            }
        return out;
    };
    std::vector<std::uint64_t> base = m, acc(static_cast<std::size_t>(n) * n, 0);
    for (auto& x : base) x %= q;
    for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i) * n + i] = 1 % q;
    while (e) {
        if (e & 1) acc = matmul(acc, base);
        base = matmul(base, base);
        e >>= 1;
    }
    std::uint64_t t = 0;
    for (int i = 0; i < n; ++i) t = (t + acc[static_cast<std::size_t>(i) * n + i]) % q;
    return t;
}

// Radical span over a prime field: the chain of p-power-twisted trace forms
// evaluated on integral lifts of the left regular representation. Level 0 is
// the plain trace form; level i refines the previous kernel by the form
// (x, y) -> tr(lift(L_xy)^(p^i)) / p^i  (mod p),
// which is linear on products of level-i elements because all lower-level
// traces already vanish there. Divisibility is asserted, not assumed.
template <class F>
Subspace<F> radical_span_charp(const Algebra<F>& alg) {
    static_assert(F::is_prime_field);
    const F& f = alg.field();
    const std::uint64_t p = f.modulus();
    const int n = alg.dim();

    Subspace<F> cur = trace_form_kernel(alg);
    for (std::uint64_t pi = p; pi <= static_cast<std::uint64_t>(n); pi *= p) {
        int m = cur.dim();
        if (m == 0) break;
        const std::uint64_t q = pi * p; // p^(i+1)
        // accumulation bound n*(q-1)^2 must fit in 64 bits
        if (q > (1ULL << 20) || static_cast<std::uint64_t>(n) > (1ULL << 20))
            throw input_error("dimension too large for the characteristic-p radical chain");

        std::vector<Vec<F>> basis;
        for (int a = 0; a < m; ++a) basis.push_back(cur.basis_vector(a));
        std::vector<Matrix<F>> lmat;
        for (int a = 0; a < m; ++a) lmat.push_back(alg.left_matrix(basis[a]));

        DependenceTracker<F> tracker(f, n);
        std::vector<std::uint64_t> gval; // form value per accepted product
        std::vector<Vec<F>> coords(static_cast<std::size_t>(m) * m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                Vec<F> u = lmat[a].apply(basis[b]); // basis[a] * basis[b]
                auto dep = tracker.offer(u);
                if (dep) {
                    coords[static_cast<std::size_t>(a) * m + b] = std::move(*dep);
                } else {
                    Matrix<F> lu = alg.left_matrix(u);
                    std::vector<std::uint64_t> lift(static_cast<std::size_t>(n) * n);
                    for (int r = 0; r < n; ++r)
                        for (int c = 0; c < n; ++c)
                            lift[static_cast<std::size_t>(r) * n + c] = lu.at(r, c);
                    std::uint64_t t = lifted_power_trace(lift, n, pi, q);
                    if (t % pi != 0)
                        throw internal_error("radical chain: twisted trace not divisible by p^i");
                    gval.push_back(t / pi % p);
                    Vec<F> self(tracker.size(), f.zero());
                    self[tracker.size() - 1] = f.one();
                    coords[static_cast<std::size_t>(a) * m + b] = std::move(self);
                }
            }

        // rows indexed by y = basis[b], unknowns the coefficients over basis[a]
        Matrix<F> form(f, m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                const Vec<F>& co = coords[static_cast<std::size_t>(a) * m + b];
                std::uint64_t acc = 0;
                for (std::size_t t = 0; t < co.size(); ++t)
                    acc = (acc + co[t] * gval[t]) % p;
                form.at(b, a) = acc;
            }
        Subspace<F> ker = nullspace(form);
        std::vector<Vec<F>> next_rows;
        for (int r = 0; r < ker.dim(); ++r) {
            Vec<F> coeff = ker.basis_vector(r);
            Vec<F> v(n, f.zero());
            for (int a = 0; a < m; ++a)
                if (!f.is_zero(coeff[a]))
                    for (int c = 0; c < n; ++c)
                        v[c] = f.add(v[c], f.mul(coeff[a], basis[a][c]));
            next_rows.push_back(std::move(v));
        }
        cur = Subspace<F>::from_rows(f, n, next_rows);
    }
    return cur;
}

template <class F>
Subspace<F> radical_span(const Algebra<F>& alg) {
    if constexpr (F::is_prime_field) {
        return radical_span_charp(alg);
    } else {
        return trace_form_kernel(alg);
    }
}

} // namespace detail

template <class F>
bool is_two_sided_ideal(const Algebra<F>& alg, const Subspace<F>& sub) {
    const F& f = alg.field();
    int n = alg.dim(), d = sub.dim();
    std::vector<Vec<F>> rows;
    rows.reserve(static_cast<std::size_t>(2 * n) * d + d);
    for (int b = 0; b < d; ++b) rows.push_back(sub.basis_vector(b));
    for (int b = 0; b < d; ++b) {
        Vec<F> r = sub.basis_vector(b);
        for (int i = 0; i < n; ++i) {
            rows.push_back(alg.multiply_basis_left(i, r));
            rows.push_back(alg.multiply_basis_right(r, i));
        }
    }
    Subspace<F> closure = Subspace<F>::from_rows(f, n, rows);
    return closure.dim() == d;
}

template <class F>
struct QuotientData {
    Algebra<F> alg;       // quotient presentation on the complement coordinates
    Matrix<F> projection; // q x n, an algebra map with kernel the ideal
    Matrix<F> section;    // n x q, basis-vector representatives; projection*section = id
};

// Quotient by a verified two-sided ideal. The complement is the set of
// non-pivot coordinates of the ideal's RREF basis, so representatives and
// coordinates are canonical.
template <class F>
QuotientData<F> quotient_algebra(const Algebra<F>& alg, const Subspace<F>& ideal) {
    const F& f = alg.field();
    int n = alg.dim();
    if (ideal.ambient() != n) throw input_error("quotient: ideal lives in the wrong space");
    if (!is_two_sided_ideal(alg, ideal)) throw input_error("quotient: span is not a two-sided ideal");
    if (ideal.contains(alg.unit()))
        throw input_error("quotient: ideal contains the unit, quotient would be zero");

    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < ideal.dim(); ++r) {
        for (int c = 0; c < n; ++c)
            if (!f.is_zero(ideal.basis().at(r, c))) { is_pivot[c] = true; break; }
    }
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    int q = static_cast<int>(free_cols.size());

    Matrix<F> projection(f, q, n);
    for (int j = 0; j < n; ++j) {
        Vec<F> red = ideal.reduce(alg.basis_element(j));
        for (int r = 0; r < q; ++r) projection.at(r, j) = red[free_cols[r]];
    }
    Matrix<F> section(f, n, q);
    for (int r = 0; r < q; ++r) section.at(free_cols[r], r) = f.one();

    std::vector<std::string> labels;
    for (int c : free_cols) labels.push_back(alg.labels()[c]);
    std::vector<MultTriple<F>> triples;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            Vec<F> prod = alg.zero();
            for (const auto& [k, c] : alg.row(free_cols[a], free_cols[b])) prod[k] = c;
            Vec<F> pq = projection.apply(prod);
            for (int k = 0; k < q; ++k)
                if (!f.is_zero(pq[k])) triples.push_back({a, b, k, pq[k]});
        }
    Algebra<F> quot(f, std::move(labels), projection.apply(alg.unit()), triples);

    // projection must be multiplicative on all basis pairs
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<F> prod = alg.zero();
            for (const auto& [k, c] : alg.row(i, j)) prod[k] = c;
            Vec<F> lhs = projection.apply(prod);
            Vec<F> rhs = quot.multiply(projection.col(i), projection.col(j));
            if (!vec_eq(f, lhs, rhs))
                throw internal_error("quotient projection failed the algebra-map check");
        }
    return {std::move(quot), std::move(projection), std::move(section)};
}

template <class F>
struct RadicalData {
    Subspace<F> radical;
    int nilpotency_index = 1; // least m with J^m = 0
    QuotientData<F> quotient;
};

// Jacobson radical with a post-verification certificate: the span must be a
// two-sided nilpotent ideal and the chain must return zero on the quotient.
// Any failure is an internal error, never a silently wrong answer.
template <class F>
RadicalData<F> radical(const Algebra<F>& alg) {
    const F& f = alg.field();
    int n = alg.dim();
    Subspace<F> j = detail::radical_span(alg);
    if (j.contains(alg.unit()))
        throw internal_error("radical certificate: span contains the unit");
    if (!is_two_sided_ideal(alg, j))
        throw internal_error("radical certificate: span is not an ideal");

    // nilpotency: J^(k+1) = span{ r * b : r in J^k, b in J }
    int m = 1;
    if (j.dim() > 0) {
        std::vector<Matrix<F>> rmats;
        for (int b = 0; b < j.dim(); ++b) rmats.push_back(alg.right_matrix(j.basis_vector(b)));
        Subspace<F> power = j;
        m = 1;
        while (power.dim() > 0) {
            ++m;
            if (m > n + 1) throw internal_error("radical certificate: span is not nilpotent");
            std::vector<Vec<F>> rows;
            for (int a = 0; a < power.dim(); ++a) {
                Vec<F> v = power.basis_vector(a);
                for (auto& rm : rmats) rows.push_back(rm.apply(v));
            }
            power = Subspace<F>::from_rows(f, n, rows);
        }
    }
    QuotientData<F> quot = quotient_algebra(alg, j);
    if (detail::radical_span(quot.alg).dim() != 0)
        throw internal_error("radical certificate: quotient still has a radical");
    return {std::move(j), m, std::move(quot)};
}

// Newton lift e <- 3e^2 - 2e^3 of an idempotent of the quotient, starting
// from its canonical representative. Terminates in O(log nilpotency) steps.
template <class F>
Vec<F> lift_idempotent(const Algebra<F>& alg, const Vec<F>& ebar, const RadicalData<F>& rad) {
    const F& f = alg.field();
    if (!rad.quotient.alg.is_idempotent(ebar))
        throw input_error("lift_idempotent: input is not idempotent in the quotient");
    Vec<F> e = rad.quotient.section.apply(ebar);
    int iters = 0;
    while (!alg.is_idempotent(e)) {
        if (++iters > 40) throw internal_error("idempotent lift did not converge");
        Vec<F> e2 = alg.multiply(e, e);
        Vec<F> e3 = alg.multiply(e2, e);
        Vec<F> next(alg.dim(), f.zero());
        for (int i = 0; i < alg.dim(); ++i)
            next[i] = f.sub(f.mul(f.from_int(3), e2[i]), f.mul(f.from_int(2), e3[i]));
        e = std::move(next);
    }
    if (!vec_eq(f, rad.quotient.projection.apply(e), ebar))
        throw internal_error("idempotent lift drifted off its residue class");
    return e;
}

namespace detail {

// Splits one idempotent piece by the element u of its corner via the CRT
// idempotents of the relative minimal polynomial of u. Returns the new
// pieces (possibly just {eps} when u gives nothing) plus the degree of the
// rootless cofactor of that minimal polynomial.
template <class F>
struct RefineOutcome {
    std::vector<Vec<F>> pieces;
    int rootless_deg = 0;
    bool progressed = false;
    bool repeated_root = false;
};

template <class F>
RefineOutcome<F> refine_piece(const Algebra<F>& alg, const Vec<F>& eps, const Vec<F>& u) {
    const F& f = alg.field();
    int n = alg.dim();
    RefineOutcome<F> out;
    // relative powers u^k with u^0 = eps
    std::vector<Vec<F>> powers{eps};
    DependenceTracker<F> tracker(f, n);
    tracker.offer(eps);
    Poly<F> minpoly = Poly<F>::zero(f);
    for (int k = 1; k <= n + 1; ++k) {
        Vec<F> next = alg.multiply(u, powers.back());
        if (auto dep = tracker.offer(next)) {
            std::vector<typename F::Elem> coeffs(k + 1, f.zero());
            for (int i = 0; i < k; ++i) coeffs[i] = f.neg((*dep)[i]);
            coeffs[k] = f.one();
            minpoly = Poly<F>(f, std::move(coeffs));
            break;
        }
        powers.push_back(std::move(next));
    }
    if (minpoly.is_zero()) throw internal_error("relative minimal polynomial not found");
    auto eval_rel = [&](const Poly<F>& p) {
        Vec<F> v(n, f.zero());
        for (int k = 0; k <= p.degree(); ++k) {
            if (f.is_zero(p.coeff(k))) continue;
            for (int c = 0; c < n; ++c)
                v[c] = f.add(v[c], f.mul(p.coeff(k), powers[k][c]));
        }
        return v;
    };

    auto roots = roots_in_field(minpoly);
    int root_deg = 0;
    for (const auto& [r, mult] : roots) {
        root_deg += mult;
        if (mult > 1) out.repeated_root = true;
    }
    out.rootless_deg = minpoly.degree() - root_deg;
    bool splits = roots.size() >= 2 || (!roots.empty() && out.rootless_deg > 0);
    if (!splits) {
        out.pieces = {eps};
        return out;
    }
    Vec<F> remainder = eps;
    for (const auto& [r, mult] : roots) {
        Poly<F> factor = Poly<F>::constant(f, f.one());
        Poly<F> lin = Poly<F>::x_minus(f, r);
        for (int t = 0; t < mult; ++t) factor = factor.mul(lin);
        auto [cof, rem] = minpoly.divmod(factor);
        if (!rem.is_zero()) throw internal_error("root factor does not divide the minimal polynomial");
        auto [g, a, b] = poly_xgcd(factor, cof);
        if (g.degree() != 0) throw internal_error("minimal polynomial factors are not coprime");
        // idempotent congruent to 1 mod factor, 0 mod cofactor
        Poly<F> idem_poly = b.mul(cof).divmod(minpoly).second;
        Vec<F> piece = eval_rel(idem_poly);
        if (!alg.is_idempotent(piece)) throw internal_error("spectral projector is not idempotent");
        out.pieces.push_back(piece);
        remainder = vec_sub(f, remainder, piece);
    }
    if (!vec_is_zero(f, remainder)) {
        if (!alg.is_idempotent(remainder))
            throw internal_error("split remainder is not idempotent");
        out.pieces.push_back(remainder);
    }
    for (std::size_t a = 0; a < out.pieces.size(); ++a)
        for (std::size_t b = a + 1; b < out.pieces.size(); ++b)
            if (!vec_is_zero(f, alg.multiply(out.pieces[a], out.pieces[b])) ||
                !vec_is_zero(f, alg.multiply(out.pieces[b], out.pieces[a])))
                throw internal_error("split pieces are not orthogonal");
    out.progressed = out.pieces.size() >= 2;
    return out;
}

// Corner basis of eps * alg * eps.
template <class F>
std::vector<Vec<F>> corner_basis(const Algebra<F>& alg, const Vec<F>& eps) {
    const F& f = alg.field();
    std::vector<Vec<F>> rows;
    for (int i = 0; i < alg.dim(); ++i)
        rows.push_back(alg.multiply(alg.multiply(eps, alg.basis_element(i)), eps));
    Subspace<F> span = Subspace<F>::from_rows(f, alg.dim(), rows);
    std::vector<Vec<F>> out;
    for (int r = 0; r < span.dim(); ++r) out.push_back(span.basis_vector(r));
    return out;
}

// Complete orthogonal primitive idempotents of a split commutative
// semisimple algebra, via minimal-polynomial roots of basis elements and
// seeded random combinations. A rootless factor in the centre is conclusive
// evidence against splitness and raises not_split_error.
template <class F>
std::vector<Vec<F>> split_commutative_semisimple(const Algebra<F>& alg, std::uint64_t seed,
                                                 int budget) {
    const F& f = alg.field();
    int n = alg.dim();
    std::vector<Vec<F>> done, work{alg.unit()};
    auto piece_dim = [&](const Vec<F>& eps) { return rank(alg.left_matrix(eps)); };
    auto settle = [&](std::vector<Vec<F>>&& pieces) {
        for (auto& p : pieces) {
            if (piece_dim(p) == 1) done.push_back(std::move(p));
            else work.push_back(std::move(p));
        }
    };
    {
        std::vector<Vec<F>> init = std::move(work);
        work.clear();
        settle(std::move(init));
    }
    SplitMix64 rng(seed);
    int used_random = 0;
    int candidate_index = 0;
    while (!work.empty()) {
        Vec<F> z;
        if (candidate_index < n) {
            z = alg.basis_element(candidate_index++);
        } else {
            if (used_random >= budget)
                throw retry_exhausted_error(
                    "central idempotent search exhausted its retry budget (seed " +
                    std::to_string(seed) + ")");
            ++used_random;
            long long bound = 2 + used_random;
            z.assign(n, f.zero());
            for (int i = 0; i < n; ++i) z[i] = f.from_int(rng.centered(bound));
        }
        std::vector<Vec<F>> next_work;
        for (auto& eps : work) {
            Vec<F> u = alg.multiply(z, eps);
            RefineOutcome<F> ref = refine_piece(alg, eps, u);
            if (ref.repeated_root)
                throw internal_error("repeated eigenvalue inside a semisimple centre");
            if (ref.rootless_deg > 0)
                throw not_split_error("centre is not split: element " + alg.describe(u) +
                                      " has an irreducible factor of degree >= 2");
            for (auto& p : ref.pieces) {
                if (piece_dim(p) == 1) done.push_back(std::move(p));
                else next_work.push_back(std::move(p));
            }
        }
        work = std::move(next_work);
    }
    return done;
}

// Splits one central block of a semisimple algebra over a prime field into
// primitive idempotents by seeded random corner elements.
template <class F>
std::vector<Vec<F>> split_block_primitives(const Algebra<F>& alg, const Vec<F>& eps,
                                           std::uint64_t seed, int budget) {
    const F& f = alg.field();
    std::vector<Vec<F>> done, work{eps};
    auto corner_dim_of = [&](const Vec<F>& phi) {
        return static_cast<int>(corner_basis(alg, phi).size());
    };
    if (corner_dim_of(eps) == 1) return {eps};
    SplitMix64 rng(seed);
    int used = 0;
    while (!work.empty()) {
        if (used >= budget)
            throw retry_exhausted_error("block idempotent search exhausted its retry budget (seed " +
                                        std::to_string(seed) + ")");
        ++used;
        std::vector<Vec<F>> next_work;
        for (auto& phi : work) {
            std::vector<Vec<F>> cb = corner_basis(alg, phi);
            Vec<F> u(alg.dim(), f.zero());
            for (auto& bvec : cb) {
                typename F::Elem c = f.from_int(static_cast<long long>(rng.next() % 997));
                for (int i = 0; i < alg.dim(); ++i) u[i] = f.add(u[i], f.mul(c, bvec[i]));
            }
            RefineOutcome<F> ref = refine_piece(alg, phi, u);
            for (auto& p : ref.pieces) {
                if (corner_dim_of(p) == 1) done.push_back(std::move(p));
                else next_work.push_back(std::move(p));
            }
        }
        work = std::move(next_work);
    }
    return done;
}

} // namespace detail

template <class F>
struct IdempotentData {
    std::vector<Vec<F>> primitives;      // in A, orthogonal, summing to 1
    std::vector<Vec<F>> primitives_bar;  // images in B = A/J
    std::vector<int> class_of;           // primitive index -> class index
    std::vector<std::vector<int>> classes;
    std::vector<int> class_dims;         // dim L(class)
    std::vector<std::string> class_labels;
    bool supplied = false;

    int class_count() const { return static_cast<int>(classes.size()); }
    const Vec<F>& representative(int cls) const { return primitives[classes[cls].front()]; }
    const Vec<F>& representative_bar(int cls) const { return primitives_bar[classes[cls].front()]; }
};

namespace detail {

// Lifts a complete orthogonal family from B to A one idempotent at a time,
// Newton-iterating inside the corner of what is left so orthogonality and
// completeness survive the lift exactly.
template <class F>
std::vector<Vec<F>> lift_complete_family(const Algebra<F>& alg, const RadicalData<F>& rad,
                                         const std::vector<Vec<F>>& bars) {
    const F& f = alg.field();
    int n = alg.dim();
    std::vector<Vec<F>> lifted;
    Vec<F> corner = alg.unit();
    for (std::size_t t = 0; t + 1 < bars.size(); ++t) {
        Vec<F> x = rad.quotient.section.apply(bars[t]);
        Vec<F> e = alg.multiply(alg.multiply(corner, x), corner);
        int iters = 0;
        while (!alg.is_idempotent(e)) {
            if (++iters > 40) throw internal_error("corner idempotent lift did not converge");
            Vec<F> e2 = alg.multiply(e, e);
            Vec<F> e3 = alg.multiply(e2, e);
            for (int i = 0; i < n; ++i)
                e[i] = f.sub(f.mul(f.from_int(3), e2[i]), f.mul(f.from_int(2), e3[i]));
        }
        if (!vec_eq(f, rad.quotient.projection.apply(e), bars[t]))
            throw internal_error("corner lift drifted off its residue class");
        corner = vec_sub(f, corner, e);
        lifted.push_back(std::move(e));
    }
    if (!bars.empty()) {
        if (!alg.is_idempotent(corner))
            throw internal_error("final corner is not idempotent");
        if (!vec_eq(f, rad.quotient.projection.apply(corner), bars.back()))
            throw internal_error("final corner does not project onto the last idempotent");
        lifted.push_back(corner);
    }
    return lifted;
}

} // namespace detail

// Primitive idempotent machinery. With `supplied`, the list is verified and
// classified; otherwise the identity is split automatically inside B = A/J:
// the centre of B first (minimal-polynomial roots), then each Wedderburn
// block by randomized corner elements. The automatic route over the
// rationals stops at noncommutative blocks, which is a needs-supplied-data
// condition rather than an error in the input.
template <class F>
IdempotentData<F> primitive_decomposition(const Algebra<F>& alg, const RadicalData<F>& rad,
                                          const std::optional<std::vector<Vec<F>>>& supplied,
                                          std::uint64_t seed) {
    const F& f = alg.field();
    const Algebra<F>& B = rad.quotient.alg;
    IdempotentData<F> out;

    if (supplied) {
        out.supplied = true;
        out.primitives = *supplied;
        if (out.primitives.empty()) throw input_error("supplied idempotent list is empty");
        for (std::size_t i = 0; i < out.primitives.size(); ++i) {
            if (static_cast<int>(out.primitives[i].size()) != alg.dim())
                throw input_error("supplied idempotent " + std::to_string(i) + " has wrong length");
            if (!alg.is_idempotent(out.primitives[i]))
                throw input_error("supplied element " + std::to_string(i) + " is not idempotent");
        }
        for (std::size_t i = 0; i < out.primitives.size(); ++i)
            for (std::size_t j = 0; j < out.primitives.size(); ++j) {
                if (i == j) continue;
                if (!vec_is_zero(f, alg.multiply(out.primitives[i], out.primitives[j])))
                    throw input_error("supplied idempotents " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are not orthogonal");
            }
        Vec<F> sum(alg.dim(), f.zero());
        for (const auto& e : out.primitives) sum = vec_add(f, sum, e);
        if (!vec_eq(f, sum, alg.unit()))
            throw input_error("supplied idempotents do not sum to the unit");
    } else {
        Subspace<F> zb = centre(B);
        SubalgebraPresentation<F> zalg = subalgebra_presentation(B, zb, "z");
        if (detail::radical_span(zalg.alg).dim() != 0)
            throw internal_error("centre of the semisimple quotient has a radical");
        std::vector<Vec<F>> central_z =
            detail::split_commutative_semisimple(zalg.alg, seed, 64);
        // deterministic order: by leading coordinate pattern of the embedding
        std::vector<Vec<F>> central;
        for (const auto& z : central_z) central.push_back(zalg.embed.apply(z));

        std::vector<Vec<F>> bars;
        for (const auto& eps : central) {
            int block_dim = rank(B.left_matrix(eps));
            if (block_dim == 1) {
                bars.push_back(eps);
                continue;
            }
            if constexpr (F::is_prime_field) {
                auto prims = detail::split_block_primitives(B, eps, seed ^ 0x9e3779b9ULL, 64);
                for (auto& p : prims) bars.push_back(std::move(p));
            } else {
                throw needs_supplied_error(
                    "automatic idempotent decomposition over the rationals needs a commutative "
                    "semisimple quotient; supply idempotents in the input file");
            }
        }
        out.primitives = detail::lift_complete_family(alg, rad, bars);
        // re-verify the family in A
        Vec<F> sum(alg.dim(), f.zero());
        for (const auto& e : out.primitives) {
            if (!alg.is_idempotent(e)) throw internal_error("lifted element is not idempotent");
            sum = vec_add(f, sum, e);
        }
        if (!vec_eq(f, sum, alg.unit()))
            throw internal_error("lifted idempotents do not sum to the unit");
        for (std::size_t i = 0; i < out.primitives.size(); ++i)
            for (std::size_t j = i + 1; j < out.primitives.size(); ++j)
                if (!vec_is_zero(f, alg.multiply(out.primitives[i], out.primitives[j])) ||
                    !vec_is_zero(f, alg.multiply(out.primitives[j], out.primitives[i])))
                    throw internal_error("lifted idempotents are not orthogonal");
    }

    int r = static_cast<int>(out.primitives.size());
    out.primitives_bar.reserve(r);
    for (const auto& e : out.primitives)
        out.primitives_bar.push_back(rad.quotient.projection.apply(e));

    // primitivity: dim ebar B ebar = 1
    for (int i = 0; i < r; ++i) {
        std::vector<Vec<F>> cb = detail::corner_basis(B, out.primitives_bar[i]);
        if (cb.size() != 1) {
            if (out.supplied)
                throw input_error("supplied idempotent " + std::to_string(i) +
                                  " is not primitive (corner dimension " +
                                  std::to_string(cb.size()) + ")");
            throw internal_error("automatic idempotent is not primitive");
        }
    }

    // classification: i ~ j iff ebar_j B ebar_i != 0
    auto linked = [&](int i, int j) {
        for (int b = 0; b < B.dim(); ++b) {
            Vec<F> v = B.multiply(out.primitives_bar[j],
                                  B.multiply_basis_left(b, out.primitives_bar[i]));
            if (!vec_is_zero(f, v)) return true;
        }
        return false;
    };
    out.class_of.assign(r, -1);
    for (int i = 0; i < r; ++i) {
        if (out.class_of[i] >= 0) continue;
        int cls = static_cast<int>(out.classes.size());
        out.classes.push_back({i});
        out.class_of[i] = cls;
        for (int j = i + 1; j < r; ++j) {
            if (out.class_of[j] >= 0) continue;
            if (linked(i, j)) {
                if (!linked(j, i)) throw internal_error("class relation is not symmetric");
                out.class_of[j] = cls;
                out.classes[cls].push_back(j);
            }
        }
    }
    for (int c = 0; c < out.class_count(); ++c)
        out.class_labels.push_back("L" + std::to_string(c));

    // dim L(class) = dim B ebar
    for (int c = 0; c < out.class_count(); ++c) {
        int d = rank(B.right_matrix(out.representative_bar(c)));
        out.class_dims.push_back(d);
        if (d != static_cast<int>(out.classes[c].size()))
            throw not_split_error("class " + out.class_labels[c] + " has multiplicity " +
                                  std::to_string(out.classes[c].size()) + " but simple dimension " +
                                  std::to_string(d) + "; the algebra is not split");
    }
    return out;
}

struct SplitCheckResult {
    bool ok = true;
    std::string detail;
};

// Split test over the semisimple quotient: every class corner is
// one-dimensional and the squares of the simple dimensions fill B.
template <class F>
SplitCheckResult split_check(const Algebra<F>& alg, const RadicalData<F>& rad,
                             const IdempotentData<F>& idem) {
    (void)alg;
    const Algebra<F>& B = rad.quotient.alg;
    int sq = 0;
    for (int c = 0; c < idem.class_count(); ++c) {
        auto cb = detail::corner_basis(B, idem.representative_bar(c));
        if (cb.size() != 1)
            return {false, "class " + idem.class_labels[c] + " has corner dimension " +
                               std::to_string(cb.size())};
        sq += idem.class_dims[c] * idem.class_dims[c];
    }
    if (sq != B.dim())
        return {false, "dimension count " + std::to_string(sq) + " does not fill the semisimple part " +
                           std::to_string(B.dim())};
    return {};
}

template <class F>
struct BlockData {
    std::vector<Vec<F>> central_primitives;
    std::vector<int> block_of_class;
    int count = 0;
};

// Block decomposition: split the semisimple part of Z(A) and lift inside it,
// then assign classes by b_j e_lambda != 0.
template <class F>
BlockData<F> blocks(const Algebra<F>& alg, const IdempotentData<F>& idem, std::uint64_t seed) {
    const F& f = alg.field();
    Subspace<F> z = centre(alg);
    SubalgebraPresentation<F> zalg = subalgebra_presentation(alg, z, "z");
    RadicalData<F> zrad = radical(zalg.alg);
    std::vector<Vec<F>> bars =
        detail::split_commutative_semisimple(zrad.quotient.alg, seed, 64);
    std::vector<Vec<F>> lifted_z = detail::lift_complete_family(zalg.alg, zrad, bars);

    BlockData<F> out;
    for (const auto& b : lifted_z) out.central_primitives.push_back(zalg.embed.apply(b));
    out.count = static_cast<int>(out.central_primitives.size());

    Vec<F> sum(alg.dim(), f.zero());
    for (const auto& b : out.central_primitives) {
        if (!alg.is_idempotent(b)) throw internal_error("central primitive is not idempotent in A");
        sum = vec_add(f, sum, b);
    }
    if (!vec_eq(f, sum, alg.unit()))
        throw internal_error("central primitives do not sum to the unit");

    out.block_of_class.assign(idem.class_count(), -1);
    for (int c = 0; c < idem.class_count(); ++c) {
        for (int j = 0; j < out.count; ++j) {
            Vec<F> prod = alg.multiply(out.central_primitives[j], idem.representative(c));
            if (!vec_is_zero(f, prod)) {
                if (out.block_of_class[c] >= 0)
                    throw internal_error("class meets two blocks");
                out.block_of_class[c] = j;
            }
        }
        if (out.block_of_class[c] < 0) throw internal_error("class meets no block");
    }
    for (int j = 0; j < out.count; ++j) {
        bool hit = false;
        for (int c = 0; c < idem.class_count(); ++c)
            if (out.block_of_class[c] == j) hit = true;
        if (!hit) throw internal_error("block contains no simple class");
    }
    return out;
}

struct BlockRank {
    int q_rank = 0; // rank over the rationals
    int p_rank = 0; // rank over the ground field
};

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Ranks of each block of an integer matrix over Q and, when p is given,
// after reduction mod p. Without p the ground field is Q and both agree.
inline std::vector<BlockRank> block_ranks(const IntMatrix& c,
                                          const std::vector<std::vector<int>>& partition,
                                          std::optional<std::uint32_t> p) {
    std::vector<BlockRank> out;
    for (const auto& idx : partition) {
        int m = static_cast<int>(idx.size());
        RationalField qf;
        Matrix<RationalField> qm(qf, m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) qm.at(a, b) = mpq_class(c[idx[a]][idx[b]]);
        BlockRank br;
        br.q_rank = rank(qm);
        if (p) {
            PrimeField pf(*p);
            Matrix<PrimeField> pm(pf, m, m);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    mpz_class r = c[idx[a]][idx[b]] % static_cast<long>(*p);
                    if (r < 0) r += static_cast<long>(*p);
                    pm.at(a, b) = r.get_ui();
                }
            br.p_rank = rank(pm);
        } else {
            br.p_rank = br.q_rank;
        }
        out.push_back(br);
    }
    return out;
}

template <class F>
struct CartanData {
    IntMatrix matrix;                       // C[lambda][mu] = dim e_mu A e_lambda
    std::vector<std::vector<int>> block_classes; // class indices per block
    std::vector<BlockRank> ranks;           // per block
    int total_p_rank = 0;                   // rank over the ground field of all of C
};

// Cartan matrix as ranks of x -> e_mu x e_lambda, with per-block submatrix
// ranks over Q and over the ground field.
template <class F>
CartanData<F> cartan_matrix(const Algebra<F>& alg, const RadicalData<F>& rad,
                            const IdempotentData<F>& idem, const BlockData<F>& blk) {
    SplitCheckResult sc = split_check(alg, rad, idem);
    if (!sc.ok) throw not_split_error(sc.detail);
    int r = idem.class_count();
    CartanData<F> out;
    out.matrix.assign(r, std::vector<mpz_class>(r, 0));
    for (int lam = 0; lam < r; ++lam) {
        Matrix<F> right = alg.right_matrix(idem.representative(lam));
        for (int mu = 0; mu < r; ++mu) {
            Matrix<F> map = alg.left_matrix(idem.representative(mu)).mul(right);
            out.matrix[lam][mu] = rank(map);
        }
    }
    // diagonal positivity, symmetry of zero pattern wrt blocks, dim count
    mpz_class total = 0;
    for (int a = 0; a < r; ++a) {
        if (out.matrix[a][a] < 1) throw internal_error("Cartan diagonal entry vanishes");
        for (int b = 0; b < r; ++b)
            total += out.matrix[a][b] * idem.class_dims[a] * idem.class_dims[b];
    }
    if (total != alg.dim())
        throw internal_error("Cartan entries do not fill the algebra dimension");
    out.block_classes.assign(blk.count, {});
    for (int c = 0; c < r; ++c) out.block_classes[blk.block_of_class[c]].push_back(c);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            if (blk.block_of_class[a] != blk.block_of_class[b] && out.matrix[a][b] != 0)
                throw internal_error("Cartan matrix couples distinct blocks");
    std::optional<std::uint32_t> p;
    if (alg.field().characteristic() != 0) p = alg.field().characteristic();
    out.ranks = block_ranks(out.matrix, out.block_classes, p);
    for (const auto& br : out.ranks) out.total_p_rank += br.p_rank;
    return out;
}

// Independent Cartan computation through the radical filtration of each
// projective: layer J^k P / J^(k+1) P is semisimple, and the multiplicity of
// L(mu) in it is the rank growth of e_mu on the layer. A different path from
// cartan_matrix on purpose.
template <class F>
IntMatrix cartan_oracle(const Algebra<F>& alg, const RadicalData<F>& rad,
                        const IdempotentData<F>& idem) {
    const F& f = alg.field();
    int n = alg.dim();
    int r = idem.class_count();
    IntMatrix out(r, std::vector<mpz_class>(r, 0));
    std::vector<Matrix<F>> lmu;
    for (int mu = 0; mu < r; ++mu) lmu.push_back(alg.left_matrix(idem.representative(mu)));
    std::vector<Matrix<F>> radmats;
    for (int b = 0; b < rad.radical.dim(); ++b)
        radmats.push_back(alg.left_matrix(rad.radical.basis_vector(b)));
    for (int lam = 0; lam < r; ++lam) {
        Subspace<F> v = Subspace<F>::column_space(alg.right_matrix(idem.representative(lam)));
        while (v.dim() > 0) {
            std::vector<Vec<F>> next_rows;
            for (auto& rm : radmats)
                for (int a = 0; a < v.dim(); ++a) next_rows.push_back(rm.apply(v.basis_vector(a)));
            Subspace<F> vnext = Subspace<F>::from_rows(f, n, next_rows);
            for (int mu = 0; mu < r; ++mu) {
                std::vector<Vec<F>> img_rows;
                for (int a = 0; a < v.dim(); ++a) img_rows.push_back(lmu[mu].apply(v.basis_vector(a)));
                Subspace<F> img = Subspace<F>::from_rows(f, n, img_rows).sum(vnext);
                out[lam][mu] += img.dim() - vnext.dim();
            }
            v = std::move(vnext);
        }
    }
    return out;
}

// Left socle {a : J a = 0}.
template <class F>
Subspace<F> socle(const Algebra<F>& alg, const RadicalData<F>& rad) {
    const F& f = alg.field();
    int n = alg.dim();
    int d = rad.radical.dim();
    if (d == 0) return Subspace<F>::full(f, n);
    Matrix<F> sys(f, d * n, n);
    for (int b = 0; b < d; ++b) {
        Matrix<F> l = alg.left_matrix(rad.radical.basis_vector(b));
        for (int rr = 0; rr < n; ++rr)
            for (int c = 0; c < n; ++c) sys.at(b * n + rr, c) = l.at(rr, c);
    }
    return nullspace(sys);
}

template <class F>
struct SocleOverResult {
    Subspace<F> space;
    int length = 0; // composition length; equals dim under the split hypothesis
};

// Socle of `module` as a module over the commutative unital subalgebra
// spanned by `sub`: the annihilator of the subalgebra's radical.
template <class F>
SocleOverResult<F> socle_over(const Algebra<F>& alg, const Subspace<F>& sub,
                              const Subspace<F>& module) {
    const F& f = alg.field();
    int n = alg.dim();
    SubalgebraPresentation<F> sp = subalgebra_presentation(alg, sub, "c");
    for (int i = 0; i < sp.alg.dim(); ++i)
        for (int j = i + 1; j < sp.alg.dim(); ++j) {
            Vec<F> ij = sp.alg.multiply(sp.alg.basis_element(i), sp.alg.basis_element(j));
            Vec<F> ji = sp.alg.multiply(sp.alg.basis_element(j), sp.alg.basis_element(i));
            if (!vec_eq(f, ij, ji)) throw input_error("socle_over: subalgebra is not commutative");
        }
    for (int i = 0; i < sub.dim(); ++i)
        for (int a = 0; a < module.dim(); ++a) {
            Vec<F> prod = alg.multiply(sub.basis_vector(i), module.basis_vector(a));
            if (!module.contains(prod))
                throw input_error("socle_over: module span is not stable under the subalgebra");
        }
    RadicalData<F> srad = radical(sp.alg);
    int rd = srad.radical.dim();
    if (rd == 0) return {module, module.dim()};
    int md = module.dim();
    Matrix<F> sys(f, rd * n, md);
    for (int b = 0; b < rd; ++b) {
        Vec<F> r_amb = sp.embed.apply(srad.radical.basis_vector(b));
        Matrix<F> l = alg.left_matrix(r_amb);
        for (int a = 0; a < md; ++a) {
            Vec<F> img = l.apply(module.basis_vector(a));
            for (int c = 0; c < n; ++c) sys.at(b * n + c, a) = img[c];
        }
    }
    Subspace<F> coeff = nullspace(sys);
    std::vector<Vec<F>> rows;
    for (int t = 0; t < coeff.dim(); ++t) {
        Vec<F> co = coeff.basis_vector(t);
        Vec<F> v(n, f.zero());
        for (int a = 0; a < md; ++a)
            if (!f.is_zero(co[a]))
                for (int c = 0; c < n; ++c)
                    v[c] = f.add(v[c], f.mul(co[a], module.basis_vector(a)[c]));
        rows.push_back(std::move(v));
    }
    Subspace<F> space = Subspace<F>::from_rows(f, n, rows);
    int len = space.dim();
    return {std::move(space), len};
}

} // namespace fdalg

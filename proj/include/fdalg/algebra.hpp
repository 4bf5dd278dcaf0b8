#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fdalg/subspace.hpp"

namespace fdalg {

// One structure-constant entry: e_i * e_j has coefficient `c` on e_k.
template <class F>
struct MultTriple {
    int i, j, k;
    typename F::Elem c;
};

// A finite-dimensional associative unital algebra presented by structure
// constants against a labeled basis. Construction performs structural checks
// only (bounds, sizes, label uniqueness); the algebraic identities are the
// business of validate_algebra, which callers run separately so a violation
// can be reported rather than thrown mid-parse.
//
// Products of basis pairs are assembled into a full n x n grid of sparse rows
// at construction time; instances are immutable afterwards, so concurrent
// reads need no locking.
template <class F>
class Algebra {
public:
    using Elem = typename F::Elem;
    using SparseRow = std::vector<std::pair<int, Elem>>; // (basis index, coeff), sorted

    Algebra(F f, std::vector<std::string> labels, Vec<F> unit,
            const std::vector<MultTriple<F>>& triples)
        : f_(f), n_(static_cast<int>(labels.size())), labels_(std::move(labels)),
          unit_(std::move(unit)) {
        if (n_ <= 0) throw input_error("algebra needs a nonempty basis");
        if (static_cast<int>(unit_.size()) != n_)
            throw input_error("unit vector length does not match dimension");
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (static_cast<int>(seen.size()) != n_)
            throw input_error("basis labels are not distinct");
        std::map<std::pair<int, int>, std::map<int, Elem>> acc;
        for (const auto& t : triples) {
            if (t.i < 0 || t.i >= n_ || t.j < 0 || t.j >= n_ || t.k < 0 || t.k >= n_)
                throw input_error("structure constant index out of range");
            auto& cell = acc[{t.i, t.j}];
            auto it = cell.find(t.k);
            if (it == cell.end()) cell.emplace(t.k, t.c);
            else it->second = f_.add(it->second, t.c);
        }
        mult_.assign(static_cast<std::size_t>(n_) * n_, {});
        for (auto& [ij, terms] : acc) {
            SparseRow row;
            for (auto& [k, c] : terms)
                if (!f_.is_zero(c)) row.push_back({k, c});
            mult_[static_cast<std::size_t>(ij.first) * n_ + ij.second] = std::move(row);
        }
    }

    const F& field() const { return f_; }
    int dim() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec<F>& unit() const { return unit_; }
    const SparseRow& row(int i, int j) const {
        return mult_[static_cast<std::size_t>(i) * n_ + j];
    }

    int label_index(const std::string& name) const {
        for (int i = 0; i < n_; ++i)
            if (labels_[i] == name) return i;
        throw input_error("unknown basis label '" + name + "'");
    }

    Vec<F> zero() const { return zero_vec(f_, n_); }
    Vec<F> basis_element(int i) const { return unit_vec(f_, n_, i); }

    // e_i * b
    Vec<F> multiply_basis_left(int i, const Vec<F>& b) const {
        Vec<F> out = zero();
        for (int j = 0; j < n_; ++j) {
            if (f_.is_zero(b[j])) continue;
            for (const auto& [k, c] : row(i, j))
                out[k] = f_.add(out[k], f_.mul(b[j], c));
        }
        return out;
    }

    // a * e_j
    Vec<F> multiply_basis_right(const Vec<F>& a, int j) const {
        Vec<F> out = zero();
        for (int i = 0; i < n_; ++i) {
            if (f_.is_zero(a[i])) continue;
            for (const auto& [k, c] : row(i, j))
                out[k] = f_.add(out[k], f_.mul(a[i], c));
        }
        return out;
    }

    Vec<F> multiply(const Vec<F>& a, const Vec<F>& b) const {
        if (a.size() != b.size() || static_cast<int>(a.size()) != n_)
            throw input_error("multiply: elements of mismatched algebras");
        Vec<F> out = zero();
        for (int i = 0; i < n_; ++i) {
            if (f_.is_zero(a[i])) continue;
            for (int j = 0; j < n_; ++j) {
                if (f_.is_zero(b[j])) continue;
                Elem s = f_.mul(a[i], b[j]);
                for (const auto& [k, c] : row(i, j))
                    out[k] = f_.add(out[k], f_.mul(s, c));
            }
        }
        return out;
    }

    // Matrix of left multiplication by a: column j holds a * e_j.
    Matrix<F> left_matrix(const Vec<F>& a) const {
        Matrix<F> m(f_, n_, n_);
        for (int j = 0; j < n_; ++j) m.set_col(j, multiply_basis_right(a, j));
        return m;
    }

    // Matrix of right multiplication by a: column j holds e_j * a.
    Matrix<F> right_matrix(const Vec<F>& a) const {
        Matrix<F> m(f_, n_, n_);
        for (int j = 0; j < n_; ++j) m.set_col(j, multiply_basis_left(j, a));
        return m;
    }

    bool is_idempotent(const Vec<F>& e) const {
        return vec_eq(f_, multiply(e, e), e);
    }

    std::string describe(const Vec<F>& v) const {
        std::string out;
        for (int i = 0; i < n_; ++i) {
            if (f_.is_zero(v[i])) continue;
            if (!out.empty()) out += " + ";
            out += f_.to_text(v[i]) + "*" + labels_[i];
        }
        return out.empty() ? "0" : out;
    }

private:
    F f_;
    int n_;
    std::vector<std::string> labels_;
    Vec<F> unit_;
    std::vector<SparseRow> mult_;
};

enum class Side { left, right };

template <class F>
std::vector<Matrix<F>> regular_representation(const Algebra<F>& alg, Side side) {
    std::vector<Matrix<F>> out;
    out.reserve(alg.dim());
    for (int i = 0; i < alg.dim(); ++i) {
        Vec<F> e = alg.basis_element(i);
        out.push_back(side == Side::left ? alg.left_matrix(e) : alg.right_matrix(e));
    }
    return out;
}

struct ValidationViolation {
    enum class Kind { unit, associativity } kind;
    int i = -1, j = -1, k = -1; // basis indices of the failing identity
    std::string lhs, rhs;       // both sides, printed

    std::string message() const {
        if (kind == Kind::unit)
            return "unit axiom fails at basis index " + std::to_string(i) + ": " + lhs +
                   " != " + rhs;
        return "associativity fails at triple (" + std::to_string(i) + ", " + std::to_string(j) +
               ", " + std::to_string(k) + "): (e_i e_j) e_k = " + lhs + " but e_i (e_j e_k) = " +
               rhs;
    }
};

struct ValidationResult {
    bool ok = true;
    std::optional<ValidationViolation> violation;
};

// Checks the unit axioms and then associativity over all basis triples in
// lexicographic (i, j, k) order, reporting the first failure.
template <class F>
ValidationResult validate_algebra(const Algebra<F>& alg) {
    const F& f = alg.field();
    int n = alg.dim();
    for (int i = 0; i < n; ++i) {
        Vec<F> e = alg.basis_element(i);
        Vec<F> ue = alg.multiply(alg.unit(), e);
        if (!vec_eq(f, ue, e))
            return {false, ValidationViolation{ValidationViolation::Kind::unit, i, -1, -1,
                                               alg.describe(ue), alg.describe(e)}};
        Vec<F> eu = alg.multiply(e, alg.unit());
        if (!vec_eq(f, eu, e))
            return {false, ValidationViolation{ValidationViolation::Kind::unit, i, -1, -1,
                                               alg.describe(eu), alg.describe(e)}};
    }
    // (e_i e_j) e_k vs e_i (e_j e_k), with dense scratch accumulators so the
    // inner loops touch only the sparse support.
    Vec<F> lhs = alg.zero(), rhs = alg.zero();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto& pij = alg.row(i, j);
            for (int k = 0; k < n; ++k) {
                std::fill(lhs.begin(), lhs.end(), f.zero());
                std::fill(rhs.begin(), rhs.end(), f.zero());
                for (const auto& [m, c] : pij)
                    for (const auto& [t, d] : alg.row(m, k))
                        lhs[t] = f.add(lhs[t], f.mul(c, d));
                for (const auto& [m, c] : alg.row(j, k))
                    for (const auto& [t, d] : alg.row(i, m))
                        rhs[t] = f.add(rhs[t], f.mul(c, d));
                if (!vec_eq(f, lhs, rhs))
                    return {false,
                            ValidationViolation{ValidationViolation::Kind::associativity, i, j, k,
                                                alg.describe(lhs), alg.describe(rhs)}};
            }
        }
    }
    return {};
}

// Solution space of [x, e_i] = 0 for all basis i.
template <class F>
Subspace<F> centre(const Algebra<F>& alg) {
    const F& f = alg.field();
    int n = alg.dim();
    Matrix<F> sys(f, n * n, n);
    for (int i = 0; i < n; ++i) {
        Vec<F> e = alg.basis_element(i);
        Matrix<F> d = alg.right_matrix(e).sub(alg.left_matrix(e)); // x*e_i - e_i*x
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) sys.at(i * n + r, c) = d.at(r, c);
    }
    return nullspace(sys);
}

// Span of all e_i e_j - e_j e_i.
template <class F>
Subspace<F> commutator_space(const Algebra<F>& alg) {
    const F& f = alg.field();
    int n = alg.dim();
    std::vector<Vec<F>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec<F> v = alg.zero();
            for (const auto& [k, c] : alg.row(i, j)) v[k] = f.add(v[k], c);
            for (const auto& [k, c] : alg.row(j, i)) v[k] = f.sub(v[k], c);
            if (!vec_is_zero(f, v)) rows.push_back(std::move(v));
        }
    return Subspace<F>::from_rows(f, n, rows);
}

// Presentation of a unital subalgebra spanned by `space`, with the embedding
// back into the ambient algebra. Fails if the span is not closed under
// multiplication or does not contain the unit.
template <class F>
struct SubalgebraPresentation {
    Algebra<F> alg;
    Matrix<F> embed; // ambient_dim x sub_dim, columns are the chosen basis
};

template <class F>
SubalgebraPresentation<F> subalgebra_presentation(const Algebra<F>& amb, const Subspace<F>& space,
                                                  const std::string& label_prefix) {
    const F& f = amb.field();
    int d = space.dim();
    if (!space.contains(amb.unit()))
        throw input_error("subalgebra span does not contain the unit");
    std::vector<Vec<F>> basis;
    for (int i = 0; i < d; ++i) basis.push_back(space.basis_vector(i));
    std::vector<MultTriple<F>> triples;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec<F> prod = amb.multiply(basis[i], basis[j]);
            auto coords = space.coordinates(prod);
            if (!coords) throw input_error("span is not closed under multiplication");
            for (int k = 0; k < d; ++k)
                if (!f.is_zero((*coords)[k])) triples.push_back({i, j, k, (*coords)[k]});
        }
    auto unit_coords = space.coordinates(amb.unit());
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back(label_prefix + std::to_string(i));
    Algebra<F> sub(f, std::move(labels), *unit_coords, triples);
    Matrix<F> embed(f, amb.dim(), d);
    for (int j = 0; j < d; ++j) embed.set_col(j, basis[j]);
    return {std::move(sub), std::move(embed)};
}

} // namespace fdalg

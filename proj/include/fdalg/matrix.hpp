#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fdalg/errors.hpp"
#include "fdalg/field.hpp"

namespace fdalg {

template <class F>
using Vec = std::vector<typename F::Elem>;

// Dense row-major matrix over an exact field. The field object travels with
// the matrix (it carries the modulus for prime fields).
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix() : f_(), rows_(0), cols_(0) {}
    Matrix(F f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, f.zero()) {}

    static Matrix identity(F f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return f_; }

    Elem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Elem& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Elem* row_ptr(int r) { return a_.data() + static_cast<std::size_t>(r) * cols_; }
    const Elem* row_ptr(int r) const { return a_.data() + static_cast<std::size_t>(r) * cols_; }

    Vec<F> row(int r) const {
        return Vec<F>(row_ptr(r), row_ptr(r) + cols_);
    }
    Vec<F> col(int c) const {
        Vec<F> v(rows_, f_.zero());
        for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }
    void set_row(int r, const Vec<F>& v) {
        for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
    }
    void set_col(int c, const Vec<F>& v) {
        for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!f_.eq(a_[i], o.a_[i])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Matrix mul(const Matrix& b) const {
        if (cols_ != b.rows_) throw internal_error("matrix product shape mismatch");
        Matrix out(f_, rows_, b.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                const Elem& x = at(i, k);
                if (f_.is_zero(x)) continue;
                const Elem* brow = b.row_ptr(k);
                Elem* orow = out.row_ptr(i);
                for (int j = 0; j < b.cols_; ++j)
                    orow[j] = f_.add(orow[j], f_.mul(x, brow[j]));
            }
        }
        return out;
    }

    Matrix add(const Matrix& b) const {
        Matrix out(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(a_[i], b.a_[i]);
        return out;
    }
    Matrix sub(const Matrix& b) const {
        Matrix out(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.sub(a_[i], b.a_[i]);
        return out;
    }
    Matrix scaled(const Elem& c) const {
        Matrix out(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.mul(c, a_[i]);
        return out;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw internal_error("matvec shape mismatch");
        Vec<F> out(rows_, f_.zero());
        for (int r = 0; r < rows_; ++r) {
            const Elem* row = row_ptr(r);
            Elem acc = f_.zero();
            for (int c = 0; c < cols_; ++c)
                if (!f_.is_zero(v[c])) acc = f_.add(acc, f_.mul(row[c], v[c]));
            out[r] = acc;
        }
        return out;
    }

    Matrix pow(std::uint64_t e) const {
        Matrix base = *this, out = identity(f_, rows_);
        while (e) {
            if (e & 1) out = out.mul(base);
            base = base.mul(base);
            e >>= 1;
        }
        return out;
    }

private:
    F f_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

// In-place reduced row echelon form. Pivot choice is fixed: leftmost nonzero
// column, topmost available row. This makes every echelon form (and hence
// every Subspace) canonical, so results compare by plain equality.
template <class F>
int rref_inplace(Matrix<F>& m, std::vector<int>* pivots_out = nullptr) {
    const F& f = m.field();
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r) {
            if (!f.is_zero(m.at(r, col))) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        typename F::Elem s = f.inv(m.at(rank, col));
        for (int c = col; c < m.cols(); ++c) m.at(rank, c) = f.mul(s, m.at(rank, c));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || f.is_zero(m.at(r, col))) continue;
            typename F::Elem q = m.at(r, col);
            for (int c = col; c < m.cols(); ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(q, m.at(rank, c)));
        }
        pivots.push_back(col);
        ++rank;
    }
    if (pivots_out) *pivots_out = std::move(pivots);
    return rank;
}

template <class F>
struct RrefResult {
    Matrix<F> mat;
    int rank = 0;
    std::vector<int> pivots;
};

template <class F>
RrefResult<F> rref(Matrix<F> m) {
    RrefResult<F> out;
    out.rank = rref_inplace(m, &out.pivots);
    out.mat = std::move(m);
    return out;
}

template <class F>
int rank(const Matrix<F>& m) {
    Matrix<F> c = m;
    return rref_inplace(c);
}

// Consistent systems get the particular solution with zeros in all free
// coordinates; inconsistent ones get nullopt.
template <class F>
std::optional<Vec<F>> solve_linear(const Matrix<F>& a, const Vec<F>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw input_error("solve_linear: right-hand side has wrong length");
    const F& f = a.field();
    Matrix<F> aug(f, a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    std::vector<int> pivots;
    int rk = rref_inplace(aug, &pivots);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vec<F> x(a.cols(), f.zero());
    for (int i = 0; i < rk; ++i) x[pivots[i]] = aug.at(i, a.cols());
    return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw internal_error("inverse of non-square matrix");
    const F& f = m.field();
    int n = m.rows();
    Matrix<F> aug(f, n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = f.one();
    }
    int rk = rref_inplace(aug);
    if (rk < n) return std::nullopt;
    Matrix<F> out(f, n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return out;
}

// Rows spanning the right kernel of a, one per free column, canonicalized by
// a final rref. dim = cols - rank.
template <class F>
Matrix<F> kernel_rows(const Matrix<F>& a) {
    const F& f = a.field();
    RrefResult<F> r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : r.pivots) is_pivot[c] = true;
    int dim = a.cols() - r.rank;
    Matrix<F> out(f, dim, a.cols());
    int row = 0;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        out.at(row, free) = f.one();
        for (int i = 0; i < r.rank; ++i)
            out.at(row, r.pivots[i]) = f.neg(r.mat.at(i, free));
        ++row;
    }
    rref_inplace(out);
    return out;
}

// Incremental linear-independence tracker: feeds vectors one at a time and,
// for dependent ones, reports the coefficients over the previously accepted
// vectors. Backbone of minimal-polynomial and span computations.
template <class F>
class DependenceTracker {
public:
    DependenceTracker(F f, int dim) : f_(f), dim_(dim) {}

    int size() const { return static_cast<int>(rows_.size()); }

    // Returns nullopt if v was independent (and absorbs it); otherwise the
    // coefficients c with v = sum c_i * accepted_i.
    std::optional<Vec<F>> offer(const Vec<F>& v) {
        Vec<F> w = v;
        Vec<F> coeff(rows_.size(), f_.zero());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& x = w[pivot_col_[i]];
            if (f_.is_zero(x)) continue;
            typename F::Elem q = x;
            coeff_accumulate(coeff, i, q);
            for (int c = 0; c < dim_; ++c)
                w[c] = f_.sub(w[c], f_.mul(q, rows_[i][c]));
        }
        int piv = -1;
        for (int c = 0; c < dim_; ++c)
            if (!f_.is_zero(w[c])) { piv = c; break; }
        if (piv < 0) return coeff;
        typename F::Elem s = f_.inv(w[piv]);
        for (int c = 0; c < dim_; ++c) w[c] = f_.mul(s, w[c]);
        rows_.push_back(std::move(w));
        pivot_col_.push_back(piv);
        // record accepted vector's expression in terms of originals
        Vec<F> expr(coeff);
        expr.resize(rows_.size(), f_.zero());
        expr[rows_.size() - 1] = s;
        for (std::size_t i = 0; i + 1 < rows_.size(); ++i)
            expr[i] = f_.neg(f_.mul(s, expr[i]));
        basis_expr_.push_back(std::move(expr));
        return std::nullopt;
    }

private:
    void coeff_accumulate(Vec<F>& coeff, std::size_t reduced_row, const typename F::Elem& q) {
        // reduced_row's expression over originals, scaled by q
        const Vec<F>& e = basis_expr_[reduced_row];
        for (std::size_t j = 0; j < e.size(); ++j)
            coeff[j] = f_.add(coeff[j], f_.mul(q, e[j]));
    }

    F f_;
    int dim_;
    std::vector<Vec<F>> rows_;
    std::vector<int> pivot_col_;
    std::vector<Vec<F>> basis_expr_;
};

template <class F>
Vec<F> zero_vec(const F& f, int n) { return Vec<F>(n, f.zero()); }

template <class F>
Vec<F> unit_vec(const F& f, int n, int i) {
    Vec<F> v(n, f.zero());
    v[i] = f.one();
    return v;
}

template <class F>
bool vec_is_zero(const F& f, const Vec<F>& v) {
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

template <class F>
bool vec_eq(const F& f, const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!f.eq(a[i], b[i])) return false;
    return true;
}

template <class F>
Vec<F> vec_add(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

template <class F>
Vec<F> vec_sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

template <class F>
Vec<F> vec_scale(const F& f, const typename F::Elem& c, const Vec<F>& a) {
    Vec<F> out(a);
    for (auto& x : out) x = f.mul(c, x);
    return out;
}

} // namespace fdalg

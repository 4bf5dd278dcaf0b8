#pragma once

#include <vector>

#include "fdalg/matrix.hpp"

namespace fdalg {

// A subspace of K^n held as its unique RREF basis, one vector per row, no
// zero rows. Two Subspace values are equal iff they are the same subspace.
template <class F>
class Subspace {
public:
    Subspace() = default;
    Subspace(F f, int ambient) : f_(f), ambient_(ambient), basis_(f, 0, ambient) {}

    static Subspace zero(F f, int ambient) { return Subspace(f, ambient); }

    static Subspace full(F f, int ambient) {
        Subspace s(f, ambient);
        s.basis_ = Matrix<F>::identity(f, ambient);
        return s;
    }

    static Subspace from_rows(const F& f, int ambient, const std::vector<Vec<F>>& rows) {
        Matrix<F> m(f, static_cast<int>(rows.size()), ambient);
        for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
        return from_matrix_rows(std::move(m));
    }

    // Span of the rows of m.
    static Subspace from_matrix_rows(Matrix<F> m) {
        Subspace s(m.field(), m.cols());
        int rank = rref_inplace(m);
        Matrix<F> b(m.field(), rank, m.cols());
        for (int r = 0; r < rank; ++r) b.set_row(r, m.row(r));
        s.basis_ = std::move(b);
        return s;
    }

    // Column space of m.
    static Subspace column_space(const Matrix<F>& m) { return from_matrix_rows(m.transpose()); }

    const F& field() const { return f_; }
    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }
    Vec<F> basis_vector(int i) const { return basis_.row(i); }

    bool contains(const Vec<F>& v) const {
        Vec<F> w = reduce(v);
        return vec_is_zero(f_, w);
    }

    bool contains(const Subspace& other) const {
        for (int i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    // Residual of v after elimination against the basis rows. Zero iff v lies
    // in the subspace; in general the pivot coordinates are zeroed out.
    Vec<F> reduce(const Vec<F>& v) const {
        Vec<F> w = v;
        for (int i = 0; i < basis_.rows(); ++i) {
            int piv = pivot_col(i);
            if (f_.is_zero(w[piv])) continue;
            typename F::Elem q = w[piv];
            for (int c = 0; c < ambient_; ++c)
                w[c] = f_.sub(w[c], f_.mul(q, basis_.at(i, c)));
        }
        return w;
    }

    // Coordinates of v in the basis rows, if v belongs to the subspace.
    std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
        Vec<F> w = v;
        Vec<F> coords(dim(), f_.zero());
        for (int i = 0; i < basis_.rows(); ++i) {
            int piv = pivot_col(i);
            if (f_.is_zero(w[piv])) continue;
            coords[i] = w[piv];
            typename F::Elem q = w[piv];
            for (int c = 0; c < ambient_; ++c)
                w[c] = f_.sub(w[c], f_.mul(q, basis_.at(i, c)));
        }
        if (!vec_is_zero(f_, w)) return std::nullopt;
        return coords;
    }

    Subspace sum(const Subspace& other) const {
        Matrix<F> m(f_, dim() + other.dim(), ambient_);
        for (int r = 0; r < dim(); ++r) m.set_row(r, basis_.row(r));
        for (int r = 0; r < other.dim(); ++r) m.set_row(dim() + r, other.basis_.row(r));
        return from_matrix_rows(std::move(m));
    }

    // Zassenhaus: reduce [U | U; W | 0]; rows whose left half vanished carry
    // the intersection in their right half.
    Subspace intersect(const Subspace& other) const {
        int r1 = dim(), r2 = other.dim();
        Matrix<F> m(f_, r1 + r2, 2 * ambient_);
        for (int r = 0; r < r1; ++r)
            for (int c = 0; c < ambient_; ++c) {
                m.at(r, c) = basis_.at(r, c);
                m.at(r, ambient_ + c) = basis_.at(r, c);
            }
        for (int r = 0; r < r2; ++r)
            for (int c = 0; c < ambient_; ++c) m.at(r1 + r, c) = other.basis_.at(r, c);
        rref_inplace(m);
        std::vector<Vec<F>> rows;
        for (int r = 0; r < m.rows(); ++r) {
            bool left_zero = true;
            for (int c = 0; c < ambient_ && left_zero; ++c)
                if (!f_.is_zero(m.at(r, c))) left_zero = false;
            if (!left_zero) continue;
            Vec<F> v(ambient_, f_.zero());
            bool nonzero = false;
            for (int c = 0; c < ambient_; ++c) {
                v[c] = m.at(r, ambient_ + c);
                if (!f_.is_zero(v[c])) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(v));
        }
        return from_rows(f_, ambient_, rows);
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    int pivot_col(int row) const {
        for (int c = 0; c < ambient_; ++c)
            if (!f_.is_zero(basis_.at(row, c))) return c;
        throw internal_error("zero row in subspace basis");
    }

    F f_;
    int ambient_ = 0;
    Matrix<F> basis_;
};

// Canonical basis of the right kernel of a.
template <class F>
Subspace<F> nullspace(const Matrix<F>& a) {
    Subspace<F> s = Subspace<F>::from_matrix_rows(kernel_rows(a));
    return s;
}

} // namespace fdalg

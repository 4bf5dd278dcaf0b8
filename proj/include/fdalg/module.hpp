#pragma once

#include <string>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

// A left module given by one action matrix per algebra basis element.
template <class F>
struct ModuleRep {
    std::string name;
    int dim = 0;
    std::vector<Matrix<F>> action; // one dim x dim matrix per basis index

    Matrix<F> act(const Algebra<F>& alg, const Vec<F>& a) const {
        const F& f = alg.field();
        Matrix<F> out(f, dim, dim);
        for (int i = 0; i < alg.dim(); ++i) {
            if (f.is_zero(a[i])) continue;
            out = out.add(action[i].scaled(a[i]));
        }
        return out;
    }
};

struct ModuleViolation {
    bool unit_failed = false;
    int i = -1, j = -1;
    std::string message;
};

struct ModuleValidationResult {
    bool ok = true;
    std::optional<ModuleViolation> violation;
};

// ok iff rho(unit) = id and rho_i rho_j = sum_k c_ij^k rho_k for all pairs,
// scanned in lexicographic (i, j) order.
template <class F>
ModuleValidationResult validate_module(const Algebra<F>& alg, const ModuleRep<F>& m) {
    const F& f = alg.field();
    int n = alg.dim();
    if (static_cast<int>(m.action.size()) != n)
        throw input_error("module '" + m.name + "' must have one action matrix per basis element");
    for (const auto& mat : m.action)
        if (mat.rows() != m.dim || mat.cols() != m.dim)
            throw input_error("module '" + m.name + "' has an action matrix of wrong shape");
    Matrix<F> u = m.act(alg, alg.unit());
    if (u != Matrix<F>::identity(f, m.dim))
        return {false, ModuleViolation{true, -1, -1,
                                       "module '" + m.name + "': unit does not act as identity"}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix<F> lhs = m.action[i].mul(m.action[j]);
            Matrix<F> rhs(f, m.dim, m.dim);
            for (const auto& [k, c] : alg.row(i, j)) rhs = rhs.add(m.action[k].scaled(c));
            if (lhs != rhs)
                return {false, ModuleViolation{false, i, j,
                                               "module '" + m.name + "': action incompatible at (" +
                                                   std::to_string(i) + ", " + std::to_string(j) +
                                                   ")"}};
        }
    return {};
}

// Left regular module: rho_i = left multiplication by e_i.
template <class F>
ModuleRep<F> regular_module(const Algebra<F>& alg) {
    ModuleRep<F> m;
    m.name = "regular";
    m.dim = alg.dim();
    m.action = regular_representation(alg, Side::left);
    return m;
}

// All T with T rho1(a) = rho2(a) T, flattened row-major into vectors.
template <class F>
Subspace<F> hom_space(const Algebra<F>& alg, const ModuleRep<F>& m1, const ModuleRep<F>& m2) {
    const F& f = alg.field();
    int n = alg.dim();
    int r = m2.dim, c = m1.dim; // T is r x c
    Matrix<F> sys(f, n * r * c, r * c);
    for (int i = 0; i < n; ++i) {
        // (T rho1_i - rho2_i T)[a][b] = sum T[a][k] rho1[k][b] - rho2[a][k] T[k][b]
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < c; ++b) {
                int rowi = i * r * c + a * c + b;
                for (int k = 0; k < c; ++k)
                    sys.at(rowi, a * c + k) =
                        f.add(sys.at(rowi, a * c + k), m1.action[i].at(k, b));
                for (int k = 0; k < r; ++k)
                    sys.at(rowi, k * c + b) =
                        f.sub(sys.at(rowi, k * c + b), m2.action[i].at(a, k));
            }
    }
    return nullspace(sys);
}

// Rank of the action of a verified idempotent on the module; for a primitive
// idempotent of a split algebra this is the composition multiplicity.
template <class F>
int idempotent_multiplicity(const Algebra<F>& alg, const Vec<F>& e, const ModuleRep<F>& m) {
    if (!alg.is_idempotent(e))
        throw input_error("idempotent_multiplicity: element is not idempotent");
    return rank(m.act(alg, e));
}

} // namespace fdalg

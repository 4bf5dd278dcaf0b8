#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fdalg/matrix.hpp"

namespace fdalg {

// Univariate polynomial, canonical form: no trailing zero coefficients,
// coeffs[k] multiplies x^k. Empty vector is the zero polynomial.
template <class F>
class Poly {
public:
    using Elem = typename F::Elem;

    explicit Poly(F f) : f_(f) {}
    Poly(F f, std::vector<Elem> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static Poly zero(F f) { return Poly(f); }
    static Poly constant(F f, const Elem& a) { return Poly(f, {a}); }
    static Poly x_minus(F f, const Elem& r) { return Poly(f, {f.neg(r), f.one()}); }

    const F& field() const { return f_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Elem& leading() const { return c_.back(); }

    Elem coeff(int k) const {
        return k < static_cast<int>(c_.size()) ? c_[k] : f_.zero();
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!f_.eq(c_[i], o.c_[i])) return false;
        return true;
    }

    Poly add(const Poly& o) const {
        std::vector<Elem> out(std::max(c_.size(), o.c_.size()), f_.zero());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = f_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return Poly(f_, std::move(out));
    }
    Poly sub(const Poly& o) const {
        std::vector<Elem> out(std::max(c_.size(), o.c_.size()), f_.zero());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = f_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return Poly(f_, std::move(out));
    }
    Poly mul(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero(f_);
        std::vector<Elem> out(c_.size() + o.c_.size() - 1, f_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                out[i + j] = f_.add(out[i + j], f_.mul(c_[i], o.c_[j]));
        return Poly(f_, std::move(out));
    }
    Poly scaled(const Elem& s) const {
        std::vector<Elem> out = c_;
        for (auto& x : out) x = f_.mul(s, x);
        return Poly(f_, std::move(out));
    }
    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(f_.inv(leading()));
    }

    // Euclidean division: returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw internal_error("polynomial division by zero");
        Poly r = *this;
        std::vector<Elem> q(std::max<std::size_t>(c_.size(), 1), f_.zero());
        Elem lead_inv = f_.inv(d.leading());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            Elem s = f_.mul(r.leading(), lead_inv);
            q[shift] = f_.add(q[shift], s);
            std::vector<Elem> sub(r.c_);
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                sub[i + shift] = f_.sub(sub[i + shift], f_.mul(s, d.c_[i]));
            r = Poly(f_, std::move(sub));
        }
        return {Poly(f_, std::move(q)), r};
    }

    Elem eval(const Elem& x) const {
        Elem acc = f_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = f_.add(f_.mul(acc, x), *it);
        return acc;
    }

    // Evaluate at a square matrix.
    Matrix<F> eval(const Matrix<F>& m) const {
        Matrix<F> acc(f_, m.rows(), m.cols());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc.mul(m);
            for (int i = 0; i < m.rows(); ++i) acc.at(i, i) = f_.add(acc.at(i, i), *it);
        }
        return acc;
    }

    std::string to_text() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            if (f_.is_zero(c_[k])) continue;
            if (!out.empty()) out += " + ";
            out += f_.to_text(c_[k]);
            if (k > 0) out += "*x^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
    }

    F f_;
    std::vector<Elem> c_;
};

// Extended gcd: returns (g, u, v) monic with u*a + v*b = g.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
    const F& f = a.field();
    Poly<F> r0 = a, r1 = b;
    Poly<F> u0 = Poly<F>::constant(f, f.one()), u1 = Poly<F>::zero(f);
    Poly<F> v0 = Poly<F>::zero(f), v1 = Poly<F>::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Poly<F> u = u0.sub(q.mul(u1));
        Poly<F> v = v0.sub(q.mul(v1));
        r0 = r1; r1 = r;
        u0 = u1; u1 = u;
        v0 = v1; v1 = v;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    typename F::Elem s = f.inv(r0.leading());
    return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

// Monic least-degree annihilating polynomial, found by feeding vec(a^k) into
// a growing row space until the first linear dependence.
template <class F>
Poly<F> minimal_polynomial(const Matrix<F>& a) {
    if (a.rows() != a.cols()) throw input_error("minimal_polynomial: matrix not square");
    const F& f = a.field();
    int n = a.rows();
    DependenceTracker<F> tracker(f, n * n);
    Matrix<F> power = Matrix<F>::identity(f, n);
    for (int k = 0; k <= n; ++k) {
        Vec<F> flat;
        flat.reserve(static_cast<std::size_t>(n) * n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) flat.push_back(power.at(r, c));
        if (auto dep = tracker.offer(flat)) {
            std::vector<typename F::Elem> coeffs(k + 1, f.zero());
            for (int i = 0; i < k; ++i) coeffs[i] = f.neg((*dep)[i]);
            coeffs[k] = f.one();
            return Poly<F>(f, std::move(coeffs));
        }
        power = power.mul(a);
    }
    throw internal_error("minimal polynomial not found within dimension bound");
}

namespace detail {

// All positive divisors of |n| by trial division; desk-scale inputs only.
inline std::vector<mpz_class> all_divisors(mpz_class n) {
    n = abs(n);
    if (n == 0) throw internal_error("divisors of zero requested");
    std::vector<std::pair<mpz_class, unsigned>> factors;
    mpz_class d = 2;
    long steps = 0;
    while (d * d <= n) {
        if (++steps > 40000000L)
            throw internal_error("divisor enumeration exceeded its budget");
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) { n /= d; ++e; }
            factors.push_back({d, e});
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) factors.push_back({n, 1});
    std::vector<mpz_class> divs{1};
    for (const auto& [q, e] : factors) {
        std::size_t base = divs.size();
        mpz_class pw = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

} // namespace detail

// Roots of f lying in the ground field, with multiplicities, sorted ascending.
// Prime fields: exhaustive scan of the residues. Rationals: rational-root
// bound on the primitive integer form, every candidate verified by evaluation.
template <class F>
std::vector<std::pair<typename F::Elem, int>> roots_in_field(const Poly<F>& f_in) {
    if (f_in.is_zero()) throw input_error("roots_in_field: zero polynomial");
    const F& f = f_in.field();
    std::vector<typename F::Elem> candidates;

    if constexpr (F::is_prime_field) {
        for (std::uint64_t r = 0; r < f.modulus(); ++r) candidates.push_back(r);
    } else {
        // primitive integer form
        mpz_class den_lcm = 1;
        for (const auto& c : f_in.coeffs())
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<mpz_class> ic;
        for (const auto& c : f_in.coeffs()) {
            mpq_class scaled = c * mpq_class(den_lcm);
            ic.push_back(scaled.get_num());
        }
        mpz_class content = 0;
        for (const auto& z : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        for (auto& z : ic) z /= content;
        // Strip the power of x dividing f; 0 stays a candidate and the
        // nonzero candidates are divisor quotients of the stripped ends.
        std::size_t low = 0;
        while (low < ic.size() && ic[low] == 0) ++low;
        candidates.push_back(mpq_class(0));
        if (ic.size() - low >= 2) {
            for (const auto& pn : detail::all_divisors(ic[low]))
                for (const auto& qd : detail::all_divisors(ic.back())) {
                    mpq_class r(pn, qd);
                    r.canonicalize();
                    candidates.push_back(r);
                    candidates.push_back(mpq_class(-r));
                }
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const mpq_class& a, const mpq_class& b) { return a < b; });
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }

    std::vector<std::pair<typename F::Elem, int>> out;
    for (const auto& r : candidates) {
        if (!f.is_zero(f_in.eval(r))) continue;
        Poly<F> lin = Poly<F>::x_minus(f, r);
        Poly<F> rest = f_in;
        int mult = 0;
        while (true) {
            auto [q, rem] = rest.divmod(lin);
            if (!rem.is_zero()) break;
            ++mult;
            rest = q;
            if (rest.is_zero()) break;
        }
        out.push_back({r, mult});
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return f.cmp(a.first, b.first) < 0;
    });
    return out;
}

} // namespace fdalg

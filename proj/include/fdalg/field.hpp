#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fdalg/errors.hpp"

namespace fdalg {

// Deterministic Miller-Rabin; bases {2,3,5,7} decide primality below 3.2e9,
// which covers the full 2 <= p < 2^31 range we accept.
inline bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        a %= n;
        while (e) {
            if (e & 1) r = r * a % n;
            a = a * a % n;
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::uint32_t p = 0; // modulus, prime_field only

    static FieldSpec rationals() { return {Kind::rationals, 0}; }
    static FieldSpec prime(std::uint32_t p) {
        if (p < 2 || !is_prime_u32(p))
            throw input_error("field modulus " + std::to_string(p) + " is not prime");
        return {Kind::prime_field, p};
    }
    bool operator==(const FieldSpec&) const = default;
};

// The field of rationals with arbitrary-precision parts. Elements are GMP
// rationals, which stay canonical (lowest terms, positive denominator) under
// arithmetic as long as they start canonical.
class RationalField {
public:
    using Elem = mpq_class;
    static constexpr bool is_prime_field = false;

    std::uint32_t characteristic() const { return 0; }
    FieldSpec spec() const { return FieldSpec::rationals(); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }

    Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
    Elem neg(const Elem& a) const { return Elem(-a); }
    Elem inv(const Elem& a) const {
        if (a == 0) throw internal_error("inverse of zero");
        return Elem(1 / a);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    int cmp(const Elem& a, const Elem& b) const { return ::cmp(a, b); }

    std::string to_text(const Elem& a) const { return a.get_str(); }

    // Accepts exactly the canonical forms "a" and "a/b" with b > 0, gcd(a,b)=1.
    Elem parse(std::string_view s) const {
        auto bad = [&] { return input_error("bad rational literal '" + std::string(s) + "'"); };
        auto slash = s.find('/');
        std::string num(s.substr(0, slash));
        std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
        if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
        mpz_class n(num), d(den);
        if (d <= 0) throw bad();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (slash != std::string_view::npos && (g != 1 || d == 1)) throw bad();
        Elem q(n, d);
        q.canonicalize();
        return q;
    }

private:
    static bool valid_int(const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && s[i] == '-') ++i;
        if (i >= s.size()) return false;
        if (s[i] == '0' && s.size() > i + 1) return false; // no leading zeros
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    }
};

// F_p for a prime p < 2^31. Elements are canonical representatives in [0, p)
// held in 64-bit words, so a product fits before reduction.
class PrimeField {
public:
    using Elem = std::uint64_t;
    static constexpr bool is_prime_field = true;

    PrimeField() : p_(2) {}
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
            throw input_error("field modulus " + std::to_string(p) + " is not an admissible prime");
    }

    std::uint32_t characteristic() const { return static_cast<std::uint32_t>(p_); }
    FieldSpec spec() const { return FieldSpec::prime(static_cast<std::uint32_t>(p_)); }
    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return p_ == 1 ? 0 : 1; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return a * b % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw internal_error("inverse of zero");
        // a^(p-2) mod p
        Elem r = 1, base = a;
        std::uint64_t e = p_ - 2;
        while (e) {
            if (e & 1) r = r * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return r;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    int cmp(Elem a, Elem b) const { return a < b ? -1 : (a == b ? 0 : 1); }

    std::string to_text(Elem a) const { return std::to_string(a); }

    Elem parse(std::string_view s) const {
        if (s.empty() || (s[0] == '0' && s.size() > 1))
            throw input_error("bad residue literal '" + std::string(s) + "'");
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9')
                throw input_error("bad residue literal '" + std::string(s) + "'");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v >= p_)
                throw input_error("residue '" + std::string(s) + "' not in [0, " +
                                  std::to_string(p_) + ")");
        }
        return v;
    }

private:
    std::uint64_t p_;
};

} // namespace fdalg

#pragma once

// Exact integer / rational substrate.  BigInt and BigRat are GMP types;
// BigRat values are kept canonical (reduced, positive denominator) by
// construction through make_rat.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcalc {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat make_rat(long num, long den) {
    return make_rat(BigInt(num), BigInt(den));
}

inline BigInt rat_num(const BigRat& q) { return q.get_num(); }
inline BigInt rat_den(const BigRat& q) { return q.get_den(); }

// floor(q) as an integer.
inline BigInt rat_floor(const BigRat& q) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

// fractional part <q> = q - floor(q), in [0,1).
inline BigRat rat_frac(const BigRat& q) { return q - BigRat(rat_floor(q)); }

// q mod 1, in [0,1).
inline BigRat mod_one(const BigRat& q) { return rat_frac(q); }

inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt int_lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: argument not invertible");
    return r;
}

inline bool is_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// n = r^k for some prime r, k >= 1; returns r if so.
inline std::optional<BigInt> prime_power_base(const BigInt& n) {
    if (n < 2) return std::nullopt;
    if (is_prime(n)) return n;
    // n composite: its prime-power base, if any, is bounded by sqrt(n).
    BigInt m = n;
    for (BigInt r = 2; r * r <= n; ++r) {
        if (m % r == 0) {
            while (m % r == 0) m /= r;
            return m == 1 ? std::optional<BigInt>(r) : std::nullopt;
        }
    }
    return std::nullopt;
}

inline bool is_prime_power(const BigInt& n) { return prime_power_base(n).has_value(); }

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline BigInt isqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// "a/b" with b omitted when 1.
inline std::string rat_to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Doubled quantities (signatures, step heights) print as exact halves.
inline std::string half_to_string(const BigInt& doubled) {
    if (doubled % 2 == 0) return BigInt(doubled / 2).get_str();
    return doubled.get_str() + "/2";
}

inline std::string half_to_string(long doubled) { return half_to_string(BigInt(doubled)); }

// Parses "a", "a/b", or decimal-free rational text; throws on malformed input.
inline BigRat parse_rat(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("cannot parse rational: '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) bad();
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(t));
        BigInt num(t.substr(0, slash));
        BigInt den(t.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        bad();
    }
    return BigRat();  // unreachable
}

}  // namespace knotcalc

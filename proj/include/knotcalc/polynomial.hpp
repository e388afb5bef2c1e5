#pragma once

// Exact univariate polynomials: integer and rational dense polynomials,
// symmetric integer Laurent polynomials, cyclotomics, resultants, and the
// t + 1/t trace substitution that moves circle roots to (-2, 2).

#include <knotcalc/bigint.hpp>

#include <map>
#include <vector>

namespace knotcalc {

class RatPoly;

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs);
    static IntPoly monomial(const BigInt& coeff, long exp);

    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigInt& operator[](long i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const BigInt& s) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const = default;

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;
    IntPoly derivative() const;
    IntPoly compose_power(long k) const;  // p(t^k)
    BigInt content() const;
    IntPoly primitive_part() const;

    // quotient of an exact division; throws std::domain_error if inexact
    IntPoly exact_divide(const IntPoly& divisor) const;
    bool divisible_by(const IntPoly& divisor) const;
    // largest k with t^k | p (0 for p(0) != 0); zero poly -> 0
    long t_valuation() const;
    IntPoly shift_down(long k) const;  // p / t^k, requires t^k | p

    RatPoly to_rat() const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigInt> c_;  // lowest degree first
};

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<long> coeffs);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigRat& operator[](long i) const;
    const std::vector<BigRat>& coeffs() const { return c_; }
    const BigRat& leading() const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const BigRat& s) const;
    RatPoly operator-() const;
    bool operator==(const RatPoly& o) const = default;

    BigRat eval(const BigRat& x) const;
    int sign_at(const BigRat& x) const;
    RatPoly derivative() const;
    RatPoly monic() const;

    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);
    static RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic
    RatPoly squarefree_part() const;

    // clears denominators and the content; sign of the leading coefficient kept
    IntPoly primitive_integer() const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

// Integer Laurent polynomial: coeffs * t^{low + i}.
class LaurentPoly {
public:
    LaurentPoly() : low_(0) {}
    LaurentPoly(IntPoly p, long low);
    static LaurentPoly one() { return LaurentPoly(IntPoly{1}, 0); }

    bool is_zero() const { return p_.is_zero(); }
    long low_exp() const { return low_; }
    long high_exp() const { return low_ + p_.degree(); }
    const IntPoly& poly() const { return p_; }
    BigInt coeff(long exp) const;

    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly compose_power(long k) const;  // L(t^k), k != 0 (negative allowed)
    bool is_symmetric() const;                // L(t) == L(1/t)
    BigRat eval(const BigRat& x) const;       // x != 0
    BigInt eval_int(const BigInt& x) const;   // x in {1,-1} style unit arguments

    std::string to_string(const std::string& var = "t") const;

private:
    IntPoly p_;  // constant term of p_ is nonzero unless zero polynomial
    long low_;
};

// n-th cyclotomic polynomial (cached).
const IntPoly& cyclotomic(long n);

// Resultant over Z via the Sylvester matrix and fraction-free elimination.
BigInt resultant(const IntPoly& a, const IntPoly& b);

// For symmetric L: the unique T with L(t) = T(t + 1/t); circle roots
// e^{2 pi i theta} of L map to x = 2 cos(2 pi theta) in [-2, 2].
IntPoly trace_polynomial(const LaurentPoly& sym);

// Monic invariant factors of a square matrix over Q[t], d_i | d_{i+1}.
std::vector<RatPoly> rat_poly_invariant_factors(std::vector<std::vector<RatPoly>> m);

}  // namespace knotcalc

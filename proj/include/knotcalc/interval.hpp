#pragma once

// Dyadic interval arithmetic with directed rounding (MPFR endpoints) and
// certified enclosures of cos/sin at rational multiples of 2*pi.  Signs are
// decided by doubling the working precision; exact vanishing is certified
// symbolically, never by a numeric threshold.

#include <knotcalc/bigint.hpp>

#include <mpfr.h>

#include <functional>
#include <memory>

namespace knotcalc {

class DyadicInterval {
public:
    explicit DyadicInterval(mpfr_prec_t prec = 64);
    DyadicInterval(const DyadicInterval& o);
    DyadicInterval(DyadicInterval&& o) noexcept;
    DyadicInterval& operator=(DyadicInterval o) noexcept;
    ~DyadicInterval();

    static DyadicInterval from_long(long v, mpfr_prec_t prec);
    static DyadicInterval from_rat(const BigRat& q, mpfr_prec_t prec);
    static DyadicInterval pi(mpfr_prec_t prec);
    // enclosures of cos(2*pi*x), sin(2*pi*x) for rational x
    static DyadicInterval cos2pi(const BigRat& x, mpfr_prec_t prec);
    static DyadicInterval sin2pi(const BigRat& x, mpfr_prec_t prec);
    // enclosure of acos(y)/(2*pi) for a rational interval [ylo, yhi] in [-1, 1]
    static DyadicInterval acos_over_2pi(const BigRat& ylo, const BigRat& yhi, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }

    DyadicInterval operator+(const DyadicInterval& o) const;
    DyadicInterval operator-(const DyadicInterval& o) const;
    DyadicInterval operator*(const DyadicInterval& o) const;
    DyadicInterval operator-() const;
    DyadicInterval div_by(long k) const;  // k != 0

    bool contains_zero() const;
    // -1, 0 (=straddles zero), +1; 0 is "undecided", not "certified zero"
    int sign_hint() const;
    bool is_point() const;

    BigRat lower_rat() const;
    BigRat upper_rat() const;
    // true if this interval is entirely below the other
    bool strictly_below(const DyadicInterval& o) const;

    std::string to_string() const;

private:
    static DyadicInterval trig2pi(const BigRat& x, mpfr_prec_t prec, bool want_sin);
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

// Arithmetic expressions in cos/sin of rational multiples of 2*pi.  Used by
// refine_cyclotomic_sign; the default certificate evaluates the expression
// exactly in a cyclotomic field to decide vanishing.
struct CycExpr;
using CycExprPtr = std::shared_ptr<const CycExpr>;

struct CycExpr {
    enum class Kind { Constant, Cos, Sin, Add, Sub, Mul, Neg };
    Kind kind;
    BigRat value;  // Constant: the value; Cos/Sin: the rational multiple of 2*pi
    CycExprPtr left, right;

    static CycExprPtr constant(const BigRat& v);
    static CycExprPtr cos(const BigRat& turns);
    static CycExprPtr sin(const BigRat& turns);
    static CycExprPtr add(CycExprPtr a, CycExprPtr b);
    static CycExprPtr sub(CycExprPtr a, CycExprPtr b);
    static CycExprPtr mul(CycExprPtr a, CycExprPtr b);
    static CycExprPtr neg(CycExprPtr a);
};

DyadicInterval evaluate(const CycExpr& e, mpfr_prec_t prec);

using ZeroCertificate = std::function<bool(const CycExpr&)>;

// Decides exact vanishing by evaluating in Q[t]/Phi_N(t), N = lcm of the
// trig-argument denominators (and 4, so that sin is expressible).
bool cyclotomic_zero_certificate(const CycExpr& e);

// True sign of the expression: doubles precision until the enclosure excludes
// zero or the certificate fires; throws std::runtime_error("undecided") at the
// iteration cap (unreachable with a correct certificate).
int refine_cyclotomic_sign(const CycExpr& e, const ZeroCertificate& cert = cyclotomic_zero_certificate);

}  // namespace knotcalc

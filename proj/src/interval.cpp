#include <knotcalc/interval.hpp>

#include <knotcalc/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace knotcalc {

DyadicInterval::DyadicInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

DyadicInterval::DyadicInterval(const DyadicInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

DyadicInterval::DyadicInterval(DyadicInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

DyadicInterval& DyadicInterval::operator=(DyadicInterval o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

DyadicInterval::~DyadicInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

DyadicInterval DyadicInterval::from_long(long v, mpfr_prec_t prec) {
    DyadicInterval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

DyadicInterval DyadicInterval::from_rat(const BigRat& q, mpfr_prec_t prec) {
    DyadicInterval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

DyadicInterval DyadicInterval::pi(mpfr_prec_t prec) {
    DyadicInterval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

DyadicInterval DyadicInterval::operator+(const DyadicInterval& o) const {
    DyadicInterval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

DyadicInterval DyadicInterval::operator-(const DyadicInterval& o) const {
    DyadicInterval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

DyadicInterval DyadicInterval::operator*(const DyadicInterval& o) const {
    DyadicInterval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lower endpoint: min over the four products rounded down
    bool first = true;
    const mpfr_srcptr xs[2] = {lo_, hi_};
    const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t, xs[i], ys[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            first = false;
        }
    first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t, xs[i], ys[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

DyadicInterval DyadicInterval::operator-() const {
    DyadicInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

DyadicInterval DyadicInterval::div_by(long k) const {
    if (k == 0) throw std::domain_error("DyadicInterval::div_by zero");
    DyadicInterval r(prec_);
    if (k > 0) {
        mpfr_div_si(r.lo_, lo_, k, MPFR_RNDD);
        mpfr_div_si(r.hi_, hi_, k, MPFR_RNDU);
    } else {
        mpfr_div_si(r.lo_, hi_, k, MPFR_RNDD);
        mpfr_div_si(r.hi_, lo_, k, MPFR_RNDU);
    }
    return r;
}

bool DyadicInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

int DyadicInterval::sign_hint() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

bool DyadicInterval::is_point() const { return mpfr_cmp(lo_, hi_) == 0; }

namespace {

BigRat mpfr_to_rat(const mpfr_t v) {
    if (!mpfr_number_p(v)) throw std::domain_error("non-finite interval endpoint");
    if (mpfr_zero_p(v)) return BigRat(0);
    mpz_t m;
    mpz_init(m);
    const mpfr_exp_t e = mpfr_get_z_2exp(m, v);
    BigInt mant(m);
    mpz_clear(m);
    if (e >= 0) {
        BigInt num = mant;
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return BigRat(num);
    }
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return make_rat(mant, den);
}

}  // namespace

BigRat DyadicInterval::lower_rat() const { return mpfr_to_rat(lo_); }
BigRat DyadicInterval::upper_rat() const { return mpfr_to_rat(hi_); }

bool DyadicInterval::strictly_below(const DyadicInterval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

std::string DyadicInterval::to_string() const {
    std::ostringstream os;
    char* a = nullptr;
    char* b = nullptr;
    mpfr_asprintf(&a, "%.20Rg", lo_);
    mpfr_asprintf(&b, "%.20Rg", hi_);
    os << "[" << a << ", " << b << "]";
    mpfr_free_str(a);
    mpfr_free_str(b);
    return os.str();
}

// Enclosure of f over theta = 2*pi*x (x rational, exact), where f is cos or
// sin.  Exact values at the quarter turns are returned as point intervals;
// otherwise evaluate at both ends of the theta enclosure with directed
// rounding and clamp at +-1 whenever a critical point may lie inside.
DyadicInterval DyadicInterval::trig2pi(const BigRat& x_in, mpfr_prec_t prec, bool want_sin) {
    BigRat x = mod_one(x_in);
    // quarter-turn arguments are exact
    if (x == 0) return DyadicInterval::from_long(want_sin ? 0 : 1, prec);
    if (x == BigRat(1, 2)) return DyadicInterval::from_long(want_sin ? 0 : -1, prec);
    if (x == BigRat(1, 4)) return DyadicInterval::from_long(want_sin ? 1 : 0, prec);
    if (x == BigRat(3, 4)) return DyadicInterval::from_long(want_sin ? -1 : 0, prec);

    DyadicInterval pi = DyadicInterval::pi(prec);
    DyadicInterval t = DyadicInterval::from_rat(2 * x, prec);  // turns in (0,2)
    DyadicInterval theta = pi * t;

    DyadicInterval r(prec);
    mpfr_t a, b;
    mpfr_init2(a, prec);
    mpfr_init2(b, prec);
    auto eval = [&](mpfr_t out, mpfr_srcptr arg, mpfr_rnd_t rnd) {
        if (want_sin)
            mpfr_sin(out, arg, rnd);
        else
            mpfr_cos(out, arg, rnd);
    };
    eval(a, theta.lo_, MPFR_RNDD);
    eval(b, theta.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, a, b, MPFR_RNDD);
    eval(a, theta.lo_, MPFR_RNDU);
    eval(b, theta.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);

    // critical points: cos at k*pi, sin at (k + 1/2)*pi.  In turn units the
    // candidates are the integers (resp. half-integers) adjacent to 2x.
    const BigRat turns = 2 * x;
    const BigRat crit_offset = want_sin ? BigRat(1, 2) : BigRat(0);
    BigInt k0 = rat_floor(turns - crit_offset);
    for (BigInt k = k0; k <= k0 + 1; ++k) {
        const BigRat crit_turns = BigRat(k) + crit_offset;
        if (crit_turns == turns) continue;  // exact hit handled above
        // does crit_turns*pi possibly intersect [theta.lo, theta.hi]?
        DyadicInterval crit = DyadicInterval::from_rat(crit_turns, prec) * pi;
        const bool disjoint = crit.strictly_below(theta) || theta.strictly_below(crit);
        if (disjoint) continue;
        // value at the critical point is +-1 by parity of k
        if (k % 2 == 0)
            mpfr_set_si(r.hi_, 1, MPFR_RNDU);
        else
            mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    }
    return r;
}

DyadicInterval DyadicInterval::cos2pi(const BigRat& x, mpfr_prec_t prec) {
    return trig2pi(x, prec, false);
}

DyadicInterval DyadicInterval::sin2pi(const BigRat& x, mpfr_prec_t prec) {
    return trig2pi(x, prec, true);
}

DyadicInterval DyadicInterval::acos_over_2pi(const BigRat& ylo, const BigRat& yhi,
                                             mpfr_prec_t prec) {
    if (ylo > yhi || ylo < -1 || yhi > 1)
        throw std::invalid_argument("acos_over_2pi: bad interval");
    DyadicInterval r(prec);
    mpfr_t y, t, pi2;
    mpfr_init2(y, prec);
    mpfr_init2(t, prec);
    mpfr_init2(pi2, prec);
    // acos is decreasing: lower bound from yhi, upper from ylo
    mpfr_set_q(y, BigRat(yhi).get_mpq_t(), MPFR_RNDU);
    if (mpfr_cmp_si(y, 1) > 0) mpfr_set_si(y, 1, MPFR_RNDD);
    mpfr_acos(t, y, MPFR_RNDD);
    mpfr_const_pi(pi2, MPFR_RNDU);
    mpfr_mul_2ui(pi2, pi2, 1, MPFR_RNDU);
    mpfr_div(r.lo_, t, pi2, MPFR_RNDD);

    mpfr_set_q(y, BigRat(ylo).get_mpq_t(), MPFR_RNDD);
    if (mpfr_cmp_si(y, -1) < 0) mpfr_set_si(y, -1, MPFR_RNDU);
    mpfr_acos(t, y, MPFR_RNDU);
    mpfr_const_pi(pi2, MPFR_RNDD);
    mpfr_mul_2ui(pi2, pi2, 1, MPFR_RNDD);
    mpfr_div(r.hi_, t, pi2, MPFR_RNDU);
    mpfr_clear(y);
    mpfr_clear(t);
    mpfr_clear(pi2);
    return r;
}

// ------------------------------------------------------------------ CycExpr

CycExprPtr CycExpr::constant(const BigRat& v) {
    auto e = std::make_shared<CycExpr>();
    e->kind = Kind::Constant;
    e->value = v;
    return e;
}
CycExprPtr CycExpr::cos(const BigRat& turns) {
    auto e = std::make_shared<CycExpr>();
    e->kind = Kind::Cos;
    e->value = turns;
    return e;
}
CycExprPtr CycExpr::sin(const BigRat& turns) {
    auto e = std::make_shared<CycExpr>();
    e->kind = Kind::Sin;
    e->value = turns;
    return e;
}
CycExprPtr CycExpr::add(CycExprPtr a, CycExprPtr b) {
    auto e = std::make_shared<CycExpr>();
    e->kind = Kind::Add;
    e->left = std::move(a);
    e->right = std::move(b);
    return e;
}
CycExprPtr CycExpr::sub(CycExprPtr a, CycExprPtr b) {
    auto e = std::make_shared<CycExpr>();
    e->kind = Kind::Sub;
    e->left = std::move(a);
    e->right = std::move(b);
    return e;
}
CycExprPtr CycExpr::mul(CycExprPtr a, CycExprPtr b) {
    auto e = std::make_shared<CycExpr>();
    e->kind = Kind::Mul;
    e->left = std::move(a);
    e->right = std::move(b);
    return e;
}
CycExprPtr CycExpr::neg(CycExprPtr a) {
    auto e = std::make_shared<CycExpr>();
    e->kind = Kind::Neg;
    e->left = std::move(a);
    return e;
}

DyadicInterval evaluate(const CycExpr& e, mpfr_prec_t prec) {
    switch (e.kind) {
        case CycExpr::Kind::Constant:
            return DyadicInterval::from_rat(e.value, prec);
        case CycExpr::Kind::Cos:
            return DyadicInterval::cos2pi(e.value, prec);
        case CycExpr::Kind::Sin:
            return DyadicInterval::sin2pi(e.value, prec);
        case CycExpr::Kind::Add:
            return evaluate(*e.left, prec) + evaluate(*e.right, prec);
        case CycExpr::Kind::Sub:
            return evaluate(*e.left, prec) - evaluate(*e.right, prec);
        case CycExpr::Kind::Mul:
            return evaluate(*e.left, prec) * evaluate(*e.right, prec);
        case CycExpr::Kind::Neg:
            return -evaluate(*e.left, prec);
    }
    throw std::logic_error("evaluate: bad CycExpr");
}

namespace {

// Arithmetic in Q[t]/Phi_N(t) for the zero certificate.
struct CycloElement {
    RatPoly p;
};

RatPoly mod_phi(const RatPoly& p, const RatPoly& phi) {
    return RatPoly::divmod(p, phi).second;
}

long collect_lcm_denominator(const CycExpr& e, long acc) {
    switch (e.kind) {
        case CycExpr::Kind::Cos:
        case CycExpr::Kind::Sin: {
            BigInt l = int_lcm(BigInt(acc), mod_one(e.value).get_den());
            if (!l.fits_slong_p()) throw std::runtime_error("certificate: denominator too large");
            return l.get_si();
        }
        case CycExpr::Kind::Constant:
            return acc;
        case CycExpr::Kind::Neg:
            return collect_lcm_denominator(*e.left, acc);
        default:
            return collect_lcm_denominator(*e.right, collect_lcm_denominator(*e.left, acc));
    }
}

RatPoly zeta_power(long k, long n) {  // t^(k mod n), as a polynomial
    k %= n;
    if (k < 0) k += n;
    std::vector<BigRat> c(k + 1);
    c[k] = 1;
    return RatPoly(std::move(c));
}

RatPoly eval_exact(const CycExpr& e, long n, const RatPoly& phi) {
    switch (e.kind) {
        case CycExpr::Kind::Constant:
            return RatPoly(std::vector<BigRat>{e.value});
        case CycExpr::Kind::Cos: {
            // cos(2 pi q) = (zeta^k + zeta^-k)/2 with k = q*n
            BigRat q = mod_one(e.value);
            long k = BigInt(q * n).get_si();
            RatPoly s = zeta_power(k, n) + zeta_power(-k, n);
            return mod_phi(s * BigRat(1, 2), phi);
        }
        case CycExpr::Kind::Sin: {
            // sin(2 pi q) = (zeta^k - zeta^-k) * (-zeta^{n/4}) / 2, with 4 | n
            BigRat q = mod_one(e.value);
            long k = BigInt(q * n).get_si();
            RatPoly s = zeta_power(k, n) - zeta_power(-k, n);
            RatPoly i_inv = -zeta_power(n / 4, n);
            return mod_phi(s * i_inv * BigRat(1, 2), phi);
        }
        case CycExpr::Kind::Add:
            return mod_phi(eval_exact(*e.left, n, phi) + eval_exact(*e.right, n, phi), phi);
        case CycExpr::Kind::Sub:
            return mod_phi(eval_exact(*e.left, n, phi) - eval_exact(*e.right, n, phi), phi);
        case CycExpr::Kind::Mul:
            return mod_phi(eval_exact(*e.left, n, phi) * eval_exact(*e.right, n, phi), phi);
        case CycExpr::Kind::Neg:
            return -eval_exact(*e.left, n, phi);
    }
    throw std::logic_error("eval_exact: bad CycExpr");
}

}  // namespace

bool cyclotomic_zero_certificate(const CycExpr& e) {
    long n = 4 * collect_lcm_denominator(e, 1);
    RatPoly phi = cyclotomic(n).to_rat();
    return eval_exact(e, n, phi).is_zero();
}

int refine_cyclotomic_sign(const CycExpr& e, const ZeroCertificate& cert) {
    bool certified_checked = false;
    for (mpfr_prec_t prec = 64; prec <= (1 << 20); prec *= 2) {
        DyadicInterval v = evaluate(e, prec);
        int s = v.sign_hint();
        if (s != 0) return s;
        if (!certified_checked) {
            if (cert(e)) return 0;
            certified_checked = true;
        }
    }
    throw std::runtime_error("refine_cyclotomic_sign: undecided at iteration cap");
}

}  // namespace knotcalc

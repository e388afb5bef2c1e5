#include <knotcalc/polynomial.hpp>

#include <knotcalc/matrix.hpp>

#include <mutex>
#include <sstream>

namespace knotcalc {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(const BigInt& coeff, long exp) {
    if (coeff == 0) return IntPoly();
    std::vector<BigInt> c(exp + 1);
    c[exp] = coeff;
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& IntPoly::operator[](long i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
    return c_[i];
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    std::vector<BigInt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return IntPoly(std::move(r));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

BigRat IntPoly::eval(const BigRat& x) const {
    BigRat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + BigRat(*it);
    return v;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_power(long k) const {
    if (k <= 0) throw std::invalid_argument("compose_power: exponent must be positive");
    if (is_zero()) return IntPoly();
    std::vector<BigInt> r(static_cast<size_t>(degree()) * k + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return IntPoly(std::move(r));
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : c_) g = int_gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::exact_divide(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    if (is_zero()) return IntPoly();
    auto [q, r] = RatPoly::divmod(to_rat(), divisor.to_rat());
    if (!r.is_zero()) throw std::domain_error("exact_divide: inexact division");
    std::vector<BigInt> qi(q.degree() + 1);
    for (long i = 0; i <= q.degree(); ++i) {
        if (q[i].get_den() != 1) throw std::domain_error("exact_divide: non-integer quotient");
        qi[i] = q[i].get_num();
    }
    return IntPoly(std::move(qi));
}

bool IntPoly::divisible_by(const IntPoly& divisor) const {
    if (divisor.is_zero()) return is_zero();
    if (is_zero()) return true;
    if (degree() < divisor.degree()) return false;
    auto [q, r] = RatPoly::divmod(to_rat(), divisor.to_rat());
    (void)q;
    return r.is_zero();
}

long IntPoly::t_valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<long>(i);
    return 0;
}

IntPoly IntPoly::shift_down(long k) const {
    if (k == 0) return *this;
    if (t_valuation() < k) throw std::domain_error("shift_down: not divisible by t^k");
    return IntPoly(std::vector<BigInt>(c_.begin() + k, c_.end()));
}

RatPoly IntPoly::to_rat() const {
    std::vector<BigRat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = BigRat(c_[i]);
    return RatPoly(std::move(r));
}

namespace {

template <typename Coeff>
std::string poly_to_string(const std::vector<Coeff>& c, long low, const std::string& var) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < static_cast<long>(c.size()); ++i) {
        if (c[i] == 0) continue;
        Coeff v = c[i];
        const bool neg = v < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) v = -v;
        const long e = low + i;
        std::string coeff_str;
        if constexpr (std::is_same_v<Coeff, BigInt>) {
            coeff_str = v.get_str();
        } else {
            coeff_str = rat_to_string(v);
        }
        if (e == 0) {
            os << coeff_str;
        } else {
            if (coeff_str != "1") os << coeff_str << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace

std::string IntPoly::to_string(const std::string& var) const {
    return poly_to_string(c_, 0, var);
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRat& RatPoly::operator[](long i) const {
    static const BigRat zero = 0;
    if (i < 0 || i >= static_cast<long>(c_.size())) return zero;
    return c_[i];
}

const BigRat& RatPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<BigRat> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<BigRat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<BigRat> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const BigRat& s) const {
    std::vector<BigRat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return RatPoly(std::move(r));
}

BigRat RatPoly::eval(const BigRat& x) const {
    BigRat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

int RatPoly::sign_at(const BigRat& x) const { return sgn(eval(x)); }

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<BigRat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigRat(static_cast<long>(i));
    return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return RatPoly();
    return *this * (BigRat(1) / leading());
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    RatPoly r = num;
    if (num.degree() < den.degree()) return {RatPoly(), r};
    std::vector<BigRat> q(num.degree() - den.degree() + 1);
    while (!r.is_zero() && r.degree() >= den.degree()) {
        const long shift = r.degree() - den.degree();
        BigRat f = r.leading() / den.leading();
        q[shift] = f;
        std::vector<BigRat> sub(r.degree() + 1);
        for (long i = 0; i <= den.degree(); ++i) sub[i + shift] = f * den[i];
        r = r - RatPoly(std::move(sub));
    }
    return {RatPoly(std::move(q)), r};
}

RatPoly RatPoly::gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

RatPoly RatPoly::squarefree_part() const {
    if (is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
    if (degree() == 0) return RatPoly{1};
    RatPoly g = gcd(*this, derivative());
    return divmod(*this, g).first.monic();
}

IntPoly RatPoly::primitive_integer() const {
    if (is_zero()) return IntPoly();
    BigInt lcm_den = 1;
    for (const auto& c : c_) lcm_den = int_lcm(lcm_den, c.get_den());
    std::vector<BigInt> z(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) z[i] = BigInt(c_[i] * BigRat(lcm_den));
    IntPoly p{std::move(z)};
    IntPoly prim = p.primitive_part();
    return leading() < 0 ? -prim : prim;
}

std::string RatPoly::to_string(const std::string& var) const {
    return poly_to_string(c_, 0, var);
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(IntPoly p, long low) : p_(std::move(p)), low_(low) {
    const long v = p_.t_valuation();
    if (!p_.is_zero() && v > 0) {
        p_ = p_.shift_down(v);
        low_ += v;
    }
    if (p_.is_zero()) low_ = 0;
}

BigInt LaurentPoly::coeff(long exp) const { return p_[exp - low_]; }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    return LaurentPoly(p_ * o.p_, low_ + o.low_);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const long lo = std::min(low_, o.low_);
    const long hi = std::max(high_exp(), o.high_exp());
    std::vector<BigInt> c(hi - lo + 1);
    for (long e = lo; e <= hi; ++e) c[e - lo] = coeff(e) + o.coeff(e);
    return LaurentPoly(IntPoly(std::move(c)), lo);
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(-p_, low_); }

LaurentPoly LaurentPoly::compose_power(long k) const {
    if (k == 0) throw std::invalid_argument("LaurentPoly::compose_power: zero exponent");
    if (is_zero()) return LaurentPoly();
    if (k > 0) return LaurentPoly(p_.compose_power(k), low_ * k);
    // L(t^k), k < 0: reverse the coefficients
    const long n = p_.degree();
    std::vector<BigInt> rev(n + 1);
    for (long i = 0; i <= n; ++i) rev[i] = p_[n - i];
    return LaurentPoly(IntPoly(std::move(rev)).compose_power(-k), high_exp() * k);
}

bool LaurentPoly::is_symmetric() const {
    if (is_zero()) return true;
    const long n = p_.degree();
    if (low_ != -(low_ + n)) return false;
    for (long i = 0; i <= n; ++i)
        if (p_[i] != p_[n - i]) return false;
    return true;
}

BigRat LaurentPoly::eval(const BigRat& x) const {
    if (x == 0) throw std::domain_error("LaurentPoly::eval at 0");
    BigRat v = p_.eval(x);
    if (low_ >= 0) {
        for (long i = 0; i < low_; ++i) v *= x;
    } else {
        for (long i = 0; i < -low_; ++i) v /= x;
    }
    return v;
}

BigInt LaurentPoly::eval_int(const BigInt& x) const {
    BigRat v = eval(BigRat(x));
    if (v.get_den() != 1) throw std::domain_error("LaurentPoly::eval_int: non-integer value");
    return v.get_num();
}

std::string LaurentPoly::to_string(const std::string& var) const {
    return poly_to_string(p_.coeffs(), low_, var);
}

// ------------------------------------------------------- derived machinery

const IntPoly& cyclotomic(long n) {
    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const IntPoly&(long)> get = [&](long k) -> const IntPoly& {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        std::vector<BigInt> tk(k + 1);
        tk[0] = -1;
        tk[k] = 1;
        IntPoly num(std::move(tk));  // t^k - 1
        for (long d = 1; d < k; ++d)
            if (k % d == 0) num = num.exact_divide(get(d));
        return cache.emplace(k, std::move(num)).first->second;
    };
    return get(n);
}

BigInt resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    const long m = a.degree(), n = b.degree();
    if (m == 0) return int_pow(a[0], n);
    if (n == 0) return int_pow(b[0], m);
    IntMatrix syl(m + n, m + n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) syl.at(i, i + j) = a[m - j];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) syl.at(n + i, i + j) = b[n - j];
    return bareiss_determinant(syl);
}

IntPoly trace_polynomial(const LaurentPoly& sym) {
    if (!sym.is_symmetric())
        throw std::invalid_argument("trace_polynomial: polynomial is not symmetric");
    if (sym.is_zero()) return IntPoly();
    const long g = sym.high_exp();
    // p_k(x) with t^k + t^{-k} = p_k(t + 1/t): p_0 = 2, p_1 = x,
    // p_k = x p_{k-1} - p_{k-2}
    std::vector<IntPoly> p(g + 1);
    p[0] = IntPoly{2};
    if (g >= 1) p[1] = IntPoly{0, 1};
    const IntPoly x = IntPoly{0, 1};
    for (long k = 2; k <= g; ++k) p[k] = x * p[k - 1] - p[k - 2];
    IntPoly t = IntPoly::monomial(sym.coeff(0), 0);
    for (long k = 1; k <= g; ++k) t = t + p[k] * sym.coeff(k);
    return t;
}

std::vector<RatPoly> rat_poly_invariant_factors(std::vector<std::vector<RatPoly>> m) {
    const long n = static_cast<long>(m.size());
    for (auto& row : m)
        if (static_cast<long>(row.size()) != n)
            throw std::invalid_argument("rat_poly_invariant_factors: non-square matrix");

    auto reduce_at = [&](long k) {
        for (;;) {
            // lowest-degree nonzero entry in the trailing block becomes the pivot
            long pr = -1, pc = -1;
            for (long i = k; i < n; ++i)
                for (long j = k; j < n; ++j)
                    if (!m[i][j].is_zero() &&
                        (pr < 0 || m[i][j].degree() < m[pr][pc].degree())) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0) return false;
            std::swap(m[k], m[pr]);
            for (long i = 0; i < n; ++i) std::swap(m[i][k], m[i][pc]);

            bool dirty = false;
            for (long i = k + 1; i < n; ++i) {
                if (m[i][k].is_zero()) continue;
                RatPoly q = RatPoly::divmod(m[i][k], m[k][k]).first;
                for (long j = k; j < n; ++j) m[i][j] = m[i][j] - q * m[k][j];
                if (!m[i][k].is_zero()) dirty = true;
            }
            for (long j = k + 1; j < n; ++j) {
                if (m[k][j].is_zero()) continue;
                RatPoly q = RatPoly::divmod(m[k][j], m[k][k]).first;
                for (long i = k; i < n; ++i) m[i][j] = m[i][j] - q * m[i][k];
                if (!m[k][j].is_zero()) dirty = true;
            }
            if (!dirty) return true;
        }
    };

    long rank = 0;
    for (long k = 0; k < n; ++k) {
        if (!reduce_at(k)) break;
        ++rank;
    }
    std::vector<RatPoly> d(n);
    for (long k = 0; k < rank; ++k) d[k] = m[k][k].monic();
    // enforce d_i | d_{i+1} by gcd/lcm combination of diagonal pairs
    bool changed = true;
    while (changed) {
        changed = false;
        for (long k = 0; k + 1 < rank; ++k) {
            if (d[k].is_zero()) continue;
            if (RatPoly::divmod(d[k + 1], d[k]).second.is_zero()) continue;
            RatPoly g = RatPoly::gcd(d[k], d[k + 1]);
            RatPoly l = RatPoly::divmod(d[k] * d[k + 1], g).first.monic();
            d[k] = g;
            d[k + 1] = l;
            changed = true;
        }
    }
    return d;
}

}  // namespace knotcalc

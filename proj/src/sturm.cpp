#include <knotcalc/sturm.hpp>

#include <algorithm>

namespace knotcalc {

namespace {

std::vector<RatPoly> chain_of_squarefree(const RatPoly& f) {
    std::vector<RatPoly> chain{f};
    if (f.degree() >= 1) {
        chain.push_back(f.derivative());
        while (!chain.back().is_zero() && chain.back().degree() >= 1) {
            RatPoly r = RatPoly::divmod(chain[chain.size() - 2], chain.back()).second;
            if (r.is_zero()) break;
            chain.push_back(-r);
        }
    }
    return chain;
}

void isolate(const RatPoly& f, const std::vector<RatPoly>& chain, const BigRat& a,
             const BigRat& b, std::vector<RootInterval>& out) {
    // invariant: f(a) != 0, f(b) != 0
    const long n = sturm_count(chain, a, b);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({a, b});
        return;
    }
    BigRat m = (a + b) / 2;
    if (f.sign_at(m) != 0) {
        isolate(f, chain, a, m, out);
        isolate(f, chain, m, b, out);
        return;
    }
    // m is an exact (simple) root: emit it and shrink a root-free collar
    BigRat delta = std::min(m - a, b - m) / 2;
    BigRat lo = m - delta, hi = m + delta;
    while (f.sign_at(lo) == 0 || f.sign_at(hi) == 0 || sturm_count(chain, lo, hi) != 1) {
        delta = delta / 2;
        lo = m - delta;
        hi = m + delta;
    }
    out.push_back({m, m});
    isolate(f, chain, a, lo, out);
    isolate(f, chain, hi, b, out);
}

}  // namespace

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    return chain_of_squarefree(p.squarefree_part());
}

long sturm_variations(const std::vector<RatPoly>& chain, const BigRat& x) {
    long v = 0;
    int prev = 0;
    for (const auto& f : chain) {
        int s = f.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long sturm_count(const std::vector<RatPoly>& chain, const BigRat& a, const BigRat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

std::vector<RootInterval> sturm_isolate_roots(const RatPoly& p, const BigRat& a,
                                              const BigRat& b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_isolate_roots: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("sturm_isolate_roots: empty interval");
    RatPoly f = p.squarefree_part();
    // rational roots at the endpoints are outside the open interval
    while (!f.is_zero() && f.sign_at(a) == 0)
        f = RatPoly::divmod(f, RatPoly(std::vector<BigRat>{-a, 1})).first;
    while (!f.is_zero() && f.sign_at(b) == 0)
        f = RatPoly::divmod(f, RatPoly(std::vector<BigRat>{-b, 1})).first;
    if (f.degree() <= 0) return {};
    std::vector<RatPoly> chain = chain_of_squarefree(f);
    std::vector<RootInterval> out;
    isolate(f, chain, a, b, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

RootInterval bisect_root(const RatPoly& squarefree, const RootInterval& iv) {
    if (iv.exact()) return iv;
    const BigRat m = iv.midpoint();
    const int sm = squarefree.sign_at(m);
    if (sm == 0) return {m, m};
    const int sl = squarefree.sign_at(iv.lo);
    if (sl != 0 && sl != sm) return {iv.lo, m};
    return {m, iv.hi};
}

RootInterval refine_root(const RatPoly& squarefree, RootInterval iv, const BigRat& eps) {
    while (!iv.exact() && iv.hi - iv.lo > eps) iv = bisect_root(squarefree, iv);
    return iv;
}

}  // namespace knotcalc

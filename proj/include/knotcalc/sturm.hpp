#pragma once

// Sturm-chain real root isolation on an open rational interval.

#include <knotcalc/polynomial.hpp>

namespace knotcalc {

struct RootInterval {
    BigRat lo, hi;  // lo == hi when the root was hit exactly
    bool exact() const { return lo == hi; }
    BigRat midpoint() const { return (lo + hi) / 2; }
};

// Sturm chain of the squarefree part of p.
std::vector<RatPoly> sturm_chain(const RatPoly& p);

// Sign variations of the chain evaluated at x.
long sturm_variations(const std::vector<RatPoly>& chain, const BigRat& x);

// Number of distinct real roots in the open interval (a, b); endpoints must
// not be roots of the (squarefree) polynomial behind the chain.
long sturm_count(const std::vector<RatPoly>& chain, const BigRat& a, const BigRat& b);

// One disjoint isolating interval per distinct real root of p in (a, b);
// squarefree part is taken internally.  Throws on the zero polynomial.
std::vector<RootInterval> sturm_isolate_roots(const RatPoly& p, const BigRat& a, const BigRat& b);

// Halves the width of a (non-exact) isolating interval, preserving isolation.
RootInterval bisect_root(const RatPoly& squarefree, const RootInterval& iv);

// Refine until width <= eps (exact intervals are returned as-is).
RootInterval refine_root(const RatPoly& squarefree, RootInterval iv, const BigRat& eps);

}  // namespace knotcalc

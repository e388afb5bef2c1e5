#pragma once

// Signature step profiles: the full Levine-Tristram signature function of a
// knot as a finite list of jumps with exact rational or isolated-algebraic
// locations.  Profiles compose under mirror / connected sum / cable pullback,
// which is what makes the coset-sum checks fast and exact.

#include <knotcalc/polynomial.hpp>
#include <knotcalc/sturm.hpp>

#include <memory>
#include <mutex>
#include <vector>

namespace knotcalc {

// argument in [0,1]; signature stored doubled so jump averages stay integral
struct SignatureValue {
    BigRat argument;
    long signature2 = 0;
    long nullity = 0;
    bool is_jump = false;
};

// theta in (0,1) with x = 2cos(2*pi*theta) an isolated root of a squarefree
// integer polynomial and theta certified irrational (all cyclotomic factors
// of the source Alexander polynomial are split off before roots get here).
class CircleRoot {
public:
    CircleRoot(RatPoly squarefree, RootInterval x_interval, bool upper_half);

    // rational enclosure of theta with width <= eps; shrinks monotonically
    std::pair<BigRat, BigRat> enclosure(const BigRat& eps) const;
    bool same_root(const CircleRoot& o) const;  // exact decision
    bool upper_half() const { return upper_half_; }
    const RatPoly& defining_poly() const { return f_; }
    RootInterval x_interval() const;

private:
    RatPoly f_;  // monic squarefree with the isolated x-root
    bool upper_half_;
    mutable RootInterval x_;
    mutable long prec_ = 64;
    mutable std::pair<BigRat, BigRat> cached_;
    mutable bool have_cache_ = false;
    mutable std::mutex mu_;
};

using CircleRootPtr = std::shared_ptr<const CircleRoot>;

// A jump location: either an exact rational or (root + shift)/scale for an
// irrational CircleRoot argument.  Closed under x -> (x + k)/r pullbacks.
class JumpLoc {
public:
    static JumpLoc rational(BigRat x);
    static JumpLoc algebraic(CircleRootPtr root, BigRat shift, BigRat scale);

    bool is_rational() const { return rational_.has_value(); }
    const BigRat& rational_value() const { return *rational_; }

    JumpLoc pulled_back(long k, long r) const;  // (loc + k) / r
    std::pair<BigRat, BigRat> enclosure(const BigRat& eps) const;

    bool equals(const JumpLoc& o) const;
    // -1 / 0 / +1; throws if two distinct algebraic locations cannot be
    // separated at the refinement cap
    static int compare(const JumpLoc& a, const JumpLoc& b);
    int compare_rational(const BigRat& x) const;  // sign of (loc - x)

    std::string to_string() const;

private:
    std::optional<BigRat> rational_;
    CircleRootPtr root_;
    BigRat shift_, scale_;
};

struct ProfileJump {
    JumpLoc loc;
    long height2;  // doubled signature jump across the location
    long nullity;  // nullity of the underlying form at the location
};

class SignatureProfile {
public:
    // plateau2[i] is the doubled signature on the i-th open plateau;
    // plateau2.front() == plateau2.back() == 0
    std::vector<ProfileJump> jumps;
    std::vector<long> plateau2;

    static SignatureProfile zero();
    bool all_rational() const;
    bool is_zero_function() const;
    long max_abs2() const;

    SignatureValue evaluate(const BigRat& x_in_0_1) const;
    SignatureProfile negated() const;
    // x -> f(r x mod 1)
    SignatureProfile pulled_back(long r) const;
    static SignatureProfile merge(const SignatureProfile& a, const SignatureProfile& b);

    // rational sample points, one inside each plateau
    std::vector<BigRat> plateau_samples() const;
    void check_consistent() const;
};

}  // namespace knotcalc

#pragma once

/// Certified rational enclosures for the transcendental quantities the
/// bounds and constructions need: e^x, sqrt(n), and pi. Every interval
/// [lo, hi] provably contains the true value; widths shrink on request.
/// Strict comparisons are then decided against the appropriate endpoint.

#include "recipart/rational.hpp"

namespace recipart::enclosure {

using core::Rational;

struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
/// Requires both intervals non-negative.
Interval mul(const Interval& a, const Interval& b);
/// Requires b.lo > 0.
Interval div(const Interval& a, const Interval& b);

/// e^x for rational x (any sign), relative width <= rel_tol.
Interval exp_enclosure(const Rational& x, const Rational& rel_tol);
/// Monotone image of an interval argument.
Interval exp_enclosure(const Interval& x, const Rational& rel_tol);

/// sqrt(n) for integer n >= 0, absolute width <= abs_tol.
Interval sqrt_enclosure(i64 n, const Rational& abs_tol);

/// pi via the Machin formula with alternating-series truncation brackets.
Interval pi_enclosure(const Rational& abs_tol);

/// Largest integer strictly below x, where x is given by an enclosure
/// refiner: refine(tol) must return enclosures of x of width <= tol.
/// Requires x provably non-integer (refinement must separate it from
/// every integer); used for interval endpoints like m*e^alpha.
template <class Refine>
i64 floor_strictly_below(Refine refine) {
    Rational tol(1, 16);
    for (int rounds = 0; rounds < 64; ++rounds) {
        const Interval iv = refine(tol);
        mpz_class flo, fhi;
        mpz_fdiv_q(flo.get_mpz_t(), iv.lo.num().get_mpz_t(), iv.lo.den().get_mpz_t());
        mpz_fdiv_q(fhi.get_mpz_t(), iv.hi.num().get_mpz_t(), iv.hi.den().get_mpz_t());
        // decided once no integer lies within the enclosure
        if (flo == fhi && !iv.lo.is_integer())
            return static_cast<i64>(flo.get_si());
        tol = tol * Rational(1, 64);
    }
    throw std::runtime_error("floor_strictly_below: failed to separate from integers");
}

} // namespace recipart::enclosure

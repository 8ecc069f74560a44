#include "recipart/enclosure.hpp"

namespace recipart::enclosure {

Interval add(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

Interval sub(const Interval& a, const Interval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

Interval mul(const Interval& a, const Interval& b) {
    if (a.lo.is_negative() || b.lo.is_negative())
        throw std::invalid_argument("enclosure::mul: negative operand");
    return {a.lo * b.lo, a.hi * b.hi};
}

Interval div(const Interval& a, const Interval& b) {
    if (!b.lo.is_positive())
        throw std::invalid_argument("enclosure::div: divisor not positive");
    return {a.lo / b.hi, a.hi / b.lo};
}

namespace {

// e^y for 0 <= y <= 1/2: partial Taylor sum brackets from below; the tail
// is bounded by a geometric series since y/(N+2) < 1/2.
Interval exp_small(const Rational& y, const Rational& rel_tol) {
    Rational term(1);
    Rational sum(1);
    for (int k = 1;; ++k) {
        term = term * y / Rational(k);
        sum += term;
        // tail <= term * y/(k+1) * 1/(1 - y/(k+2)) <= term * 2*y/(k+1)
        const Rational tail_bound = term * Rational(2) * y / Rational(k + 1);
        if (tail_bound <= sum * rel_tol || k > 64)
            return {sum, sum + tail_bound};
    }
}

} // namespace

Interval exp_enclosure(const Rational& x, const Rational& rel_tol) {
    if (!rel_tol.is_positive())
        throw std::invalid_argument("exp_enclosure: rel_tol must be positive");
    if (x.is_negative()) {
        // e^x = 1 / e^(-x)
        const Interval pos = exp_enclosure(-x, rel_tol);
        return {Rational(1) / pos.hi, Rational(1) / pos.lo};
    }
    // halve the argument until it is <= 1/2, then square back up;
    // each squaring doubles the relative width, so tighten accordingly
    int shifts = 0;
    Rational y = x;
    const Rational half(1, 2);
    while (y > half) {
        y = y * half;
        ++shifts;
    }
    Rational tol = rel_tol * Rational(1, 4);
    for (int i = 0; i < shifts; ++i) tol = tol * half;
    Interval r = exp_small(y, tol);
    for (int i = 0; i < shifts; ++i) r = mul(r, r);
    return r;
}

Interval exp_enclosure(const Interval& x, const Rational& rel_tol) {
    const Interval lo = exp_enclosure(x.lo, rel_tol);
    const Interval hi = exp_enclosure(x.hi, rel_tol);
    return {lo.lo, hi.hi};
}

Interval sqrt_enclosure(i64 n, const Rational& abs_tol) {
    if (n < 0) throw std::invalid_argument("sqrt_enclosure: n must be >= 0");
    if (!abs_tol.is_positive())
        throw std::invalid_argument("sqrt_enclosure: abs_tol must be positive");
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), mpz_class(static_cast<long>(n)).get_mpz_t());
    Rational lo(root, 1);
    Rational hi = lo + Rational(1);
    const Rational target(static_cast<long>(n));
    if (lo * lo == target) return {lo, lo};
    while (hi - lo > abs_tol) {
        const Rational mid = (lo + hi) * Rational(1, 2);
        if (mid * mid <= target) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

Interval pi_enclosure(const Rational& abs_tol) {
    if (!abs_tol.is_positive())
        throw std::invalid_argument("pi_enclosure: abs_tol must be positive");
    // Machin: pi = 16*arctan(1/5) - 4*arctan(1/239). Both series alternate,
    // so consecutive partial sums bracket the truth.
    const auto arctan_brackets = [&](i64 inv_x, const Rational& tol) {
        const Rational x2 = Rational(1, inv_x) * Rational(1, inv_x);
        Rational term(1, inv_x);
        Rational sum = term;
        Interval out{sum, sum};
        for (int k = 1;; ++k) {
            term = term * x2;
            const Rational delta = term / Rational(2 * k + 1);
            if (k % 2 == 1) {
                out.lo = sum - delta;
                sum = out.lo;
            } else {
                out.hi = sum + delta;
                sum = out.hi;
            }
            if (delta < tol) break;
        }
        if (out.hi < out.lo) std::swap(out.lo, out.hi);
        return out;
    };
    const Rational tol = abs_tol * Rational(1, 64);
    const Interval a = arctan_brackets(5, tol);
    const Interval b = arctan_brackets(239, tol);
    const Rational lo = Rational(16) * a.lo - Rational(4) * b.hi;
    const Rational hi = Rational(16) * a.hi - Rational(4) * b.lo;
    return {lo, hi};
}

} // namespace recipart::enclosure

#include "recipart/bounds.hpp"

#include <algorithm>

#include "recipart/search.hpp"
#include "recipart/smoothness.hpp"

namespace recipart::bounds {

mpz_class count_distinct_partitions(i64 n) {
    if (n < 0) throw std::invalid_argument("count_distinct_partitions: n must be >= 0");
    // dp over Prod (1 + x^k)
    std::vector<mpz_class> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (i64 k = 1; k <= n; ++k)
        for (i64 j = n; j >= k; --j)
            dp[static_cast<std::size_t>(j)] += dp[static_cast<std::size_t>(j - k)];
    return dp[static_cast<std::size_t>(n)];
}

mpz_class count_distinct_prime_partitions(i64 n) {
    if (n < 0) throw std::invalid_argument("count_distinct_prime_partitions: n must be >= 0");
    std::vector<mpz_class> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    if (n >= 2) {
        for (i64 p : core::prime_table(n)) {
            if (p > n) break;
            for (i64 j = n; j >= p; --j)
                dp[static_cast<std::size_t>(j)] += dp[static_cast<std::size_t>(j - p)];
        }
    }
    return dp[static_cast<std::size_t>(n)];
}

namespace {

i64 mod_inverse(i64 b, i64 q) {
    // extended Euclid; q prime, gcd(b, q) = 1
    i64 t = 0, new_t = 1, r = q, new_r = b % q;
    while (new_r != 0) {
        const i64 quot = r / new_r;
        std::swap(t -= quot * new_t, new_t);
        std::swap(r -= quot * new_r, new_r);
    }
    return ((t % q) + q) % q;
}

} // namespace

CoverageWitness residue_coverage(i64 q, i64 x) {
    if (!core::is_prime(q)) throw std::invalid_argument("residue_coverage: q must be prime");
    if (x < 0) throw std::invalid_argument("residue_coverage: x must be >= 0");
    CoverageWitness w{q, x, {}};
    w.covered.insert(0);   // empty B'
    // inverses of the candidate parts (parts divisible by q are excluded:
    // in the scaled world of the proof, B' consists of b/q values coprime to q)
    std::vector<i64> inv(static_cast<std::size_t>(x) + 1, 0);
    for (i64 b = 1; b <= x; ++b)
        if (b % q != 0) inv[static_cast<std::size_t>(b)] = mod_inverse(b % q, q);

    // DFS over distinct parts in ascending order, total <= x
    auto rec = [&](auto&& self, i64 next, i64 left, i64 residue) -> void {
        for (i64 b = next; b <= left; ++b) {
            if (b % q == 0) continue;
            const i64 r2 = (residue + inv[static_cast<std::size_t>(b)]) % q;
            w.covered.insert(r2);
            self(self, b + 1, left - b, r2);
        }
    };
    rec(rec, 1, x, 0);
    return w;
}

std::optional<i64> find_hard_numerator(i64 q, i64 x, i64 p_lo, i64 p_hi) {
    if (p_lo > p_hi) throw std::invalid_argument("find_hard_numerator: empty interval");
    const CoverageWitness w = residue_coverage(q, x);
    // after q consecutive values every residue has been seen once
    const i64 hi = std::min(p_hi, p_lo + q - 1);
    for (i64 p = p_lo; p <= hi; ++p)
        if (!w.covered.count(((p % q) + q) % q)) return p;
    return std::nullopt;
}

MinTermsBound min_terms_bound(const Rational& alpha) {
    if (!alpha.is_positive())
        throw std::invalid_argument("min_terms_bound: alpha must be positive");
    if (alpha > Rational(20))
        throw ResourceLimitError("min_terms_bound: alpha too large for exact harmonic walk");
    mpq_class h(0);
    i64 r = 0;
    while (Rational(mpq_class(h)) < alpha) {
        ++r;
        h += mpq_class(1, static_cast<long>(r));
    }
    return {r, r * (r + 1) / 2};
}

std::vector<BoundReport> bound_report(i64 n_max, const BoundReportOptions& opt) {
    if (n_max < 1) throw std::invalid_argument("bound_report: n_max must be >= 1");
    const enclosure::Rational tol9(1, 1'000'000'000);
    const enclosure::Interval pi = enclosure::pi_enclosure(tol9);
    const enclosure::Interval sqrt3 = enclosure::sqrt_enclosure(3, tol9);
    const enclosure::Interval c = enclosure::div(pi, sqrt3);

    std::vector<BoundReport> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (i64 n = 1; n <= n_max; ++n) {
        BoundReport r;
        r.n = n;
        r.q_count = count_distinct_partitions(n);
        r.p_count = count_distinct_prime_partitions(n);
        if (n <= opt.spectrum_max_n) {
            spectrum::EnumLimits lim{opt.spectrum_ceiling};
            r.spectrum_size = spectrum::spectrum_size(n, {}, lim);
        }
        const enclosure::Interval root = enclosure::sqrt_enclosure(n, tol9);
        r.upper_envelope =
            enclosure::exp_enclosure(enclosure::mul(c, root), opt.envelope_rel_tol);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace recipart::bounds

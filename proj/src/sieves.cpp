#include "recipart/sieves.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "recipart/smoothness.hpp"

namespace recipart::sieves {

using core::is_powersmooth;
using core::iroot;
using core::prime_table;

namespace {

void check_args(i64 limit, i64 x, i64 ceiling) {
    if (limit < 1) throw std::invalid_argument("sieve: limit must be >= 1");
    if (x < 2) throw std::invalid_argument("sieve: bound must be >= 2");
    if (limit > ceiling)
        throw ResourceLimitError("sieve: limit " + std::to_string(limit) +
                                 " exceeds ceiling " + std::to_string(ceiling));
}

std::vector<i64> primes_up_to(i64 x) {
    std::vector<i64> ps;
    for (i64 p : prime_table(x)) {
        if (p > x) break;
        ps.push_back(p);
    }
    return ps;
}

// Generate multiplicatively from the prime set, smallest first.
std::vector<i64> generate_by_merge(i64 limit, const std::vector<i64>& primes) {
    std::priority_queue<i64, std::vector<i64>, std::greater<>> heap;
    heap.push(1);
    std::vector<i64> out;
    while (!heap.empty()) {
        const i64 v = heap.top();
        heap.pop();
        if (!out.empty() && out.back() == v) continue;   // drop duplicates
        out.push_back(v);
        for (i64 p : primes)
            if (v <= limit / p) heap.push(v * p);
    }
    return out;
}

// Sieve of largest prime factor over [1, limit].
std::vector<i64> smooth_by_sieve(i64 limit, i64 x) {
    std::vector<std::int32_t> lpf(static_cast<std::size_t>(limit) + 1, 1);
    for (i64 p = 2; p <= limit; ++p) {
        if (lpf[static_cast<std::size_t>(p)] != 1) continue;
        for (i64 q = p; q <= limit; q += p)
            lpf[static_cast<std::size_t>(q)] = static_cast<std::int32_t>(p);
    }
    std::vector<i64> out;
    for (i64 v = 1; v <= limit; ++v)
        if (lpf[static_cast<std::size_t>(v)] <= x) out.push_back(v);
    return out;
}

} // namespace

SieveResult smooth_numbers(i64 limit, i64 x, i64 ceiling) {
    check_args(limit, x, ceiling);
    const auto primes = primes_up_to(x);
    SieveResult r{limit, x, SieveKind::Smooth, {}};
    if (primes.size() <= 6)
        r.values = generate_by_merge(limit, primes);
    else
        r.values = smooth_by_sieve(limit, x);
    return r;
}

SieveResult powersmooth_numbers(i64 limit, i64 x, i64 ceiling) {
    check_args(limit, x, ceiling);
    // Powersmooth = smooth with each prime capped at its largest power <= x.
    std::vector<i64> prime_powers;
    for (i64 p : primes_up_to(x)) {
        i64 cap = p;
        while (cap <= x / p) cap *= p;
        prime_powers.push_back(cap);
    }
    const auto primes = primes_up_to(x);
    SieveResult r{limit, x, SieveKind::Powersmooth, {}};
    if (primes.size() <= 6) {
        // Enumerate products of capped prime powers directly.
        auto gen = [&](auto&& self, std::size_t i, i64 acc) -> void {
            if (i == primes.size()) {
                r.values.push_back(acc);
                return;
            }
            const i64 p = primes[i];
            for (i64 q = 1; acc <= limit / q; q *= p) {
                self(self, i + 1, acc * q);
                if (q > prime_powers[i] / p) break;
            }
        };
        gen(gen, 0, 1);
        std::sort(r.values.begin(), r.values.end());
    } else {
        for (i64 v = 1; v <= limit; ++v)
            if (is_powersmooth(v, x)) r.values.push_back(v);
    }
    return r;
}

std::vector<i64> powersmooth_in_class(i64 lo, i64 hi, i64 x, i64 modulus,
                                      i64 residue, i64 ceiling) {
    if (lo > hi) throw std::invalid_argument("powersmooth_in_class: lo > hi");
    if (modulus < 1) throw std::invalid_argument("powersmooth_in_class: modulus must be >= 1");
    check_args(std::max<i64>(hi, 1), x, ceiling);
    std::vector<i64> out;
    const i64 r = ((residue % modulus) + modulus) % modulus;
    i64 first = lo + 1;
    const i64 shift = ((r - first) % modulus + modulus) % modulus;
    for (i64 v = first + shift; v <= hi; v += modulus)
        if (v >= 1 && is_powersmooth(v, x)) out.push_back(v);
    return out;
}

DoublingChain doubling_powersmooth_chain(i64 m, i64 stop_at, i64 start) {
    if (m < (1LL << 12))
        throw std::invalid_argument("doubling_powersmooth_chain: m must be >= 2^12");
    return doubling_chain_with_bound(iroot(m, 12), stop_at, start);
}

DoublingChain doubling_chain_with_bound(i64 bound, i64 stop_at, i64 start) {
    if (bound < 2)
        throw std::invalid_argument("doubling_chain_with_bound: bound must be >= 2");
    if (start < 1)
        throw std::invalid_argument("doubling_chain_with_bound: start must be >= 1");
    DoublingChain chain;
    chain.bound = bound;
    chain.values.push_back(start);
    while (chain.values.back() < stop_at) {
        const i64 prev = chain.values.back();
        i64 next = 0;
        for (i64 v = 2 * prev; v > prev; --v) {
            if (is_powersmooth(v, chain.bound)) { next = v; break; }
        }
        if (next == 0 || next == prev) {
            chain.stalled = true;
            break;
        }
        chain.values.push_back(next);
    }
    // Leading run e_i = start * 2^(i-1); with start = 1 this is the
    // power-of-two prefix of the construction.
    std::size_t prefix = 1;
    while (prefix < chain.values.size() &&
           chain.values[prefix] == 2 * chain.values[prefix - 1])
        ++prefix;
    chain.power_of_two_prefix = prefix;
    for (std::size_t i = 1; i < chain.values.size(); ++i) {
        if (i < prefix) continue;   // doubling steps are fine by definition
        if (2 * chain.values[i] <= 3 * chain.values[i - 1])
            chain.slow_steps.push_back(i);
    }
    return chain;
}

} // namespace recipart::sieves

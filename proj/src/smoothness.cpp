#include "recipart/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace recipart::core {

namespace {

std::vector<i64> sieve_primes(i64 limit) {
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<i64> primes;
    for (i64 p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        primes.push_back(p);
        for (i64 q = p * p; q <= limit; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }
    return primes;
}

std::mutex table_mutex;
std::vector<i64> table;       // primes up to table_limit
i64 table_limit = 0;

} // namespace

const std::vector<i64>& prime_table(i64 limit) {
    if (limit < 2) limit = 2;
    std::lock_guard<std::mutex> lock(table_mutex);
    if (limit > table_limit) {
        table = sieve_primes(std::max(limit, kDefaultPrimeLimit));
        table_limit = std::max(limit, kDefaultPrimeLimit);
    }
    return table;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : prime_table(std::max<i64>(2, iroot(n, 2)))) {
        if (p * p > n) break;
        if (n % p == 0) return false;
    }
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<i64, int>> out;
    const auto& primes = prime_table(std::max<i64>(2, iroot(n, 2)));
    for (i64 p : primes) {
        if (p * p > n) break;
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_smooth(i64 n, i64 x) {
    if (n < 1) throw std::invalid_argument("is_smooth: n must be >= 1");
    if (x < 2) throw std::invalid_argument("is_smooth: x must be >= 2");
    for (const auto& [p, e] : factorize(n))
        if (p > x) return false;
    return true;
}

bool is_powersmooth(i64 n, i64 x) {
    if (n < 1) throw std::invalid_argument("is_powersmooth: n must be >= 1");
    if (x < 2) throw std::invalid_argument("is_powersmooth: x must be >= 2");
    for (const auto& [p, e] : factorize(n)) {
        i64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (pe > x) return false;
    }
    return true;
}

i64 largest_prime_power_divisor(i64 n) {
    if (n < 1) throw std::invalid_argument("largest_prime_power_divisor: n must be >= 1");
    i64 best = 1;
    for (const auto& [p, e] : factorize(n)) {
        i64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        best = std::max(best, pe);
    }
    return best;
}

i64 iroot(i64 n, int k) {
    if (n < 0) throw std::invalid_argument("iroot: n must be >= 0");
    if (k < 1) throw std::invalid_argument("iroot: k must be >= 1");
    if (n == 0) return 0;
    if (k == 1) return n;
    // float guess, then correct; overflow-safe since we clamp the probe.
    i64 t = static_cast<i64>(std::pow(static_cast<double>(n), 1.0 / k));
    const auto pow_le = [&](i64 b) {
        // b^k <= n without overflow
        i64 acc = 1;
        for (int i = 0; i < k; ++i) {
            if (b != 0 && acc > n / b) return false;
            acc *= b;
        }
        return acc <= n;
    };
    while (t > 1 && !pow_le(t)) --t;
    while (pow_le(t + 1)) ++t;
    return t;
}

} // namespace recipart::core

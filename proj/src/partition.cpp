#include "recipart/partition.hpp"

#include <algorithm>

#include "recipart/smoothness.hpp"

namespace recipart::core {

Rational reciprocal_sum(std::span<const i64> parts) {
    std::vector<i64> sorted(parts.begin(), parts.end());
    std::sort(sorted.begin(), sorted.end());
    mpq_class acc(0);
    i64 prev = 0;
    for (i64 a : sorted) {
        if (a < 1) throw std::invalid_argument("reciprocal_sum: non-positive part");
        if (a == prev) throw std::invalid_argument("reciprocal_sum: duplicate part");
        prev = a;
        acc += mpq_class(1, static_cast<long>(a));
    }
    return Rational(acc);
}

Rational reciprocal_sum(const std::vector<i64>& parts) {
    return reciprocal_sum(std::span<const i64>(parts));
}

Partition::Partition(std::vector<i64> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end());
    i64 prev = 0;
    mpq_class acc(0);
    for (i64 a : parts_) {
        if (a < 1) throw std::invalid_argument("Partition: non-positive part");
        if (a == prev) throw std::invalid_argument("Partition: duplicate part");
        prev = a;
        total_ += a;
        acc += mpq_class(1, static_cast<long>(a));
    }
    recip_ = Rational(acc);
}

bool Partition::contains(i64 v) const {
    return std::binary_search(parts_.begin(), parts_.end(), v);
}

void Constraints::validate() const {
    if (min_part < 1)
        throw std::invalid_argument("Constraints: min_part must be >= 1");
    for (const auto& [name, field] :
         {std::pair{"forbidden_modulus", forbidden_modulus},
          std::pair{"smooth_bound", smooth_bound},
          std::pair{"powersmooth_bound", powersmooth_bound}}) {
        if (field && *field < 2)
            throw std::invalid_argument(std::string("Constraints: ") + name +
                                        " must be >= 2");
    }
    for (i64 v : excluded)
        if (v < 1) throw std::invalid_argument("Constraints: excluded values must be positive");
}

bool Constraints::allows(i64 v) const {
    if (v < min_part) return false;
    if (forbidden_modulus && v % *forbidden_modulus == 0) return false;
    if (smooth_bound && !is_smooth(v, *smooth_bound)) return false;
    if (powersmooth_bound && !is_powersmooth(v, *powersmooth_bound)) return false;
    if (!excluded.empty() && excluded.count(v)) return false;
    return true;
}

bool satisfies(const Partition& p, const Constraints& c) {
    c.validate();
    for (i64 v : p.parts())
        if (!c.allows(v)) return false;
    return true;
}

} // namespace recipart::core

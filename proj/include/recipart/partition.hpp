#pragma once

/// The partition data model: strictly increasing distinct positive parts
/// with cached exact sum and reciprocal sum, plus the constraint
/// predicates (m-large, M-free, smoothness bounds, exclusions) that the
/// search and construction modules apply.

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "recipart/rational.hpp"

namespace recipart::core {

/// Exact reduced value of sum(1/a) over the given parts.
/// Throws std::invalid_argument on duplicate or non-positive parts.
Rational reciprocal_sum(std::span<const i64> parts);
Rational reciprocal_sum(const std::vector<i64>& parts);

class Partition {
public:
    Partition() = default;
    /// Sorts the parts; rejects duplicates and non-positive values.
    explicit Partition(std::vector<i64> parts);

    const std::vector<i64>& parts() const { return parts_; }
    i64 total() const { return total_; }
    const Rational& recip() const { return recip_; }

    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    bool contains(i64 v) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<i64> parts_;   // strictly increasing
    i64 total_ = 0;
    Rational recip_;
};

struct Constraints {
    i64 min_part = 1;                        // the m of "m-large"
    std::optional<i64> forbidden_modulus;    // the M of "M-free", >= 2
    std::optional<i64> smooth_bound;         // >= 2
    std::optional<i64> powersmooth_bound;    // >= 2
    std::set<i64> excluded;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;

    /// Per-part predicate: v passes every present filter.
    bool allows(i64 v) const;

    bool unconstrained() const {
        return min_part <= 1 && !forbidden_modulus && !smooth_bound &&
               !powersmooth_bound && excluded.empty();
    }
};

/// True iff every part of p meets every present predicate of c.
bool satisfies(const Partition& p, const Constraints& c);

} // namespace recipart::core

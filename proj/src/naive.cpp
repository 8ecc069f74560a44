#include "recipart/naive.hpp"

namespace recipart::naive {

u64 for_each_partition(i64 n, const Constraints& c,
                       const std::function<void(const std::vector<i64>&)>& visit) {
    if (n < 1) throw std::invalid_argument("naive: n must be >= 1");
    c.validate();
    u64 count = 0;
    std::vector<i64> parts;
    auto rec = [&](auto&& self, i64 smallest, i64 left) -> void {
        for (i64 v = smallest; v <= left; ++v) {
            if (!c.allows(v)) continue;
            parts.push_back(v);
            if (v == left) {
                ++count;
                visit(parts);
            } else {
                self(self, v + 1, left - v);
            }
            parts.pop_back();
        }
    };
    rec(rec, std::max<i64>(1, c.min_part), n);
    return count;
}

std::set<Rational> spectrum(i64 n, const Constraints& c) {
    std::set<Rational> out;
    for_each_partition(n, c, [&](const std::vector<i64>& parts) {
        mpq_class acc(0);
        for (i64 v : parts) acc += mpq_class(1, static_cast<long>(v));
        out.insert(Rational(acc));
    });
    return out;
}

bool exists_partition(i64 n, const Rational& alpha, const Constraints& c) {
    return find_partition(n, alpha, c).has_value();
}

std::optional<Partition> find_partition(i64 n, const Rational& alpha,
                                        const Constraints& c) {
    if (!alpha.is_positive())
        throw std::invalid_argument("naive: alpha must be positive");
    std::optional<Partition> found;
    // no early exit: the walk is cheap at oracle scale and stays simple
    for_each_partition(n, c, [&](const std::vector<i64>& parts) {
        if (found) return;
        mpq_class acc(0);
        for (i64 v : parts) acc += mpq_class(1, static_cast<long>(v));
        if (Rational(acc) == alpha) found = Partition(parts);
    });
    return found;
}

u64 count_distinct_partitions(i64 n) {
    if (n == 0) return 1;
    return for_each_partition(n, Constraints{}, [](const std::vector<i64>&) {});
}

} // namespace recipart::naive

#include "recipart/rational.hpp"

#include <cctype>
#include <ostream>

namespace recipart::core {

Rational::Rational(i64 num, i64 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num) / mpq_class(den);
    v_.canonicalize();
}

Rational Rational::unit_fraction(i64 d) {
    if (d < 1) throw std::invalid_argument("unit_fraction: d must be >= 1");
    return Rational(1, d);
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    const auto bad = [&] {
        return std::invalid_argument("Rational::parse: malformed rational '" +
                                     std::string(text) + "'");
    };
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i == text.size()) throw bad();
    bool seen_slash = false;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] == '/') {
            if (seen_slash || j + 1 == text.size() || j == i) throw bad();
            seen_slash = true;
        } else if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw bad();
        }
    }
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0) throw bad();
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
    const auto mix = [](std::size_t h, std::size_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    };
    const auto hash_mpz = [&](const mpz_class& z, std::size_t seed) {
        const mpz_srcptr p = z.get_mpz_t();
        std::size_t h = mix(seed, static_cast<std::size_t>(mpz_sgn(p)) + 7);
        const mp_size_t n = mpz_size(p);
        const mp_limb_t* limbs = mpz_limbs_read(p);
        for (mp_size_t i = 0; i < n; ++i)
            h = mix(h, static_cast<std::size_t>(limbs[i]));
        return h;
    };
    return hash_mpz(v_.get_den(), hash_mpz(v_.get_num(), 0x2545f4914f6cdd1dULL));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational abs(const Rational& r) {
    return r.is_negative() ? -r : r;
}

} // namespace recipart::core

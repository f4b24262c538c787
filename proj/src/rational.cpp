#include "specfm/rational.hpp"

#include "specfm/error.hpp"

namespace specfm {

Rational make_rational(long num, long den) {
    if (den == 0) fail_input("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<Rational> rational_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    // mpq_class(string) aborts on garbage, so validate the shape first.
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) return std::nullopt;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        std::size_t dd = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            ++dd;
        }
        if (dd == 0 || i != s.size()) return std::nullopt;
    }
    Rational q(s);
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class num = q.get_num();
    const mpz_class den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational r(sn, sd);
    r.canonicalize();
    return r;
}

}  // namespace specfm

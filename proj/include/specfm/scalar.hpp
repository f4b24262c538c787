#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specfm/rational.hpp"

namespace specfm {

// Parameters of the coefficient-field tower Q < Q(lambda) < Q(lambda)(t).
// `lambda` is the symbolic family parameter; `t` only becomes a field
// parameter when working over the generic fibre of the t-line.
enum class Param : int { Lambda = 0, T = 1 };

const char* param_name(Param p);

// Exact element of Q, Q(lambda), Q(t) or Q(lambda)(t).
//
// Representation is canonical: a value that happens to be rational is always
// stored as a plain rational, fractions are reduced, denominators monic.
// Equal values compare equal structurally. Immutable; copies are cheap.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}  // NOLINT: implicit by design
    Scalar(long num, long den) : v_(make_rational(num, den)) {}
    explicit Scalar(Rational q) {
        q.canonicalize();
        v_ = std::move(q);
    }

    // The transcendental itself, e.g. Scalar::param(Param::Lambda).
    static Scalar param(Param p);

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const;  // requires is_rational()

    // 0 = Q, 1 = involves lambda only, 2 = involves t.
    int level() const;
    bool uses_param(Param p) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;  // error on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Exact square root within the same field, if one exists.
    std::optional<Scalar> sqrt_exact() const;

    // Substitutes a value for a tower parameter (error if a denominator
    // vanishes at the value).
    Scalar specialize(Param p, const Scalar& value) const;

    // Canonical text, parseable by the expression parser ("lambda", "t" for
    // the parameters, '/' for fractions).
    std::string str() const;
    // True when embedding in a product needs parentheses around str().
    bool needs_parens() const;

    // Numerator/denominator access as dense coefficient vectors in the top
    // parameter (used by the flatness jump-locus scan). Level-0 values are
    // exposed as a degree-0 numerator over den = {1}.
    Param top_param() const;  // requires level() > 0
    std::vector<Scalar> numerator_coeffs() const;
    std::vector<Scalar> denominator_coeffs() const;

private:
    struct Frac;
    using FracPtr = std::shared_ptr<const Frac>;
    std::variant<Rational, FracPtr> v_;

    explicit Scalar(FracPtr f) : v_(std::move(f)) {}
    static Scalar make(Param var, std::vector<Scalar> num, std::vector<Scalar> den);
    const Frac& frac() const;

    friend struct ScalarDetail;
};

// Monic gcd of dense univariate coefficient vectors (lowest degree first)
// over the scalar field. Uses a primitive pseudo-remainder sequence to keep
// intermediate coefficients small across the parameter tower.
std::vector<Scalar> scalar_poly_gcd(std::vector<Scalar> a, std::vector<Scalar> b);

}  // namespace specfm

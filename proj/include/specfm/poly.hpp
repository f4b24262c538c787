#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "specfm/scalar.hpp"
#include "specfm/variables.hpp"

namespace specfm {

struct Term {
    Monomial mono;
    Scalar coeff;

    bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

// Exact multivariate polynomial over the scalar tower. Terms are kept in a
// fixed canonical order (graded reverse lexicographic, x > y > z > t > w)
// with no zero coefficients, so equal polynomials have identical term lists.
class Poly {
public:
    Poly() = default;  // zero over the empty variable set
    explicit Poly(VarSet vars) : vars_(vars) {}

    static Poly zero(VarSet vars) { return Poly(vars); }
    static Poly constant(VarSet vars, Scalar c);
    static Poly variable(VarSet vars, Var v);
    static Poly term(VarSet vars, Monomial m, Scalar c);

    const VarSet& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Scalar constant_value() const;  // requires is_constant()

    std::uint64_t total_degree() const;  // 0 for the zero polynomial
    std::uint32_t degree_in(Var v) const;
    bool involves(Var v) const { return degree_in(v) > 0; }
    // Max scalar-tower level over all coefficients (0 = Q, 1 = Q(lambda), 2 = t).
    int coefficient_level() const;
    bool uses_param(Param p) const;

    Scalar coeff_of(const Monomial& m) const;  // 0 when absent

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Scalar& c) const;
    Poly mul_term(const Monomial& m, const Scalar& c) const;
    Poly pow(std::uint32_t k) const;

    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Substitution of polynomials (or scalars via constant polys) for a
    // subset of the variables; the result keeps this polynomial's VarSet
    // united with the bindings' VarSets.
    Poly substitute(const std::map<Var, Poly>& bindings) const;
    Poly substitute_scalar(Var v, const Scalar& value) const;

    Poly derivative(Var v) const;

    // Re-declare the variable set (superset required; for narrowing the
    // polynomial must not involve the dropped variables).
    Poly with_vars(VarSet vars) const;

    // Applies f to every coefficient (dropping terms that become zero).
    Poly map_coeffs(const std::function<Scalar(const Scalar&)>& f) const;

    // Canonical text; parse_poly(str()) round-trips exactly.
    std::string str() const;

    // Builds a polynomial from unsorted (monomial, coeff) pairs, combining
    // duplicates and dropping zeros.
    static Poly from_terms(VarSet vars, std::vector<Term> terms);

private:
    VarSet vars_;
    std::vector<Term> terms_;  // canonical descending order

    void check_same_vars(const Poly& o, const char* op) const;
};

// Canonical storage order (grevlex with x > y > z > t > w); exposed for the
// Groebner engine and tests.
bool canonical_mono_less(const Monomial& a, const Monomial& b);

}  // namespace specfm

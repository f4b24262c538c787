#pragma once

#include <map>
#include <string>
#include <utility>

#include "specfm/poly.hpp"
#include "specfm/scalar.hpp"

namespace specfm {

// Truncated formal power series in two local variables, modulo total degree
// `order`. The local variables are positional (index 0 and 1); the nodal
// chart reads them as the branch coordinates xi and eta. A series using only
// index 0 doubles as a univariate series.
class TruncSeries {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>;

    explicit TruncSeries(int order);
    static TruncSeries constant(int order, const Scalar& c);
    static TruncSeries var0(int order);
    static TruncSeries var1(int order);

    int order() const { return order_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    Scalar coeff(std::uint32_t i, std::uint32_t j) const;
    bool is_zero() const { return terms_.empty(); }
    bool is_univariate() const;
    Scalar constant_term() const { return coeff(0, 0); }

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
    TruncSeries scaled(const Scalar& c) const;

    bool operator==(const TruncSeries& o) const {
        return order_ == o.order_ && terms_ == o.terms_;
    }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    TruncSeries truncated(int new_order) const;
    // Kills every mixed monomial (i > 0 and j > 0): reduction modulo xi*eta.
    TruncSeries drop_mixed() const;
    // Multiplies by a pure monomial of one local variable.
    TruncSeries shifted(int var_index, std::uint32_t k) const;

    TruncSeries with_coeff(std::uint32_t i, std::uint32_t j, const Scalar& c) const;

    std::string str(const char* n0 = "u", const char* n1 = "v") const;

private:
    int order_;
    std::map<Key, Scalar> terms_;  // no zero coefficients, keys of total degree < order_

    void put(std::uint32_t i, std::uint32_t j, const Scalar& c);
};

// sqrt(1 + s) via the binomial series; s must have zero constant term.
TruncSeries series_sqrt_one_plus(const TruncSeries& s, int order);

// Compositional inverse of a univariate series with zero constant term and
// invertible linear coefficient: f(g(x)) = g(f(x)) = x mod degree order.
TruncSeries series_invert_map(const TruncSeries& f, int order);

// f univariate, g any series with zero constant term: f(g).
TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g);

// Evaluates a polynomial with each variable bound to a series (all series
// share one truncation order; every variable of p must be bound).
TruncSeries poly_eval_series(const Poly& p, const std::map<Var, TruncSeries>& bindings);

}  // namespace specfm

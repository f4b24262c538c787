#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "specfm/poly.hpp"

namespace specfm {

// Dense coefficient vector (lowest degree first) of a polynomial that is
// univariate in `v`; errors if another variable occurs.
std::vector<Scalar> to_dense(const Poly& p, Var v);
Poly from_dense(VarSet vars, Var v, const std::vector<Scalar>& coeffs);

Scalar eval_dense(const std::vector<Scalar>& coeffs, const Scalar& x);

// Monic gcd of univariate polynomials over the scalar field.
Poly univariate_gcd(const Poly& a, const Poly& b, Var v);

// Exact multivariate division (errors when b does not divide a).
Poly poly_divexact(const Poly& a, const Poly& b);

// Sylvester resultant with respect to `v`, evaluated by fraction-free
// Bareiss elimination over the polynomial ring in the remaining variables.
// Row convention: deg(q) rows of p's coefficients (descending) above
// deg(p) rows of q's. For monic p of degree n this relates to the classical
// discriminant by disc(p) = (-1)^(n(n-1)/2) * Res(p, p').
Poly resultant_univ(const Poly& p, const Poly& q, Var v);

// Root extraction over the exact coefficient field: field-rational roots
// with multiplicities plus an opaque residual ("cluster") factor of degree
// != 1. Extraction methods: linear factors, exact-square quadratics, and
// the integer rational-root theorem when all coefficients are rational.
struct RootReport {
    std::vector<std::pair<Scalar, std::uint32_t>> roots;
    Poly residual;                  // monic; degree 0 (= 1) when fully split
    std::uint64_t residual_degree;  // 0 when fully split
};

RootReport squarefree_linear_roots(const Poly& p, Var v);

}  // namespace specfm

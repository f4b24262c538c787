#pragma once

#include <string>

#include "specfm/poly.hpp"

namespace specfm {

// Parses the human-readable polynomial format: variables from `vars`
// (subset of x, y, z, t), the parameter "lambda", integer literals,
// operators + - * / ^ and parentheses. '/' requires an invertible
// (constant) divisor, which also covers fraction literals like 3/4.
// Errors carry the offending position.
Poly parse_poly(const std::string& text, VarSet vars);

// Parses a constant expression (no variables) into a scalar; `lambda`
// controls whether the parameter is allowed.
Scalar parse_scalar(const std::string& text, bool allow_lambda = true);

}  // namespace specfm

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "specfm/scalar.hpp"
#include "specfm/series.hpp"

namespace specfm {

// Incremental reduced row echelon form over the exact scalar field.
// Rows are kept normalized (unit pivot) and mutually reduced.
class Echelon {
public:
    explicit Echelon(std::size_t width) : width_(width) {}

    // Residual of v after eliminating all pivots.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    // Reduce and insert when the residual is nonzero. Returns true if the
    // row increased the rank.
    bool add(std::vector<Scalar> v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::size_t>& pivots() const { return pivot_cols_; }
    bool is_pivot(std::size_t col) const;

private:
    std::size_t width_;
    std::vector<std::vector<Scalar>> rows_;   // echelon rows, unit pivots
    std::vector<std::size_t> pivot_cols_;     // pivot column of rows_[k]
};

// Truncated local models at a point of a surface chart / nodal curve:
//  - Free:   k[[u,v]] / m^N            (all monomials of total degree < N)
//  - Branch: k[[xi,eta]] / (xi*eta, m^N)  (basis 1, xi^k, eta^k)
class LocalModel {
public:
    enum class Kind { Free, Branch };

    LocalModel(Kind kind, int order);

    Kind kind() const { return kind_; }
    int order() const { return order_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<TruncSeries::Key>& basis() const { return basis_; }

    // Normalizes a series into the model (truncate; drop mixed monomials in
    // the branch model).
    TruncSeries normalize(const TruncSeries& s) const;

    std::vector<Scalar> to_vector(const TruncSeries& s) const;
    TruncSeries from_vector(const std::vector<Scalar>& v) const;

    // Multiplication by a basis monomial inside the model.
    TruncSeries mono_mul(const TruncSeries::Key& m, const TruncSeries& s) const;

    // Echelon of the ideal generated by the given series inside the model
    // (span of all basis-monomial multiples of the generators).
    Echelon ideal_echelon(const std::vector<TruncSeries>& gens) const;

    std::size_t quotient_dimension(const std::vector<TruncSeries>& gens) const;

private:
    Kind kind_;
    int order_;
    std::vector<TruncSeries::Key> basis_;  // descending total degree
};

}  // namespace specfm

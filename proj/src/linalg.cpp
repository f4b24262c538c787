#include "specfm/linalg.hpp"

#include <algorithm>
#include <map>

#include "specfm/error.hpp"

namespace specfm {

std::vector<Scalar> Echelon::reduce(std::vector<Scalar> v) const {
    if (v.size() != width_) fail_internal("echelon: width mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivot_cols_[r];
        if (v[p].is_zero()) continue;
        const Scalar c = v[p];
        for (std::size_t j = 0; j < width_; ++j) {
            if (rows_[r][j].is_zero()) continue;
            v[j] -= c * rows_[r][j];
        }
    }
    return v;
}

bool Echelon::add(std::vector<Scalar> v) {
    v = reduce(std::move(v));
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j) {
        if (!v[j].is_zero()) {
            p = j;
            break;
        }
    }
    if (p == width_) return false;
    const Scalar inv = v[p].inverse();
    for (auto& c : v) c *= inv;
    // keep existing rows reduced against the new pivot
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][p].is_zero()) continue;
        const Scalar c = rows_[r][p];
        for (std::size_t j = 0; j < width_; ++j) rows_[r][j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    pivot_cols_.push_back(p);
    return true;
}

bool Echelon::is_pivot(std::size_t col) const {
    return std::find(pivot_cols_.begin(), pivot_cols_.end(), col) != pivot_cols_.end();
}

LocalModel::LocalModel(Kind kind, int order) : kind_(kind), order_(order) {
    if (order < 1) fail_input("local model: order must be positive");
    if (kind == Kind::Free) {
        for (int d = order - 1; d >= 0; --d)
            for (int i = d; i >= 0; --i) basis_.push_back({std::uint32_t(i), std::uint32_t(d - i)});
    } else {
        for (int d = order - 1; d >= 1; --d) {
            basis_.push_back({std::uint32_t(d), 0});
            basis_.push_back({0, std::uint32_t(d)});
        }
        basis_.push_back({0, 0});
    }
}

TruncSeries LocalModel::normalize(const TruncSeries& s) const {
    TruncSeries r = s.truncated(order_);
    if (kind_ == Kind::Branch) r = r.drop_mixed();
    return r;
}

std::vector<Scalar> LocalModel::to_vector(const TruncSeries& s) const {
    std::vector<Scalar> v(basis_.size(), Scalar(0));
    const TruncSeries n = normalize(s);
    std::map<TruncSeries::Key, std::size_t> index;
    for (std::size_t i = 0; i < basis_.size(); ++i) index[basis_[i]] = i;
    for (const auto& [k, c] : n.terms()) {
        auto it = index.find(k);
        if (it == index.end()) fail_internal("local model: series term outside the basis");
        v[it->second] = c;
    }
    return v;
}

TruncSeries LocalModel::from_vector(const std::vector<Scalar>& v) const {
    TruncSeries s(order_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (v[i].is_zero()) continue;
        s = s.with_coeff(basis_[i].first, basis_[i].second, v[i]);
    }
    return s;
}

TruncSeries LocalModel::mono_mul(const TruncSeries::Key& m, const TruncSeries& s) const {
    return normalize(s.shifted(0, m.first).shifted(1, m.second));
}

Echelon LocalModel::ideal_echelon(const std::vector<TruncSeries>& gens) const {
    Echelon ech(basis_.size());
    for (const auto& g_raw : gens) {
        const TruncSeries g = normalize(g_raw);
        if (g.is_zero()) continue;
        for (const auto& m : basis_) {
            ech.add(to_vector(mono_mul(m, g)));
        }
    }
    return ech;
}

std::size_t LocalModel::quotient_dimension(const std::vector<TruncSeries>& gens) const {
    return dimension() - ideal_echelon(gens).rank();
}

}  // namespace specfm

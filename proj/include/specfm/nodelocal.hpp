#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specfm/fibration.hpp"
#include "specfm/linalg.hpp"
#include "specfm/series.hpp"

namespace specfm {

// Classification of a torsion module over the completed nodal local ring
// k[[xi,eta]]/(xi*eta), from the Gelfand-Ponomarev normal forms exercised
// here: simple modules, the length-two bands M((1,1),1,lambda), and the
// length-two strings.
struct LocalModuleType {
    enum class Kind { Simple, Band, String };
    enum class Orientation { Xi, Eta };

    Kind kind = Kind::Simple;
    std::size_t length = 1;
    Scalar band_lambda;          // Band only; nonzero
    Orientation orientation = Orientation::Xi;  // String only

    static LocalModuleType simple() { return {Kind::Simple, 1, Scalar(0), Orientation::Xi}; }
    static LocalModuleType band(Scalar lambda) {
        return {Kind::Band, 2, std::move(lambda), Orientation::Xi};
    }
    static LocalModuleType string(Orientation o) { return {Kind::String, 2, Scalar(0), o}; }

    bool operator==(const LocalModuleType& o) const;
    std::string str() const;  // "Band((1,1),1,<lambda>)", "String(xi,2)", "Simple"
};

// Formal chart at a nodal fibre point: after translating the node to the
// origin the curve is y^2 - x^2 u(x) with u(0) != 0, and the branch
// coordinates are xi = xt - y, eta = xt + y where xt = x*sqrt(u(x)). In the
// chart's series, index 0 is xi and index 1 is eta; xi*eta is zero modulo
// the curve equation, truncated at total degree `order`.
class NodalChart {
public:
    // `sing` must be a node; order >= 4. Fails (honestly) when sqrt(u(0))
    // does not exist in the coefficient field, i.e. the branches are not
    // rational over it.
    static NodalChart build(const WeierstrassFamily& fam, const FibreSingularity& sing,
                            int order);

    // Chart directly from translated local data y^2 - x^2 (alpha + beta x),
    // alpha != 0 (also the rebuild entry used by the truncation-growth checks).
    static NodalChart build_local(Scalar t0, ProjPoint node, Scalar alpha, Scalar beta,
                                  int order);

    int order() const { return order_; }
    const Scalar& t0() const { return t0_; }
    const ProjPoint& node() const { return node_; }

    // local x offset and y as series in (xi, eta)
    const TruncSeries& x_series() const { return x_series_; }
    const TruncSeries& y_series() const { return y_series_; }

    NodalChart with_order(int order) const;

    // Image of a polynomial in x, y as a series in the branch coordinates,
    // reduced modulo xi*eta.
    TruncSeries to_branch(const Poly& g) const;

private:
    NodalChart() = default;

    Scalar t0_;
    ProjPoint node_;
    Scalar alpha_, beta_;  // translated curve: y^2 - x^2 (alpha + beta x)
    int order_ = 0;
    TruncSeries x_series_{1}, y_series_{1};
};

// Dimension of the truncated local module k[[xi,eta]]/(xi*eta, m^N) modulo
// the generators' images; the result must be stable under N -> N+2.
std::size_t local_length(const NodalChart& chart, const std::vector<Poly>& gens);

// Classification from the multiplication operators of xi and eta on the
// quotient: length 1 -> Simple; length 2 with xi*e = lambda*(eta*e) != 0 ->
// Band((1,1),1,lambda); one-sided action -> String. Lengths above 2 are
// reported as out of classification scope.
LocalModuleType classify_local_module(const NodalChart& chart, const std::vector<Poly>& gens);

}  // namespace specfm

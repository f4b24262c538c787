#include <algorithm>

#include "specfm/error.hpp"
#include "specfm/groebner.hpp"
#include "specfm/linalg.hpp"
#include "specfm/series.hpp"
#include "specfm/univariate.hpp"

namespace specfm {

namespace {

MonomialOrder xy_order() { return MonomialOrder::grevlex({Var::x, Var::y}); }

// Local multiplicity of the ideal at a rational point: dimension of the
// truncated completion k[[u,v]]/(I + m^N), stable under N -> N+2.
std::size_t local_multiplicity(const Ideal& ideal, const Scalar& x0, const Scalar& y0,
                               std::size_t global_length) {
    const int base_order = int(global_length) + 2;
    std::size_t previous = 0;
    for (int attempt = 0;; ++attempt) {
        const int n = base_order + 2 * attempt;
        LocalModel model(LocalModel::Kind::Free, n);
        std::vector<TruncSeries> gens;
        std::map<Var, TruncSeries> bind;
        bind.emplace(Var::x, TruncSeries::constant(n, x0) + TruncSeries::var0(n));
        bind.emplace(Var::y, TruncSeries::constant(n, y0) + TruncSeries::var1(n));
        for (const auto& g : ideal.gens) gens.push_back(poly_eval_series(g, bind));
        const std::size_t dim = model.quotient_dimension(gens);
        if (attempt > 0 && dim == previous) return dim;
        if (attempt >= 3)
            fail_internal("support: local multiplicity did not stabilize under truncation growth");
        previous = dim;
    }
}

// Sum of local lengths over all support points where f vanishes:
// dim of k[x,y]/(I + f^L) with L = total length.
std::size_t length_where_vanishing(const Ideal& ideal, const Poly& f, std::size_t total) {
    std::vector<Poly> gens = ideal.gens;
    gens.push_back(f.with_vars(ideal.vars).pow(std::uint32_t(total)));
    const GroebnerBasis gb = buchberger(Ideal::make(ideal.vars, std::move(gens)), xy_order());
    auto len = quotient_length(gb);
    if (!len) fail_internal("support: restricted length is infinite");
    return *len;
}

Poly squarefree_part(const Poly& p, Var v) {
    const Poly g = univariate_gcd(p, p.derivative(v), v);
    if (g.total_degree() == 0) return p;
    return poly_divexact(p.with_vars(VarSet{v}), g.with_vars(VarSet{v}));
}

}  // namespace

SupportReport support_points(const Ideal& ideal) {
    if (!(ideal.vars == VarSet{Var::x, Var::y}))
        fail_input("support_points: expected an ideal in the variables x, y");

    SupportReport report;
    const GroebnerBasis gb = buchberger(ideal, xy_order());
    const auto total = quotient_length(gb);
    if (!total) fail_input("support_points: ideal is not zero-dimensional");
    report.total_length = *total;
    if (*total == 0) return report;  // unit ideal, empty support

    const Poly ex = eliminate(ideal, Var::x);
    const RootReport xroots = squarefree_linear_roots(ex, Var::x);

    std::size_t accounted = 0;
    for (const auto& [x0, xmult] : xroots.roots) {
        (void)xmult;  // eliminant multiplicity is not a length; lengths are local
        // restrict to the fibre x = x0: the specialized generators span the
        // image ideal in k[y], a principal ideal
        std::vector<Scalar> h;  // gcd accumulator (dense in y)
        for (const auto& g : ideal.gens) {
            const Poly restricted = g.substitute_scalar(Var::x, x0);
            if (restricted.is_zero()) continue;
            const Poly hy = from_dense(VarSet{Var::y}, Var::y, h);
            const Poly hg = h.empty()
                                ? restricted.with_vars(VarSet{Var::y})
                                : univariate_gcd(hy, restricted.with_vars(VarSet{Var::y}), Var::y);
            h = to_dense(hg, Var::y);
        }
        if (h.empty()) fail_internal("support: fibre ideal vanished for a zero-dimensional ideal");
        const Poly hpoly = from_dense(VarSet{Var::y}, Var::y, h);
        std::size_t points_here = 0;
        if (hpoly.total_degree() == 0) continue;  // no point over this root after all
        const RootReport yroots = squarefree_linear_roots(hpoly, Var::y);
        for (const auto& [y0, ymult] : yroots.roots) {
            (void)ymult;
            const std::size_t mult = local_multiplicity(ideal, x0, y0, *total);
            if (mult == 0) continue;  // spurious candidate (not a support point)
            report.points.push_back({x0, y0, mult});
            accounted += mult;
            points_here += mult;
        }
        if (yroots.residual_degree >= 2) {
            const Poly x_shift =
                Poly::variable(VarSet{Var::x, Var::y}, Var::x) -
                Poly::constant(VarSet{Var::x, Var::y}, x0);
            const std::size_t fibre_len = length_where_vanishing(ideal, x_shift, *total);
            if (fibre_len < points_here)
                fail_internal("support: fibre length below the rational-point total");
            const std::size_t cluster_len = fibre_len - points_here;
            if (cluster_len > 0) {
                const Poly sq = squarefree_part(yroots.residual, Var::y);
                report.clusters.push_back({sq.degree_in(Var::y), cluster_len, x0});
                accounted += cluster_len;
            }
        }
    }

    if (xroots.residual_degree >= 2) {
        if (accounted > *total) fail_internal("support: lengths exceed the quotient length");
        const std::size_t cluster_len = *total - accounted;
        if (cluster_len > 0) {
            const Poly sq = squarefree_part(xroots.residual, Var::x);
            report.clusters.push_back({sq.degree_in(Var::x), cluster_len, std::nullopt});
            accounted += cluster_len;
        }
    }

    if (accounted != *total)
        fail_internal("support: local lengths do not sum to the quotient length");

    std::sort(report.points.begin(), report.points.end(), [](const auto& a, const auto& b) {
        const std::string ax = a.x.str(), bx = b.x.str();
        return ax != bx ? ax < bx : a.y.str() < b.y.str();
    });
    return report;
}

}  // namespace specfm

#include "specfm/nodelocal.hpp"

#include "specfm/error.hpp"
#include "specfm/univariate.hpp"

namespace specfm {

bool LocalModuleType::operator==(const LocalModuleType& o) const {
    if (kind != o.kind || length != o.length) return false;
    if (kind == Kind::Band) return band_lambda == o.band_lambda;
    if (kind == Kind::String) return orientation == o.orientation;
    return true;
}

std::string LocalModuleType::str() const {
    switch (kind) {
        case Kind::Simple: return "Simple";
        case Kind::Band: return "Band((1,1),1," + band_lambda.str() + ")";
        case Kind::String:
            return std::string("String(") + (orientation == Orientation::Xi ? "xi" : "eta") +
                   "," + std::to_string(length) + ")";
    }
    return "?";
}

NodalChart NodalChart::build(const WeierstrassFamily& fam, const FibreSingularity& sing,
                             int order) {
    if (!sing.is_node)
        fail_input("nodal chart: cusp input (classification applies to nodes only)");
    if (order < 4) fail_input("nodal chart: truncation order must be at least 4");
    if (!sing.point.Z.is_one())
        fail_internal("nodal chart: singular point expected in the affine chart");

    // translate the node to the origin: p(x0 + u) = alpha u^2 + beta u^3
    const Poly p =
        fam.affine_cubic().substitute_scalar(Var::t, sing.t0).with_vars(VarSet{Var::x});
    const VarSet xs{Var::x};
    const Poly shifted = p.substitute(
        {{Var::x, Poly::variable(xs, Var::x) + Poly::constant(xs, sing.point.X)}});
    const auto c = to_dense(shifted, Var::x);
    if (c.size() != 4 || !c[0].is_zero() || !c[1].is_zero())
        fail_internal("nodal chart: point is not a double root of the cubic");
    return build_local(sing.t0, sing.point, c[2], c[3], order);
}

NodalChart NodalChart::build_local(Scalar t0, ProjPoint node, Scalar alpha, Scalar beta,
                                   int order) {
    if (order < 4) fail_input("nodal chart: truncation order must be at least 4");
    if (alpha.is_zero()) fail_input("nodal chart: vanishing quadratic part (cusp input)");
    const auto sqrt_alpha = alpha.sqrt_exact();
    if (!sqrt_alpha)
        fail_undetermined(
            "nodal chart: the node is not split over the coefficient field "
            "(sqrt(" + alpha.str() + ") required)");

    NodalChart chart;
    chart.t0_ = std::move(t0);
    chart.node_ = std::move(node);
    chart.alpha_ = alpha;
    chart.beta_ = beta;
    chart.order_ = order;

    // xt = x sqrt(alpha) sqrt(1 + (beta/alpha) x) as a univariate series
    const TruncSeries x = TruncSeries::var0(order);
    const TruncSeries root = series_sqrt_one_plus(x.scaled(beta / alpha), order);
    const TruncSeries xt = (x * root).scaled(*sqrt_alpha);
    const TruncSeries x_of_xt = series_invert_map(xt, order);

    // xt = (xi + eta)/2, y = (eta - xi)/2
    const TruncSeries half_sum =
        (TruncSeries::var0(order) + TruncSeries::var1(order)).scaled(Scalar(1, 2));
    chart.x_series_ = series_compose(x_of_xt, half_sum);
    chart.y_series_ =
        (TruncSeries::var1(order) - TruncSeries::var0(order)).scaled(Scalar(1, 2));

    // defining identity: y^2 - x^2 (alpha + beta x) = -xi*eta up to truncation
    const TruncSeries& X = chart.x_series_;
    const TruncSeries& Y = chart.y_series_;
    const TruncSeries curve =
        Y * Y - X * X * (TruncSeries::constant(order, alpha) + X.scaled(beta));
    const TruncSeries xi_eta = TruncSeries::var0(order) * TruncSeries::var1(order);
    if (!(curve + xi_eta).is_zero())
        fail_internal("nodal chart: xi*eta != 0 modulo the curve equation");
    return chart;
}

NodalChart NodalChart::with_order(int order) const {
    return build_local(t0_, node_, alpha_, beta_, order);
}

TruncSeries NodalChart::to_branch(const Poly& g) const {
    for (Var v : g.vars().list())
        if (v != Var::x && v != Var::y && g.involves(v))
            fail_input("nodal chart: generators must be polynomials in x, y");
    std::map<Var, TruncSeries> bind;
    bind.emplace(Var::x, TruncSeries::constant(order_, node_.X) + x_series_);
    bind.emplace(Var::y, TruncSeries::constant(order_, node_.Y) + y_series_);
    return poly_eval_series(g, bind).drop_mixed();
}

namespace {

std::vector<TruncSeries> branch_images(const NodalChart& chart, const std::vector<Poly>& gens) {
    std::vector<TruncSeries> out;
    for (const auto& g : gens) out.push_back(chart.to_branch(g));
    return out;
}

std::size_t branch_quotient_dim(const NodalChart& chart, const std::vector<Poly>& gens) {
    const LocalModel model(LocalModel::Kind::Branch, chart.order());
    return model.quotient_dimension(branch_images(chart, gens));
}

struct QuotientData {
    std::vector<Scalar> e, xi_e, eta_e;  // coordinates on the quotient basis
};

QuotientData quotient_action(const NodalChart& chart, const std::vector<Poly>& gens) {
    const LocalModel model(LocalModel::Kind::Branch, chart.order());
    const Echelon ech = model.ideal_echelon(branch_images(chart, gens));

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < model.dimension(); ++j)
        if (!ech.is_pivot(j)) free_cols.push_back(j);

    auto coords = [&](const TruncSeries& s) {
        const std::vector<Scalar> red = ech.reduce(model.to_vector(s));
        std::vector<Scalar> c;
        for (std::size_t j : free_cols) c.push_back(red[j]);
        return c;
    };

    QuotientData q;
    q.e = coords(TruncSeries::constant(chart.order(), Scalar(1)));
    q.xi_e = coords(TruncSeries::var0(chart.order()));
    q.eta_e = coords(TruncSeries::var1(chart.order()));
    return q;
}

bool vec_is_zero(const std::vector<Scalar>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

// solves u = s * w; internal error when not proportional
Scalar proportion(const std::vector<Scalar>& u, const std::vector<Scalar>& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i].is_zero()) ++i;
    if (i == w.size()) fail_internal("nodal classification: zero reference vector");
    const Scalar s = u[i] / w[i];
    for (std::size_t j = 0; j < w.size(); ++j)
        if (!(u[j] - s * w[j]).is_zero())
            fail_internal("nodal classification: maximal-ideal action is not rank one");
    return s;
}

LocalModuleType classify_once(const NodalChart& chart, const std::vector<Poly>& gens,
                              std::size_t length) {
    if (length == 1) return LocalModuleType::simple();

    const QuotientData q = quotient_action(chart, gens);
    if (vec_is_zero(q.e)) fail_internal("nodal classification: 1 vanishes in the quotient");

    const bool xi_zero = vec_is_zero(q.xi_e);
    const bool eta_zero = vec_is_zero(q.eta_e);
    if (xi_zero && eta_zero)
        fail_internal("nodal classification: non-cyclic quotient (cannot arise from an ideal)");
    if (xi_zero) return LocalModuleType::string(LocalModuleType::Orientation::Eta);
    if (eta_zero) return LocalModuleType::string(LocalModuleType::Orientation::Xi);

    // both act nontrivially: band with xi*e = lambda * (eta*e)
    const Scalar lambda = proportion(q.xi_e, q.eta_e);
    if (lambda.is_zero()) fail_internal("nodal classification: vanishing band parameter");
    return LocalModuleType::band(lambda);
}

}  // namespace

std::size_t local_length(const NodalChart& chart, const std::vector<Poly>& gens) {
    if (gens.empty()) fail_input("local_length: empty generator list (non-Artinian quotient)");
    const std::size_t dim = branch_quotient_dim(chart, gens);
    const std::size_t dim2 = branch_quotient_dim(chart.with_order(chart.order() + 2), gens);
    if (dim != dim2)
        fail_input("local_length: unstable under truncation growth (increase the order)");
    return dim;
}

LocalModuleType classify_local_module(const NodalChart& chart, const std::vector<Poly>& gens) {
    const std::size_t length = local_length(chart, gens);
    if (length == 0) fail_input("classify_local_module: module is not supported at the node");
    if (length > 2)
        fail_undetermined("classify_local_module: length " + std::to_string(length) +
                          " is unclassified (beyond the implemented normal forms)");
    const LocalModuleType a = classify_once(chart, gens, length);
    const LocalModuleType b = classify_once(chart.with_order(chart.order() + 2), gens, length);
    if (!(a == b))
        fail_input("classify_local_module: unstable under truncation growth (increase the order)");
    return a;
}

}  // namespace specfm

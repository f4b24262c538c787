#include <doctest.h>

#include <random>

#include "specfm/error.hpp"
#include "specfm/nodelocal.hpp"
#include "test_support.hpp"

using namespace specfm;
using testsup::P;

namespace {

const VarSet T{Var::t};
const VarSet XY{Var::x, Var::y};

WeierstrassFamily nodal_family() {
    return WeierstrassFamily::from_coeffs(P("1", T), P("t*(1-t)", T), P("-t^2", T));
}

FibreSingularity family_node() {
    const SingularFibreReport rep = singular_fibres(nodal_family());
    REQUIRE(rep.fibres.size() == 1);
    return rep.fibres[0];
}

std::vector<Poly> band_gens() {
    return {P("(1+lambda)*y - (1-lambda)*x", XY), P("x^2", XY)};
}

std::vector<Poly> string_gens() { return {P("x + y", XY), P("x^2", XY)}; }

std::vector<Poly> band_minus_one_gens() { return {P("x", XY), P("y^2", XY)}; }

}  // namespace

TEST_SUITE("nodelocal") {

TEST_CASE("chart at the node matches the binomial series") {
    const NodalChart chart = NodalChart::build(nodal_family(), family_node(), 8);
    CHECK(chart.order() == 8);
    // the curve equation itself dies in the chart
    CHECK(chart.to_branch(P("y^2 - x^3 - x^2", XY)).is_zero());
    // x = ((xi+eta)/2) inverted through xt = x(1 + x/2 - x^2/8 + ...):
    // leading coefficients of the local x series
    CHECK(chart.x_series().coeff(1, 0) == Scalar(1, 2));
    CHECK(chart.x_series().coeff(0, 1) == Scalar(1, 2));
    CHECK(chart.y_series().coeff(1, 0) == Scalar(-1, 2));
    CHECK(chart.y_series().coeff(0, 1) == Scalar(1, 2));
}

TEST_CASE("chart for y^2 = x^2 (1 + 2x)") {
    // same construction with xt = x sqrt(1 + 2x); the build verifies
    // xi*eta = 0 against the curve internally
    const NodalChart chart =
        NodalChart::build_local(Scalar(0), ProjPoint{Scalar(0), Scalar(0), Scalar(1)},
                                Scalar(1), Scalar(2), 8);
    CHECK(chart.to_branch(P("y^2 - x^2 - 2*x^3", XY)).is_zero());
}

TEST_CASE("cusp input and tiny truncation are refused") {
    const WeierstrassFamily cuspfam =
        WeierstrassFamily::from_coeffs(P("0", T), P("0", T), P("-t", T));
    const SingularFibreReport rep = singular_fibres(cuspfam);
    REQUIRE(rep.fibres.size() == 1);
    CHECK(!rep.fibres[0].is_node);
    CHECK_THROWS_AS(NodalChart::build(cuspfam, rep.fibres[0], 8), Error);
    CHECK_THROWS_AS(NodalChart::build(nodal_family(), family_node(), 3), Error);
}

TEST_CASE("non-split nodes are reported honestly") {
    // y^2 = x^2 (3 + x): sqrt(3) is not in Q
    CHECK_THROWS_AS(
        NodalChart::build_local(Scalar(0), ProjPoint{Scalar(0), Scalar(0), Scalar(1)},
                                Scalar(3), Scalar(1), 8),
        Error);
}

TEST_CASE("local lengths of the worked modules") {
    const NodalChart chart = NodalChart::build(nodal_family(), family_node(), 8);
    CHECK(local_length(chart, band_gens()) == 2);
    CHECK(local_length(chart, band_minus_one_gens()) == 2);
    CHECK(local_length(chart, {P("x", XY), P("y", XY)}) == 1);  // the maximal ideal
    CHECK_THROWS_AS(local_length(chart, {}), Error);
}

TEST_CASE("classification of the worked modules") {
    const NodalChart chart = NodalChart::build(nodal_family(), family_node(), 8);

    const LocalModuleType band = classify_local_module(chart, band_gens());
    CHECK(band.kind == LocalModuleType::Kind::Band);
    CHECK(band.length == 2);
    // the symbol lambda itself, not a specialization
    CHECK(band.band_lambda == Scalar::param(Param::Lambda));

    const LocalModuleType str = classify_local_module(chart, string_gens());
    CHECK(str.kind == LocalModuleType::Kind::String);
    CHECK(str.orientation == LocalModuleType::Orientation::Xi);
    CHECK(str.length == 2);

    const LocalModuleType bm1 = classify_local_module(chart, band_minus_one_gens());
    CHECK(bm1.kind == LocalModuleType::Kind::Band);
    CHECK(bm1.band_lambda == Scalar(-1));

    const LocalModuleType simple = classify_local_module(chart, {P("x", XY), P("y", XY)});
    CHECK(simple.kind == LocalModuleType::Kind::Simple);
}

TEST_CASE("eta-oriented string at a node with a scaled unit") {
    // y^2 = x^2 (4 + x): branches are rational since sqrt(4) = 2
    const NodalChart chart =
        NodalChart::build_local(Scalar(0), ProjPoint{Scalar(0), Scalar(0), Scalar(1)},
                                Scalar(4), Scalar(1), 8);
    // 2x - y = xt - y = xi modulo x^2, so the module is R/(xi, eta^2)
    const std::vector<Poly> gens{P("2*x - y", XY), P("x^2", XY)};
    CHECK(local_length(chart, gens) == 2);
    const LocalModuleType type = classify_local_module(chart, gens);
    CHECK(type.kind == LocalModuleType::Kind::String);
    CHECK(type.orientation == LocalModuleType::Orientation::Eta);
}

TEST_CASE("lengths above two are out of classification scope") {
    const NodalChart chart = NodalChart::build(nodal_family(), family_node(), 10);
    // eta = 0, xi^3 = 0: length 3
    const std::vector<Poly> gens{P("x + y", XY), P("x^3", XY)};
    CHECK(local_length(chart, gens) == 3);
    CHECK_THROWS_AS(classify_local_module(chart, gens), Error);
    try {
        classify_local_module(chart, gens);
    } catch (const Error& e) {
        CHECK(e.kind() == Error::Kind::Undetermined);
    }
}

TEST_CASE("classification is invariant under presentation changes") {
    const NodalChart chart = NodalChart::build(nodal_family(), family_node(), 8);
    std::mt19937 rng(97);
    const std::vector<std::vector<Poly>> cases = {band_gens(), string_gens(),
                                                  band_minus_one_gens()};
    for (const auto& gens : cases) {
        const LocalModuleType base = classify_local_module(chart, gens);

        // truncation growth
        CHECK(classify_local_module(chart.with_order(10), gens) == base);

        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Poly> mod = gens;
            // multiply one generator by a local unit
            const std::size_t k = rng() % mod.size();
            Poly unit = Poly::constant(XY, Scalar(1)) +
                        testsup::random_poly(rng, XY, 2, 2).mul_term(Monomial::var(Var::x),
                                                                     Scalar(1));
            mod[k] = mod[k] * unit;
            // mix: add a polynomial multiple of another generator
            const std::size_t j = (k + 1) % mod.size();
            mod[j] = mod[j] + mod[k] * testsup::random_poly(rng, XY, 1, 2);
            if (mod[j].is_zero()) mod[j] = gens[j];
            CHECK(classify_local_module(chart, mod) == base);
        }
    }
}

TEST_CASE("local length matches the global quotient length at the node") {
    // <x + y, x^2> is supported at the node only
    const NodalChart chart = NodalChart::build(nodal_family(), family_node(), 8);
    const Ideal ideal = Ideal::make(XY, string_gens());
    const auto global =
        quotient_length(buchberger(ideal, MonomialOrder::grevlex({Var::x, Var::y})));
    REQUIRE(global);
    CHECK(local_length(chart, string_gens()) == *global);
}

}  // TEST_SUITE

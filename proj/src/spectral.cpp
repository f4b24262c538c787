#include "specfm/spectral.hpp"

#include <algorithm>

#include "specfm/error.hpp"
#include "specfm/nodelocal.hpp"
#include "specfm/univariate.hpp"

namespace specfm {

SpectralCover make_cover(const WeierstrassFamily& fam, Ideal affine, bool section_at_infinity) {
    if (!affine.vars.subset_of(VarSet{Var::x, Var::y, Var::t}))
        fail_input("cover: variables must lie in {x, y, t}");
    if (affine.gens.empty()) fail_input("cover: no generators");
    if (!contains_curve(fam, affine))
        fail_input("cover: the curve does not lie on the fibration");
    SpectralCover cover{std::move(affine), section_at_infinity};
    // finiteness of the generic fibre
    const Ideal generic = generic_fibre_ideal(cover.affine);
    const auto len = quotient_length(buchberger(generic, MonomialOrder::grevlex({Var::x, Var::y})));
    if (!len) fail_input("cover: generic fibre length is infinite (not finite over the t-line)");
    return cover;
}

Ideal fibre_ideal(const SpectralCover& cover, const FibreParam& fibre) {
    if (fibre.generic) return generic_fibre_ideal(cover.affine);
    return specialize_t(cover.affine, fibre.t0);
}

namespace {

std::optional<FibreSingularity> singularity_at(const SingularFibreReport& sings,
                                               const FibreParam& fibre, const ProjPoint& p) {
    for (const auto& s : sings.fibres) {
        const bool same_fibre = s.for_all_t || (!fibre.generic && s.t0 == fibre.t0);
        if (same_fibre && proj_equal(s.point, p)) return s;
    }
    return std::nullopt;
}

}  // namespace

std::vector<TorsionModuleDescriptor> decompose_fibre(const WeierstrassFamily& fam,
                                                     const SpectralCover& cover,
                                                     const FibreParam& fibre, int trunc) {
    const Ideal ideal = fibre_ideal(cover, fibre);
    const SupportReport support = support_points(ideal);
    const SingularFibreReport sings = singular_fibres(fam);

    std::vector<TorsionModuleDescriptor> out;
    for (const auto& pt : support.points) {
        TorsionModuleDescriptor d;
        d.fibre = fibre;
        d.point = ProjPoint::affine_xy(pt.x, pt.y);
        d.length = pt.local_length;
        d.at_section = false;  // the section (0:1:0) is not in the affine chart
        const auto sing = singularity_at(sings, fibre, d.point);
        if (sing) {
            d.on_smooth_locus = false;
            const NodalChart chart = NodalChart::build(fam, *sing, trunc);
            const LocalModuleType type = classify_local_module(chart, ideal.gens);
            if (type.length != pt.local_length)
                fail_internal("decompose_fibre: nodal length disagrees with the support length");
            d.local_type = type;
        } else {
            d.on_smooth_locus = true;
        }
        out.push_back(std::move(d));
    }
    for (const auto& cl : support.clusters) {
        TorsionModuleDescriptor d;
        d.fibre = fibre;
        d.is_cluster = true;
        d.cluster_degree = cl.degree;
        d.length = cl.total_length;
        d.on_smooth_locus = true;
        out.push_back(std::move(d));
    }
    return out;
}

namespace {

FibreAnalysis analyze_fibre(const WeierstrassFamily& fam, const SpectralCover& cover,
                            const FibreParam& fibre, int trunc) {
    FibreAnalysis fa;
    fa.fibre = fibre;
    const Ideal ideal = fibre_ideal(cover, fibre);
    const auto len = quotient_length(buchberger(ideal, MonomialOrder::grevlex({Var::x, Var::y})));
    if (!len) {
        fa.undetermined = true;
        fa.undetermined_reason = "fibre length is infinite";
        return fa;
    }
    fa.length = *len;
    try {
        fa.torsion = decompose_fibre(fam, cover, fibre, trunc);
        fa.fm = fm_torsion(fa.torsion);
    } catch (const Error& e) {
        if (e.kind() == Error::Kind::Undetermined) {
            fa.undetermined = true;
            fa.undetermined_reason = e.what();
            return fa;
        }
        throw;
    }
    // conservation: sum of lengths = length = sum of FM ranks, degrees zero
    std::size_t total = 0;
    for (const auto& d : fa.torsion) total += d.length;
    std::size_t ranks = 0;
    for (const auto& s : fa.fm) {
        ranks += s.rank;
        if (s.degree != 0) fail_internal("analyze: FM image with nonzero degree");
    }
    if (total != fa.length || ranks != fa.length)
        fail_internal("analyze: rank/length conservation violated");
    return fa;
}

}  // namespace

DegenerationReport analyze(const WeierstrassFamily& fam_in, const SpectralCover& cover_in,
                           const AnalyzeOptions& opts) {
    WeierstrassFamily fam = fam_in;
    SpectralCover cover = cover_in;

    std::vector<std::string> warnings;

    if (opts.lambda_value) {
        const bool has_lambda =
            cover.affine.uses_param(Param::Lambda) || fam.uses_lambda();
        if (!has_lambda) fail_input("lambda value given, but the inputs do not involve lambda");
        const Scalar& v = *opts.lambda_value;
        if (v.is_zero()) fail_input("lambda = 0 is excluded (band parameters must be nonzero)");
        if (v == Scalar(-1))
            warnings.push_back(
                "lambda = -1: the cover acquires a section component at infinity; declare it "
                "explicitly for a complete report");
        if (v == Scalar(1))
            warnings.push_back("lambda = 1: support points collide at the flagged value");
        auto subst = [&](const Scalar& c) { return c.specialize(Param::Lambda, v); };
        std::vector<Poly> gens;
        for (const auto& g : cover.affine.gens) gens.push_back(g.map_coeffs(subst));
        cover.affine = Ideal::make(cover.affine.vars, std::move(gens));
        fam = WeierstrassFamily::from_coeffs(fam.a2().map_coeffs(subst),
                                             fam.a4().map_coeffs(subst),
                                             fam.a6().map_coeffs(subst));
        cover = make_cover(fam, cover.affine, cover.section_at_infinity);
    }

    DegenerationReport report{.family = fam,
                              .cover = cover,
                              .lambda_value = opts.lambda_value,
                              .discriminant = Poly(),
                              .discriminant_roots = {},
                              .discriminant_unresolved_degree = 0,
                              .flatness = {},
                              .has_ideal_quotient_certificate = false,
                              .ideal_quotient_t_regular = false,
                              .generic = {},
                              .special = {},
                              .section_component = cover.section_at_infinity,
                              .warnings = std::move(warnings),
                              .has_undetermined = false,
                              .s_flat_fm_family = false,
                              .coverage_note = {}};

    // discriminant and its rational roots
    report.discriminant = fam.discriminant();
    const RootReport disc_roots = squarefree_linear_roots(report.discriminant, Var::t);
    report.discriminant_roots = disc_roots.roots;
    report.discriminant_unresolved_degree = disc_roots.residual_degree;
    if (disc_roots.residual_degree >= 2)
        report.warnings.push_back("discriminant has a non-rational root cluster of degree " +
                                  std::to_string(disc_roots.residual_degree) +
                                  "; those singular fibres are not analyzed");

    // flatness and the t-regularity certificate
    report.flatness = is_t_flat(cover.affine);
    if (cover.affine.vars.contains(Var::t)) {
        report.has_ideal_quotient_certificate = true;
        const Poly t = Poly::variable(cover.affine.vars, Var::t);
        report.ideal_quotient_t_regular =
            ideals_equal(ideal_quotient(cover.affine, t), cover.affine);
    }
    if (report.flatness.verdict == FlatVerdict::Undetermined) {
        if (report.flatness.unresolved_t_regular == true) {
            report.warnings.push_back(
                "flatness: non-rational candidate factors certified torsion-free by ideal "
                "quotients; length check covers the rational candidates only");
        } else {
            report.has_undetermined = true;
            report.warnings.push_back(
                "flatness: candidate jump locus has non-rational factors; verdict undetermined");
        }
    }

    // fibres to analyze: rational discriminant roots plus flatness candidates
    std::vector<Scalar> ts;
    for (const auto& [t0, mult] : report.discriminant_roots) {
        (void)mult;
        ts.push_back(t0);
    }
    for (const auto& [t0, len] : report.flatness.checked) {
        (void)len;
        ts.push_back(t0);
    }
    std::sort(ts.begin(), ts.end(),
              [](const Scalar& a, const Scalar& b) { return a.str() < b.str(); });
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    report.generic = analyze_fibre(fam, cover, FibreParam::generic_point(), opts.trunc);
    for (const auto& t0 : ts)
        report.special.push_back(analyze_fibre(fam, cover, FibreParam::at(t0), opts.trunc));

    for (const auto& fa : report.special) {
        if (fa.undetermined) {
            report.has_undetermined = true;
            report.warnings.push_back("fibre t = " + fa.fibre.str() +
                                      ": " + fa.undetermined_reason);
        }
        for (const auto& d : fa.torsion)
            if (d.is_cluster)
                report.warnings.push_back("fibre t = " + fa.fibre.str() +
                                          ": support cluster of degree " +
                                          std::to_string(d.cluster_degree));
    }
    if (report.generic.undetermined) {
        report.has_undetermined = true;
        report.warnings.push_back("generic fibre: " + report.generic.undetermined_reason);
    }

    const bool flat = report.flatness.verdict == FlatVerdict::Flat ||
                      (report.flatness.verdict == FlatVerdict::Undetermined &&
                       report.flatness.unresolved_t_regular == true);
    report.s_flat_fm_family = flat && !report.has_undetermined;
    report.coverage_note =
        "fibrewise FM images verified at the generic point and at the checked t values; "
        "other fibres are covered by flatness of the cover";
    return report;
}

}  // namespace specfm

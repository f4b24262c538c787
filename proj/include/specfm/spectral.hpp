#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specfm/fibration.hpp"
#include "specfm/fmcat.hpp"
#include "specfm/groebner.hpp"

namespace specfm {

// A spectral cover: a curve in the chart z = 1 of the fibration, finite over
// the t-line, plus an optional explicitly-declared section component at
// infinity (the lambda = -1 situation).
struct SpectralCover {
    Ideal affine;  // variables within {x, y, t}
    bool section_at_infinity = false;
};

// Validates containment in the fibration and finiteness of the generic fibre.
SpectralCover make_cover(const WeierstrassFamily& fam, Ideal affine, bool section_at_infinity);

// Restriction of the cover to a fibre: generators specialized at t = t0, or
// moved over the generic point of the t-line.
Ideal fibre_ideal(const SpectralCover& cover, const FibreParam& fibre);

// Support points with local lengths; nodal points are routed through the
// formal-local classifier at the given truncation order.
std::vector<TorsionModuleDescriptor> decompose_fibre(const WeierstrassFamily& fam,
                                                     const SpectralCover& cover,
                                                     const FibreParam& fibre, int trunc);

struct AnalyzeOptions {
    int trunc = 8;
    std::optional<Scalar> lambda_value;
};

struct FibreAnalysis {
    FibreParam fibre;
    std::size_t length = 0;
    std::vector<TorsionModuleDescriptor> torsion;
    std::vector<SheafDescriptor> fm;
    std::vector<std::string> warnings;
    bool undetermined = false;  // an honest classification failure, not an error
    std::string undetermined_reason;
};

struct DegenerationReport {
    // inputs (after any lambda specialization)
    WeierstrassFamily family;
    SpectralCover cover;
    std::optional<Scalar> lambda_value;

    Poly discriminant;  // over {t}
    std::vector<std::pair<Scalar, std::uint32_t>> discriminant_roots;
    std::uint64_t discriminant_unresolved_degree = 0;

    FlatnessCertificate flatness;
    bool has_ideal_quotient_certificate = false;
    bool ideal_quotient_t_regular = false;

    FibreAnalysis generic;
    std::vector<FibreAnalysis> special;  // sorted by the t value's text

    bool section_component = false;  // declared component: trivial on every fibre

    std::vector<std::string> warnings;
    bool has_undetermined = false;
    bool s_flat_fm_family = false;
    std::string coverage_note;
};

// Full pipeline: flatness (+ t-regularity certificate), singular fibres,
// per-fibre torsion decomposition and FM images, assembled deterministically.
DegenerationReport analyze(const WeierstrassFamily& fam, const SpectralCover& cover,
                           const AnalyzeOptions& opts = {});

}  // namespace specfm

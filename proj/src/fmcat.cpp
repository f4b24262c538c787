#include "specfm/fmcat.hpp"

#include "specfm/error.hpp"

namespace specfm {

std::string SheafDescriptor::str() const {
    switch (variant) {
        case SheafVariant::Trivial: return "O (trivial line bundle)";
        case SheafVariant::LineBundle: {
            std::string s = "line bundle, degree " + std::to_string(degree);
            if (!locally_free) s = "rank-1 torsion-free sheaf, degree " + std::to_string(degree);
            if (conjugate_cluster) s += " (conjugate cluster member)";
            if (line_identity_undetermined) s += " (identity undetermined)";
            return s;
        }
        case SheafVariant::BandBundle:
            return "B((1,-1),1," + (band_lambda ? band_lambda->str() : std::string("?")) + ")";
        case SheafVariant::StringSheaf:
            return string_params == "undetermined" ? "string sheaf (parameters undetermined)"
                                                   : string_params;
    }
    return "?";
}

namespace {

SheafDescriptor trivial_bundle() {
    SheafDescriptor s;
    s.rank = 1;
    s.degree = 0;
    s.locally_free = true;
    s.indecomposable = true;
    s.semistable = true;
    s.variant = SheafVariant::Trivial;
    return s;
}

SheafDescriptor line_bundle(bool identity_undetermined, bool conjugate, bool locally_free) {
    SheafDescriptor s;
    s.rank = 1;
    s.degree = 0;
    s.locally_free = locally_free;
    s.indecomposable = true;
    s.semistable = true;
    s.variant = SheafVariant::LineBundle;
    s.line_identity_undetermined = identity_undetermined;
    s.conjugate_cluster = conjugate;
    return s;
}

SheafDescriptor band_bundle(Scalar lambda) {
    SheafDescriptor s;
    s.rank = 2;
    s.degree = 0;
    s.locally_free = true;
    s.indecomposable = true;
    s.semistable = true;
    s.variant = SheafVariant::BandBundle;
    s.band_lambda = std::move(lambda);
    return s;
}

SheafDescriptor string_sheaf(std::string params) {
    SheafDescriptor s;
    s.rank = 2;
    s.degree = 0;
    s.locally_free = false;
    s.indecomposable = true;
    s.semistable = true;
    s.variant = SheafVariant::StringSheaf;
    s.string_params = std::move(params);
    return s;
}

}  // namespace

std::vector<SheafDescriptor> fm_torsion(const std::vector<TorsionModuleDescriptor>& descs) {
    std::vector<SheafDescriptor> out;
    for (const auto& d : descs) {
        if (d.length < 1) fail_input("fm_torsion: descriptor with zero length");
        if (d.is_cluster) {
            // a degree-d cluster of simple points maps to d conjugate line
            // bundles; length > degree would mean non-reduced cluster
            // structure, outside the dictionary
            if (d.length != d.cluster_degree)
                fail_undetermined(
                    "fm_torsion: non-reduced support cluster is outside the dictionary");
            for (std::uint64_t k = 0; k < d.cluster_degree; ++k)
                out.push_back(line_bundle(true, true, true));
            continue;
        }
        if (d.on_smooth_locus) {
            if (d.length == 1) {
                if (d.at_section)
                    out.push_back(trivial_bundle());
                else
                    out.push_back(line_bundle(false, false, true));
                continue;
            }
            fail_undetermined(
                "fm_torsion: length >= 2 at a smooth point is outside the dictionary");
        }
        // at the nodal point: needs a classified local type
        if (!d.local_type)
            fail_input("fm_torsion: nodal summand without a classified local type");
        const LocalModuleType& lt = *d.local_type;
        switch (lt.kind) {
            case LocalModuleType::Kind::Simple:
                // ideal sheaf of the node, twisted by the section: rank 1,
                // degree 0, torsion free but not locally free
                out.push_back(line_bundle(false, false, false));
                break;
            case LocalModuleType::Kind::Band:
                out.push_back(band_bundle(lt.band_lambda));
                break;
            case LocalModuleType::Kind::String:
                if (lt.orientation == LocalModuleType::Orientation::Xi)
                    out.push_back(string_sheaf("S(0,-1)"));
                else
                    out.push_back(string_sheaf("undetermined"));
                break;
        }
    }
    return out;
}

ChargeVector charge_of(const TorsionModuleDescriptor& d) { return {0, long(d.length)}; }

ChargeVector charge_of(const SheafDescriptor& d) { return {long(d.rank), d.degree}; }

ChargeVector charge_fm(const ChargeVector& c) { return {c.degree, -c.rank}; }

ChargeVector fm_square_charge(const ChargeVector& c) { return charge_fm(charge_fm(c)); }

SheafDescriptor dualize(const SheafDescriptor& s) {
    SheafDescriptor d = s;
    d.degree = -s.degree;
    return d;
}

TorsionModuleDescriptor matlis_dual(TorsionModuleDescriptor d) {
    d.i_moved = !d.i_moved;
    return d;
}

}  // namespace specfm

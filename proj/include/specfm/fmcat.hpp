#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specfm/fibration.hpp"
#include "specfm/nodelocal.hpp"

namespace specfm {

// Fibre parameter: a value of t, or the generic point of the t-line.
struct FibreParam {
    bool generic = false;
    Scalar t0;

    static FibreParam generic_point() { return {true, Scalar(0)}; }
    static FibreParam at(Scalar t) { return {false, std::move(t)}; }
    std::string str() const { return generic ? "generic" : t0.str(); }
    bool operator==(const FibreParam& o) const {
        return generic == o.generic && (generic || t0 == o.t0);
    }
};

// One fibrewise torsion summand of the restricted cover module.
struct TorsionModuleDescriptor {
    FibreParam fibre;
    bool is_cluster = false;
    ProjPoint point;                  // meaningful when !is_cluster
    std::uint64_t cluster_degree = 0; // meaningful when is_cluster
    std::size_t length = 1;
    bool on_smooth_locus = true;
    std::optional<LocalModuleType> local_type;  // present iff !on_smooth_locus
    bool at_section = false;
    bool i_moved = false;  // involution bookkeeping set by the Matlis dual
};

// Descriptor of a semi-stable sheaf on a fibre (the FM image side).
enum class SheafVariant { Trivial, LineBundle, BandBundle, StringSheaf };

struct SheafDescriptor {
    std::size_t rank = 1;
    long degree = 0;
    bool locally_free = true;
    bool indecomposable = true;
    bool semistable = true;
    SheafVariant variant = SheafVariant::LineBundle;
    std::optional<Scalar> band_lambda;       // BandBundle((1,-1),1,lambda)
    std::string string_params;               // "S(0,-1)" or "undetermined"
    bool line_identity_undetermined = false; // the L_lambda bookkeeping flag
    bool conjugate_cluster = false;          // one of a conjugate family of line bundles

    std::string str() const;
};

// The descriptor-level Fourier-Mukai dictionary on fibrewise torsion input:
//  - simple point at the section        -> trivial line bundle
//  - simple point on the smooth locus   -> degree-0 line bundle (ideal-sheaf twist)
//  - Band((1,1),1,lambda) at the node   -> B((1,-1),1,lambda), rank 2, degree 0
//  - String(xi, 2) at the node          -> S(0,-1): rank 2, not locally free
//  - String(eta, 2)                     -> string sheaf with undetermined parameters
//  - degree-d cluster of simple points  -> d conjugate degree-0 line bundles
std::vector<SheafDescriptor> fm_torsion(const std::vector<TorsionModuleDescriptor>& descs);

struct ChargeVector {
    long rank = 0;
    long degree = 0;
    bool operator==(const ChargeVector& o) const {
        return rank == o.rank && degree == o.degree;
    }
    ChargeVector operator-() const { return {-rank, -degree}; }
};

ChargeVector charge_of(const TorsionModuleDescriptor& d);  // (0, length)
ChargeVector charge_of(const SheafDescriptor& d);          // (rank, degree)

// The engine's FM charge bookkeeping: (r, d) -> (d, -r).
ChargeVector charge_fm(const ChargeVector& c);
// charge_fm twice; equals -c (the charge shadow of FM^2 = twist . i^* . [-1]
// with trivial twist over the affine line).
ChargeVector fm_square_charge(const ChargeVector& c);

// Degree negation on torsion-free descriptors; involutive. All other fields
// (including formal band parameters) are carried unchanged - the involution's
// action on parameters is deliberately not asserted.
SheafDescriptor dualize(const SheafDescriptor& s);

// Matlis duality at descriptor level: preserves length and support fibre,
// toggles the i-moved relocation flag (i is an involution).
TorsionModuleDescriptor matlis_dual(TorsionModuleDescriptor d);

}  // namespace specfm

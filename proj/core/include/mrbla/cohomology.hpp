#pragma once

#include "mrbla/cochain.hpp"
#include "mrbla/linalg.hpp"

namespace mrbla {

/// Whether the degree-0 map of the combined complex (v -> (delta v, 0), a
/// convention, see docs/FORMAT.md) contributes coboundaries in degree 1.
/// Irrelevant for the plain complexes and for degrees != 1.
enum class Degree0Policy { with_d0, without_d0 };

struct CohomologyReport {
    Complex complex = Complex::mrbla;
    int degree = 0;
    int dim_cochains = 0;
    int dim_cocycles = 0;
    int dim_coboundaries = 0;
    int betti = 0;
    PhiVariant variant = PhiVariant::corrected;
    Degree0Policy degree0 = Degree0Policy::with_d0;
};

/// Exact cohomology dimensions at the given degree. Before quotienting the
/// coboundary square d^n * d^(n-1) is checked to vanish; a nonzero product
/// (possible for the combined complex under a bad phi variant) raises
/// IllDefinedComplexError.
CohomologyReport betti(Complex complex, const MRBStructure& s, const MRBRepresentation& r, int degree,
                       PhiVariant variant, Degree0Policy degree0 = Degree0Policy::with_d0);

struct ClassifyResult {
    bool is_cocycle = false;
    bool is_coboundary = false;
    std::optional<MRBLACochain> witness; // d(witness) == x when is_coboundary
};

/// Cocycle/coboundary membership of a combined cochain, with a preimage
/// witness when one exists. Same well-definedness gate as betti().
ClassifyResult classify(const MRBStructure& s, const MRBRepresentation& r, const MRBLACochain& x,
                        PhiVariant variant, Degree0Policy degree0 = Degree0Policy::with_d0);

} // namespace mrbla

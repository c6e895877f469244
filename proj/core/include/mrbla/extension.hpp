#pragma once

#include "mrbla/cohomology.hpp"

namespace mrbla {

/// Split-model abelian extension: total space g (+) V on the basis
/// (e_1..e_d, u_1..u_m), bracket
///   [(a,u),(b,v)] = ([a,b], psi(a,b) + l(a,v) + r(u,b)),
/// operator That(a,u) = (Ta, chi(a) + T_V u), fiber bracket identically zero.
/// incl and proj are the coordinate inclusion/projection.
struct AbelianExtension {
    MRBStructure base;
    MRBRepresentation fiber;
    Cochain psi; // degree 2 into V
    Cochain chi; // degree 1 into V
    MRBStructure total;
    LinearOperator incl; // V -> total
    LinearOperator proj; // total -> g
};

struct Section {
    LinearOperator s; // g -> total, proj o s = Id
};

/// Carries the failed validation of a would-be total structure.
struct ExtensionBuildError : PreconditionError {
    ExtensionBuildError(std::string msg, ViolationReport rep)
        : PreconditionError(std::move(msg)), report(std::move(rep)) {}
    ViolationReport report;
};

/// Builds the split-model extension and validates the total structure. The
/// total is Leibniz + modified Rota-Baxter exactly when (psi, chi) is a
/// degree-2 cocycle of the combined complex; on failure the error carries the
/// violating basis tuples.
AbelianExtension build_extension(const MRBStructure& s, const MRBRepresentation& r, const Cochain& psi,
                                 const Cochain& chi);

/// a -> (a, 0).
Section canonical_section(const AbelianExtension& ext);

/// Every split-model section is canonical + incl o beta for a unique
/// degree-1 cochain beta into V.
Section section_from_offset(const AbelianExtension& ext, const Cochain& beta);

/// psi(a,b) = [s a, s b] - s([a,b]), chi(a) = That(s a) - s(Ta); both land in
/// the fiber (checked) and reproduce the builder inputs for the canonical
/// section.
std::pair<Cochain, Cochain> extract_cocycle(const AbelianExtension& ext, const Section& sec);

/// Fiber actions read off the total bracket through the section; independent
/// of the section and equal to the fiber representation in the split model.
MRBRepresentation induced_rep_from_extension(const AbelianExtension& ext, const Section& sec);

struct SameClassResult {
    bool isomorphic_as_tested = false;
    std::optional<MRBLACochain> class_difference_witness;
    /// The explicit total-space isomorphism (a,u) -> (a, u + beta(a)), filled
    /// when the witness has the form (beta, 0).
    std::optional<LinearOperator> isomorphism;
};

/// Tests whether two extensions of the same base by the same fiber represent
/// the same second-cohomology class (difference of extracted cocycles lies in
/// the image of the degree-1 differential).
SameClassResult same_class(const AbelianExtension& e1, const AbelianExtension& e2, PhiVariant variant);

} // namespace mrbla

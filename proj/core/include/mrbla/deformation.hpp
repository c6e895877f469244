#pragma once

#include "mrbla/cohomology.hpp"

namespace mrbla {

/// Truncated one-parameter deformation of a structure: bracket and operator
/// power series cut off at t^order, with mu[0] the base bracket (as a
/// degree-2 cochain into the algebra) and T[0] the base operator.
struct TruncatedDeformation {
    MRBStructure base;
    int order = 0;
    std::vector<Cochain> mu;        // order+1 entries, degree-2, module = algebra
    std::vector<LinearOperator> T;  // order+1 entries, dim-square
};

/// Truncated formal isomorphism: psi[0] must be the identity.
struct TruncatedIsomorphism {
    int order = 0;
    std::vector<LinearOperator> psi; // order+1 entries
};

/// Constant deformation of a structure (all higher terms zero).
TruncatedDeformation constant_deformation(const MRBStructure& s, int order);
/// Identity isomorphism series.
TruncatedIsomorphism identity_isomorphism(int dim, int order);

/// Per-order verification. Entry n checks the order-n convolution identities
/// (bracket self-consistency on basis triples, operator compatibility on
/// basis pairs); entry 0 reproduces validate_leibniz + validate_mrb.
std::vector<ViolationReport> verify_truncated(const TruncatedDeformation& defm);

/// The order-1 pair (mu_1, T_1) packaged as a combined degree-2 cochain,
/// classified in the deformation complex (adjoint coefficients).
std::pair<MRBLACochain, ClassifyResult> infinitesimal(const TruncatedDeformation& defm,
                                                      PhiVariant variant);

/// Series inverse via the Neumann recursion; requires psi[0] = Id.
TruncatedIsomorphism invert(const TruncatedIsomorphism& iso);

/// Transport of the deformation along the isomorphism series:
/// mu' = psi^-1 o mu o (psi (x) psi), T' = psi^-1 o T o psi, mod t^(order+1).
TruncatedDeformation push_forward(const TruncatedDeformation& defm, const TruncatedIsomorphism& iso);

/// Order-1 elimination: given a witness d^1(alpha, x) = (mu_1, T_1), pushes
/// the deformation along Id - psi_1 t with psi_1 = alpha + delta^0(x). The
/// result has vanishing order-1 terms.
TruncatedDeformation rigidity_step(const TruncatedDeformation& defm, const Cochain& alpha,
                                   const Vec& x, PhiVariant variant);

struct RigidityOutcome {
    TruncatedDeformation result;
    int orders_eliminated = 0;
    bool constant = false;     // all orders 1..N now vanish
    std::string obstruction;   // why the loop stopped, when not constant
};

/// The elimination loop: repeatedly verifies the leading nonzero pair is a
/// cocycle, solves for a coboundary witness, and eliminates that order. Stops
/// (and reports) at the first order whose class is nonzero.
RigidityOutcome rigidity_reduce(const TruncatedDeformation& defm, PhiVariant variant);

} // namespace mrbla

#pragma once

#include "mrbla/algebra.hpp"

namespace mrbla {

/// Descendent structure: same carrier, bracket [a,b]' = [a,Tb] + [Ta,b],
/// same operator and weight. The result is again Leibniz and the operator is
/// again modified Rota-Baxter of the same weight on it.
MRBStructure induced_algebra(const MRBStructure& s);

/// Descendent actions l'(a,v) = l(Ta,v) - T_V l(a,v) and
/// r'(v,a) = r(v,Ta) - T_V r(v,a), with T_V unchanged. The result is a valid
/// MRBRepresentation of induced_algebra(s).
MRBRepresentation induced_representation(const MRBStructure& s, const MRBRepresentation& r);

/// Shape-checked variants without the validity preconditions; used where the
/// caller has already validated (matrix assembly loops).
MRBStructure induced_algebra_unchecked(const MRBStructure& s);
MRBRepresentation induced_representation_unchecked(const MRBStructure& s, const MRBRepresentation& r);

} // namespace mrbla

#pragma once

#include "mrbla/cochain.hpp"
#include "mrbla/deformation.hpp"

#include <random>

namespace mrbla {

/// Seeded, platform-stable randomness for audits: raw mt19937_64 output is
/// reduced modulo small ranges directly (std distributions are not
/// reproducible across standard libraries).
class SampleSource {
  public:
    explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

    /// Integer in [-3, 3] as an exact scalar.
    Rational small_scalar() { return rat(static_cast<long>(rng_() % 7) - 3); }

    Cochain cochain(int degree, int dim_module, int dim_algebra);
    MRBLACochain pair(int degree, int dim_module, int dim_algebra);
    Matrix matrix(int rows, int cols);
    /// Identity plus random higher terms.
    TruncatedIsomorphism isomorphism(int dim, int order);

  private:
    std::mt19937_64 rng_;
};

} // namespace mrbla

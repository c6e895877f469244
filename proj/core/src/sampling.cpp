#include "mrbla/sampling.hpp"

namespace mrbla {

Cochain SampleSource::cochain(int degree, int dim_module, int dim_algebra) {
    Cochain out(degree, dim_module, dim_algebra);
    for (auto& x : out.coeffs) x = small_scalar();
    return out;
}

MRBLACochain SampleSource::pair(int degree, int dim_module, int dim_algebra) {
    MRBLACochain out;
    out.f = cochain(degree, dim_module, dim_algebra);
    if (degree >= 1) out.g = cochain(degree - 1, dim_module, dim_algebra);
    return out;
}

Matrix SampleSource::matrix(int rows, int cols) {
    Matrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out(i, j) = small_scalar();
    return out;
}

TruncatedIsomorphism SampleSource::isomorphism(int dim, int order) {
    TruncatedIsomorphism out = identity_isomorphism(dim, order);
    for (int k = 1; k <= order; ++k) out.psi[k] = matrix(dim, dim);
    return out;
}

} // namespace mrbla

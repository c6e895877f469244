#include "mrbla/cohomology.hpp"

#include "mrbla/errors.hpp"

namespace mrbla {

namespace {

const char* complex_name(Complex c) {
    switch (c) {
    case Complex::la: return "la";
    case Complex::mrbo: return "mrbo";
    case Complex::mrbla: return "mrbla";
    }
    return "?";
}

void require_square_vanishes(Complex complex, const Matrix& dn, const Matrix& dprev, int degree,
                             PhiVariant variant) {
    if (!(dn * dprev).is_zero()) {
        throw IllDefinedComplexError(std::string("coboundary square does not vanish on the ") +
                                     complex_name(complex) + " complex between degrees " +
                                     std::to_string(degree - 1) + " and " + std::to_string(degree) +
                                     " under phi variant " +
                                     (variant == PhiVariant::printed ? "printed" : "corrected"));
    }
}

} // namespace

CohomologyReport betti(Complex complex, const MRBStructure& s, const MRBRepresentation& r, int degree,
                       PhiVariant variant, Degree0Policy degree0) {
    if (degree < 0) throw MalformedInputError("negative degree");
    CohomologyReport out;
    out.complex = complex;
    out.degree = degree;
    out.variant = variant;
    out.degree0 = degree0;

    const Matrix dn = assemble_matrix(complex, s, r, degree, variant);
    out.dim_cochains = dn.cols();
    const LinearSolveResult red = reduce(dn);
    out.dim_cocycles = red.nullity;

    if (degree == 0) {
        out.dim_coboundaries = 0;
    } else {
        const bool skip_d0 =
            complex == Complex::mrbla && degree == 1 && degree0 == Degree0Policy::without_d0;
        if (skip_d0) {
            out.dim_coboundaries = 0;
        } else {
            const Matrix dprev = assemble_matrix(complex, s, r, degree - 1, variant);
            require_square_vanishes(complex, dn, dprev, degree, variant);
            out.dim_coboundaries = reduce(dprev).rank;
        }
    }
    out.betti = out.dim_cocycles - out.dim_coboundaries;
    return out;
}

ClassifyResult classify(const MRBStructure& s, const MRBRepresentation& r, const MRBLACochain& x,
                        PhiVariant variant, Degree0Policy degree0) {
    const int n = x.degree();
    ClassifyResult out;
    out.is_cocycle = d_full(s, r, x, variant).is_zero();

    if (n == 0 || (n == 1 && degree0 == Degree0Policy::without_d0)) {
        out.is_coboundary = x.is_zero();
        return out;
    }

    const Matrix dn = assemble_matrix(Complex::mrbla, s, r, n, variant);
    const Matrix dprev = assemble_matrix(Complex::mrbla, s, r, n - 1, variant);
    require_square_vanishes(Complex::mrbla, dn, dprev, n, variant);

    const LinearSolveResult sol = solve(dprev, vectorize(x));
    if (sol.particular_solution) {
        out.is_coboundary = true;
        out.witness =
            devectorize_pair(n - 1, x.f.dim_module, x.f.dim_algebra, *sol.particular_solution);
    }
    return out;
}

} // namespace mrbla

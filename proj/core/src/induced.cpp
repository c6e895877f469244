#include "mrbla/induced.hpp"

#include "mrbla/errors.hpp"

namespace mrbla {

MRBStructure induced_algebra_unchecked(const MRBStructure& s) {
    const int d = s.algebra.dim;
    MRBStructure out;
    out.algebra = LeibnizAlgebra(d);
    out.algebra.basis_names = s.algebra.basis_names;
    for (int i = 0; i < d; ++i) {
        Vec ei(d);
        ei[i] = 1;
        const Vec Ti = s.T.column(i);
        for (int j = 0; j < d; ++j) {
            Vec ej(d);
            ej[j] = 1;
            const Vec bij = s.algebra.bracket(ei, s.T.column(j)) + s.algebra.bracket(Ti, ej);
            for (int k = 0; k < d; ++k) out.algebra.structure(i, j, k) = bij[k];
        }
    }
    out.T = s.T;
    out.weight = s.weight;
    return out;
}

MRBStructure induced_algebra(const MRBStructure& s) {
    ViolationReport pre = validate_mrb(s);
    if (!pre.ok()) {
        throw PreconditionError("structure is not modified Rota-Baxter; cannot induce");
    }
    return induced_algebra_unchecked(s);
}

MRBRepresentation induced_representation_unchecked(const MRBStructure& s, const MRBRepresentation& r) {
    const int d = s.algebra.dim;
    const int m = r.rep.dim_module;
    MRBRepresentation out;
    out.rep.dim_module = m;
    out.rep.left.assign(d, Matrix(m, m));
    out.rep.right.assign(d, Matrix(m, m));
    for (int i = 0; i < d; ++i) {
        // L'_i = sum_j T(j,i) L_j - T_V L_i ; R'_i = sum_j T(j,i) R_j - T_V R_i
        Matrix lp(m, m), rp(m, m);
        for (int j = 0; j < d; ++j) {
            const Rational& t = s.T(j, i);
            if (t == 0) continue;
            lp = lp + r.rep.left[j].scaled(t);
            rp = rp + r.rep.right[j].scaled(t);
        }
        out.rep.left[i] = lp - r.T_V * r.rep.left[i];
        out.rep.right[i] = rp - r.T_V * r.rep.right[i];
    }
    out.T_V = r.T_V;
    return out;
}

MRBRepresentation induced_representation(const MRBStructure& s, const MRBRepresentation& r) {
    ViolationReport pre = validate_mrb_representation(s, r);
    if (!pre.ok()) {
        throw PreconditionError("not a representation of the modified Rota-Baxter structure; cannot induce");
    }
    return induced_representation_unchecked(s, r);
}

} // namespace mrbla

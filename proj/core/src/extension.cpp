#include "mrbla/extension.hpp"

#include "mrbla/errors.hpp"

namespace mrbla {

namespace {

void require_cochain_shapes(const MRBStructure& s, const MRBRepresentation& r, const Cochain& psi,
                            const Cochain& chi) {
    const int d = s.algebra.dim;
    const int m = r.rep.dim_module;
    if (psi.degree != 2 || psi.dim_algebra != d || psi.dim_module != m) {
        throw MalformedInputError("psi must be a degree-2 cochain from the algebra into the fiber");
    }
    if (chi.degree != 1 || chi.dim_algebra != d || chi.dim_module != m) {
        throw MalformedInputError("chi must be a degree-1 cochain from the algebra into the fiber");
    }
}

void require_section(const AbelianExtension& ext, const Section& sec) {
    const int d = ext.base.algebra.dim;
    if (sec.s.cols() != d || sec.s.rows() != d + ext.fiber.rep.dim_module) {
        throw MalformedInputError("section shape does not match the extension");
    }
    if (!(ext.proj * sec.s == Matrix::identity(d))) {
        throw PreconditionError("not a section: proj o s != Id");
    }
}

} // namespace

AbelianExtension build_extension(const MRBStructure& s, const MRBRepresentation& r, const Cochain& psi,
                                 const Cochain& chi) {
    require_cochain_shapes(s, r, psi, chi);
    const int d = s.algebra.dim;
    const int m = r.rep.dim_module;
    const int n = d + m;

    AbelianExtension ext;
    ext.base = s;
    ext.fiber = r;
    ext.psi = psi;
    ext.chi = chi;

    LeibnizAlgebra tot(n);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const int ij[2] = {i, j};
            for (int k = 0; k < d; ++k) tot.structure(i, j, k) = s.algebra.structure(i, j, k);
            for (int v = 0; v < m; ++v) tot.structure(i, j, d + v) = psi.at(v, ij);
        }
    }
    for (int i = 0; i < d; ++i) {
        for (int w = 0; w < m; ++w) {
            for (int v = 0; v < m; ++v) {
                tot.structure(i, d + w, d + v) = r.rep.left[i](v, w);
                tot.structure(d + w, i, d + v) = r.rep.right[i](v, w);
            }
        }
    }

    Matrix That(n, n);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) That(i, j) = s.T(i, j);
        const int ji[1] = {i};
        for (int v = 0; v < m; ++v) That(d + v, i) = chi.at(v, ji);
    }
    for (int w = 0; w < m; ++w) {
        for (int v = 0; v < m; ++v) That(d + v, d + w) = r.T_V(v, w);
    }

    ext.total = MRBStructure{std::move(tot), std::move(That), s.weight};

    ext.incl = Matrix(n, m);
    for (int v = 0; v < m; ++v) ext.incl(d + v, v) = 1;
    ext.proj = Matrix(d, n);
    for (int i = 0; i < d; ++i) ext.proj(i, i) = 1;

    ViolationReport leib = validate_leibniz(ext.total.algebra);
    if (!leib.ok()) {
        throw ExtensionBuildError("total bracket is not Leibniz: the pair fails the cocycle condition",
                                  std::move(leib));
    }
    ViolationReport mrb = validate_mrb(ext.total);
    if (!mrb.ok()) {
        throw ExtensionBuildError(
            "total operator is not modified Rota-Baxter: the pair fails the cocycle condition",
            std::move(mrb));
    }
    return ext;
}

Section canonical_section(const AbelianExtension& ext) {
    const int d = ext.base.algebra.dim;
    Matrix s(d + ext.fiber.rep.dim_module, d);
    for (int i = 0; i < d; ++i) s(i, i) = 1;
    return Section{std::move(s)};
}

Section section_from_offset(const AbelianExtension& ext, const Cochain& beta) {
    const int d = ext.base.algebra.dim;
    const int m = ext.fiber.rep.dim_module;
    if (beta.degree != 1 || beta.dim_algebra != d || beta.dim_module != m) {
        throw MalformedInputError("section offset must be a degree-1 cochain into the fiber");
    }
    Section sec = canonical_section(ext);
    for (int i = 0; i < d; ++i) {
        const int ji[1] = {i};
        for (int v = 0; v < m; ++v) sec.s(d + v, i) = beta.at(v, ji);
    }
    return sec;
}

std::pair<Cochain, Cochain> extract_cocycle(const AbelianExtension& ext, const Section& sec) {
    require_section(ext, sec);
    const int d = ext.base.algebra.dim;
    const int m = ext.fiber.rep.dim_module;

    Cochain psi(2, m, d);
    Cochain chi(1, m, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Vec val = ext.total.algebra.bracket(sec.s.column(i), sec.s.column(j));
            val = val - sec.s.apply(ext.base.algebra.bracket_basis(i, j));
            for (int k = 0; k < d; ++k) {
                if (val[k] != 0) throw PreconditionError("extracted pair does not land in the fiber");
            }
            const int ij[2] = {i, j};
            for (int v = 0; v < m; ++v) psi.at(v, ij) = val[d + v];
        }
        Vec val = ext.total.T.apply(sec.s.column(i));
        val = val - sec.s.apply(ext.base.T.column(i));
        for (int k = 0; k < d; ++k) {
            if (val[k] != 0) throw PreconditionError("extracted pair does not land in the fiber");
        }
        const int ji[1] = {i};
        for (int v = 0; v < m; ++v) chi.at(v, ji) = val[d + v];
    }
    return {std::move(psi), std::move(chi)};
}

MRBRepresentation induced_rep_from_extension(const AbelianExtension& ext, const Section& sec) {
    require_section(ext, sec);
    const int d = ext.base.algebra.dim;
    const int m = ext.fiber.rep.dim_module;

    MRBRepresentation out;
    out.rep.dim_module = m;
    out.rep.left.assign(d, Matrix(m, m));
    out.rep.right.assign(d, Matrix(m, m));
    for (int i = 0; i < d; ++i) {
        const Vec si = sec.s.column(i);
        for (int w = 0; w < m; ++w) {
            const Vec uw = ext.incl.column(w);
            const Vec lv = ext.total.algebra.bracket(si, uw);
            const Vec rv = ext.total.algebra.bracket(uw, si);
            for (int v = 0; v < m; ++v) {
                out.rep.left[i](v, w) = lv[d + v];
                out.rep.right[i](v, w) = rv[d + v];
            }
        }
    }
    out.T_V = ext.fiber.T_V;
    return out;
}

SameClassResult same_class(const AbelianExtension& e1, const AbelianExtension& e2, PhiVariant variant) {
    if (!(e1.base.algebra == e2.base.algebra) || !(e1.base.T == e2.base.T) ||
        e1.base.weight != e2.base.weight) {
        throw PreconditionError("extensions have different bases");
    }
    if (e1.fiber.rep.dim_module != e2.fiber.rep.dim_module || !(e1.fiber.T_V == e2.fiber.T_V) ||
        e1.fiber.rep.left != e2.fiber.rep.left || e1.fiber.rep.right != e2.fiber.rep.right) {
        throw PreconditionError("extensions have different fibers");
    }

    const auto [psi1, chi1] = extract_cocycle(e1, canonical_section(e1));
    const auto [psi2, chi2] = extract_cocycle(e2, canonical_section(e2));
    MRBLACochain diff;
    diff.f = psi1 - psi2;
    diff.g = chi1 - chi2;

    const Matrix d1 = assemble_matrix(Complex::mrbla, e1.base, e1.fiber, 1, variant);
    const LinearSolveResult sol = solve(d1, vectorize(diff));

    SameClassResult out;
    if (!sol.particular_solution) return out;
    out.isomorphic_as_tested = true;
    const int d = e1.base.algebra.dim;
    const int m = e1.fiber.rep.dim_module;
    out.class_difference_witness = devectorize_pair(1, m, d, *sol.particular_solution);

    if (out.class_difference_witness->g->is_zero()) {
        // xi(a, u) = (a, u + beta(a)) carries e1's model onto e2's
        Matrix xi = Matrix::identity(d + m);
        const Cochain& beta = out.class_difference_witness->f;
        for (int i = 0; i < d; ++i) {
            const int ji[1] = {i};
            for (int v = 0; v < m; ++v) xi(d + v, i) = beta.at(v, ji);
        }
        out.isomorphism = std::move(xi);
    }
    return out;
}

} // namespace mrbla

#include "mrbla/algebra.hpp"

#include "mrbla/errors.hpp"

namespace mrbla {

Vec LeibnizAlgebra::bracket_basis(int i, int j) const {
    Vec out(dim);
    for (int k = 0; k < dim; ++k) out[k] = structure(i, j, k);
    return out;
}

Vec LeibnizAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim) {
        throw MalformedInputError("bracket operand dimension mismatch");
    }
    Vec out(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            const Rational xy = x[i] * y[j];
            for (int k = 0; k < dim; ++k) {
                const Rational& s = structure(i, j, k);
                if (s != 0) out[k] += xy * s;
            }
        }
    }
    return out;
}

Vec Representation::act_left(const Vec& a, const Vec& v) const {
    Vec out(dim_module);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) add_scaled(out, a[i], left[i].apply(v));
    }
    return out;
}

Vec Representation::act_right(const Vec& v, const Vec& a) const {
    Vec out(dim_module);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) add_scaled(out, a[i], right[i].apply(v));
    }
    return out;
}

namespace {

void require_square(const LinearOperator& T, int dim, const char* what) {
    if (T.rows() != dim || T.cols() != dim) {
        throw MalformedInputError(std::string(what) + ": operator shape does not match dimension");
    }
}

void require_rep_shape(const LeibnizAlgebra& alg, const Representation& rep) {
    if (static_cast<int>(rep.left.size()) != alg.dim || static_cast<int>(rep.right.size()) != alg.dim) {
        throw MalformedInputError("representation: need one action matrix per algebra basis vector");
    }
    for (const auto& m : rep.left) require_square(m, rep.dim_module, "left action");
    for (const auto& m : rep.right) require_square(m, rep.dim_module, "right action");
}

std::string first_violation_note(const ViolationReport& rep) {
    const Violation& v = rep.violations.front();
    std::string idx;
    for (std::size_t i = 0; i < v.basis_indices.size(); ++i) {
        idx += (i ? "," : "") + std::to_string(v.basis_indices[i]);
    }
    return v.axiom_id + " fails at basis tuple (" + idx + ")";
}

} // namespace

ViolationReport validate_leibniz(const LeibnizAlgebra& alg) {
    if (static_cast<int>(alg.c.size()) != alg.dim * alg.dim * alg.dim || alg.dim <= 0) {
        throw MalformedInputError("structure tensor shape is not dim^3");
    }
    ViolationReport report;
    const int d = alg.dim;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                // [e_i, [e_j, e_k]] - [[e_i, e_j], e_k] - [e_j, [e_i, e_k]]
                Vec ei(d), ej(d), ek(d);
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                Vec res = alg.bracket(ei, alg.bracket_basis(j, k));
                res = res - alg.bracket(alg.bracket_basis(i, j), ek);
                res = res - alg.bracket(ej, alg.bracket_basis(i, k));
                if (!is_zero(res)) {
                    report.violations.push_back({"leibniz", {i, j, k}, std::move(res)});
                }
            }
        }
    }
    return report;
}

ViolationReport validate_representation(const LeibnizAlgebra& alg, const Representation& rep) {
    require_rep_shape(alg, rep);
    ViolationReport report;
    const int d = alg.dim;
    const int m = rep.dim_module;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const Vec bij = alg.bracket_basis(i, j);
            for (int w = 0; w < m; ++w) {
                Vec v(m);
                v[w] = 1;
                Vec ei(d), ej(d);
                ei[i] = 1;
                ej[j] = 1;

                // l(a, l(b, v)) = l([a,b], v) + l(b, l(a, v))
                Vec r1 = rep.act_left(ei, rep.act_left(ej, v));
                r1 = r1 - rep.act_left(bij, v);
                r1 = r1 - rep.act_left(ej, rep.act_left(ei, v));
                if (!is_zero(r1)) report.violations.push_back({"LLV", {i, j, w}, std::move(r1)});

                // l(a, r(v, b)) = r(l(a, v), b) + r(v, [a,b])
                Vec r2 = rep.act_left(ei, rep.act_right(v, ej));
                r2 = r2 - rep.act_right(rep.act_left(ei, v), ej);
                r2 = r2 - rep.act_right(v, bij);
                if (!is_zero(r2)) report.violations.push_back({"LRV", {i, j, w}, std::move(r2)});

                // r(v, [a,b]) = r(r(v, a), b) + l(a, r(v, b))
                Vec r3 = rep.act_right(v, bij);
                r3 = r3 - rep.act_right(rep.act_right(v, ei), ej);
                r3 = r3 - rep.act_left(ei, rep.act_right(v, ej));
                if (!is_zero(r3)) report.violations.push_back({"RVV", {i, j, w}, std::move(r3)});
            }
        }
    }
    return report;
}

ViolationReport validate_mrb(const MRBStructure& s) {
    require_square(s.T, s.algebra.dim, "modified operator");
    ViolationReport pre = validate_leibniz(s.algebra);
    if (!pre.ok()) {
        throw PreconditionError("underlying algebra is not Leibniz: " + first_violation_note(pre));
    }
    ViolationReport report;
    const int d = s.algebra.dim;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Vec a(d), b(d);
            a[i] = 1;
            b[j] = 1;
            const Vec Ta = s.T.column(i);
            const Vec Tb = s.T.column(j);
            Vec res = s.algebra.bracket(Ta, Tb);
            res = res - s.T.apply(s.algebra.bracket(a, Tb) + s.algebra.bracket(Ta, b));
            res = res - s.weight * s.algebra.bracket_basis(i, j);
            if (!is_zero(res)) report.violations.push_back({"mrb", {i, j}, std::move(res)});
        }
    }
    return report;
}

ViolationReport validate_rb(const LeibnizAlgebra& alg, const LinearOperator& T, const Rational& weight) {
    require_square(T, alg.dim, "operator");
    ViolationReport pre = validate_leibniz(alg);
    if (!pre.ok()) {
        throw PreconditionError("underlying algebra is not Leibniz: " + first_violation_note(pre));
    }
    ViolationReport report;
    const int d = alg.dim;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Vec a(d), b(d);
            a[i] = 1;
            b[j] = 1;
            const Vec Ta = T.column(i);
            const Vec Tb = T.column(j);
            Vec res = alg.bracket(Ta, Tb);
            res = res - T.apply(alg.bracket(a, Tb) + alg.bracket(Ta, b));
            res = res - weight * T.apply(alg.bracket_basis(i, j));
            if (!is_zero(res)) report.violations.push_back({"rb", {i, j}, std::move(res)});
        }
    }
    return report;
}

ViolationReport validate_mrb_representation(const MRBStructure& s, const MRBRepresentation& r) {
    require_rep_shape(s.algebra, r.rep);
    require_square(r.T_V, r.rep.dim_module, "module operator");
    {
        ViolationReport pre = validate_mrb(s);
        if (!pre.ok()) throw PreconditionError("structure is not modified Rota-Baxter: " + first_violation_note(pre));
        pre = validate_representation(s.algebra, r.rep);
        if (!pre.ok()) throw PreconditionError("actions are not a representation: " + first_violation_note(pre));
    }
    ViolationReport report;
    const int d = s.algebra.dim;
    const int m = r.rep.dim_module;
    for (int i = 0; i < d; ++i) {
        Vec a(d);
        a[i] = 1;
        const Vec Ta = s.T.column(i);
        for (int w = 0; w < m; ++w) {
            Vec v(m);
            v[w] = 1;
            const Vec Tv = r.T_V.column(w);

            // l(Ta, T_V v) = T_V(l(Ta, v) + l(a, T_V v)) + weight * l(a, v)
            Vec res = r.rep.act_left(Ta, Tv);
            res = res - r.T_V.apply(r.rep.act_left(Ta, v) + r.rep.act_left(a, Tv));
            res = res - s.weight * r.rep.act_left(a, v);
            if (!is_zero(res)) report.violations.push_back({"MRBL", {i, w}, std::move(res)});

            // r(T_V v, Ta) = T_V(r(T_V v, a) + r(v, Ta)) + weight * r(v, a)
            Vec res2 = r.rep.act_right(Tv, Ta);
            res2 = res2 - r.T_V.apply(r.rep.act_right(Tv, a) + r.rep.act_right(v, Ta));
            res2 = res2 - s.weight * r.rep.act_right(v, a);
            if (!is_zero(res2)) report.violations.push_back({"MRBR", {i, w}, std::move(res2)});
        }
    }
    return report;
}

MRBStructure rb_to_mrb(const LeibnizAlgebra& alg, const LinearOperator& T, const Rational& weight) {
    ViolationReport pre = validate_rb(alg, T, weight);
    if (!pre.ok()) {
        throw PreconditionError("operator is not Rota-Baxter of the given weight: " + first_violation_note(pre));
    }
    MRBStructure out;
    out.algebra = alg;
    out.T = Matrix::identity(alg.dim).scaled(-weight) - T.scaled(2);
    out.weight = -weight * weight;
    return out;
}

MRBRepresentation adjoint_rep(const MRBStructure& s) {
    ViolationReport pre = validate_mrb(s);
    if (!pre.ok()) {
        throw PreconditionError("structure is not modified Rota-Baxter: " + first_violation_note(pre));
    }
    const int d = s.algebra.dim;
    MRBRepresentation out;
    out.rep.dim_module = d;
    out.rep.left.assign(d, Matrix(d, d));
    out.rep.right.assign(d, Matrix(d, d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                out.rep.left[i](k, j) = s.algebra.structure(i, j, k);
                out.rep.right[i](k, j) = s.algebra.structure(j, i, k);
            }
        }
    }
    out.T_V = s.T;
    return out;
}

} // namespace mrbla

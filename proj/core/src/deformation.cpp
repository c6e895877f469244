#include "mrbla/deformation.hpp"

#include "mrbla/errors.hpp"

namespace mrbla {

namespace {

void require_invariants(const TruncatedDeformation& defm) {
    const int d = defm.base.algebra.dim;
    if (defm.order < 0 || static_cast<int>(defm.mu.size()) != defm.order + 1 ||
        static_cast<int>(defm.T.size()) != defm.order + 1) {
        throw MalformedInputError("deformation needs order+1 bracket and operator terms");
    }
    for (const auto& m : defm.mu) {
        if (m.degree != 2 || m.dim_algebra != d || m.dim_module != d) {
            throw MalformedInputError("deformation bracket terms must be degree-2 with values in the algebra");
        }
    }
    for (const auto& t : defm.T) {
        if (t.rows() != d || t.cols() != d) {
            throw MalformedInputError("deformation operator terms must be dim-square");
        }
    }
    if (!(defm.mu[0] == bracket_cochain(defm.base.algebra)) || !(defm.T[0] == defm.base.T)) {
        throw MalformedInputError("order-0 terms must reproduce the base bracket and operator");
    }
}

void require_iso_invariants(const TruncatedIsomorphism& iso, int dim) {
    if (iso.order < 0 || static_cast<int>(iso.psi.size()) != iso.order + 1) {
        throw MalformedInputError("isomorphism needs order+1 terms");
    }
    for (const auto& p : iso.psi) {
        if (p.rows() != dim || p.cols() != dim) throw MalformedInputError("isomorphism terms must be dim-square");
    }
    if (!(iso.psi[0] == Matrix::identity(dim))) {
        throw MalformedInputError("isomorphism must start at the identity");
    }
}

Vec basis_vec(int d, int i) {
    Vec v(d);
    v[i] = 1;
    return v;
}

} // namespace

TruncatedDeformation constant_deformation(const MRBStructure& s, int order) {
    TruncatedDeformation out;
    out.base = s;
    out.order = order;
    out.mu.assign(order + 1, Cochain::zero(2, s.algebra.dim, s.algebra.dim));
    out.mu[0] = bracket_cochain(s.algebra);
    out.T.assign(order + 1, Matrix::zero(s.algebra.dim, s.algebra.dim));
    out.T[0] = s.T;
    return out;
}

TruncatedIsomorphism identity_isomorphism(int dim, int order) {
    TruncatedIsomorphism out;
    out.order = order;
    out.psi.assign(order + 1, Matrix::zero(dim, dim));
    out.psi[0] = Matrix::identity(dim);
    return out;
}

std::vector<ViolationReport> verify_truncated(const TruncatedDeformation& defm) {
    require_invariants(defm);
    const int d = defm.base.algebra.dim;
    std::vector<ViolationReport> out(defm.order + 1);

    {
        ViolationReport& order0 = out[0];
        ViolationReport leib = validate_leibniz(defm.base.algebra);
        order0.violations = std::move(leib.violations);
        if (order0.ok()) {
            ViolationReport mrb = validate_mrb(defm.base);
            for (auto& v : mrb.violations) order0.violations.push_back(std::move(v));
        }
    }

    for (int n = 1; n <= defm.order; ++n) {
        ViolationReport& rep = out[n];

        // order-n bracket identity: sum_{p+q=n} of the three convolution terms
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                for (int k = 0; k < d; ++k) {
                    const Vec ei = basis_vec(d, i), ej = basis_vec(d, j), ek = basis_vec(d, k);
                    Vec res(d);
                    for (int p = 0; p <= n; ++p) {
                        const int q = n - p;
                        const Cochain& mp = defm.mu[p];
                        const Cochain& mq = defm.mu[q];
                        const int jk[2] = {j, k};
                        const int ij[2] = {i, j};
                        const int ik[2] = {i, k};
                        const Vec args1[2] = {ei, mq.eval_basis(jk)};
                        const Vec args2[2] = {mq.eval_basis(ij), ek};
                        const Vec args3[2] = {ej, mq.eval_basis(ik)};
                        res = res + mp.eval(args1) - mp.eval(args2) - mp.eval(args3);
                    }
                    if (!is_zero(res)) rep.violations.push_back({"deform-leibniz", {i, j, k}, std::move(res)});
                }
            }
        }

        // order-n operator identity with the single weight term at order n
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                const Vec ei = basis_vec(d, i), ej = basis_vec(d, j);
                Vec res(d);
                for (int p = 0; p <= n; ++p) {
                    for (int q = 0; p + q <= n; ++q) {
                        const int rr = n - p - q;
                        const Vec args[2] = {defm.T[q].apply(ei), defm.T[rr].apply(ej)};
                        res = res + defm.mu[p].eval(args);
                        const Vec argsL[2] = {defm.T[rr].apply(ei), ej};
                        res = res - defm.T[p].apply(defm.mu[q].eval(argsL));
                        const Vec argsR[2] = {ei, defm.T[rr].apply(ej)};
                        res = res - defm.T[p].apply(defm.mu[q].eval(argsR));
                    }
                }
                const int ij[2] = {i, j};
                res = res - defm.base.weight * defm.mu[n].eval_basis(ij);
                if (!is_zero(res)) rep.violations.push_back({"deform-mrb", {i, j}, std::move(res)});
            }
        }
    }
    return out;
}

std::pair<MRBLACochain, ClassifyResult> infinitesimal(const TruncatedDeformation& defm,
                                                      PhiVariant variant) {
    if (defm.order < 1) throw PreconditionError("infinitesimal needs a deformation of order >= 1");
    {
        const auto reports = verify_truncated(defm);
        if (!reports[0].ok() || !reports[1].ok()) {
            throw PreconditionError("deformation does not verify through order 1");
        }
    }
    MRBLACochain pair;
    pair.f = defm.mu[1];
    pair.g = operator_cochain(defm.T[1]);
    const MRBRepresentation adj = adjoint_rep(defm.base);
    ClassifyResult cls = classify(defm.base, adj, pair, variant);
    return {std::move(pair), std::move(cls)};
}

TruncatedIsomorphism invert(const TruncatedIsomorphism& iso) {
    const int dim = iso.psi.empty() ? 0 : iso.psi[0].rows();
    require_iso_invariants(iso, dim);
    TruncatedIsomorphism out;
    out.order = iso.order;
    out.psi.assign(iso.order + 1, Matrix::zero(dim, dim));
    out.psi[0] = Matrix::identity(dim);
    for (int n = 1; n <= iso.order; ++n) {
        Matrix acc(dim, dim);
        for (int k = 1; k <= n; ++k) acc = acc + out.psi[n - k] * iso.psi[k];
        out.psi[n] = -acc;
    }
    return out;
}

TruncatedDeformation push_forward(const TruncatedDeformation& defm, const TruncatedIsomorphism& iso) {
    require_invariants(defm);
    const int d = defm.base.algebra.dim;
    require_iso_invariants(iso, d);
    if (iso.order != defm.order) {
        throw MalformedInputError("deformation and isomorphism must be truncated at the same order");
    }
    const TruncatedIsomorphism inv = invert(iso);

    TruncatedDeformation out;
    out.base = defm.base;
    out.order = defm.order;
    out.mu.assign(defm.order + 1, Cochain::zero(2, d, d));
    out.T.assign(defm.order + 1, Matrix::zero(d, d));

    for (int w = 0; w <= defm.order; ++w) {
        // T'_w = sum_{a+b+c=w} psi^-1_a T_b psi_c
        for (int a = 0; a <= w; ++a) {
            for (int b = 0; a + b <= w; ++b) {
                out.T[w] = out.T[w] + inv.psi[a] * defm.T[b] * iso.psi[w - a - b];
            }
        }
        // mu'_w(x, y) = sum_{a+b+c+e=w} psi^-1_a mu_b(psi_c x, psi_e y)
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                Vec acc(d);
                for (int a = 0; a <= w; ++a) {
                    for (int b = 0; a + b <= w; ++b) {
                        for (int c = 0; a + b + c <= w; ++c) {
                            const int e = w - a - b - c;
                            const Vec args[2] = {iso.psi[c].column(i), iso.psi[e].column(j)};
                            add_scaled(acc, 1, inv.psi[a].apply(defm.mu[b].eval(args)));
                        }
                    }
                }
                const int ij[2] = {i, j};
                for (int v = 0; v < d; ++v) out.mu[w].at(v, ij) = acc[v];
            }
        }
    }
    return out;
}

namespace {

LinearOperator order_zero_shift(const MRBStructure& base, const MRBRepresentation& adj,
                                const Cochain& alpha, const Vec& x) {
    // psi_1 = alpha + delta^0(x), both read as operators on the algebra
    Cochain x0(0, base.algebra.dim, base.algebra.dim);
    x0.coeffs = x;
    return cochain_to_operator(alpha) + cochain_to_operator(delta(base.algebra, adj.rep, x0));
}

TruncatedDeformation eliminate_order(const TruncatedDeformation& defm, const MRBRepresentation& adj,
                                     const Cochain& alpha, const Vec& x, int k) {
    TruncatedIsomorphism iso = identity_isomorphism(defm.base.algebra.dim, defm.order);
    iso.psi[k] = -order_zero_shift(defm.base, adj, alpha, x);
    return push_forward(defm, iso);
}

} // namespace

TruncatedDeformation rigidity_step(const TruncatedDeformation& defm, const Cochain& alpha,
                                   const Vec& x, PhiVariant variant) {
    if (defm.order < 1) throw PreconditionError("rigidity step needs a deformation of order >= 1");
    require_invariants(defm);
    const MRBRepresentation adj = adjoint_rep(defm.base);

    MRBLACochain y;
    y.f = alpha;
    Cochain x0(0, defm.base.algebra.dim, defm.base.algebra.dim);
    x0.coeffs = x;
    y.g = x0;
    const MRBLACochain dy = d_full(defm.base, adj, y, variant);
    const Cochain t1 = operator_cochain(defm.T[1]);
    const Cochain residual_f = dy.f - defm.mu[1];
    const Cochain residual_g = *dy.g - t1;
    if (!residual_f.is_zero() || !residual_g.is_zero()) {
        throw PreconditionError("witness does not hit the infinitesimal: residual is nonzero");
    }
    return eliminate_order(defm, adj, alpha, x, 1);
}

RigidityOutcome rigidity_reduce(const TruncatedDeformation& defm, PhiVariant variant) {
    require_invariants(defm);
    RigidityOutcome out;
    out.result = defm;
    const MRBRepresentation adj = adjoint_rep(defm.base);
    const Matrix d1 = assemble_matrix(Complex::mrbla, defm.base, adj, 1, variant);

    for (int k = 1; k <= defm.order; ++k) {
        if (out.result.mu[k].is_zero() && out.result.T[k].is_zero()) continue;

        MRBLACochain z;
        z.f = out.result.mu[k];
        z.g = operator_cochain(out.result.T[k]);
        if (!d_full(defm.base, adj, z, variant).is_zero()) {
            out.obstruction = "order-" + std::to_string(k) + " pair is not a cocycle";
            return out;
        }
        const LinearSolveResult sol = solve(d1, vectorize(z));
        if (!sol.particular_solution) {
            out.obstruction =
                "order-" + std::to_string(k) + " class is nonzero: no coboundary witness exists";
            return out;
        }
        const MRBLACochain w =
            devectorize_pair(1, defm.base.algebra.dim, defm.base.algebra.dim, *sol.particular_solution);
        out.result = eliminate_order(out.result, adj, w.f, w.g->coeffs, k);
        if (!out.result.mu[k].is_zero() || !out.result.T[k].is_zero()) {
            throw Error("internal: order elimination left the order-" + std::to_string(k) +
                        " terms nonzero");
        }
        ++out.orders_eliminated;
    }
    out.constant = true;
    for (int k = 1; k <= defm.order; ++k) {
        if (!out.result.mu[k].is_zero() || !out.result.T[k].is_zero()) out.constant = false;
    }
    return out;
}

} // namespace mrbla

#include "mrbla/cochain.hpp"

#include "mrbla/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace mrbla {

namespace {

std::size_t ipow(int base, int exp) {
    std::size_t out = 1;
    for (int i = 0; i < exp; ++i) out *= static_cast<std::size_t>(base);
    return out;
}

// Row-major enumeration of argument tuples of fixed length.
bool next_tuple(std::vector<int>& js, int d) {
    for (int t = static_cast<int>(js.size()) - 1; t >= 0; --t) {
        if (++js[t] < d) return true;
        js[t] = 0;
    }
    return false;
}

} // namespace

Cochain::Cochain(int n, int m, int d)
    : degree(n), dim_module(m), dim_algebra(d), coeffs(static_cast<std::size_t>(m) * ipow(d, n)) {}

std::size_t Cochain::args_size() const { return ipow(dim_algebra, degree); }

std::size_t Cochain::arg_index(std::span<const int> js) const {
    std::size_t idx = 0;
    for (int j : js) idx = idx * dim_algebra + static_cast<std::size_t>(j);
    return idx;
}

Rational& Cochain::at(int v, std::span<const int> js) {
    return coeffs[static_cast<std::size_t>(v) * args_size() + arg_index(js)];
}

const Rational& Cochain::at(int v, std::span<const int> js) const {
    return coeffs[static_cast<std::size_t>(v) * args_size() + arg_index(js)];
}

Vec Cochain::eval_basis(std::span<const int> js) const {
    const std::size_t base = arg_index(js);
    const std::size_t stride = args_size();
    Vec out(dim_module);
    for (int v = 0; v < dim_module; ++v) out[v] = coeffs[v * stride + base];
    return out;
}

Vec Cochain::eval(std::span<const Vec> args) const {
    if (static_cast<int>(args.size()) != degree) {
        throw MalformedInputError("cochain evaluated on wrong number of arguments");
    }
    // Contract the argument slots one by one; after the last contraction a
    // single module vector remains.
    std::vector<Rational> cur(coeffs);
    std::size_t tail = args_size();
    for (int t = degree - 1; t >= 0; --t) {
        tail /= dim_algebra;
        const std::size_t blocks = static_cast<std::size_t>(dim_module) * tail;
        std::vector<Rational> next(blocks);
        for (std::size_t b = 0; b < blocks; ++b) {
            Rational acc = 0;
            for (int j = 0; j < dim_algebra; ++j) {
                if (args[t][j] != 0) acc += args[t][j] * cur[b * dim_algebra + j];
            }
            next[b] = acc;
        }
        cur = std::move(next);
    }
    return cur;
}

Cochain Cochain::contract_arg(int pos, const Matrix& M) const {
    Cochain out(degree, dim_module, dim_algebra);
    const int d = dim_algebra;
    const std::size_t inner = ipow(d, degree - 1 - pos); // strides right of pos
    const std::size_t outer_blocks = coeffs.size() / (inner * d);
    for (std::size_t blk = 0; blk < outer_blocks; ++blk) {
        for (std::size_t in = 0; in < inner; ++in) {
            const std::size_t base = blk * d * inner + in;
            for (int jnew = 0; jnew < d; ++jnew) {
                Rational acc = 0;
                for (int p = 0; p < d; ++p) {
                    const Rational& m = M(p, jnew);
                    if (m != 0) acc += m * coeffs[base + p * inner];
                }
                out.coeffs[base + jnew * inner] = acc;
            }
        }
    }
    return out;
}

Cochain Cochain::compose_out(const Matrix& M) const {
    Cochain out(degree, dim_module, dim_algebra);
    const std::size_t stride = args_size();
    for (int v = 0; v < dim_module; ++v) {
        for (int w = 0; w < dim_module; ++w) {
            const Rational& m = M(v, w);
            if (m == 0) continue;
            for (std::size_t a = 0; a < stride; ++a) out.coeffs[v * stride + a] += m * coeffs[w * stride + a];
        }
    }
    return out;
}

Cochain Cochain::operator+(const Cochain& rhs) const {
    Cochain out(*this);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += rhs.coeffs[i];
    return out;
}

Cochain Cochain::operator-(const Cochain& rhs) const {
    Cochain out(*this);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] -= rhs.coeffs[i];
    return out;
}

Cochain Cochain::operator-() const {
    Cochain out(*this);
    for (auto& x : out.coeffs) x = -x;
    return out;
}

Cochain Cochain::scaled(const Rational& c) const {
    Cochain out(*this);
    for (auto& x : out.coeffs) x *= c;
    return out;
}

bool Cochain::is_zero() const {
    for (const auto& x : coeffs) {
        if (x != 0) return false;
    }
    return true;
}

Cochain delta(const LeibnizAlgebra& alg, const Representation& rep, const Cochain& f) {
    if (f.dim_algebra != alg.dim || f.dim_module != rep.dim_module) {
        throw MalformedInputError("cochain dimensions do not match algebra/representation");
    }
    const int n = f.degree;
    const int d = alg.dim;
    Cochain out(n + 1, f.dim_module, d);

    std::vector<int> js(n + 1, 0);
    std::vector<int> sub(n, 0);
    do {
        Vec acc(f.dim_module);

        // sum_i (-1)^(i+1) l(a_i, f(..drop i..)), i 1-based
        for (int i0 = 0; i0 < n; ++i0) {
            for (int t = 0, u = 0; t <= n; ++t) {
                if (t != i0) sub[u++] = js[t];
            }
            Vec term = rep.left[js[i0]].apply(f.eval_basis(sub));
            if (i0 % 2 == 0) {
                add_scaled(acc, 1, term);
            } else {
                add_scaled(acc, -1, term);
            }
        }

        // (-1)^(n+1) r(f(a_1..a_n), a_(n+1))
        for (int t = 0; t < n; ++t) sub[t] = js[t];
        {
            Vec term = rep.right[js[n]].apply(f.eval_basis(sub));
            add_scaled(acc, ((n + 1) % 2 == 0) ? 1 : -1, term);
        }

        // sum_(i<j) (-1)^i f(.., drop a_i, .., [a_i,a_j] at slot j, ..)
        for (int i0 = 0; i0 <= n; ++i0) {
            const Rational sign = (i0 % 2 == 0) ? -1 : 1; // (-1)^(i0+1)
            for (int j0 = i0 + 1; j0 <= n; ++j0) {
                for (int t = 0, u = 0; t <= n; ++t) {
                    if (t != i0) sub[u++] = js[t];
                }
                for (int k = 0; k < d; ++k) {
                    const Rational& cc = alg.structure(js[i0], js[j0], k);
                    if (cc == 0) continue;
                    sub[j0 - 1] = k;
                    add_scaled(acc, sign * cc, f.eval_basis(sub));
                }
            }
        }

        for (int v = 0; v < f.dim_module; ++v) out.at(v, js) = acc[v];
    } while (next_tuple(js, d));
    return out;
}

Cochain partial(const MRBStructure& s, const MRBRepresentation& r, const Cochain& f) {
    const MRBStructure ind = induced_algebra_unchecked(s);
    const MRBRepresentation irep = induced_representation_unchecked(s, r);
    return delta(ind.algebra, irep.rep, f);
}

Cochain partial_expanded(const MRBStructure& s, const MRBRepresentation& r, const Cochain& f) {
    if (f.dim_algebra != s.algebra.dim || f.dim_module != r.rep.dim_module) {
        throw MalformedInputError("cochain dimensions do not match structure/representation");
    }
    const int n = f.degree;
    const int d = s.algebra.dim;
    Cochain out(n + 1, f.dim_module, d);

    std::vector<int> js(n + 1, 0);
    std::vector<int> sub(n, 0);
    do {
        Vec acc(f.dim_module);

        for (int i0 = 0; i0 < n; ++i0) {
            for (int t = 0, u = 0; t <= n; ++t) {
                if (t != i0) sub[u++] = js[t];
            }
            const Vec fv = f.eval_basis(sub);
            Vec term = r.rep.act_left(s.T.column(js[i0]), fv);
            term = term - r.T_V.apply(r.rep.left[js[i0]].apply(fv));
            add_scaled(acc, (i0 % 2 == 0) ? 1 : -1, term);
        }

        for (int t = 0; t < n; ++t) sub[t] = js[t];
        {
            const Vec fv = f.eval_basis(sub);
            Vec term = r.rep.act_right(fv, s.T.column(js[n]));
            term = term - r.T_V.apply(r.rep.right[js[n]].apply(fv));
            add_scaled(acc, ((n + 1) % 2 == 0) ? 1 : -1, term);
        }

        for (int i0 = 0; i0 <= n; ++i0) {
            const Rational sign = (i0 % 2 == 0) ? -1 : 1;
            for (int j0 = i0 + 1; j0 <= n; ++j0) {
                Vec ei(d), ej(d);
                ei[js[i0]] = 1;
                ej[js[j0]] = 1;
                const Vec w = s.algebra.bracket(s.T.column(js[i0]), ej) + s.algebra.bracket(ei, s.T.column(js[j0]));
                for (int t = 0, u = 0; t <= n; ++t) {
                    if (t != i0) sub[u++] = js[t];
                }
                for (int k = 0; k < d; ++k) {
                    if (w[k] == 0) continue;
                    sub[j0 - 1] = k;
                    add_scaled(acc, sign * w[k], f.eval_basis(sub));
                }
            }
        }

        for (int v = 0; v < f.dim_module; ++v) out.at(v, js) = acc[v];
    } while (next_tuple(js, d));
    return out;
}

Cochain phi(const MRBStructure& s, const MRBRepresentation& r, const Cochain& f, PhiVariant variant) {
    if (f.degree < 1) {
        throw PreconditionError("phi is defined for degrees >= 1 only");
    }
    if (f.dim_algebra != s.algebra.dim || f.dim_module != r.rep.dim_module) {
        throw MalformedInputError("cochain dimensions do not match structure/representation");
    }
    const int n = f.degree;

    // tensors[mask] = f with T applied at every argument position NOT in mask
    // (bit t of mask set = position t stays bare). Shared prefixes pay for
    // each T-contraction once.
    std::vector<Cochain> tensors(std::size_t{1} << n);
    std::function<void(int, std::size_t, const Cochain&)> expand =
        [&](int pos, std::size_t mask, const Cochain& t) {
            if (pos == n) {
                tensors[mask] = t;
                return;
            }
            expand(pos + 1, mask | (std::size_t{1} << pos), t);
            expand(pos + 1, mask, t.contract_arg(pos, s.T));
        };
    expand(0, 0, f);

    const Rational mw = -s.weight; // the (-weight) powers of the scheme
    Cochain out = tensors[0];
    for (std::size_t mask = 1; mask < tensors.size(); ++mask) {
        const int rsize = std::popcount(mask);
        const Cochain& t = tensors[mask];
        if (rsize % 2 == 1) {
            const Rational coef = pow_rational(mw, (rsize - 1) / 2);
            out = out - t.compose_out(r.T_V).scaled(coef);
        } else if (variant == PhiVariant::printed) {
            const Rational coef = pow_rational(mw, rsize / 2 + 1);
            out = out - t.compose_out(r.T_V).scaled(coef);
        } else {
            const Rational coef = pow_rational(mw, rsize / 2);
            out = out + t.scaled(coef);
        }
    }
    return out;
}

MRBLACochain d_full(const MRBStructure& s, const MRBRepresentation& r, const MRBLACochain& x,
                    PhiVariant variant) {
    MRBLACochain out;
    out.f = delta(s.algebra, r.rep, x.f);
    if (x.degree() == 0) {
        out.g = Cochain::zero(0, x.f.dim_module, x.f.dim_algebra);
        return out;
    }
    if (!x.g || x.g->degree != x.degree() - 1) {
        throw MalformedInputError("combined cochain needs a companion of one degree lower");
    }
    out.g = -partial(s, r, *x.g) - phi(s, r, x.f, variant);
    return out;
}

std::size_t mrbla_dim(int degree, int m, int d) {
    const std::size_t fpart = static_cast<std::size_t>(m) * ipow(d, degree);
    return degree == 0 ? fpart : fpart + static_cast<std::size_t>(m) * ipow(d, degree - 1);
}

Vec vectorize(const MRBLACochain& x) {
    Vec out = x.f.coeffs;
    if (x.g) out.insert(out.end(), x.g->coeffs.begin(), x.g->coeffs.end());
    return out;
}

MRBLACochain devectorize_pair(int degree, int m, int d, const Vec& flat) {
    if (flat.size() != mrbla_dim(degree, m, d)) {
        throw MalformedInputError("flat vector length does not match combined cochain dimension");
    }
    MRBLACochain out;
    out.f = Cochain(degree, m, d);
    std::copy(flat.begin(), flat.begin() + static_cast<long>(out.f.coeffs.size()), out.f.coeffs.begin());
    if (degree >= 1) {
        Cochain g(degree - 1, m, d);
        std::copy(flat.begin() + static_cast<long>(out.f.coeffs.size()), flat.end(), g.coeffs.begin());
        out.g = std::move(g);
    }
    return out;
}

Matrix assemble_matrix(Complex complex, const MRBStructure& s, const MRBRepresentation& r, int degree,
                       PhiVariant variant) {
    if (degree < 0) throw MalformedInputError("negative cochain degree");
    const int m = r.rep.dim_module;
    const int d = s.algebra.dim;

    const auto push_basis = [&](int n, auto&& op) {
        const std::size_t cols = static_cast<std::size_t>(m) * ipow(d, n);
        Matrix out;
        for (std::size_t cidx = 0; cidx < cols; ++cidx) {
            Cochain basis(n, m, d);
            basis.coeffs[cidx] = 1;
            const Cochain img = op(basis);
            if (cidx == 0) out = Matrix(static_cast<int>(img.coeffs.size()), static_cast<int>(cols));
            for (std::size_t ri = 0; ri < img.coeffs.size(); ++ri) {
                out(static_cast<int>(ri), static_cast<int>(cidx)) = img.coeffs[ri];
            }
        }
        return out;
    };

    switch (complex) {
    case Complex::la:
        return push_basis(degree, [&](const Cochain& f) { return delta(s.algebra, r.rep, f); });
    case Complex::mrbo: {
        const MRBStructure ind = induced_algebra_unchecked(s);
        const MRBRepresentation irep = induced_representation_unchecked(s, r);
        return push_basis(degree, [&](const Cochain& f) { return delta(ind.algebra, irep.rep, f); });
    }
    case Complex::mrbla:
        break;
    }

    // Combined complex, block layout [[delta, 0], [-phi, -partial]].
    if (degree == 0) {
        Matrix dlt = push_basis(0, [&](const Cochain& f) { return delta(s.algebra, r.rep, f); });
        Matrix out(static_cast<int>(mrbla_dim(1, m, d)), m);
        for (int i = 0; i < dlt.rows(); ++i)
            for (int j = 0; j < dlt.cols(); ++j) out(i, j) = dlt(i, j);
        return out; // g-block rows stay zero
    }

    const MRBStructure ind = induced_algebra_unchecked(s);
    const MRBRepresentation irep = induced_representation_unchecked(s, r);
    Matrix dlt = push_basis(degree, [&](const Cochain& f) { return delta(s.algebra, r.rep, f); });
    Matrix phm = push_basis(degree, [&](const Cochain& f) { return phi(s, r, f, variant); });
    Matrix par = push_basis(degree - 1, [&](const Cochain& f) { return delta(ind.algebra, irep.rep, f); });

    const int rows_f = dlt.rows();
    const int rows_g = phm.rows();
    const int cols_f = dlt.cols();
    const int cols_g = par.cols();
    Matrix out(rows_f + rows_g, cols_f + cols_g);
    for (int i = 0; i < rows_f; ++i)
        for (int j = 0; j < cols_f; ++j) out(i, j) = dlt(i, j);
    for (int i = 0; i < rows_g; ++i)
        for (int j = 0; j < cols_f; ++j) out(rows_f + i, j) = -phm(i, j);
    for (int i = 0; i < rows_g; ++i)
        for (int j = 0; j < cols_g; ++j) out(rows_f + i, cols_f + j) = -par(i, j);
    return out;
}

Cochain bracket_cochain(const LeibnizAlgebra& alg) {
    Cochain out(2, alg.dim, alg.dim);
    for (int i = 0; i < alg.dim; ++i) {
        for (int j = 0; j < alg.dim; ++j) {
            const int js[2] = {i, j};
            for (int v = 0; v < alg.dim; ++v) out.at(v, js) = alg.structure(i, j, v);
        }
    }
    return out;
}

Cochain operator_cochain(const Matrix& M) {
    Cochain out(1, M.rows(), M.cols());
    for (int j = 0; j < M.cols(); ++j) {
        const int js[1] = {j};
        for (int v = 0; v < M.rows(); ++v) out.at(v, js) = M(v, j);
    }
    return out;
}

Matrix cochain_to_operator(const Cochain& f) {
    if (f.degree != 1) throw MalformedInputError("only degree-1 cochains convert to operators");
    Matrix out(f.dim_module, f.dim_algebra);
    for (int j = 0; j < f.dim_algebra; ++j) {
        const int js[1] = {j};
        for (int v = 0; v < f.dim_module; ++v) out(v, j) = f.at(v, js);
    }
    return out;
}

} // namespace mrbla

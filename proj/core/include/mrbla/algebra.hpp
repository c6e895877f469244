#pragma once

#include "mrbla/matrix.hpp"

#include <string>
#include <vector>

namespace mrbla {

/// Finite-dimensional Leibniz algebra given by structure constants on a
/// fixed basis: [e_i, e_j] = sum_k c(i,j,k) e_k, indices 0-based. The left
/// Leibniz identity [a,[b,c]] = [[a,b],c] + [b,[a,c]] is checked on demand
/// (validate_leibniz), not by construction.
struct LeibnizAlgebra {
    int dim = 0;
    std::vector<Rational> c; // flat, (i*dim + j)*dim + k
    std::vector<std::string> basis_names;

    LeibnizAlgebra() = default;
    explicit LeibnizAlgebra(int d) : dim(d), c(static_cast<std::size_t>(d) * d * d) {}

    static LeibnizAlgebra abelian(int d) { return LeibnizAlgebra(d); }

    Rational& structure(int i, int j, int k) {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    const Rational& structure(int i, int j, int k) const {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    /// [e_i, e_j] as a coordinate vector.
    Vec bracket_basis(int i, int j) const;
    /// Bilinear extension of the bracket to arbitrary coordinate vectors.
    Vec bracket(const Vec& x, const Vec& y) const;

    bool operator==(const LeibnizAlgebra& rhs) const {
        return dim == rhs.dim && c == rhs.c;
    }
};

/// Leibniz algebra equipped with a square operator matrix T and a weight.
/// The modified identity [Ta,Tb] = T([a,Tb] + [Ta,b]) + weight*[a,b] is
/// checked on demand (validate_mrb).
struct MRBStructure {
    LeibnizAlgebra algebra;
    LinearOperator T;
    Rational weight;
};

/// Module V with left/right actions of the algebra. left[i] is the matrix of
/// l(e_i, -), right[i] the matrix of r(-, e_i), both dim_module-square.
struct Representation {
    int dim_module = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    /// l(a, v) for a coordinate vector a in the algebra and v in the module.
    Vec act_left(const Vec& a, const Vec& v) const;
    /// r(v, a).
    Vec act_right(const Vec& v, const Vec& a) const;
};

/// Representation together with a module operator T_V; both compatibility
/// identities tying T, T_V and the weight are checked on demand.
struct MRBRepresentation {
    Representation rep;
    LinearOperator T_V;
};

struct Violation {
    std::string axiom_id;
    std::vector<int> basis_indices;
    Vec residual; // left side minus right side of the axiom, exactly
};

struct ViolationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the left Leibniz identity on all dim^3 basis triples. Bilinearity
/// makes basis checks sufficient.
ViolationReport validate_leibniz(const LeibnizAlgebra& alg);

/// Checks the three action axioms (ids LLV, LRV, RVV) on all basis tuples.
ViolationReport validate_representation(const LeibnizAlgebra& alg, const Representation& rep);

/// Checks [Ta,Tb] = T([a,Tb] + [Ta,b]) + weight*[a,b] on all basis pairs.
/// Requires a valid underlying algebra.
ViolationReport validate_mrb(const MRBStructure& s);

/// Checks the companion identity [Ta,Tb] = T([a,Tb] + [Ta,b]) + weight*T[a,b]
/// (weight on T of the bracket rather than on the bracket itself).
ViolationReport validate_rb(const LeibnizAlgebra& alg, const LinearOperator& T, const Rational& weight);

/// Checks both compatibility identities of an MRBRepresentation (ids MRBL,
/// MRBR) on all basis pairs. Requires valid rep and structure.
ViolationReport validate_mrb_representation(const MRBStructure& s, const MRBRepresentation& r);

/// Converts a weight-lambda Rota-Baxter operator into the modified kind:
/// S = -lambda*Id - 2T with output weight -lambda^2. The output passes
/// validate_mrb whenever the input passes validate_rb.
MRBStructure rb_to_mrb(const LeibnizAlgebra& alg, const LinearOperator& T, const Rational& weight);

/// The algebra acting on itself by its bracket, with T_V = T.
MRBRepresentation adjoint_rep(const MRBStructure& s);

} // namespace mrbla

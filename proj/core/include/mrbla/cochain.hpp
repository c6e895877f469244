#pragma once

#include "mrbla/algebra.hpp"
#include "mrbla/induced.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace mrbla {

/// Dense multilinear map g^(x n) -> V in coordinates:
///   f(e_{j1},...,e_{jn}) = sum_v coeffs[index(v, j1..jn)] u_v.
///
/// Vectorization order (fixed, relied upon by matrix assembly and the
/// document format): the module component v is outermost, the argument
/// multi-index (j1,...,jn) innermost in row-major order, i.e.
///   index(v, js) = v * d^n + j1 * d^(n-1) + ... + jn.
/// Degree 0 stores a single vector of V (m entries).
struct Cochain {
    int degree = 0;
    int dim_module = 0;
    int dim_algebra = 0;
    std::vector<Rational> coeffs;

    Cochain() = default;
    Cochain(int n, int m, int d);

    static Cochain zero(int n, int m, int d) { return Cochain(n, m, d); }

    std::size_t args_size() const; // d^degree
    std::size_t arg_index(std::span<const int> js) const;

    Rational& at(int v, std::span<const int> js);
    const Rational& at(int v, std::span<const int> js) const;

    /// f(e_{j1},...,e_{jn}) as a module vector.
    Vec eval_basis(std::span<const int> js) const;
    /// Multilinear evaluation on arbitrary coordinate vectors.
    Vec eval(std::span<const Vec> args) const;

    /// Precomposes argument `pos` with the operator M:
    /// result(a1,...,an) = f(a1,..., M a_pos, ..., an).
    Cochain contract_arg(int pos, const Matrix& M) const;
    /// Postcomposes the output with M: result = M o f.
    Cochain compose_out(const Matrix& M) const;

    Cochain operator+(const Cochain& rhs) const;
    Cochain operator-(const Cochain& rhs) const;
    Cochain operator-() const;
    Cochain scaled(const Rational& c) const;
    bool is_zero() const;
    bool operator==(const Cochain& rhs) const = default;
};

/// Element of the combined complex: a degree-n map f together with a
/// degree-(n-1) companion g. Degree 0 holds f only (g disengaged).
struct MRBLACochain {
    Cochain f;
    std::optional<Cochain> g;

    int degree() const { return f.degree; }
    bool is_zero() const { return f.is_zero() && (!g || g->is_zero()); }
};

/// Coefficient scheme for the comparison map phi between the two complexes.
/// `printed` follows the source text of the map verbatim; `corrected` is the
/// scheme validated by the machine audit (lemma42): the two agree in degrees
/// 1 and 2 and at weight 0, and differ on subsets of size >= 3 otherwise.
enum class PhiVariant { printed, corrected };

/// Leibniz coboundary of f with coefficients in (alg, rep); degree n -> n+1.
Cochain delta(const LeibnizAlgebra& alg, const Representation& rep, const Cochain& f);

/// Coboundary of the descendent pair: equals delta over
/// (induced_algebra(s), induced_representation(s, r)).
Cochain partial(const MRBStructure& s, const MRBRepresentation& r, const Cochain& f);

/// Same map, evaluated through the expanded formula (terms written with T,
/// T_V and the deformed bracket directly). Must agree with `partial` exactly;
/// kept as a second, independently coded path.
Cochain partial_expanded(const MRBStructure& s, const MRBRepresentation& r, const Cochain& f);

/// Comparison map between the two complexes at degree >= 1.
/// Shared leading term f(Ta_1,...,Ta_n); for every nonempty subset S of
/// argument positions (arguments bare on S, T elsewhere, |S| = r):
///   printed:   - (-w)^((r-1)/2) T_V of  [r odd],  - (-w)^(r/2+1) T_V of  [r even]
///   corrected: - (-w)^((r-1)/2) T_V of  [r odd],  + (-w)^(r/2)       f  [r even]
/// where w is the structure weight.
Cochain phi(const MRBStructure& s, const MRBRepresentation& r, const Cochain& f, PhiVariant variant);

/// Combined differential d(f, g) = (delta f, -partial g - phi f); degree-0
/// input v maps to (delta v, 0).
MRBLACochain d_full(const MRBStructure& s, const MRBRepresentation& r, const MRBLACochain& x,
                    PhiVariant variant);

enum class Complex { la, mrbo, mrbla };

/// Matrix of the chosen differential at the given degree, columns indexed by
/// basis cochains in vectorization order. For the combined complex at degree
/// n >= 1 the f-block columns/rows come first, then the g-block.
Matrix assemble_matrix(Complex complex, const MRBStructure& s, const MRBRepresentation& r, int degree,
                       PhiVariant variant);

std::size_t mrbla_dim(int degree, int m, int d);
Vec vectorize(const MRBLACochain& x);
MRBLACochain devectorize_pair(int degree, int m, int d, const Vec& flat);

/// The bracket of alg as a degree-2 cochain with values in alg itself.
Cochain bracket_cochain(const LeibnizAlgebra& alg);
/// A square operator matrix as a degree-1 cochain (module = codomain).
Cochain operator_cochain(const Matrix& M);
Matrix cochain_to_operator(const Cochain& f);

} // namespace mrbla

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nalab/algebra.hpp"
#include "nalab/identities.hpp"
#include "nalab/quadratic.hpp"
#include "nalab/report.hpp"

namespace nalab {

/// A pair of linear maps l, r: A → End(V), given on the basis of A.
struct Bimodule {
    Algebra alg;
    std::size_t mod_dim = 0;
    std::vector<Mat> l, r; // l[i] = l(e_i), r[i] = r(e_i), each mod_dim × mod_dim
};

struct PairWitness {
    std::string equation;
    std::size_t i = 0, j = 0;

    std::string describe() const {
        return equation + " fails at (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
    }
};

inline Bimodule zero_bimodule(const Algebra& a, std::size_t mod_dim) {
    Bimodule b{a, mod_dim, {}, {}};
    b.l.assign(a.dim, Mat(mod_dim, mod_dim));
    b.r.assign(a.dim, Mat(mod_dim, mod_dim));
    return b;
}

/// The adjoint (regular) bimodule (A, R, L).
inline Bimodule adjoint_bimodule(const Algebra& a) {
    Bimodule b{a, a.dim, {}, {}};
    for (std::size_t i = 0; i < a.dim; ++i) {
        b.l.push_back(left_op_basis(a, i));
        b.r.push_back(right_op_basis(a, i));
    }
    return b;
}

/// Representation equations for nearly associative algebras:
///   l(x)l(y) = r(y)r(x),  l(x)r(y) = l(yx),  r(x)l(y) = r(xy).
inline std::pair<bool, std::optional<PairWitness>> is_representation(const Bimodule& b) {
    auto [na, w] = check_identity(b.alg, IdentityKind::nearly_associative);
    if (!na) throw not_nearly_associative(w->describe());
    const Algebra& a = b.alg;
    const std::size_t n = a.dim, m = b.mod_dim;
    auto map_of_product = [&](const std::vector<Mat>& maps, std::size_t i, std::size_t j) {
        Mat out(m, m);
        for (std::size_t k = 0; k < n; ++k)
            if (!a.cc(i, j, k).is_zero()) out = out + a.cc(i, j, k) * maps[k];
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (b.l[i] * b.l[j] != b.r[j] * b.r[i])
                return {false, PairWitness{"l(x)l(y)=r(y)r(x)", i, j}};
            if (b.l[i] * b.r[j] != map_of_product(b.l, j, i))
                return {false, PairWitness{"l(x)r(y)=l(yx)", i, j}};
            if (b.r[i] * b.l[j] != map_of_product(b.r, i, j))
                return {false, PairWitness{"r(x)l(y)=r(xy)", i, j}};
        }
    return {true, std::nullopt};
}

/// Semidirect sum A ⊕ V with (x+u)∗(y+v) = x·y + l(x)(v) + r(y)(u).
/// Always defined; it is nearly associative exactly when (r,l) is a
/// representation.
inline Algebra semidirect_algebra(const Bimodule& b) {
    const std::size_t n = b.alg.dim, m = b.mod_dim;
    Algebra out(n + m, b.alg.label.empty() ? "semidirect" : b.alg.label + "⋉V");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.cc(i, j, k) = b.alg.cc(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t s = 0; s < m; ++s) {
                out.cc(i, n + t, n + s) = b.l[i].at(s, t); // e_i ∗ v_t = l(e_i)(v_t)
                out.cc(n + t, i, n + s) = b.r[i].at(s, t); // v_t ∗ e_i = r(e_i)(v_t)
            }
    return out;
}

/// Dual bimodule on V*: l*(x)(f) = f∘r(x), r*(x)(f) = f∘l(x). In dual-basis
/// coordinates precomposition is the transpose, so l* = r(x)ᵀ, r* = l(x)ᵀ.
/// This dual-space bookkeeping is fixed here once; the coalgebra and double
/// modules reuse it.
inline Bimodule dual_bimodule(const Bimodule& b) {
    Bimodule out{b.alg, b.mod_dim, {}, {}};
    for (std::size_t i = 0; i < b.alg.dim; ++i) {
        out.l.push_back(transpose(b.r[i]));
        out.r.push_back(transpose(b.l[i]));
    }
    return out;
}

/// Existence of the coadjoint representation: L_{xy} = R_{yx} on all basis
/// pairs. Also evaluates L- and R-commutativity independently and verifies
/// the three-way equivalence.
inline std::pair<bool, CheckReport> coadjoint_exists(const Algebra& a) {
    auto [na, w] = check_identity(a, IdentityKind::nearly_associative);
    if (!na) throw not_nearly_associative(w->describe());
    const std::size_t n = a.dim;
    std::vector<Mat> L(n), R(n);
    for (std::size_t i = 0; i < n; ++i) {
        L[i] = left_op_basis(a, i);
        R[i] = right_op_basis(a, i);
    }
    bool op_condition = true;
    std::string op_w;
    for (std::size_t i = 0; i < n && op_condition; ++i)
        for (std::size_t j = 0; j < n && op_condition; ++j) {
            Mat lxy(n, n), ryx(n, n);
            for (std::size_t k = 0; k < n; ++k) {
                if (!a.cc(i, j, k).is_zero()) lxy = lxy + a.cc(i, j, k) * L[k];
                if (!a.cc(j, i, k).is_zero()) ryx = ryx + a.cc(j, i, k) * R[k];
            }
            if (lxy != ryx) {
                op_condition = false;
                op_w = "L_{xy} ≠ R_{yx} at (e" + std::to_string(i + 1) + ",e" +
                          std::to_string(j + 1) + ")";
            }
        }
    const bool lcomm = holds(a, IdentityKind::l_commutative);
    const bool rcomm = holds(a, IdentityKind::r_commutative);
    CheckReport report;
    report.add("L(xy)=R(yx)", op_condition, op_w);
    report.add("l-commutative", lcomm,
               lcomm ? "" : detail::identity_witness(a, IdentityKind::l_commutative));
    report.add("r-commutative", rcomm,
               rcomm ? "" : detail::identity_witness(a, IdentityKind::r_commutative));
    if (op_condition != lcomm || lcomm != rcomm)
        throw internal_contradiction("coadjoint three-way equivalence fails");
    report.add("three-way-equivalent", true);
    return {op_condition, report};
}

/// Φ: V₁ → V₂ intertwines both actions: Φ∘r₁(x) = r₂(x)∘Φ, Φ∘l₁(x) = l₂(x)∘Φ.
inline bool is_bimodule_morphism(const Bimodule& b1, const Bimodule& b2, const Mat& phi) {
    if (phi.cols != b1.mod_dim || phi.rows != b2.mod_dim) throw dimension_mismatch("morphism shape");
    if (b1.alg.dim != b2.alg.dim) throw dimension_mismatch("morphism base algebra");
    for (std::size_t i = 0; i < b1.alg.dim; ++i) {
        if (phi * b1.r[i] != b2.r[i] * phi) return false;
        if (phi * b1.l[i] != b2.l[i] * phi) return false;
    }
    return true;
}

/// For quadratic (A, B): Φ = B(·,−) is an isomorphism of bimodules between
/// the adjoint and coadjoint representations.
inline bool adjoint_coadjoint_isomorphic(const Algebra& a, const BilinearForm& b) {
    if (!is_quadratic(a, b)) throw not_quadratic("adjoint_coadjoint_isomorphic");
    const Bimodule adj = adjoint_bimodule(a);
    const Bimodule coadj = dual_bimodule(adj);
    const Mat phi = transpose(b.gram); // coords of Φ(v) are gramᵀ·v; gram is symmetric
    return is_invertible(phi) && is_bimodule_morphism(adj, coadj, phi);
}

} // namespace nalab

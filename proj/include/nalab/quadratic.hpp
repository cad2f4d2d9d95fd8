#pragma once

#include <string>
#include <utility>

#include "nalab/algebra.hpp"
#include "nalab/identities.hpp"
#include "nalab/report.hpp"

namespace nalab {

/// Bilinear form B(x,y) = xᵀ·gram·y.
struct BilinearForm {
    Mat gram;

    std::size_t dim() const { return gram.rows; }
    Rat eval(const Vec& x, const Vec& y) const { return dot(x, gram * y); }
};

/// Linear map Φ: A → A* with row i = coordinates of Φ(e_i) in the dual
/// basis, i.e. phi(i,j) = Φ(e_i)(e_j). Coordinates of Φ(a) are phiᵀ·a.
struct Intertwiner {
    Mat phi;
};

inline bool is_symmetric(const BilinearForm& b) { return b.gram == transpose(b.gram); }

inline bool is_nondegenerate(const BilinearForm& b) {
    return b.gram.rows == b.gram.cols && rank(b.gram) == b.gram.rows;
}

/// Invariance B(xy, z) = B(x, yz), checked on all basis triples. As a matrix
/// identity this is R_yᵀ·G = G·L_y for every basis y.
inline bool is_invariant(const Algebra& a, const BilinearForm& b) {
    if (b.dim() != a.dim || b.gram.cols != a.dim) throw dimension_mismatch("is_invariant");
    for (std::size_t j = 0; j < a.dim; ++j) {
        const Mat L = left_op_basis(a, j), R = right_op_basis(a, j);
        if (transpose(R) * b.gram != b.gram * L) return false;
    }
    return true;
}

inline bool is_quadratic(const Algebra& a, const BilinearForm& b) {
    return b.gram.rows == a.dim && b.gram.cols == a.dim && is_symmetric(b) &&
           is_nondegenerate(b) && is_invariant(a, b);
}

/// On a quadratic algebra the four identities are equivalent; evaluates each
/// independently and verifies the equivalence.
inline CheckReport quadratic_equivalences(const Algebra& a, const BilinearForm& b) {
    if (!is_quadratic(a, b)) throw not_quadratic("quadratic_equivalences");
    CheckReport report;
    for (IdentityKind k : {IdentityKind::nearly_associative, IdentityKind::l_commutative,
                           IdentityKind::r_commutative, IdentityKind::lr}) {
        auto [ok, w] = check_identity(a, k);
        report.add(identity_name(k), ok, ok ? "" : w->describe());
    }
    const bool na = report.value_of("nearly-associative");
    const bool l = report.value_of("l-commutative");
    const bool r = report.value_of("r-commutative");
    const bool lr = report.value_of("lr");
    const bool equivalent = (na == l) && (l == r) && (r == lr);
    if (!equivalent)
        throw internal_contradiction("NA/L/R/LR equivalence fails on a quadratic algebra");
    report.add("all-equivalent", equivalent);
    return report;
}

namespace detail {

inline bool intertwines(const Algebra& a, const Mat& phi) {
    // Φ(L_x(v)) = L*_x(Φ(v)) and Φ(R_x(v)) = R*_x(Φ(v)) for basis x, where
    // L*_x(f) = f∘R_x and R*_x(f) = f∘L_x. With coords(Φ(v)) = phiᵀ·v:
    //   phiᵀ·L_x = R_xᵀ·phiᵀ   and   phiᵀ·R_x = L_xᵀ·phiᵀ.
    const Mat pt = transpose(phi);
    for (std::size_t i = 0; i < a.dim; ++i) {
        const Mat L = left_op_basis(a, i), R = right_op_basis(a, i);
        if (pt * L != transpose(R) * pt) return false;
        if (pt * R != transpose(L) * pt) return false;
    }
    return true;
}

} // namespace detail

/// Φ(a) := B(a, −). For a quadratic form the result intertwines the adjoint
/// and coadjoint actions; that postcondition is re-verified.
inline Intertwiner phi_from_form(const Algebra& a, const BilinearForm& b) {
    if (!is_quadratic(a, b)) throw not_quadratic("phi_from_form");
    Intertwiner out{b.gram};
    if (!detail::intertwines(a, out.phi))
        throw internal_contradiction("phi from a quadratic form must intertwine");
    return out;
}

/// Constructive converse: builds an invariant scalar product from an
/// invertible intertwiner. Follows the proof shape step by step, and every
/// intermediate claim is verified; a failure of a derived step signals a bug
/// or an invalid certificate, never a soft "false".
///
/// Steps: T(x,y) := Φ(x)(y); T is invariant and satisfies T(xy,z) = T(y,zx);
/// split T = T_s + T_a; then T_a(A·A, A) = 0; N := rad T_a ⊇ A², W := rad T_s,
/// N ∩ W = 0; pick a complement V ⊇ N of W; extend the identity form on W by
/// zero to H̃; return B = T_s + H̃, which is quadratic.
inline BilinearForm form_from_phi(const Algebra& a, const Intertwiner& phi) {
    const std::size_t n = a.dim;
    if (phi.phi.rows != n || phi.phi.cols != n) throw dimension_mismatch("form_from_phi");
    if (!is_invertible(phi.phi)) throw not_invertible("form_from_phi: phi is singular");
    if (!detail::intertwines(a, phi.phi)) throw not_intertwining("form_from_phi");

    const Mat t = phi.phi; // T(x,y) = xᵀ·t·y
    // invariance and the auxiliary identity, as matrix identities per basis y
    for (std::size_t j = 0; j < n; ++j) {
        const Mat L = left_op_basis(a, j), R = right_op_basis(a, j);
        if (transpose(R) * t != t * L) throw internal_contradiction("T not invariant");
        if (transpose(L) * t != t * R) throw internal_contradiction("T(xy,z) = T(y,zx) fails");
    }

    Mat ts(n, n), ta(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ts.at(i, j) = half() * (t.at(i, j) + t.at(j, i));
            ta.at(i, j) = half() * (t.at(i, j) - t.at(j, i));
        }

    // T_a(A·A, A) = 0: the row (e_i·e_j)ᵀ·T_a must vanish for every pair.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec prod = mul_basis(a, i, j);
            Vec row(n);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t r = 0; r < n; ++r) row[k] += prod[r] * ta.at(r, k);
            if (!row.is_zero()) throw internal_contradiction("T_a(A·A, A) ≠ 0");
        }

    const Subspace rad_ta = kernel(ta); // N
    const Subspace rad_ts = kernel(ts); // W
    if (!trivial_intersection(rad_ta, rad_ts)) throw internal_contradiction("N ∩ W ≠ 0");
    if (!rad_ta.contains(square(a))) throw internal_contradiction("A² ⊄ N");

    const Subspace v = extend_to_complement(rad_ta, rad_ts);
    if (v.dim() + rad_ts.dim() != n || !trivial_intersection(v, rad_ts))
        throw internal_contradiction("complement V of W containing N not found");

    // H̃ = identity form on W in its echelon basis, zero on (V, A) and (A, V).
    // With Q = W-coordinate extractor (rows of M⁻¹ for M = [W | V]), the Gram
    // matrix of H̃ is QᵀQ.
    const std::size_t wdim = rad_ts.dim();
    Mat basis(n, n);
    for (std::size_t tcol = 0; tcol < wdim; ++tcol)
        for (std::size_t r = 0; r < n; ++r) basis.at(r, tcol) = rad_ts.basis[tcol][r];
    for (std::size_t tcol = 0; tcol < v.dim(); ++tcol)
        for (std::size_t r = 0; r < n; ++r) basis.at(r, wdim + tcol) = v.basis[tcol][r];
    const Mat coords = inverse(basis);
    Mat q(wdim, n);
    for (std::size_t i = 0; i < wdim; ++i)
        for (std::size_t j = 0; j < n; ++j) q.at(i, j) = coords.at(i, j);
    const Mat htilde = transpose(q) * q;

    BilinearForm out{ts + htilde};
    if (!is_quadratic(a, out)) throw internal_contradiction("constructed form is not quadratic");
    return out;
}

} // namespace nalab

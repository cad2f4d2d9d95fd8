#pragma once

#include <string>
#include <utility>

#include "nalab/algebra.hpp"
#include "nalab/coalgebra.hpp"
#include "nalab/identities.hpp"
#include "nalab/quadratic.hpp"
#include "nalab/report.hpp"

namespace nalab {

/// A multiplication together with a candidate comultiplication on the same
/// space; Δ is the transpose of the product ⋆ on A*.
struct BialgebraCandidate {
    Algebra alg;
    Comultiplication delta;
};

/// D(A) = A ⊕ A* with basis order (e_1..e_n, e*_1..e*_n).
struct DoubleAlgebra {
    Algebra inner;
    std::size_t half = 0;
};

/// Product on D(A):
///   (x+f) ⋄ (y+g) = x·y + L*_f(y) + R*_g(x)  +  f⋆g + L*_x(g) + R*_y(f)
/// with the dual-map conventions fixed in the bimodule/coalgebra modules:
///   L*_x(g) = g∘R_x, R*_y(f) = f∘L_y, ⟨L*_f(y), h⟩ = ⟨y, h⋆f⟩,
///   ⟨R*_g(x), h⟩ = ⟨x, g⋆h⟩.
/// Block formulas as quadruple-index contractions (c = products, d = Δ):
///   e_a ⋄ e_b            = Σ_k c(a,b,k) e_k
///   e*_u ⋄ e*_v          = Σ_i d(i,u,v) e*_i
///   e_a ⋄ e*_v           = Σ_k d(a,v,k) e_k + Σ_t c(t,a,v) e*_t
///   e*_u ⋄ e_b           = Σ_k d(b,k,u) e_k + Σ_t c(b,t,u) e*_t
inline DoubleAlgebra build_double(const BialgebraCandidate& bc) {
    if (bc.alg.dim != bc.delta.dim) throw dimension_mismatch("build_double");
    const std::size_t n = bc.alg.dim;
    const auto& c = bc.alg.c;
    const auto& d = bc.delta.d;
    Algebra dbl(2 * n, bc.alg.label.empty() ? "D(A)" : "D(" + bc.alg.label + ")");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) dbl.cc(a, b, k) = c.at(a, b, k);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t i = 0; i < n; ++i) dbl.cc(n + u, n + v, n + i) = d.at(i, u, v);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t k = 0; k < n; ++k) dbl.cc(a, n + v, k) = d.at(a, v, k);
            for (std::size_t t = 0; t < n; ++t) dbl.cc(a, n + v, n + t) = c.at(t, a, v);
        }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t k = 0; k < n; ++k) dbl.cc(n + u, b, k) = d.at(b, k, u);
            for (std::size_t t = 0; t < n; ++t) dbl.cc(n + u, b, n + t) = c.at(b, t, u);
        }

    // Sub-block embedding invariant: A and A* sit inside D(A) as subalgebras.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                if (dbl.cc(a, b, k) != c.at(a, b, k) || !dbl.cc(a, b, n + k).is_zero())
                    throw internal_contradiction("A does not embed in D(A)");
                if (dbl.cc(n + a, n + b, n + k) != d.at(k, a, b) ||
                    !dbl.cc(n + a, n + b, k).is_zero())
                    throw internal_contradiction("A* does not embed in D(A)");
            }
    return {std::move(dbl), n};
}

/// The canonical hyperbolic form B(x+f, y+g) = ⟨f,y⟩ + ⟨g,x⟩.
inline BilinearForm canonical_double_form(std::size_t n) {
    Mat gram(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        gram.at(i, n + i) = Rat(1);
        gram.at(n + i, i) = Rat(1);
    }
    return {gram};
}

namespace detail {

inline void require_nal_halves(const BialgebraCandidate& bc) {
    auto [a_nal, wa] = check_identity(bc.alg, IdentityKind::nal);
    if (!a_nal) throw halves_not_nal("algebra half: " + wa->describe());
    const Algebra dual = dual_algebra_of_coalgebra(bc.delta);
    auto [d_nal, wd] = check_identity(dual, IdentityKind::nal);
    if (!d_nal) throw halves_not_nal("dual half: " + wd->describe());
}

} // namespace detail

/// Bialgebra by the defining construction: the double is nearly associative.
/// On a double the NA, L, R and LR identities are equivalent (the double is
/// quadratic); all four are evaluated and the equivalence verified.
inline std::pair<bool, CheckReport> is_nal_bialgebra_direct(const BialgebraCandidate& bc) {
    detail::require_nal_halves(bc);
    const DoubleAlgebra dbl = build_double(bc);
    CheckReport report;
    for (IdentityKind k : {IdentityKind::nearly_associative, IdentityKind::l_commutative,
                           IdentityKind::r_commutative, IdentityKind::lr}) {
        auto [ok, w] = check_identity(dbl.inner, k);
        report.add(std::string("double-") + identity_name(k), ok, ok ? "" : w->describe());
    }
    const bool na = report.value_of("double-nearly-associative");
    for (const auto& item : report.items)
        if (item.pass != na) throw internal_contradiction("NA/L/R/LR disagree on the double");
    return {na, report};
}

/// Bialgebra by the coproduct characterization: the two three-term chains
///   Δ(x·y) = (I⊗R_y)Δ(x) + τ(I⊗R_x)Δ(y) = τ(L_y⊗I)Δ(x) + (L_x⊗I)Δ(y)
///   (R_y⊗I)Δ(x) + (I⊗L_x)Δ(y) = (I⊗L_y)Δ(x) + (R_x⊗I)Δ(y)
///                              = τ(I⊗L_y)Δ(x) + τ(R_x⊗I)Δ(y)
/// evaluated as Tensor2 identities over all basis pairs.
inline std::pair<bool, CheckReport> is_nal_bialgebra_coproduct(const BialgebraCandidate& bc) {
    detail::require_nal_halves(bc);
    const Algebra& a = bc.alg;
    const std::size_t n = a.dim;
    std::vector<Tensor2> delta(n);
    std::vector<Mat> L(n), R(n);
    for (std::size_t i = 0; i < n; ++i) {
        delta[i] = apply_delta(bc.delta, Vec::unit(n, i));
        L[i] = left_op_basis(a, i);
        R[i] = right_op_basis(a, i);
    }
    // (M⊗I)t = M·t, (I⊗M)t = t·Mᵀ, τ(t) = tᵀ  for t ∈ A⊗A as a matrix
    auto lmul = [](const Mat& m, const Tensor2& t) {
        Tensor2 out(t.n);
        for (std::size_t i = 0; i < t.n; ++i)
            for (std::size_t p = 0; p < t.n; ++p) {
                if (m.at(i, p).is_zero()) continue;
                for (std::size_t j = 0; j < t.n; ++j) out.at(i, j) += m.at(i, p) * t.at(p, j);
            }
        return out;
    };
    auto rmul = [](const Tensor2& t, const Mat& m) {
        Tensor2 out(t.n);
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t p = 0; p < t.n; ++p) {
                if (m.at(j, p).is_zero()) continue;
                for (std::size_t i = 0; i < t.n; ++i) out.at(i, j) += m.at(j, p) * t.at(i, p);
            }
        return out;
    };

    CheckReport report;
    bool ok1 = true, ok2 = true;
    std::string w1, w2;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Tensor2 dxy = apply_delta(bc.delta, mul_basis(a, x, y));
            const Tensor2 c1a = rmul(delta[x], R[y]) + twist(rmul(delta[y], R[x]));
            const Tensor2 c1b = twist(lmul(L[y], delta[x])) + lmul(L[x], delta[y]);
            if (dxy != c1a || dxy != c1b) {
                if (ok1) {
                    ok1 = false;
                    w1 = "chain 1 fails at (e" + std::to_string(x + 1) + ",e" +
                         std::to_string(y + 1) + ")";
                }
            }
            const Tensor2 c2a = lmul(R[y], delta[x]) + rmul(delta[y], L[x]);
            const Tensor2 c2b = rmul(delta[x], L[y]) + lmul(R[x], delta[y]);
            const Tensor2 c2c = twist(c2b);
            if (c2a != c2b || c2b != c2c) {
                if (ok2) {
                    ok2 = false;
                    w2 = "chain 2 fails at (e" + std::to_string(x + 1) + ",e" +
                         std::to_string(y + 1) + ")";
                }
            }
        }
    report.add("coproduct-chain-1", ok1, w1);
    report.add("coproduct-chain-2", ok2, w2);
    return {ok1 && ok2, report};
}

} // namespace nalab

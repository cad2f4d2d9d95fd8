#pragma once

#include <optional>
#include <string>
#include <utility>

#include "nalab/algebra.hpp"
#include "nalab/identities.hpp"
#include "nalab/render.hpp"
#include "nalab/report.hpp"

namespace nalab {

/// Comultiplication as a rank-3 tensor: Δ(e_i) = Σ_{j,k} d(i,j,k) e_j⊗e_k.
///
/// Pairing conventions, fixed once: ⟨f⊗g, x⊗y⟩ = f(x)·g(y), and the dual
/// product ⋆ on A* satisfies ⟨Δ(x), f⊗g⟩ = ⟨x, f⋆g⟩, which in coordinates
/// reads  e*_j ⋆ e*_k = Σ_i d(i,j,k) e*_i.
struct Comultiplication {
    std::size_t dim = 0;
    Tensor3 d;

    Comultiplication() = default;
    explicit Comultiplication(std::size_t n) : dim(n), d(n) {}

    friend bool operator==(const Comultiplication& x, const Comultiplication& y) {
        return x.dim == y.dim && x.d == y.d;
    }
};

enum class CoalgebraKind {
    // The exact transpose-dual of (xy)z = y(zx): since the adjoint of the
    // cycle ξ under ⟨·,·⟩ is ξ⁻¹, the coassociator condition reads
    //   ξ(Δ⊗I)Δ = (I⊗Δ)Δ,  equivalently  (Δ⊗I)Δ = ξ⁻¹(I⊗Δ)Δ.
    // This is the reading under which the duality dictionary is a theorem:
    // (A, Δ) nearly coassociative ⟺ (A*, ⋆) nearly associative. Writing ξ on
    // the (I⊗Δ)Δ side instead breaks the dictionary on generic tensors; for
    // comultiplications of the form Δ_r with skew r the two readings agree.
    nearly_coassociative,
    l_coalgebra,  // (I⊗Δ)Δ = (τ⊗I)(I⊗Δ)Δ
    r_coalgebra,  // (Δ⊗I)Δ = (I⊗τ)(Δ⊗I)Δ
    lr_coalgebra, // both one-sided conditions
    nal_coalgebra // nearly coassociative and L
};

inline const char* coalgebra_name(CoalgebraKind k) {
    switch (k) {
        case CoalgebraKind::nearly_coassociative: return "nearly-coassociative";
        case CoalgebraKind::l_coalgebra: return "l-coalgebra";
        case CoalgebraKind::r_coalgebra: return "r-coalgebra";
        case CoalgebraKind::lr_coalgebra: return "lr-coalgebra";
        case CoalgebraKind::nal_coalgebra: return "nal-coalgebra";
    }
    return "?";
}

inline Tensor2 apply_delta(const Comultiplication& c, const Vec& x) {
    if (x.dim() != c.dim) throw dimension_mismatch("apply_delta");
    Tensor2 out(c.dim);
    for (std::size_t i = 0; i < c.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < c.dim; ++j)
            for (std::size_t k = 0; k < c.dim; ++k)
                if (!c.d.at(i, j, k).is_zero()) out.at(j, k) += x[i] * c.d.at(i, j, k);
    }
    return out;
}

namespace detail {

/// (Δ⊗I)Δ(e_i): Δ expands the FIRST leg of Δ(e_i).
/// Result (p,q,k) = Σ_j d(i,j,k)·d(j,p,q).
inline Tensor3 delta_first(const Comultiplication& c, std::size_t i) {
    Tensor3 t(c.dim);
    for (std::size_t j = 0; j < c.dim; ++j)
        for (std::size_t k = 0; k < c.dim; ++k) {
            const Rat& djk = c.d.at(i, j, k);
            if (djk.is_zero()) continue;
            for (std::size_t p = 0; p < c.dim; ++p)
                for (std::size_t q = 0; q < c.dim; ++q)
                    if (!c.d.at(j, p, q).is_zero()) t.at(p, q, k) += djk * c.d.at(j, p, q);
        }
    return t;
}

/// (I⊗Δ)Δ(e_i): result (j,p,q) = Σ_k d(i,j,k)·d(k,p,q).
inline Tensor3 delta_second(const Comultiplication& c, std::size_t i) {
    Tensor3 t(c.dim);
    for (std::size_t j = 0; j < c.dim; ++j)
        for (std::size_t k = 0; k < c.dim; ++k) {
            const Rat& djk = c.d.at(i, j, k);
            if (djk.is_zero()) continue;
            for (std::size_t p = 0; p < c.dim; ++p)
                for (std::size_t q = 0; q < c.dim; ++q)
                    if (!c.d.at(k, p, q).is_zero()) t.at(j, p, q) += djk * c.d.at(k, p, q);
        }
    return t;
}

} // namespace detail

struct CoalgebraWitness {
    CoalgebraKind kind{};
    std::size_t index = 0; // failing basis element
    Tensor3 lhs, rhs;      // both sides, in full

    std::string describe() const {
        return std::string(coalgebra_name(kind)) + " fails at e" + std::to_string(index + 1) +
               ": lhs = " + render(lhs) + ", rhs = " + render(rhs);
    }
};

inline std::pair<bool, std::optional<CoalgebraWitness>> check_coalgebra(const Comultiplication& c,
                                                                        CoalgebraKind kind) {
    auto sides = [&](CoalgebraKind k, std::size_t i) -> std::pair<Tensor3, Tensor3> {
        switch (k) {
            case CoalgebraKind::nearly_coassociative:
                return {cycle(detail::delta_first(c, i)), detail::delta_second(c, i)};
            case CoalgebraKind::l_coalgebra: {
                Tensor3 s = detail::delta_second(c, i);
                return {s, twist12(s)};
            }
            case CoalgebraKind::r_coalgebra: {
                Tensor3 s = detail::delta_first(c, i);
                return {s, twist23(s)};
            }
            default:
                throw error("conjunction coalgebra kind in sides()");
        }
    };
    std::vector<CoalgebraKind> comps;
    switch (kind) {
        case CoalgebraKind::lr_coalgebra:
            comps = {CoalgebraKind::l_coalgebra, CoalgebraKind::r_coalgebra};
            break;
        case CoalgebraKind::nal_coalgebra:
            comps = {CoalgebraKind::nearly_coassociative, CoalgebraKind::l_coalgebra};
            break;
        default:
            comps = {kind};
    }
    for (std::size_t i = 0; i < c.dim; ++i)
        for (CoalgebraKind comp : comps) {
            auto [lhs, rhs] = sides(comp, i);
            if (lhs != rhs)
                return {false, CoalgebraWitness{comp, i, std::move(lhs), std::move(rhs)}};
        }
    return {true, std::nullopt};
}

inline bool holds(const Comultiplication& c, CoalgebraKind k) { return check_coalgebra(c, k).first; }

/// Algebra on A* induced by the pairing ⟨Δ(x), f⊗g⟩ = ⟨x, f⋆g⟩:
/// structure constants c*(j,k,i) = d(i,j,k).
inline Algebra dual_algebra_of_coalgebra(const Comultiplication& c) {
    Algebra a(c.dim, "dual");
    for (std::size_t i = 0; i < c.dim; ++i)
        for (std::size_t j = 0; j < c.dim; ++j)
            for (std::size_t k = 0; k < c.dim; ++k) a.cc(j, k, i) = c.d.at(i, j, k);
    return a;
}

/// Coalgebra on A* induced by ⟨Δ_{A*}(f), x⊗y⟩ = ⟨f, x·y⟩:
/// d*(k,i,j) = c(i,j,k). Round-trips with dual_algebra_of_coalgebra.
inline Comultiplication dual_coalgebra_of_algebra(const Algebra& a) {
    Comultiplication c(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) c.d.at(k, i, j) = a.cc(i, j, k);
    return c;
}

/// The duality dictionary: each coalgebra predicate must equal the matching
/// algebra predicate on the dual. Both code paths are evaluated and compared;
/// a mismatch is an internal contradiction.
inline CheckReport duality_dictionary(const Comultiplication& c) {
    const Algebra dual = dual_algebra_of_coalgebra(c);
    struct Pair {
        const char* name;
        CoalgebraKind ck;
        IdentityKind ik;
    };
    const Pair pairs[] = {
        {"nearly-coassociative<->nearly-associative", CoalgebraKind::nearly_coassociative,
         IdentityKind::nearly_associative},
        {"l-coalgebra<->l-algebra", CoalgebraKind::l_coalgebra, IdentityKind::l_commutative},
        {"r-coalgebra<->r-algebra", CoalgebraKind::r_coalgebra, IdentityKind::r_commutative},
    };
    CheckReport report;
    for (const auto& p : pairs) {
        const bool co = holds(c, p.ck);
        const bool al = holds(dual, p.ik);
        if (co != al)
            throw internal_contradiction(std::string("duality dictionary breaks for ") + p.name);
        report.add(p.name, co, co ? "both sides true" : "both sides false");
    }
    return report;
}

} // namespace nalab

#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nalab/algebra.hpp"
#include "nalab/coalgebra.hpp"
#include "nalab/double_bialgebra.hpp"
#include "nalab/render.hpp"
#include "nalab/report.hpp"

namespace nalab {

// ---------------------------------------------------------------------------
// Coboundary comultiplications Δ_r, the LR-Yang-Baxter tensor, the operator
// conditions characterizing coboundary bialgebras, and the dual R-map forms.
// All LR-type products are computed by index contraction on the coefficient
// array of r; r is never factored into a_i⊗b_i summands (non-unique).
// ---------------------------------------------------------------------------

/// Δ_r(x) = (L_x⊗I − I⊗R_x)(r):
///   d(i,j,k) = Σ_p r(p,k)·c(i,p,j) − Σ_p r(j,p)·c(p,i,k)
inline Comultiplication delta_from_r(const Algebra& a, const Tensor2& r) {
    if (r.n != a.dim) throw dimension_mismatch("delta_from_r");
    const std::size_t n = a.dim;
    Comultiplication out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rat v;
                for (std::size_t p = 0; p < n; ++p) {
                    if (!r.at(p, k).is_zero()) v += r.at(p, k) * a.cc(i, p, j);
                    if (!r.at(j, p).is_zero()) v -= r.at(j, p) * a.cc(p, i, k);
                }
                out.d.at(i, j, k) = v;
            }
    return out;
}

struct LrProducts {
    Tensor3 r12r23, r13r12, r23r13, lr;
};

/// r₁₂r₂₃ = Σ a_i⊗(b_i·a_j)⊗b_j, r₁₃r₁₂ = Σ (a_i·a_j)⊗b_j⊗b_i,
/// r₂₃r₁₃ = Σ a_j⊗a_i⊗(b_i·b_j); LR(r) = r₁₂r₂₃ − r₁₃r₁₂ − r₂₃r₁₃.
/// Contractions on r = Σ r(p,u) e_p⊗e_u:
///   (r₁₂r₂₃)(p,q,s) = Σ_{u,v} r(p,u)·r(v,s)·c(u,v,q)
///   (r₁₃r₁₂)(q,s,u) = Σ_{p,v} r(p,u)·r(v,s)·c(p,v,q)
///   (r₂₃r₁₃)(v,p,q) = Σ_{u,s} r(p,u)·r(v,s)·c(u,s,q)
inline LrProducts lr_tensor(const Algebra& a, const Tensor2& r) {
    if (r.n != a.dim) throw dimension_mismatch("lr_tensor");
    const std::size_t n = a.dim;
    LrProducts out{Tensor3(n), Tensor3(n), Tensor3(n), Tensor3(n)};
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t u = 0; u < n; ++u) {
            if (r.at(p, u).is_zero()) continue;
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t s = 0; s < n; ++s) {
                    if (r.at(v, s).is_zero()) continue;
                    const Rat coef = r.at(p, u) * r.at(v, s);
                    for (std::size_t q = 0; q < n; ++q) {
                        if (!a.cc(u, v, q).is_zero()) out.r12r23.at(p, q, s) += coef * a.cc(u, v, q);
                        if (!a.cc(p, v, q).is_zero()) out.r13r12.at(q, s, u) += coef * a.cc(p, v, q);
                        if (!a.cc(u, s, q).is_zero()) out.r23r13.at(v, p, q) += coef * a.cc(u, s, q);
                    }
                }
        }
    out.lr = out.r12r23 - out.r13r12 - out.r23r13;
    return out;
}

namespace detail {

inline Vec column(const Mat& m, std::size_t j) {
    Vec v(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
    return v;
}

inline Vec row_vec(const Tensor2& t, std::size_t i) {
    Vec v(t.n);
    for (std::size_t j = 0; j < t.n; ++j) v[j] = t.at(i, j);
    return v;
}

/// The coassociator defect of Δ_r expanded directly on r⊗r for a fixed x.
/// Writing r = Σ a_i⊗b_i, the two compositions are
///   (Δ_r⊗I)Δ_r(x) = Σ ((x·a_i)·a_j)⊗b_j⊗b_i − a_j⊗(b_j·(x·a_i))⊗b_i
///                     − (a_i·a_j)⊗b_j⊗(b_i·x) + a_j⊗(b_j·a_i)⊗(b_i·x)
///   (I⊗Δ_r)Δ_r(x) = Σ (x·a_i)⊗(b_i·a_j)⊗b_j − (x·a_i)⊗a_j⊗(b_j·b_i)
///                     − a_i⊗((b_i·x)·a_j)⊗b_j + a_i⊗a_j⊗(b_j·(b_i·x))
/// and the nearly-coassociativity condition ξ(Δ_r⊗I)Δ_r = (I⊗Δ_r)Δ_r is the
/// vanishing of (Δ_r⊗I)Δ_r − ξ⁻¹(I⊗Δ_r)Δ_r, eight contraction terms in the
/// coefficient pairs r(p,u)·r(v,s) with (a_i,b_i,a_j,b_j) ↦ (e_p,e_u,e_v,e_s).
inline Tensor3 nc_operator_defect(const Algebra& a, const Tensor2& r, std::size_t x) {
    const std::size_t n = a.dim;
    const Vec ex = Vec::unit(n, x);
    const Mat lx = left_op(a, ex), rx = right_op(a, ex);
    Tensor3 t(n);
    // rank-one accumulators: vector in one leg, basis indices in the others
    auto vec1 = [&](const Vec& w, std::size_t b, std::size_t c, const Rat& coef) {
        for (std::size_t k = 0; k < n; ++k)
            if (!w[k].is_zero()) t.at(k, b, c) += coef * w[k];
    };
    auto vec2 = [&](std::size_t a0, const Vec& w, std::size_t c, const Rat& coef) {
        for (std::size_t k = 0; k < n; ++k)
            if (!w[k].is_zero()) t.at(a0, k, c) += coef * w[k];
    };
    auto vec3 = [&](std::size_t a0, std::size_t b, const Vec& w, const Rat& coef) {
        for (std::size_t k = 0; k < n; ++k)
            if (!w[k].is_zero()) t.at(a0, b, k) += coef * w[k];
    };
    auto vec13 = [&](const Vec& w1, std::size_t b, const Vec& w3, const Rat& coef) {
        for (std::size_t k = 0; k < n; ++k)
            if (!w1[k].is_zero())
                for (std::size_t m = 0; m < n; ++m)
                    if (!w3[m].is_zero()) t.at(k, b, m) += coef * w1[k] * w3[m];
    };
    auto vec23 = [&](std::size_t a0, const Vec& w2, const Vec& w3, const Rat& coef) {
        for (std::size_t k = 0; k < n; ++k)
            if (!w2[k].is_zero())
                for (std::size_t m = 0; m < n; ++m)
                    if (!w3[m].is_zero()) t.at(a0, k, m) += coef * w2[k] * w3[m];
    };
    auto vec12 = [&](const Vec& w1, const Vec& w2, std::size_t c, const Rat& coef) {
        for (std::size_t k = 0; k < n; ++k)
            if (!w1[k].is_zero())
                for (std::size_t m = 0; m < n; ++m)
                    if (!w2[m].is_zero()) t.at(k, m, c) += coef * w1[k] * w2[m];
    };

    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t u = 0; u < n; ++u) {
            if (r.at(p, u).is_zero()) continue;
            const Vec xp = column(lx, p); // x·e_p
            const Vec ux = column(rx, u); // e_u·x
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t s = 0; s < n; ++s) {
                    if (r.at(v, s).is_zero()) continue;
                    const Rat coef = r.at(p, u) * r.at(v, s);
                    vec1(mul(a, xp, Vec::unit(n, v)), s, u, coef);      // +((x·p)·v)⊗s⊗u
                    vec2(v, mul(a, Vec::unit(n, s), xp), u, -coef);     // −v⊗(s·(x·p))⊗u
                    vec13(mul_basis(a, p, v), s, ux, -coef);            // −(p·v)⊗s⊗(u·x)
                    vec23(v, mul_basis(a, s, p), ux, coef);             // +v⊗(s·p)⊗(u·x)
                    vec23(s, xp, mul_basis(a, u, v), -coef);            // −s⊗(x·p)⊗(u·v)
                    vec12(mul_basis(a, s, u), xp, v, coef);             // +(s·u)⊗(x·p)⊗v
                    vec3(s, p, mul(a, ux, Vec::unit(n, v)), coef);      // +s⊗p⊗((u·x)·v)
                    vec1(mul(a, Vec::unit(n, s), ux), p, v, -coef);     // −(s·(u·x))⊗p⊗v
                }
        }
    return t;
}

/// ((L_x⊗I⊗I) − (τ⊗I)(L_x⊗I⊗I))·T
inline Tensor3 l_clause_defect(const Mat& lx, const Tensor3& t) {
    const std::size_t n = t.n;
    Tensor3 s(n);
    for (std::size_t a0 = 0; a0 < n; ++a0)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c0 = 0; c0 < n; ++c0) {
                if (t.at(a0, b, c0).is_zero()) continue;
                for (std::size_t q = 0; q < n; ++q)
                    if (!lx.at(q, a0).is_zero()) s.at(q, b, c0) += lx.at(q, a0) * t.at(a0, b, c0);
            }
    return s - twist12(s);
}

/// ((I⊗I⊗R_x) − (I⊗τ)(I⊗I⊗R_x))·T
inline Tensor3 r_clause_defect(const Mat& rx, const Tensor3& t) {
    const std::size_t n = t.n;
    Tensor3 s(n);
    for (std::size_t a0 = 0; a0 < n; ++a0)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c0 = 0; c0 < n; ++c0) {
                if (t.at(a0, b, c0).is_zero()) continue;
                for (std::size_t q = 0; q < n; ++q)
                    if (!rx.at(q, c0).is_zero()) s.at(a0, b, q) += rx.at(q, c0) * t.at(a0, b, c0);
            }
    return s - twist23(s);
}

/// (A⊗B)(r) = A·r·Bᵀ on coefficient matrices.
inline Tensor2 apply_pair(const Mat& ma, const Mat& mb, const Tensor2& r) {
    const std::size_t n = r.n;
    Tensor2 out(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (r.at(p, q).is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) {
                if (ma.at(i, p).is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!mb.at(j, q).is_zero())
                        out.at(i, j) += ma.at(i, p) * r.at(p, q) * mb.at(j, q);
            }
        }
    return out;
}

} // namespace detail

/// Operator form of "Δ_r is nearly coassociative" for skew r, verified for
/// every basis x and cross-checked against the direct coalgebra predicate.
inline std::pair<bool, std::optional<std::pair<std::size_t, Tensor3>>> check_nc_operator(
    const Algebra& a, const Tensor2& r) {
    if (r.n != a.dim) throw dimension_mismatch("check_nc_operator");
    if (!r.is_skew()) throw skew_required("check_nc_operator");
    bool ok = true;
    std::optional<std::pair<std::size_t, Tensor3>> witness;
    for (std::size_t x = 0; x < a.dim; ++x) {
        Tensor3 t = detail::nc_operator_defect(a, r, x);
        if (!t.is_zero()) {
            ok = false;
            witness = {x, std::move(t)};
            break;
        }
    }
    const bool direct = holds(delta_from_r(a, r), CoalgebraKind::nearly_coassociative);
    if (ok != direct)
        throw internal_contradiction("operator nearly-coassociativity criterion disagrees with Δ_r");
    return {ok, std::move(witness)};
}

/// Operator forms of "Δ_r is an L-/R-coalgebra" on a NAL algebra, each
/// cross-checked against the direct coalgebra predicate.
inline CheckReport check_one_sided_operators(const Algebra& a, const Tensor2& r) {
    if (r.n != a.dim) throw dimension_mismatch("check_one_sided_operators");
    auto [isnal, w] = check_identity(a, IdentityKind::nal);
    if (!isnal) throw not_nal(w->describe());
    if (!r.is_skew()) throw skew_required("check_one_sided_operators");

    const Tensor3 lr = lr_tensor(a, r).lr;
    bool l_ok = true, r_ok = true;
    std::string lw, rw;
    for (std::size_t x = 0; x < a.dim; ++x) {
        if (l_ok) {
            Tensor3 d = detail::l_clause_defect(left_op_basis(a, x), lr);
            if (!d.is_zero()) {
                l_ok = false;
                lw = "fails at e" + std::to_string(x + 1) + ": " + render(d);
            }
        }
        if (r_ok) {
            Tensor3 d = detail::r_clause_defect(right_op_basis(a, x), lr);
            if (!d.is_zero()) {
                r_ok = false;
                rw = "fails at e" + std::to_string(x + 1) + ": " + render(d);
            }
        }
    }
    const Comultiplication delta = delta_from_r(a, r);
    if (l_ok != holds(delta, CoalgebraKind::l_coalgebra))
        throw internal_contradiction("L-clause disagrees with Δ_r L-coalgebra check");
    if (r_ok != holds(delta, CoalgebraKind::r_coalgebra))
        throw internal_contradiction("R-clause disagrees with Δ_r R-coalgebra check");
    CheckReport report;
    report.add("l-clause", l_ok, lw);
    report.add("r-clause", r_ok, rw);
    return report;
}

struct ConditionWitness {
    std::vector<std::size_t> at; // one basis index for (1),(2); a pair for (3)-(6)
    Tensor3 value3;              // defect for (1),(2)
    Tensor2 value2;              // defect for (3)-(6)
    bool is_pair = false;

    std::string describe() const {
        std::string loc = "(e" + std::to_string(at[0] + 1);
        if (is_pair) loc += ",e" + std::to_string(at[1] + 1);
        loc += ")";
        return "fails at " + loc + ": " + (is_pair ? render(value2) : render(value3));
    }
};

struct ConditionEntry {
    std::string name;
    bool pass = true;
    std::optional<ConditionWitness> witness;
};

struct YbeReport {
    LrProducts products;
    bool is_solution = false;       // LR(r) = 0
    std::array<ConditionEntry, 6> conditions;
    CheckReport coalgebra_checks;   // direct verdicts for Δ_r
    bool coboundary_bialgebra = false;

    bool all_conditions_hold() const {
        for (const auto& e : conditions)
            if (!e.pass) return false;
        return true;
    }
};

/// The six conditions characterizing coboundary bialgebra structure for a
/// skew r over a NAL algebra:
///   (1) ((L_x⊗I⊗I) − (τ⊗I)(L_x⊗I⊗I))·LR(r) = 0
///   (2) the nearly-coassociativity operator on r⊗r vanishes
///   (3) (L_x⊗R_y − R_x⊗L_y)(r) = 0
///   (4) (ad_y R_x⊗I − I⊗R_x ad_y)(r) = 0
///   (5) (L_y⊗L_x − R_y⊗R_x)(r) = 0
///   (6) (I⊗I − τ)(ad_{x·y}⊗I)(r) = 0
/// Conditions (1),(2) quantify over basis x; (3)-(6) over basis pairs (x,y).
/// (1) and (2) are cross-checked against the direct Δ_r coalgebra verdicts,
/// and the full conjunction against the coproduct characterization of the
/// bialgebra whenever its preconditions hold.
inline YbeReport coboundary_conditions(const Algebra& a, const Tensor2& r) {
    if (r.n != a.dim) throw dimension_mismatch("coboundary_conditions");
    auto [isnal, nw] = check_identity(a, IdentityKind::nal);
    if (!isnal) throw not_nal(nw->describe());
    if (!r.is_skew()) throw skew_required("coboundary_conditions");

    const std::size_t n = a.dim;
    YbeReport out;
    out.products = lr_tensor(a, r);
    out.is_solution = out.products.lr.is_zero();

    std::vector<Mat> L(n), R(n), Ad(n);
    for (std::size_t i = 0; i < n; ++i) {
        L[i] = left_op_basis(a, i);
        R[i] = right_op_basis(a, i);
        Ad[i] = L[i] - R[i];
    }

    out.conditions[0].name = "1:l-clause-on-LR";
    for (std::size_t x = 0; x < n && out.conditions[0].pass; ++x) {
        Tensor3 d = detail::l_clause_defect(L[x], out.products.lr);
        if (!d.is_zero()) {
            out.conditions[0].pass = false;
            out.conditions[0].witness = ConditionWitness{{x}, std::move(d), Tensor2(), false};
        }
    }
    out.conditions[1].name = "2:nearly-coassoc-operator";
    for (std::size_t x = 0; x < n && out.conditions[1].pass; ++x) {
        Tensor3 d = detail::nc_operator_defect(a, r, x);
        if (!d.is_zero()) {
            out.conditions[1].pass = false;
            out.conditions[1].witness = ConditionWitness{{x}, std::move(d), Tensor2(), false};
        }
    }

    struct PairCondition {
        std::string name;
        std::function<Tensor2(std::size_t, std::size_t)> defect;
    };
    const std::vector<PairCondition> pair_conditions = {
        {"3:(Lx⊗Ry-Rx⊗Ly)r", [&](std::size_t x, std::size_t y) {
             return detail::apply_pair(L[x], R[y], r) - detail::apply_pair(R[x], L[y], r);
         }},
        {"4:(adYRx⊗I-I⊗RxadY)r", [&](std::size_t x, std::size_t y) {
             return detail::apply_pair(Ad[y] * R[x], Mat::identity(n), r) -
                    detail::apply_pair(Mat::identity(n), R[x] * Ad[y], r);
         }},
        {"5:(Ly⊗Lx-Ry⊗Rx)r", [&](std::size_t x, std::size_t y) {
             return detail::apply_pair(L[y], L[x], r) - detail::apply_pair(R[y], R[x], r);
         }},
        {"6:(I⊗I-τ)(ad(xy)⊗I)r", [&](std::size_t x, std::size_t y) {
             const Vec xy = mul_basis(a, x, y);
             Tensor2 t = detail::apply_pair(ad_op(a, xy), Mat::identity(n), r);
             return t - twist(t);
         }},
    };
    for (std::size_t ci = 0; ci < pair_conditions.size(); ++ci) {
        ConditionEntry& entry = out.conditions[2 + ci];
        entry.name = pair_conditions[ci].name;
        for (std::size_t x = 0; x < n && entry.pass; ++x)
            for (std::size_t y = 0; y < n && entry.pass; ++y) {
                Tensor2 d = pair_conditions[ci].defect(x, y);
                if (!d.is_zero()) {
                    entry.pass = false;
                    entry.witness = ConditionWitness{{x, y}, Tensor3(), std::move(d), true};
                }
            }
    }

    // Direct coalgebra verdicts for Δ_r, plus the mandatory agreements.
    const Comultiplication delta = delta_from_r(a, r);
    auto [nc, nc_w] = check_coalgebra(delta, CoalgebraKind::nearly_coassociative);
    auto [lco, lco_w] = check_coalgebra(delta, CoalgebraKind::l_coalgebra);
    auto [rco, rco_w] = check_coalgebra(delta, CoalgebraKind::r_coalgebra);
    out.coalgebra_checks.add("nearly-coassociative", nc, nc_w ? nc_w->describe() : "");
    out.coalgebra_checks.add("l-coalgebra", lco, lco_w ? lco_w->describe() : "");
    out.coalgebra_checks.add("r-coalgebra", rco, rco_w ? rco_w->describe() : "");
    if (out.conditions[0].pass != lco)
        throw internal_contradiction("condition (1) disagrees with the L-coalgebra check");
    if (out.conditions[1].pass != nc)
        throw internal_contradiction("condition (2) disagrees with nearly coassociativity");

    out.coboundary_bialgebra = out.all_conditions_hold();
    const Algebra dual = dual_algebra_of_coalgebra(delta);
    if (holds(dual, IdentityKind::nal)) {
        auto [thm_ok, rep] = is_nal_bialgebra_coproduct({a, delta});
        if (thm_ok != out.coboundary_bialgebra)
            throw internal_contradiction("six-condition conjunction disagrees with coproduct characterization");
    } else if (out.coboundary_bialgebra) {
        throw internal_contradiction("conditions passed but Δ_r dual half is not NAL");
    }
    return out;
}

/// R-map of r: R(f) = (f⊗1)(r), i.e. R(e*_i) = Σ_j r(i,j) e_j. As a matrix on
/// dual coordinates this is rᵀ. Skewness of r is the identity R = −Rᵀ.
inline Mat r_map(const Tensor2& r) {
    Mat m(r.n, r.n);
    for (std::size_t i = 0; i < r.n; ++i)
        for (std::size_t j = 0; j < r.n; ++j) m.at(j, i) = r.at(i, j);
    return m;
}

/// Cyclic pairing form of the LR-Yang-Baxter equation:
///   Σ_cycl ⟨f, R(h)R(g)⟩ = 0 over all dual-basis triples ⟺ LR(r) = 0.
inline std::pair<bool, std::optional<std::array<std::size_t, 3>>> cyclic_r_condition(
    const Algebra& a, const Tensor2& r) {
    if (r.n != a.dim) throw dimension_mismatch("cyclic_r_condition");
    if (!r.is_skew()) throw skew_required("cyclic_r_condition");
    const std::size_t n = a.dim;
    std::vector<Vec> rv(n); // R(e*_i)
    for (std::size_t i = 0; i < n; ++i) rv[i] = detail::row_vec(r, i);
    std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i][j] = mul(a, rv[i], rv[j]);

    bool ok = true;
    std::optional<std::array<std::size_t, 3>> witness;
    for (std::size_t f = 0; f < n && ok; ++f)
        for (std::size_t g = 0; g < n && ok; ++g)
            for (std::size_t h = 0; h < n && ok; ++h) {
                Rat s = prod[h][g][f] + prod[f][h][g] + prod[g][f][h];
                if (!s.is_zero()) {
                    ok = false;
                    witness = std::array<std::size_t, 3>{f, g, h};
                }
            }
    const bool direct = lr_tensor(a, r).lr.is_zero();
    if (ok != direct) throw internal_contradiction("cyclic condition disagrees with LR(r) = 0");
    return {ok, witness};
}

/// The six coboundary conditions restated through the R-map on the dual side,
/// evaluated with matrix algebra on A* and cross-checked condition-by-
/// condition against the tensor forms.
inline CheckReport r_map_conditions(const Algebra& a, const Tensor2& r) {
    if (r.n != a.dim) throw dimension_mismatch("r_map_conditions");
    auto [isnal, nw] = check_identity(a, IdentityKind::nal);
    if (!isnal) throw not_nal(nw->describe());
    if (!r.is_skew()) throw skew_required("r_map_conditions");

    const std::size_t n = a.dim;
    const Mat rmap = r_map(r);
    std::vector<Mat> Lt(n), Rt(n), Adt(n); // transposes: dual maps L*, R*, ad* on coordinates
    std::vector<Mat> L(n), R(n);
    for (std::size_t i = 0; i < n; ++i) {
        L[i] = left_op_basis(a, i);
        R[i] = right_op_basis(a, i);
        Lt[i] = transpose(L[i]);
        Rt[i] = transpose(R[i]);
        Adt[i] = transpose(L[i] - R[i]);
    }
    // L*_x f = f∘R_x ↦ Rₓᵀ·f ; R*_x f = f∘L_x ↦ Lₓᵀ·f ; ad*_x f = f∘ad_x ↦ adₓᵀ·f
    auto rof = [&](const Vec& f) { return rmap * f; };
    std::vector<Vec> rdual(n);
    for (std::size_t i = 0; i < n; ++i) rdual[i] = rof(Vec::unit(n, i));
    std::vector<std::vector<Vec>> pp(n, std::vector<Vec>(n)); // R(e*_i)·R(e*_j)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pp[i][j] = mul(a, rdual[i], rdual[j]);

    auto cyc = [&](const Vec& u, const Vec& v, const Vec& w) {
        const Vec ru = rof(u), rvv = rof(v), rw = rof(w);
        return dot(u, mul(a, rw, rvv)) + dot(v, mul(a, ru, rw)) + dot(w, mul(a, rvv, ru));
    };

    CheckReport report;

    bool c1 = true;
    std::string w1;
    for (std::size_t x = 0; x < n && c1; ++x) {
        std::vector<Vec> rstar(n); // R*_x e*_i = Lₓᵀ·e_i
        for (std::size_t i = 0; i < n; ++i) rstar[i] = detail::column(Lt[x], i);
        for (std::size_t f = 0; f < n && c1; ++f)
            for (std::size_t g = 0; g < n && c1; ++g)
                for (std::size_t h = 0; h < n && c1; ++h) {
                    Rat s = cyc(rstar[f], Vec::unit(n, g), Vec::unit(n, h)) -
                            cyc(rstar[g], Vec::unit(n, f), Vec::unit(n, h));
                    if (!s.is_zero()) {
                        c1 = false;
                        w1 = "fails at x=e" + std::to_string(x + 1);
                    }
                }
    }
    report.add("1:cyclic-with-R*x", c1, w1);

    bool c2 = true;
    std::string w2;
    for (std::size_t x = 0; x < n && c2; ++x) {
        const Mat adx = L[x] - R[x];
        for (std::size_t f = 0; f < n && c2; ++f)
            for (std::size_t g = 0; g < n && c2; ++g)
                for (std::size_t h = 0; h < n && c2; ++h) {
                    const Vec adrh = adx * rdual[h];
                    const Vec radh = rof(detail::column(Adt[x], h));
                    Rat s = mul(a, adrh, rdual[g])[f] + mul(a, radh, rdual[g])[f] +
                            mul(a, rdual[f], adrh)[g] + mul(a, rdual[f], radh)[g];
                    if (!s.is_zero()) {
                        c2 = false;
                        w2 = "fails at x=e" + std::to_string(x + 1);
                    }
                }
    }
    report.add("2:adx-pairing", c2, w2);

    // Conditions (3)-(6) are bilinear pairings over (x,y) and dual pairs.
    auto pair_loop = [&](auto&& defect) -> std::pair<bool, std::string> {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t f = 0; f < n; ++f)
                    for (std::size_t g = 0; g < n; ++g) {
                        Rat s = defect(x, y, f, g);
                        if (!s.is_zero())
                            return {false, "fails at (e" + std::to_string(x + 1) + ",e" +
                                               std::to_string(y + 1) + ")"};
                    }
        return {true, ""};
    };

    auto [c3, w3] = pair_loop([&](std::size_t x, std::size_t y, std::size_t f, std::size_t g) {
        // ⟨L*_y g, R(R*_x f)⟩ − ⟨R*_y g, R(L*_x f)⟩
        return dot(detail::column(Rt[y], g), rof(detail::column(Lt[x], f))) -
               dot(detail::column(Lt[y], g), rof(detail::column(Rt[x], f)));
    });
    report.add("3:LyRx-pairing", c3, w3);

    auto [c4, w4] = pair_loop([&](std::size_t x, std::size_t y, std::size_t f, std::size_t g) {
        // ⟨g, R(L*_x ad*_y f)⟩ + ⟨f, R(ad*_y L*_x g)⟩
        const Vec u = Rt[x] * (Adt[y] * Vec::unit(n, f));
        const Vec v = Adt[y] * (Rt[x] * Vec::unit(n, g));
        return rof(u)[g] + rof(v)[f];
    });
    report.add("4:ad-R-pairing", c4, w4);

    auto [c5, w5] = pair_loop([&](std::size_t x, std::size_t y, std::size_t f, std::size_t g) {
        // ⟨R*_x g, R(R*_y f)⟩ − ⟨L*_x g, R(L*_y f)⟩
        return dot(detail::column(Lt[x], g), rof(detail::column(Lt[y], f))) -
               dot(detail::column(Rt[x], g), rof(detail::column(Rt[y], f)));
    });
    report.add("5:LL-RR-pairing", c5, w5);

    auto [c6, w6] = pair_loop([&](std::size_t x, std::size_t y, std::size_t f, std::size_t g) {
        // ⟨g, R(ad*_{xy} f)⟩ − ⟨f, R(ad*_{xy} g)⟩
        const Mat adxyT = transpose(ad_op(a, mul_basis(a, x, y)));
        return rof(adxyT * Vec::unit(n, f))[g] - rof(adxyT * Vec::unit(n, g))[f];
    });
    report.add("6:ad(xy)-pairing", c6, w6);

    const YbeReport tensor_side = coboundary_conditions(a, r);
    const bool mine[6] = {c1, c2, c3, c4, c5, c6};
    for (std::size_t i = 0; i < 6; ++i)
        if (mine[i] != tensor_side.conditions[i].pass)
            throw internal_contradiction("R-map condition (" + std::to_string(i + 1) +
                                         ") disagrees with its tensor form");
    return report;
}

/// Exhaustive search over skew r with up to `support` elementary bivector
/// terms and coefficients from `coeffs`; returns every candidate satisfying
/// all six conditions, in deterministic enumeration order.
inline std::vector<std::pair<Tensor2, YbeReport>> search_skew_r(const Algebra& a,
                                                                const std::vector<Rat>& coeffs,
                                                                std::size_t support,
                                                                std::size_t jobs = 1) {
    auto [isnal, nw] = check_identity(a, IdentityKind::nal);
    if (!isnal) throw not_nal(nw->describe());
    if (support < 1) throw error("search_skew_r: support must be ≥ 1");
    if (coeffs.empty()) throw error("search_skew_r: empty coefficient set");
    const std::size_t n = a.dim;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    // Candidates: subsets of bivector slots (lexicographic combinations of
    // sizes 1..support), coefficient tuples in lexicographic coeff order.
    std::vector<Tensor2> candidates;
    std::vector<std::size_t> combo;
    auto emit = [&](const std::vector<std::size_t>& slots) {
        std::vector<std::size_t> cidx(slots.size(), 0);
        while (true) {
            Tensor2 r(n);
            for (std::size_t t = 0; t < slots.size(); ++t) {
                const auto [i, j] = pairs[slots[t]];
                r.at(i, j) += coeffs[cidx[t]];
                r.at(j, i) -= coeffs[cidx[t]];
            }
            candidates.push_back(std::move(r));
            std::size_t pos = slots.size();
            while (pos > 0) {
                if (++cidx[pos - 1] < coeffs.size()) break;
                cidx[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    };
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t left) {
        if (left == 0) {
            emit(combo);
            return;
        }
        for (std::size_t i = start; i + left <= pairs.size(); ++i) {
            combo.push_back(i);
            choose(i + 1, left - 1);
            combo.pop_back();
        }
    };
    for (std::size_t size = 1; size <= support && size <= pairs.size(); ++size) choose(0, size);

    std::vector<std::optional<YbeReport>> reports(candidates.size());
    const std::size_t workers = jobs == 0 ? 1 : jobs;
    auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            YbeReport rep = coboundary_conditions(a, candidates[i]);
            if (rep.coboundary_bialgebra) reports[i] = std::move(rep);
        }
    };
    if (workers <= 1) {
        run_range(0, candidates.size());
    } else {
        std::vector<std::thread> threads;
        const std::size_t chunk = (candidates.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(candidates.size(), lo + chunk);
            if (lo < hi) threads.emplace_back(run_range, lo, hi);
        }
        for (auto& t : threads) t.join();
    }

    std::vector<std::pair<Tensor2, YbeReport>> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (reports[i]) out.emplace_back(std::move(candidates[i]), std::move(*reports[i]));
    return out;
}

} // namespace nalab

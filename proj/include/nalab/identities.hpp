#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nalab/algebra.hpp"
#include "nalab/render.hpp"
#include "nalab/report.hpp"

namespace nalab {

// ---------------------------------------------------------------------------
// Multilinear identities, each decidable on basis triples over a
// characteristic-zero field. Conjunction tags (LR, NAL) check their
// components per triple in a fixed order.
// ---------------------------------------------------------------------------

enum class IdentityKind {
    nearly_associative, // (xy)z = y(zx)
    associative,        // (xy)z = x(yz)
    l_commutative,      // x(yz) = y(xz)
    r_commutative,      // (xy)z = (xz)y
    lr,                 // l_commutative and r_commutative
    flexible,           // Asso(x,y,z) + Asso(z,y,x) = 0   (linearized Asso(x,y,x) = 0)
    quasi_commutative,  // (xy)z = z(yx)
    nal,                // nearly_associative and l_commutative
};

inline const char* identity_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::nearly_associative: return "nearly-associative";
        case IdentityKind::associative: return "associative";
        case IdentityKind::l_commutative: return "l-commutative";
        case IdentityKind::r_commutative: return "r-commutative";
        case IdentityKind::lr: return "lr";
        case IdentityKind::flexible: return "flexible";
        case IdentityKind::quasi_commutative: return "quasi-commutative";
        case IdentityKind::nal: return "nal";
    }
    return "?";
}

struct TripleWitness {
    IdentityKind kind{}; // for conjunction tags, the failing component
    std::array<std::size_t, 3> idx{};
    Vec lhs, rhs;

    std::string describe() const {
        return std::string(identity_name(kind)) + " fails at (e" + std::to_string(idx[0] + 1) +
               ",e" + std::to_string(idx[1] + 1) + ",e" + std::to_string(idx[2] + 1) +
               "): lhs = " + render(lhs) + ", rhs = " + render(rhs);
    }
};

using IdentityVerdict = std::pair<bool, std::optional<TripleWitness>>;

namespace detail {

/// Both sides of a single (non-conjunction) identity at a basis triple.
inline std::pair<Vec, Vec> identity_sides(const Algebra& a, IdentityKind k, std::size_t i,
                                          std::size_t j, std::size_t l) {
    const Vec x = Vec::unit(a.dim, i), y = Vec::unit(a.dim, j), z = Vec::unit(a.dim, l);
    switch (k) {
        case IdentityKind::nearly_associative:
            return {mul(a, mul(a, x, y), z), mul(a, y, mul(a, z, x))};
        case IdentityKind::associative:
            return {mul(a, mul(a, x, y), z), mul(a, x, mul(a, y, z))};
        case IdentityKind::l_commutative:
            return {mul(a, x, mul(a, y, z)), mul(a, y, mul(a, x, z))};
        case IdentityKind::r_commutative:
            return {mul(a, mul(a, x, y), z), mul(a, mul(a, x, z), y)};
        case IdentityKind::quasi_commutative:
            return {mul(a, mul(a, x, y), z), mul(a, z, mul(a, y, x))};
        case IdentityKind::flexible:
            return {associator(a, x, y, z), -associator(a, z, y, x)};
        default:
            throw error("identity_sides called with a conjunction tag");
    }
}

inline std::vector<IdentityKind> components(IdentityKind k) {
    switch (k) {
        case IdentityKind::lr:
            return {IdentityKind::l_commutative, IdentityKind::r_commutative};
        case IdentityKind::nal:
            return {IdentityKind::nearly_associative, IdentityKind::l_commutative};
        default:
            return {k};
    }
}

} // namespace detail

/// Checks the identity on all basis triples (sufficient by multilinearity).
/// On failure returns the lexicographically first violating triple.
inline IdentityVerdict check_identity(const Algebra& a, IdentityKind k) {
    const auto comps = detail::components(k);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t l = 0; l < a.dim; ++l)
                for (IdentityKind comp : comps) {
                    auto [lhs, rhs] = detail::identity_sides(a, comp, i, j, l);
                    if (lhs != rhs)
                        return {false, TripleWitness{comp, {i, j, l}, std::move(lhs), std::move(rhs)}};
                }
    return {true, std::nullopt};
}

inline bool holds(const Algebra& a, IdentityKind k) { return check_identity(a, k).first; }

/// Evaluates an identity on arbitrary (not necessarily basis) elements;
/// used by the multilinearity property tests.
inline std::pair<Vec, Vec> identity_sides_at(const Algebra& a, IdentityKind k, const Vec& x,
                                             const Vec& y, const Vec& z) {
    switch (k) {
        case IdentityKind::nearly_associative:
            return {mul(a, mul(a, x, y), z), mul(a, y, mul(a, z, x))};
        case IdentityKind::associative:
            return {mul(a, mul(a, x, y), z), mul(a, x, mul(a, y, z))};
        case IdentityKind::l_commutative:
            return {mul(a, x, mul(a, y, z)), mul(a, y, mul(a, x, z))};
        case IdentityKind::r_commutative:
            return {mul(a, mul(a, x, y), z), mul(a, mul(a, x, z), y)};
        case IdentityKind::quasi_commutative:
            return {mul(a, mul(a, x, y), z), mul(a, z, mul(a, y, x))};
        case IdentityKind::flexible:
            return {associator(a, x, y, z), -associator(a, z, y, x)};
        case IdentityKind::lr: {
            auto [l1, r1] = identity_sides_at(a, IdentityKind::l_commutative, x, y, z);
            auto [l2, r2] = identity_sides_at(a, IdentityKind::r_commutative, x, y, z);
            Vec lhs(2 * a.dim), rhs(2 * a.dim);
            for (std::size_t t = 0; t < a.dim; ++t) {
                lhs[t] = l1[t]; lhs[a.dim + t] = l2[t];
                rhs[t] = r1[t]; rhs[a.dim + t] = r2[t];
            }
            return {lhs, rhs};
        }
        case IdentityKind::nal: {
            auto [l1, r1] = identity_sides_at(a, IdentityKind::nearly_associative, x, y, z);
            auto [l2, r2] = identity_sides_at(a, IdentityKind::l_commutative, x, y, z);
            Vec lhs(2 * a.dim), rhs(2 * a.dim);
            for (std::size_t t = 0; t < a.dim; ++t) {
                lhs[t] = l1[t]; lhs[a.dim + t] = l2[t];
                rhs[t] = r1[t]; rhs[a.dim + t] = r2[t];
            }
            return {lhs, rhs};
        }
    }
    throw error("unreachable");
}

// ---------------------------------------------------------------------------
// Operator identities: the composition laws forced on L and R.
// ---------------------------------------------------------------------------

/// Checks, as matrix equalities over all basis pairs:
///   LxLy=RyRx, LxRy=L(yx), RxLy=R(xy)          (nearly associative laws)
///   LR1: LxLy = LyLx = RxRy = RyRx             (chains valid on NAL algebras)
///   LR2: LyRx = L(xy) = R(yx) = RyLx
inline CheckReport check_operator_identities(const Algebra& a) {
    const std::size_t n = a.dim;
    std::vector<Mat> L(n), R(n);
    for (std::size_t i = 0; i < n; ++i) {
        L[i] = left_op_basis(a, i);
        R[i] = right_op_basis(a, i);
    }
    auto op_of_product = [&](const std::vector<Mat>& ops, std::size_t i, std::size_t j) {
        Mat m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            if (!a.cc(i, j, k).is_zero()) m = m + a.cc(i, j, k) * ops[k];
        return m;
    };

    struct Eq {
        std::string name;
        std::function<std::pair<Mat, Mat>(std::size_t, std::size_t)> sides;
    };
    std::vector<Eq> eqs;
    eqs.push_back({"LxLy=RyRx", [&](std::size_t i, std::size_t j) {
                       return std::make_pair(L[i] * L[j], R[j] * R[i]);
                   }});
    eqs.push_back({"LxRy=L(yx)", [&](std::size_t i, std::size_t j) {
                       return std::make_pair(L[i] * R[j], op_of_product(L, j, i));
                   }});
    eqs.push_back({"RxLy=R(xy)", [&](std::size_t i, std::size_t j) {
                       return std::make_pair(R[i] * L[j], op_of_product(R, i, j));
                   }});
    eqs.push_back({"LR1:LxLy=LyLx", [&](std::size_t i, std::size_t j) {
                       return std::make_pair(L[i] * L[j], L[j] * L[i]);
                   }});
    eqs.push_back({"LR1:LyLx=RxRy", [&](std::size_t i, std::size_t j) {
                       return std::make_pair(L[j] * L[i], R[i] * R[j]);
                   }});
    eqs.push_back({"LR1:RxRy=RyRx", [&](std::size_t i, std::size_t j) {
                       return std::make_pair(R[i] * R[j], R[j] * R[i]);
                   }});
    eqs.push_back({"LR2:LyRx=L(xy)", [&](std::size_t i, std::size_t j) {
                       return std::make_pair(L[j] * R[i], op_of_product(L, i, j));
                   }});
    eqs.push_back({"LR2:L(xy)=R(yx)", [&](std::size_t i, std::size_t j) {
                       return std::make_pair(op_of_product(L, i, j), op_of_product(R, j, i));
                   }});
    eqs.push_back({"LR2:R(yx)=RyLx", [&](std::size_t i, std::size_t j) {
                       return std::make_pair(op_of_product(R, j, i), R[j] * L[i]);
                   }});

    CheckReport report;
    for (const auto& eq : eqs) {
        bool pass = true;
        std::string witness;
        for (std::size_t i = 0; i < n && pass; ++i)
            for (std::size_t j = 0; j < n && pass; ++j) {
                auto [lhs, rhs] = eq.sides(i, j);
                if (lhs != rhs) {
                    pass = false;
                    witness = "fails at (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
                }
            }
        report.add(eq.name, pass, witness);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Admissibility predicates.
// ---------------------------------------------------------------------------

inline bool is_lie_admissible(const Algebra& a) {
    const Algebra m = minus_algebra(a);
    if (!is_anticommutative(m)) return false;
    const std::size_t n = m.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                Vec jac = mul(m, x, mul(m, y, z)) + mul(m, y, mul(m, z, x)) + mul(m, z, mul(m, x, y));
                if (!jac.is_zero()) return false;
            }
    return true;
}

namespace detail {

/// Full linearization of the Jordan identity (x•y)•x² = x•(y•x²): replace x
/// by x1, x2, x3 and sum the three symmetric placements. Multilinear in four
/// variables, so basis 4-tuples decide it; equivalent over ℚ.
inline Vec jordan_linearized(const Algebra& p, const Vec& x1, const Vec& x2, const Vec& x3,
                             const Vec& y) {
    auto term = [&](const Vec& u, const Vec& v, const Vec& w) {
        // ((u•y)•(v•w)) − u•(y•(v•w))
        const Vec vw = mul(p, v, w);
        return mul(p, mul(p, u, y), vw) - mul(p, u, mul(p, y, vw));
    };
    return term(x1, x2, x3) + term(x2, x1, x3) + term(x3, x1, x2);
}

inline Vec jordan_direct(const Algebra& p, const Vec& x, const Vec& y) {
    const Vec xx = mul(p, x, x);
    return mul(p, mul(p, x, y), xx) - mul(p, x, mul(p, y, xx));
}

} // namespace detail

inline bool is_jordan_admissible(const Algebra& a) {
    const Algebra p = plus_algebra(a);
    // commutativity holds by construction of A⁺; the content is the identity
    const std::size_t n = p.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Vec v = detail::jordan_linearized(p, Vec::unit(n, i), Vec::unit(n, j),
                                                      Vec::unit(n, k), Vec::unit(n, l));
                    if (!v.is_zero()) return false;
                }
    return true;
}

/// The compatibility identity of Lie-Poisson-Jordan admissibility admits two
/// readings of its final term: y•[x,y] (repeated y) or the Leibniz-style
/// y•[x,z]. Both are implemented; callers must choose explicitly.
enum class LeibnizReading { repeated_y, corrected };

inline bool leibniz_compat_holds(const Algebra& a, LeibnizReading reading) {
    const Algebra m = minus_algebra(a), p = plus_algebra(a);
    const std::size_t n = a.dim;
    if (reading == LeibnizReading::repeated_y) {
        // [x, y•z] = [x,y]•z + y•[x,y] is not multilinear: the last term is
        // quadratic in y and independent of z. Over a characteristic-zero
        // field the quantified identity splits by homogeneity into
        //   [x, y•z] = [x,y]•z   and   y•[x,y] = 0,
        // and the second linearizes to y₁•[x,y₂] + y₂•[x,y₁] = 0.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                    if (mul(m, x, mul(p, y, z)) != mul(p, mul(m, x, y), z)) return false;
                    Vec quad = mul(p, y, mul(m, x, z)) + mul(p, z, mul(m, x, y));
                    if (!quad.is_zero()) return false;
                }
        return true;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                const Vec lhs = mul(m, x, mul(p, y, z));
                const Vec rhs = mul(p, mul(m, x, y), z) + mul(p, y, mul(m, x, z));
                if (lhs != rhs) return false;
            }
    return true;
}

inline bool is_lie_poisson_jordan(const Algebra& a, LeibnizReading reading) {
    return is_lie_admissible(a) && is_jordan_admissible(a) && leibniz_compat_holds(a, reading);
}

// ---------------------------------------------------------------------------
// Consequence batteries.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string triple_tag(std::size_t i, std::size_t j, std::size_t k) {
    return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" +
           std::to_string(k + 1) + ")";
}

inline std::string identity_witness(const Algebra& a, IdentityKind k) {
    auto [ok, w] = check_identity(a, k);
    return ok ? std::string() : w->describe();
}

/// First basis triple violating the Jacobi identity of an anticommutative
/// product, rendered; empty when none.
inline std::string jacobi_witness(const Algebra& m) {
    const std::size_t n = m.dim;
    if (!is_anticommutative(m)) return "product is not anticommutative";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                Vec jac = mul(m, x, mul(m, y, z)) + mul(m, y, mul(m, z, x)) + mul(m, z, mul(m, x, y));
                if (!jac.is_zero())
                    return "Jacobi fails at " + triple_tag(i, j, k) + ": " + render(jac);
            }
    return "";
}

/// First generator of `sub` outside `super`, rendered; empty when contained.
inline std::string inclusion_witness(const Subspace& sub, const Subspace& super) {
    for (const auto& v : sub.basis)
        if (!super.contains(v)) return render(v) + " escapes";
    return "";
}

/// First basis tuple whose (k+1)-fold left-nested product survives.
inline std::string nested_product_witness(const Algebra& a, std::size_t k) {
    const std::size_t n = a.dim;
    std::vector<std::size_t> idx(k + 1, 0);
    while (true) {
        Vec prod = Vec::unit(n, idx[0]);
        for (std::size_t t = 1; t <= k; ++t) prod = mul(a, prod, Vec::unit(n, idx[t]));
        if (!prod.is_zero()) {
            std::string tag = "(";
            for (std::size_t t = 0; t <= k; ++t)
                tag += "e" + std::to_string(idx[t] + 1) + (t == k ? ")" : ",");
            return "left-nested product at " + tag + " = " + render(prod);
        }
        std::size_t pos = k + 1;
        while (pos > 0) {
            if (++idx[pos - 1] < n) break;
            idx[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) return "";
    }
}

} // namespace detail

/// Consequences forced on every nearly associative algebra:
///  (i)  Asso(x,y,z) = 2[y, zx]
///  (ii) the three-condition characterization (A⁻ Lie; Asso⁺(x,y,z) = [y,[z,x]];
///       the mixed four-term identity)
///  (iii) flexible ⟺ A•A ⊆ Z(A⁻), both sides computed independently.
inline CheckReport check_na_consequences(const Algebra& a) {
    auto [na, w] = check_identity(a, IdentityKind::nearly_associative);
    if (!na) throw not_nearly_associative(w->describe());

    const Algebra m = minus_algebra(a), p = plus_algebra(a);
    const std::size_t n = a.dim;
    CheckReport report;

    bool asso2 = true;
    std::string asso2_w;
    for (std::size_t i = 0; i < n && asso2; ++i)
        for (std::size_t j = 0; j < n && asso2; ++j)
            for (std::size_t k = 0; k < n && asso2; ++k) {
                const Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                const Vec lhs = associator(a, x, y, z);
                const Vec rhs = Rat(2) * mul(m, y, mul(a, z, x));
                if (lhs != rhs) {
                    asso2 = false;
                    asso2_w = "at (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" +
                              std::to_string(k + 1) + "): " + render(lhs) + " vs " + render(rhs);
                }
            }
    report.add("asso=2[y,zx]", asso2, asso2_w);

    report.add("char-1:minus-is-lie", is_lie_admissible(a));

    bool plus_asso = true;
    std::string plus_asso_w;
    for (std::size_t i = 0; i < n && plus_asso; ++i)
        for (std::size_t j = 0; j < n && plus_asso; ++j)
            for (std::size_t k = 0; k < n && plus_asso; ++k) {
                const Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                const Vec lhs = associator(p, x, y, z);
                const Vec rhs = mul(m, y, mul(m, z, x));
                if (lhs != rhs) {
                    plus_asso = false;
                    plus_asso_w = "at (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                  ",e" + std::to_string(k + 1) + ")";
                }
            }
    report.add("char-2:asso+=[y,[z,x]]", plus_asso, plus_asso_w);

    bool mixed = true;
    std::string mixed_w;
    for (std::size_t i = 0; i < n && mixed; ++i)
        for (std::size_t j = 0; j < n && mixed; ++j)
            for (std::size_t k = 0; k < n && mixed; ++k) {
                const Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                Vec v = mul(p, mul(m, x, y), z) + mul(m, mul(p, x, y), z) + mul(p, mul(m, x, z), y) +
                        mul(m, mul(p, x, z), y);
                if (!v.is_zero()) {
                    mixed = false;
                    mixed_w = "at (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" +
                              std::to_string(k + 1) + "): " + render(v);
                }
            }
    report.add("char-3:mixed-identity", mixed, mixed_w);

    const bool flex = holds(a, IdentityKind::flexible);
    const Subspace center = lie_center(m);
    const Subspace bullet = square(p);
    const bool bullet_central = center.contains(bullet);
    report.add("flexible", flex, flex ? "" : detail::identity_witness(a, IdentityKind::flexible));
    report.add("plus-square-in-center", bullet_central,
               bullet_central ? "" : detail::inclusion_witness(bullet, center));
    report.add("flexible-iff-center", flex == bullet_central,
               flex == bullet_central ? "" : "equivalence broken");
    return report;
}

/// Structural facts about a NAL algebra, each verified by independent exact
/// computation. Also evaluates the associative ⟺ A⁺ commutative-associative
/// ⟺ A⁻ 2-nilpotent equivalence chain.
inline CheckReport check_nal_structure(const Algebra& a) {
    auto [isnal, w] = check_identity(a, IdentityKind::nal);
    if (!isnal) throw not_nal(w->describe());

    const Algebra m = minus_algebra(a), p = plus_algebra(a);
    const std::size_t n = a.dim;
    CheckReport report;

    const Subspace bullet = square(p);
    const Subspace commutators = square(m);
    const Subspace center = lie_center(m);
    const Subspace ann_plus = annihilator(p);
    report.add("plus-square-in-lie-center", center.contains(bullet),
               detail::inclusion_witness(bullet, center));
    report.add("commutators-annihilate-plus", ann_plus.contains(commutators),
               detail::inclusion_witness(commutators, ann_plus));

    bool half_ids = true;
    std::string half_w;
    for (std::size_t i = 0; i < n && half_ids; ++i)
        for (std::size_t j = 0; j < n && half_ids; ++j)
            for (std::size_t k = 0; k < n && half_ids; ++k) {
                const Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                const Vec ap = associator(p, x, y, z);
                const Vec full = associator(a, x, y, z);
                const Vec bracket = mul(m, y, mul(a, z, x));
                if (ap != half() * full || ap != bracket) {
                    half_ids = false;
                    half_w = "at (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" +
                             std::to_string(k + 1) + ")";
                }
            }
    report.add("asso+=half-asso=[y,zx]", half_ids, half_w);

    // (A•A, •) is an associative subalgebra of A⁺.
    const bool closed = bullet.contains(subspace_product(p, bullet, bullet));
    bool sub_assoc = true;
    for (const auto& u : bullet.basis)
        for (const auto& v : bullet.basis)
            for (const auto& t : bullet.basis)
                if (!associator(p, u, v, t).is_zero()) sub_assoc = false;
    report.add("plus-square-closed", closed);
    report.add("plus-square-associative", sub_assoc);

    report.add("flexible", holds(a, IdentityKind::flexible),
               detail::identity_witness(a, IdentityKind::flexible));
    report.add("quasi-commutative", holds(a, IdentityKind::quasi_commutative),
               detail::identity_witness(a, IdentityKind::quasi_commutative));
    report.add("minus-3-nilpotent", is_nilpotent_of_class(m, 3),
               is_nilpotent_of_class(m, 3) ? "" : detail::nested_product_witness(m, 3));

    const bool assoc = holds(a, IdentityKind::associative);
    const bool plus_comm_assoc = is_commutative(p) && holds(p, IdentityKind::associative);
    const bool minus_2nil = is_nilpotent_of_class(m, 2);
    report.add("associative", assoc, detail::identity_witness(a, IdentityKind::associative));
    report.add("plus-commutative-associative", plus_comm_assoc,
               plus_comm_assoc ? "" : detail::identity_witness(p, IdentityKind::associative));
    report.add("minus-2-nilpotent", minus_2nil,
               minus_2nil ? "" : detail::nested_product_witness(m, 2));
    report.add("equivalence-chain", assoc == plus_comm_assoc && plus_comm_assoc == minus_2nil,
               assoc == plus_comm_assoc && plus_comm_assoc == minus_2nil ? "" : "chain broken");
    return report;
}

/// Four-condition characterization of NAL algebras, evaluated independently
/// of the defining identities. The conjunction must agree with the direct
/// NAL check; disagreement is an internal contradiction.
inline std::pair<bool, CheckReport> characterize_nal(const Algebra& a) {
    const Algebra m = minus_algebra(a), p = plus_algebra(a);
    const std::size_t n = a.dim;
    CheckReport report;

    const Subspace center = lie_center(m);
    const Subspace ann_plus = annihilator(p);
    const Subspace bullet = square(p);
    const Subspace commutators = square(m);
    report.add("cond-1:minus-is-lie", is_lie_admissible(a), detail::jacobi_witness(m));
    report.add("cond-2:plus-square-in-lie-center", center.contains(bullet),
               detail::inclusion_witness(bullet, center));
    report.add("cond-3:commutators-annihilate-plus", ann_plus.contains(commutators),
               detail::inclusion_witness(commutators, ann_plus));

    bool cond4 = true;
    std::string cond4_w;
    for (std::size_t i = 0; i < n && cond4; ++i)
        for (std::size_t j = 0; j < n && cond4; ++j)
            for (std::size_t k = 0; k < n && cond4; ++k) {
                const Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                if (associator(p, x, y, z) != mul(m, y, mul(a, z, x))) {
                    cond4 = false;
                    cond4_w = "at (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" +
                              std::to_string(k + 1) + ")";
                }
            }
    report.add("cond-4:asso+=[y,zx]", cond4, cond4_w);

    const bool conjunction = report.all_pass();
    const bool direct = holds(a, IdentityKind::nal);
    if (conjunction != direct)
        throw internal_contradiction("four-condition characterization disagrees with NAL identity on " +
                                     (a.label.empty() ? std::string("input") : a.label));
    return {conjunction, report};
}

// ---------------------------------------------------------------------------
// Central extension decomposition of A⁻ for a NAL algebra.
// ---------------------------------------------------------------------------

struct CentralExtension {
    Subspace commutant;  // S = A•A, central in A⁻
    Subspace complement; // g with A⁻ = g ⊕ S
    Tensor3 bracket;     // [g_i, g_j]_g = Σ bracket(i,j,k) g_k
    std::vector<std::vector<Vec>> cocycle; // ω(g_i, g_j) ∈ S, ambient coordinates
};

inline CentralExtension central_extension_decompose(const Algebra& a) {
    auto [isnal, w] = check_identity(a, IdentityKind::nal);
    if (!isnal) throw not_nal(w->describe());

    const Algebra m = minus_algebra(a), p = plus_algebra(a);
    const std::size_t n = a.dim;
    CentralExtension out;
    out.commutant = square(p);
    out.complement = extend_to_complement(Subspace::zero(n), out.commutant);
    const std::size_t gdim = out.complement.dim();
    if (gdim + out.commutant.dim() != n)
        throw internal_contradiction("complement construction failed");

    // Coordinates in the g ⊕ S basis: solve via the stacked basis matrix.
    Mat basis(n, n);
    for (std::size_t t = 0; t < gdim; ++t)
        for (std::size_t r = 0; r < n; ++r) basis.at(r, t) = out.complement.basis[t][r];
    for (std::size_t t = 0; t < out.commutant.dim(); ++t)
        for (std::size_t r = 0; r < n; ++r) basis.at(r, gdim + t) = out.commutant.basis[t][r];
    const Mat coords = inverse(basis);

    out.bracket = Tensor3(gdim);
    out.cocycle.assign(gdim, std::vector<Vec>(gdim, Vec(n)));
    for (std::size_t i = 0; i < gdim; ++i)
        for (std::size_t j = 0; j < gdim; ++j) {
            const Vec br = mul(m, out.complement.basis[i], out.complement.basis[j]);
            const Vec co = coords * br;
            Vec omega(n);
            for (std::size_t t = 0; t < gdim; ++t) out.bracket.at(i, j, t) = co[t];
            for (std::size_t t = 0; t < out.commutant.dim(); ++t)
                omega = omega + co[gdim + t] * out.commutant.basis[t];
            out.cocycle[i][j] = std::move(omega);
        }

    // The quotient bracket must be a Lie bracket and ω a 2-cocycle.
    Algebra g(gdim);
    g.c = out.bracket;
    if (!is_anticommutative(g)) throw internal_contradiction("quotient bracket not anticommutative");
    for (std::size_t i = 0; i < gdim; ++i)
        for (std::size_t j = 0; j < gdim; ++j) {
            if (!(out.cocycle[i][j] + out.cocycle[j][i]).is_zero())
                throw internal_contradiction("cocycle not alternating");
        }
    auto omega_of = [&](const Vec& gx, const Vec& gy) {
        // bilinear extension of ω to g coordinates
        Vec r(n);
        for (std::size_t i = 0; i < gdim; ++i)
            for (std::size_t j = 0; j < gdim; ++j)
                if (!gx[i].is_zero() && !gy[j].is_zero()) r = r + (gx[i] * gy[j]) * out.cocycle[i][j];
        return r;
    };
    for (std::size_t i = 0; i < gdim; ++i)
        for (std::size_t j = 0; j < gdim; ++j)
            for (std::size_t k = 0; k < gdim; ++k) {
                const Vec x = Vec::unit(gdim, i), y = Vec::unit(gdim, j), z = Vec::unit(gdim, k);
                Vec jac = mul(g, x, mul(g, y, z)) + mul(g, y, mul(g, z, x)) + mul(g, z, mul(g, x, y));
                if (!jac.is_zero()) throw internal_contradiction("quotient bracket fails Jacobi");
                Vec coc = omega_of(mul(g, x, y), z) + omega_of(mul(g, y, z), x) + omega_of(mul(g, z, x), y);
                if (!coc.is_zero()) throw internal_contradiction("cocycle identity fails");
            }
    return out;
}

} // namespace nalab

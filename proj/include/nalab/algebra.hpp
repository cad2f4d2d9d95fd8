#pragma once

#include <string>
#include <vector>

#include "nalab/linalg.hpp"

namespace nalab {

/// Finite-dimensional algebra given by structure constants.
///
/// Convention (used everywhere in this library, never restated):
///   e_i · e_j = Σ_k  c(i,j,k) e_k
struct Algebra {
    std::size_t dim = 0;
    Tensor3 c;
    std::string label;

    Algebra() = default;
    explicit Algebra(std::size_t n, std::string name = "") : dim(n), c(n), label(std::move(name)) {}

    Rat& cc(std::size_t i, std::size_t j, std::size_t k) { return c.at(i, j, k); }
    const Rat& cc(std::size_t i, std::size_t j, std::size_t k) const { return c.at(i, j, k); }
};

inline Vec mul_basis(const Algebra& a, std::size_t i, std::size_t j) {
    Vec r(a.dim);
    for (std::size_t k = 0; k < a.dim; ++k) r[k] = a.cc(i, j, k);
    return r;
}

inline Vec mul(const Algebra& a, const Vec& x, const Vec& y) {
    if (x.dim() != a.dim || y.dim() != a.dim) throw dimension_mismatch("mul");
    Vec r(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (y[j].is_zero()) continue;
            const Rat f = x[i] * y[j];
            for (std::size_t k = 0; k < a.dim; ++k) {
                if (!a.cc(i, j, k).is_zero()) r[k] += f * a.cc(i, j, k);
            }
        }
    }
    return r;
}

/// Matrix of y ↦ x·y.
inline Mat left_op(const Algebra& a, const Vec& x) {
    if (x.dim() != a.dim) throw dimension_mismatch("left_op");
    Mat m(a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                if (!a.cc(i, j, k).is_zero()) m.at(k, j) += x[i] * a.cc(i, j, k);
    }
    return m;
}

/// Matrix of y ↦ y·x.
inline Mat right_op(const Algebra& a, const Vec& x) {
    if (x.dim() != a.dim) throw dimension_mismatch("right_op");
    Mat m(a.dim, a.dim);
    for (std::size_t j = 0; j < a.dim; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t k = 0; k < a.dim; ++k)
                if (!a.cc(i, j, k).is_zero()) m.at(k, i) += x[j] * a.cc(i, j, k);
    }
    return m;
}

inline Mat left_op_basis(const Algebra& a, std::size_t i) { return left_op(a, Vec::unit(a.dim, i)); }
inline Mat right_op_basis(const Algebra& a, std::size_t i) { return right_op(a, Vec::unit(a.dim, i)); }

/// ad_x = L_x − R_x.
inline Mat ad_op(const Algebra& a, const Vec& x) { return left_op(a, x) - right_op(a, x); }

/// Asso(x,y,z) = (xy)z − x(yz).
inline Vec associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z) {
    return mul(a, mul(a, x, y), z) - mul(a, x, mul(a, y, z));
}

/// Commutator algebra A⁻ with [x,y] = ½(xy − yx).
inline Algebra minus_algebra(const Algebra& a) {
    Algebra m(a.dim, a.label.empty() ? "" : a.label + "-");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                m.cc(i, j, k) = half() * (a.cc(i, j, k) - a.cc(j, i, k));
    return m;
}

/// Anticommutator algebra A⁺ with x•y = ½(xy + yx).
inline Algebra plus_algebra(const Algebra& a) {
    Algebra m(a.dim, a.label.empty() ? "" : a.label + "+");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                m.cc(i, j, k) = half() * (a.cc(i, j, k) + a.cc(j, i, k));
    return m;
}

inline Algebra opposite(const Algebra& a) {
    Algebra m(a.dim, a.label.empty() ? "" : a.label + "^op");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) m.cc(i, j, k) = a.cc(j, i, k);
    return m;
}

inline bool is_anticommutative(const Algebra& a) {
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                if (a.cc(i, j, k) != -a.cc(j, i, k)) return false;
    return true;
}

inline bool is_commutative(const Algebra& a) {
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                if (a.cc(i, j, k) != a.cc(j, i, k)) return false;
    return true;
}

/// ann(A) = {x : xy = yx = 0 for all y}: kernel of the stacked left/right
/// multiplication constraints on basis elements.
inline Subspace annihilator(const Algebra& a) {
    const std::size_t n = a.dim;
    Mat m(2 * n * n, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k, ++row)
            for (std::size_t i = 0; i < n; ++i) m.at(row, i) = a.cc(i, j, k); // x·e_j, k-th coord
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k, ++row)
            for (std::size_t i = 0; i < n; ++i) m.at(row, i) = a.cc(j, i, k); // e_j·x
    return kernel(m);
}

/// Z(g) for an anticommutative algebra (the caller passes A⁻).
inline Subspace lie_center(const Algebra& g) {
    if (!is_anticommutative(g)) throw not_anticommutative("lie_center expects A⁻");
    const std::size_t n = g.dim;
    Mat m(n * n, n);
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k, ++row)
            for (std::size_t i = 0; i < n; ++i) m.at(row, i) = g.cc(i, j, k);
    return kernel(m);
}

/// Span of all products u_s · v_t of basis vectors of the two subspaces.
inline Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
    if (u.ambient_dim != a.dim || v.ambient_dim != a.dim) throw dimension_mismatch("subspace_product");
    std::vector<Vec> prods;
    for (const auto& x : u.basis)
        for (const auto& y : v.basis) prods.push_back(mul(a, x, y));
    return Subspace::span(a.dim, prods);
}

inline Subspace square(const Algebra& a) {
    const Subspace f = Subspace::full(a.dim);
    return subspace_product(a, f, f);
}

/// Derived series A ⊇ A⁽¹⁾ ⊇ A⁽²⁾ ⊇ …, A⁽¹⁾ = A², A⁽ⁱ⁺¹⁾ = (A⁽ⁱ⁾)².
inline bool is_solvable(const Algebra& a) {
    Subspace s = Subspace::full(a.dim);
    while (true) {
        Subspace next = subspace_product(a, s, s);
        if (next.dim() == 0) return true;
        if (next.dim() == s.dim()) return false; // stabilized above zero
        s = next;
    }
}

/// k-nilpotent: every (k+1)-fold left-nested product vanishes.
inline bool is_nilpotent_of_class(const Algebra& a, std::size_t k) {
    Subspace nested = Subspace::full(a.dim);
    for (std::size_t depth = 1; depth <= k; ++depth) {
        nested = subspace_product(a, nested, Subspace::full(a.dim));
        if (nested.dim() == 0) return true;
    }
    return nested.dim() == 0;
}

} // namespace nalab

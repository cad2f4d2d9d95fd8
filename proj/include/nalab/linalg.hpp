#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "nalab/errors.hpp"
#include "nalab/rational.hpp"

namespace nalab {

// ---------------------------------------------------------------------------
// Dense exact-rational containers. All indices are 0-based in code; files and
// rendered reports are 1-based.
// ---------------------------------------------------------------------------

struct Vec {
    std::vector<Rat> e;

    Vec() = default;
    explicit Vec(std::size_t n) : e(n) {}
    Vec(std::initializer_list<Rat> init) : e(init) {}

    std::size_t dim() const { return e.size(); }
    Rat& operator[](std::size_t i) { return e[i]; }
    const Rat& operator[](std::size_t i) const { return e[i]; }

    bool is_zero() const {
        for (const auto& x : e)
            if (!x.is_zero()) return false;
        return true;
    }

    static Vec unit(std::size_t n, std::size_t i) {
        Vec v(n);
        v[i] = Rat(1);
        return v;
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.e == b.e; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
};

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw dimension_mismatch("vec + vec");
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw dimension_mismatch("vec - vec");
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(const Rat& c, const Vec& v) {
    Vec r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = c * v[i];
    return r;
}

inline Vec operator-(const Vec& v) { return Rat(-1) * v; }

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw dimension_mismatch("dot");
    Rat s;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

inline Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw dimension_mismatch("mat + mat");
    Mat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

inline Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw dimension_mismatch("mat - mat");
    Mat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

inline Mat operator*(const Rat& c, const Mat& m) {
    Mat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = c * m.a[i];
    return r;
}

inline Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw dimension_mismatch("mat * mat");
    Mat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

inline Vec operator*(const Mat& m, const Vec& v) {
    if (m.cols != v.dim()) throw dimension_mismatch("mat * vec");
    Vec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
    return r;
}

inline Mat transpose(const Mat& m) {
    Mat r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

/// Element of A⊗A: Σ entries(i,j) e_i⊗e_j.
struct Tensor2 {
    std::size_t n = 0;
    std::vector<Rat> a;

    Tensor2() = default;
    explicit Tensor2(std::size_t dim) : n(dim), a(dim * dim) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_skew() const {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (at(i, j) != -at(j, i)) return false;
        return true;
    }

    friend bool operator==(const Tensor2& x, const Tensor2& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator!=(const Tensor2& x, const Tensor2& y) { return !(x == y); }
};

inline Tensor2 operator+(const Tensor2& x, const Tensor2& y) {
    if (x.n != y.n) throw dimension_mismatch("tensor2 + tensor2");
    Tensor2 r(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

inline Tensor2 operator-(const Tensor2& x, const Tensor2& y) {
    if (x.n != y.n) throw dimension_mismatch("tensor2 - tensor2");
    Tensor2 r(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

inline Tensor2 operator*(const Rat& c, const Tensor2& t) {
    Tensor2 r(t.n);
    for (std::size_t i = 0; i < t.a.size(); ++i) r.a[i] = c * t.a[i];
    return r;
}

/// Element of A⊗A⊗A: Σ entries(i,j,k) e_i⊗e_j⊗e_k.
struct Tensor3 {
    std::size_t n = 0;
    std::vector<Rat> a;

    Tensor3() = default;
    explicit Tensor3(std::size_t dim) : n(dim), a(dim * dim * dim) {}

    Rat& at(std::size_t i, std::size_t j, std::size_t k) { return a[(i * n + j) * n + k]; }
    const Rat& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a[(i * n + j) * n + k];
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Tensor3& x, const Tensor3& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator!=(const Tensor3& x, const Tensor3& y) { return !(x == y); }
};

inline Tensor3 operator+(const Tensor3& x, const Tensor3& y) {
    if (x.n != y.n) throw dimension_mismatch("tensor3 + tensor3");
    Tensor3 r(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

inline Tensor3 operator-(const Tensor3& x, const Tensor3& y) {
    if (x.n != y.n) throw dimension_mismatch("tensor3 - tensor3");
    Tensor3 r(x.n);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

inline Tensor3 operator*(const Rat& c, const Tensor3& t) {
    Tensor3 r(t.n);
    for (std::size_t i = 0; i < t.a.size(); ++i) r.a[i] = c * t.a[i];
    return r;
}

// Structural tensor maps. τ swaps the two legs of A⊗A; ξ is the 3-cycle
// x⊗y⊗z ↦ y⊗z⊗x; twist12/twist23 swap adjacent legs of A⊗A⊗A.

inline Tensor2 twist(const Tensor2& t) {
    Tensor2 r(t.n);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j) r.at(i, j) = t.at(j, i);
    return r;
}

/// ξ(e_a⊗e_b⊗e_c) = e_b⊗e_c⊗e_a, so entries'(i,j,k) = entries(k,i,j).
inline Tensor3 cycle(const Tensor3& t) {
    Tensor3 r(t.n);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k) r.at(i, j, k) = t.at(k, i, j);
    return r;
}

inline Tensor3 twist12(const Tensor3& t) {
    Tensor3 r(t.n);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k) r.at(i, j, k) = t.at(j, i, k);
    return r;
}

inline Tensor3 twist23(const Tensor3& t) {
    Tensor3 r(t.n);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k) r.at(i, j, k) = t.at(i, k, j);
    return r;
}

// ---------------------------------------------------------------------------
// Exact Gaussian elimination. Pivot rule: first row with a nonzero entry in
// the current column, rows reordered deterministically, so echelon bases are
// reproducible across runs.
// ---------------------------------------------------------------------------

struct Rref {
    Mat m;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

inline Rref rref(Mat m) {
    Rref out;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
        std::size_t piv = lead;
        while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        const Rat inv = Rat(1) / m.at(lead, col);
        for (std::size_t j = 0; j < m.cols; ++j) m.at(lead, j) *= inv;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            const Rat f = m.at(r, col);
            for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) -= f * m.at(lead, j);
        }
        out.pivot_cols.push_back(col);
        ++lead;
    }
    out.m = std::move(m);
    out.rank = out.pivot_cols.size();
    return out;
}

inline std::size_t rank(const Mat& m) { return rref(m).rank; }

inline bool is_invertible(const Mat& m) { return m.rows == m.cols && rank(m) == m.rows; }

inline Mat inverse(const Mat& m) {
    if (m.rows != m.cols) throw dimension_mismatch("inverse of non-square matrix");
    const std::size_t n = m.rows;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    Rref r = rref(std::move(aug));
    if (r.rank < n || r.pivot_cols[n - 1] != n - 1) throw not_invertible("matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
    return inv;
}

/// Row space of linearly independent vectors stored in reduced row-echelon
/// form; RREF makes equality of subspaces a row-by-row comparison.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Vec> basis; // RREF rows, pivots strictly increasing

    std::size_t dim() const { return basis.size(); }

    static Subspace zero(std::size_t n) {
        Subspace s;
        s.ambient_dim = n;
        return s;
    }

    static Subspace full(std::size_t n) {
        Subspace s;
        s.ambient_dim = n;
        for (std::size_t i = 0; i < n; ++i) s.basis.push_back(Vec::unit(n, i));
        return s;
    }

    static Subspace span(std::size_t n, const std::vector<Vec>& vectors) {
        Mat m(vectors.size(), n);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].dim() != n) throw dimension_mismatch("span vector");
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vectors[i][j];
        }
        Rref r = rref(std::move(m));
        Subspace s;
        s.ambient_dim = n;
        for (std::size_t i = 0; i < r.rank; ++i) {
            Vec v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = r.m.at(i, j);
            s.basis.push_back(std::move(v));
        }
        return s;
    }

    bool contains(const Vec& v) const {
        if (v.dim() != ambient_dim) throw dimension_mismatch("subspace membership");
        // Reduce v against the echelon basis; membership iff the residue is 0.
        Vec w = v;
        for (const auto& b : basis) {
            std::size_t p = 0;
            while (p < ambient_dim && b[p].is_zero()) ++p;
            if (p < ambient_dim && !w[p].is_zero()) w = w - (w[p] * b);
        }
        return w.is_zero();
    }

    bool contains(const Subspace& other) const {
        for (const auto& b : other.basis)
            if (!contains(b)) return false;
        return true;
    }

    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient_dim == y.ambient_dim && x.basis == y.basis;
    }
};

inline Subspace sum(const Subspace& x, const Subspace& y) {
    if (x.ambient_dim != y.ambient_dim) throw dimension_mismatch("subspace sum");
    std::vector<Vec> all = x.basis;
    all.insert(all.end(), y.basis.begin(), y.basis.end());
    return Subspace::span(x.ambient_dim, all);
}

inline bool trivial_intersection(const Subspace& x, const Subspace& y) {
    return sum(x, y).dim() == x.dim() + y.dim();
}

/// Null space {v : m·v = 0}, returned in RREF. dim(kernel) + rank = cols.
inline Subspace kernel(const Mat& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> gens;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols);
        v[free] = Rat(1);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.m.at(i, free);
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.cols, gens);
}

/// Deterministic complement: greedily extend `inside` (already disjoint from
/// `avoid`) by standard basis vectors until inside ⊕ avoid covers everything.
inline Subspace extend_to_complement(const Subspace& inside, const Subspace& avoid) {
    if (inside.ambient_dim != avoid.ambient_dim) throw dimension_mismatch("complement");
    const std::size_t n = inside.ambient_dim;
    std::vector<Vec> chosen = inside.basis;
    Subspace covered = sum(inside, avoid);
    for (std::size_t i = 0; i < n && covered.dim() < n; ++i) {
        Vec cand = Vec::unit(n, i);
        if (covered.contains(cand)) continue;
        chosen.push_back(cand);
        covered = sum(covered, Subspace::span(n, {cand}));
    }
    return Subspace::span(n, chosen);
}

} // namespace nalab

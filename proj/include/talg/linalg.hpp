#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "talg/cyclotomic.hpp"
#include "talg/errors.hpp"

namespace talg {

/// Dense exact vector over one scalar field.
struct Vec {
    ScalarField field;
    std::vector<CycScalar> entries;

    Vec() = default;
    Vec(ScalarField f, std::size_t dim) : field(f), entries(dim, CycScalar::zero(f)) {}

    std::size_t dim() const { return entries.size(); }
    CycScalar& operator[](std::size_t i) { return entries[i]; }
    const CycScalar& operator[](std::size_t i) const { return entries[i]; }

    bool is_zero() const {
        for (const auto& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) throw DimensionError("vector dimension mismatch");
        Vec r = a;
        for (std::size_t i = 0; i < r.dim(); ++i) r[i] += b[i];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        if (a.dim() != b.dim()) throw DimensionError("vector dimension mismatch");
        Vec r = a;
        for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= b[i];
        return r;
    }
    friend Vec operator*(const CycScalar& c, const Vec& v) {
        Vec r = v;
        for (auto& e : r.entries) e *= c;
        return r;
    }
    Vec& operator+=(const Vec& b) { return *this = *this + b; }
    Vec& operator-=(const Vec& b) { return *this = *this - b; }

    friend bool operator==(const Vec& a, const Vec& b) {
        return a.field == b.field && a.entries == b.entries;
    }

    static Vec unit(ScalarField f, std::size_t dim, std::size_t i) {
        Vec v(f, dim);
        v[i] = CycScalar::one(f);
        return v;
    }
};

/// Dense exact matrix, row-major.
struct Mat {
    ScalarField field;
    std::size_t rows = 0, cols = 0;
    std::vector<CycScalar> entries;

    Mat() = default;
    Mat(ScalarField f, std::size_t r, std::size_t c)
        : field(f), rows(r), cols(c), entries(r * c, CycScalar::zero(f)) {}

    CycScalar& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const CycScalar& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static Mat identity(ScalarField f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycScalar::one(f);
        return m;
    }

    Vec row(std::size_t i) const {
        Vec v(field, cols);
        for (std::size_t j = 0; j < cols; ++j) v[j] = at(i, j);
        return v;
    }
    Vec col(std::size_t j) const {
        Vec v(field, rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    Mat transpose() const {
        Mat t(field, cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Vec apply(const Vec& v) const {
        if (v.dim() != cols) throw DimensionError("matrix-vector dimension mismatch");
        Vec r(field, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols != b.rows) throw DimensionError("matrix product dimension mismatch");
        Mat r(a.field, a.rows, b.cols);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t k = 0; k < a.cols; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols; ++j)
                    if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend Mat operator+(const Mat& a, const Mat& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw DimensionError("matrix sum shape");
        Mat r = a;
        for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw DimensionError("matrix diff shape");
        Mat r = a;
        for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= b.entries[i];
        return r;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.field == b.field && a.rows == b.rows && a.cols == b.cols &&
               a.entries == b.entries;
    }

    bool is_zero() const {
        for (const auto& e : entries)
            if (!e.is_zero()) return false;
        return true;
    }
};

struct RrefResult {
    Mat r;
    std::vector<std::size_t> pivots; // pivot column per pivot row, strictly increasing
};

/// Reduced row echelon form. Pivot choice is deterministic: first nonzero
/// entry scanning by column, then by row (exact arithmetic needs no
/// magnitude pivoting).
inline RrefResult rref(const Mat& m) {
    RrefResult out{m, {}};
    Mat& a = out.r;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t p = row;
        while (p < a.rows && a.at(p, col).is_zero()) ++p;
        if (p == a.rows) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(row, j));
        CycScalar inv = a.at(row, col).inverse();
        for (std::size_t j = col; j < a.cols; ++j)
            if (!a.at(row, j).is_zero()) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            CycScalar f = a.at(i, col);
            for (std::size_t j = col; j < a.cols; ++j)
                if (!a.at(row, j).is_zero()) a.at(i, j) -= f * a.at(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

inline std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

/// Basis of {v : m v = 0}; one vector per free column, in ascending free
/// column order, with the free coordinate set to 1.
inline std::vector<Vec> nullspace(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.field, m.cols);
        v[f] = CycScalar::one(m.field);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.r.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// A quotient of an ambient coordinate space by the span of relation vectors.
/// Representatives are the non-pivot ambient coordinates; `projection` maps
/// ambient coordinates onto quotient coordinates, annihilates every relation,
/// and restricts to the identity on representatives.
struct QuotientBasis {
    std::size_t ambient_dim = 0;
    std::size_t relation_rank = 0;
    std::vector<std::size_t> representative_indices;
    Mat projection;    // dim() x ambient_dim
    Mat relation_rref; // canonical basis of the relation span (rank rows)

    std::size_t dim() const { return representative_indices.size(); }

    Vec project(const Vec& ambient) const { return projection.apply(ambient); }

    /// Section of the projection: quotient coordinates -> ambient
    /// representative vector.
    Vec embed(const Vec& quotient) const {
        Vec v(projection.field, ambient_dim);
        for (std::size_t k = 0; k < representative_indices.size(); ++k)
            v[representative_indices[k]] = quotient[k];
        return v;
    }
};

inline QuotientBasis quotient_basis(ScalarField field, std::size_t ambient_dim,
                                    const std::vector<Vec>& relations) {
    for (const auto& r : relations)
        if (r.dim() != ambient_dim) throw DimensionError("relation has wrong length");
    Mat rel(field, relations.size(), ambient_dim);
    for (std::size_t i = 0; i < relations.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) rel.at(i, j) = relations[i][j];
    RrefResult rr = rref(rel);

    QuotientBasis qb;
    qb.ambient_dim = ambient_dim;
    qb.relation_rank = rr.pivots.size();
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j]) qb.representative_indices.push_back(j);

    const std::size_t q = qb.representative_indices.size();
    qb.projection = Mat(field, q, ambient_dim);
    std::vector<std::size_t> rep_pos(ambient_dim, 0);
    for (std::size_t k = 0; k < q; ++k) {
        rep_pos[qb.representative_indices[k]] = k;
        qb.projection.at(k, qb.representative_indices[k]) = CycScalar::one(field);
    }
    // pivot coordinate p_i maps to -sum_f rref[i][f] * class(e_f)
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (std::size_t k = 0; k < q; ++k) {
            const CycScalar& c = rr.r.at(i, qb.representative_indices[k]);
            if (!c.is_zero()) qb.projection.at(k, rr.pivots[i]) = -c;
        }

    qb.relation_rref = Mat(field, rr.pivots.size(), ambient_dim);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) qb.relation_rref.at(i, j) = rr.r.at(i, j);
    return qb;
}

/// Outcome of an exact linear solve: either one solution (least-index free
/// variables set to zero) or the first inconsistent pivot row.
struct SolveResult {
    std::optional<Vec> solution;
    std::size_t inconsistent_row = 0; // meaningful only when !solution

    bool ok() const { return solution.has_value(); }
};

inline SolveResult solve_linear(const Mat& m, const Vec& rhs) {
    if (rhs.dim() != m.rows) throw DimensionError("rhs length must equal row count");
    Mat aug(m.field, m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = rhs[i];
    }
    RrefResult rr = rref(aug);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        if (rr.pivots[i] == m.cols) return SolveResult{std::nullopt, i};
    SolveResult out;
    Vec x(m.field, m.cols);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.r.at(i, m.cols);
    out.solution = std::move(x);
    return out;
}

} // namespace talg

#pragma once

// Dense square matrices over exact fields. Vectors are rows and act on matrices from
// the left: v |-> v * M, so row i of a linear map holds the image of basis vector i.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "albert/errors.hpp"
#include "albert/field.hpp"

namespace albert {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(FieldDescriptor f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

inline Vector unit_vector(FieldDescriptor f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

inline bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

inline Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vector operator*(const Scalar& s, const Vector& v) {
    Vector r = v;
    for (auto& x : r) x = s * x;
    return r;
}

inline std::string to_string(std::span<const Scalar> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

class Matrix {
public:
    Matrix() = default;

    /// Zero matrix.
    Matrix(FieldDescriptor f, std::size_t n) : field_(f), n_(n), a_(n * n, Scalar::zero(f)) {}

    static Matrix identity(FieldDescriptor f, std::size_t n) {
        Matrix m(f, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix scalar(const Scalar& s, std::size_t n) {
        Matrix m(s.field(), n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = s;
        return m;
    }

    static Matrix from_rows(FieldDescriptor f, const std::vector<Vector>& rows) {
        Matrix m(f, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix rows must be square");
            for (std::size_t j = 0; j < rows.size(); ++j) {
                if (rows[i][j].field() != f) throw FieldMismatch();
                m.at(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static Matrix from_ints(FieldDescriptor f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        Matrix m(f, rows.size());
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != rows.size()) throw DimensionMismatch("matrix rows must be square");
            std::size_t j = 0;
            for (auto v : row) m.at(i, j++) = Scalar(f, v);
            ++i;
        }
        return m;
    }

    std::size_t size() const { return n_; }
    const FieldDescriptor& field() const { return field_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return a_.at(i * n_ + j); }

    Vector row(std::size_t i) const { return Vector(a_.begin() + i * n_, a_.begin() + (i + 1) * n_); }

    /// Row-major entries, n*n of them.
    std::span<const Scalar> entries() const { return a_; }

    bool is_zero() const { return albert::is_zero(a_); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.a_ == b.a_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) os << ", ";
            os << "[";
            for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << (*this)(i, j);
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    FieldDescriptor field_;
    std::size_t n_ = 0;
    std::vector<Scalar> a_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

namespace detail {

inline void check_compatible(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch();
    if (a.size() != b.size()) throw DimensionMismatch("matrix sizes differ");
}

/// In-place reduction to reduced row echelon form over the first `ncols` columns.
/// Returns the pivot column of each nonzero row, in order.
inline std::vector<std::size_t> row_reduce(std::vector<Vector>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Scalar inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Scalar factor = rows[i][c];
            for (std::size_t k = c; k < rows[i].size(); ++k) rows[i][k] -= factor * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::vector<Vector> rows_of(const Matrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(m.row(i));
    return rows;
}

}  // namespace detail

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    detail::check_compatible(a, b);
    const std::size_t n = a.size();
    Matrix c(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c.at(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    detail::check_compatible(a, b);
    Matrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c.at(i, j) += b(i, j);
    return c;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    detail::check_compatible(a, b);
    Matrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c.at(i, j) -= b(i, j);
    return c;
}

inline Matrix operator*(const Scalar& s, const Matrix& m) {
    if (s.field() != m.field()) throw FieldMismatch();
    Matrix c = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) c.at(i, j) = s * m(i, j);
    return c;
}

/// Row vector times matrix.
inline Vector vec_mat(std::span<const Scalar> v, const Matrix& m) {
    if (v.size() != m.size()) throw DimensionMismatch("vector length differs from matrix size");
    Vector r = zero_vector(m.field(), m.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < m.size(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.field(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) t.at(j, i) = m(i, j);
    return t;
}

inline Scalar det(const Matrix& m) {
    auto rows = detail::rows_of(m);
    const std::size_t n = m.size();
    Scalar d = Scalar::one(m.field());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && rows[piv][c].is_zero()) ++piv;
        if (piv == n) return Scalar::zero(m.field());
        if (piv != c) {
            std::swap(rows[piv], rows[c]);
            d = -d;
        }
        d *= rows[c][c];
        const Scalar inv = rows[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (rows[i][c].is_zero()) continue;
            const Scalar factor = rows[i][c] * inv;
            for (std::size_t k = c; k < n; ++k) rows[i][k] -= factor * rows[c][k];
        }
    }
    return d;
}

/// Rank of a list of row vectors, all of length `ncols`.
inline std::size_t rank(std::vector<Vector> rows, std::size_t ncols) {
    return detail::row_reduce(rows, ncols).size();
}

inline std::size_t rank(const Matrix& m) { return rank(detail::rows_of(m), m.size()); }

inline Matrix mat_inv(const Matrix& m) {
    const std::size_t n = m.size();
    std::vector<Vector> aug;
    aug.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector r = m.row(i);
        r.resize(2 * n, Scalar::zero(m.field()));
        r[n + i] = Scalar::one(m.field());
        aug.push_back(std::move(r));
    }
    if (detail::row_reduce(aug, n).size() != n) throw Singular();
    Matrix inv(m.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug[i][n + j];
    return inv;
}

struct LinearEquation {
    Vector coeffs;
    Scalar rhs;
};

/// Full solution set of a linear system.
struct SolutionSet {
    enum class Kind { None, Unique, Affine };

    Kind kind = Kind::None;
    /// Particular solution with every free coordinate set to zero (empty when kind == None).
    Vector point;
    /// Basis of the homogeneous solution space; empty unless kind == Affine.
    std::vector<Vector> kernel;

    bool has_solution() const { return kind != Kind::None; }
};

inline SolutionSet solve(FieldDescriptor f, std::size_t unknowns, std::span<const LinearEquation> system) {
    std::vector<Vector> aug;
    aug.reserve(system.size());
    for (const auto& eq : system) {
        if (eq.coeffs.size() != unknowns) throw DimensionMismatch("equation has wrong number of coefficients");
        Vector r = eq.coeffs;
        r.push_back(eq.rhs);
        for (const auto& s : r)
            if (s.field() != f) throw FieldMismatch();
        aug.push_back(std::move(r));
    }
    const auto pivots = detail::row_reduce(aug, unknowns + 1);
    SolutionSet out;
    if (!pivots.empty() && pivots.back() == unknowns) return out;

    std::vector<bool> is_pivot(unknowns, false);
    for (auto c : pivots) is_pivot[c] = true;
    out.point = zero_vector(f, unknowns);
    for (std::size_t r = 0; r < pivots.size(); ++r) out.point[pivots[r]] = aug[r][unknowns];
    for (std::size_t free = 0; free < unknowns; ++free) {
        if (is_pivot[free]) continue;
        Vector k = unit_vector(f, unknowns, free);
        for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -aug[r][free];
        out.kernel.push_back(std::move(k));
    }
    out.kind = out.kernel.empty() ? SolutionSet::Kind::Unique : SolutionSet::Kind::Affine;
    return out;
}

/// Incrementally maintained echelon basis of a subspace of F^width.
/// Each stored row has a unit pivot and zeros in the pivot columns of earlier rows.
class EchelonBasis {
public:
    EchelonBasis(FieldDescriptor f, std::size_t width) : field_(f), width_(width) {}

    std::size_t dimension() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    /// Residue of v after elimination against the basis; zero iff v is in the span.
    Vector reduce(Vector v) const {
        if (v.size() != width_) throw DimensionMismatch("vector width");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar c = v[pivots_[r]];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < width_; ++k)
                if (!rows_[r][k].is_zero()) v[k] -= c * rows_[r][k];
        }
        return v;
    }

    bool contains(const Vector& v) const { return albert::is_zero(reduce(v)); }

    /// Adds v if it is independent of the current basis; returns whether it was added.
    bool insert(const Vector& v) {
        Vector w = reduce(v);
        std::size_t piv = 0;
        while (piv < width_ && w[piv].is_zero()) ++piv;
        if (piv == width_) return false;
        const Scalar inv = w[piv].inverse();
        for (auto& x : w) x *= inv;
        rows_.push_back(std::move(w));
        pivots_.push_back(piv);
        return true;
    }

    const std::vector<Vector>& rows() const { return rows_; }

private:
    FieldDescriptor field_;
    std::size_t width_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Deterministic invertible matrix by rejection sampling. Over F_p entries are uniform
/// residues; over the rationals they are small integers in [-3, 3].
inline Matrix random_invertible(FieldDescriptor f, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw DimensionMismatch("n must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist =
        f.is_prime_field() ? std::uniform_int_distribution<std::int64_t>(0, f.modulus() - 1)
                           : std::uniform_int_distribution<std::int64_t>(-3, 3);
    for (;;) {
        Matrix m(f, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(f, dist(rng));
        if (!det(m).is_zero()) return m;
    }
}

}  // namespace albert

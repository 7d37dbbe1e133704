#pragma once

// Finite-dimensional algebras given by structure constants e_i e_j = sum_k c_ijk e_k.

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "albert/errors.hpp"
#include "albert/field.hpp"
#include "albert/matrix.hpp"

namespace albert {

/// Mutable n x n x n table of structure constants, used to build an Algebra.
class StructureTensor {
public:
    StructureTensor(FieldDescriptor f, std::size_t n) : field_(f), n_(n), c_(n * n * n, Scalar::zero(f)) {
        if (n == 0) throw DimensionMismatch("algebra dimension must be at least 1");
    }

    std::size_t dim() const { return n_; }
    const FieldDescriptor& field() const { return field_; }

    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_.at(index(i, j, k)); }

    /// Sets the full product e_i e_j to the given coordinate row.
    void set_product(std::size_t i, std::size_t j, const Vector& v) {
        if (v.size() != n_) throw DimensionMismatch("product row length");
        for (std::size_t k = 0; k < n_; ++k) {
            if (v[k].field() != field_) throw FieldMismatch();
            at(i, j, k) = v[k];
        }
    }

    /// Sets e_i e_j and e_j e_i.
    void set_symmetric(std::size_t i, std::size_t j, const Vector& v) {
        set_product(i, j, v);
        set_product(j, i, v);
    }

    friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }

    FieldDescriptor field_;
    std::size_t n_;
    std::vector<Scalar> c_;
};

class Element;

/// Immutable algebra; copies share the same underlying table.
class Algebra {
public:
    explicit Algebra(StructureTensor c, std::vector<std::string> names = {})
        : data_(std::make_shared<const Data>(Data{std::move(c), std::move(names)})) {
        if (!data_->names.empty() && data_->names.size() != dim())
            throw DimensionMismatch("number of basis names differs from the dimension");
    }

    std::size_t dim() const { return data_->c.dim(); }
    const FieldDescriptor& field() const { return data_->c.field(); }
    const StructureTensor& tensor() const { return data_->c; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return data_->c(i, j, k); }

    /// Basis labels; defaults to e1..en.
    std::vector<std::string> names() const {
        if (!data_->names.empty()) return data_->names;
        std::vector<std::string> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back("e" + std::to_string(i + 1));
        return out;
    }
    bool has_names() const { return !data_->names.empty(); }

    Element zero() const;
    Element basis(std::size_t i) const;
    Element element(Vector coords) const;
    Element element(std::initializer_list<std::int64_t> coords) const;

    /// Coordinates of e_i e_j.
    Vector product_row(std::size_t i, std::size_t j) const {
        Vector v;
        v.reserve(dim());
        for (std::size_t k = 0; k < dim(); ++k) v.push_back(c(i, j, k));
        return v;
    }

    /// Same table (names are ignored).
    bool same_table(const Algebra& o) const { return data_ == o.data_ || data_->c == o.data_->c; }

    friend bool operator==(const Algebra& a, const Algebra& b) { return a.same_table(b); }

private:
    struct Data {
        StructureTensor c;
        std::vector<std::string> names;
    };
    std::shared_ptr<const Data> data_;
};

/// Row coordinate vector tied to an algebra.
class Element {
public:
    Element(Algebra a, Vector coords) : alg_(std::move(a)), v_(std::move(coords)) {
        if (v_.size() != alg_.dim()) throw DimensionMismatch("element length differs from algebra dimension");
        for (const auto& s : v_)
            if (s.field() != alg_.field()) throw FieldMismatch();
    }

    const Algebra& algebra() const { return alg_; }
    const Vector& coords() const { return v_; }
    const Scalar& operator[](std::size_t i) const { return v_[i]; }
    std::size_t size() const { return v_.size(); }

    bool is_zero() const { return albert::is_zero(v_); }

    Element operator+(const Element& o) const { return Element(alg_, v_ + checked(o).v_); }
    Element operator-(const Element& o) const { return Element(alg_, v_ - checked(o).v_); }
    Element operator-() const { return Element(alg_, Scalar(alg_.field(), -1) * v_); }
    friend Element operator*(const Scalar& s, const Element& e) { return Element(e.alg_, s * e.v_); }

    /// Algebra product.
    Element operator*(const Element& o) const;

    /// Image under a linear map (row vector times matrix).
    Element apply(const Matrix& m) const { return Element(alg_, vec_mat(v_, m)); }

    friend bool operator==(const Element& a, const Element& b) { return a.alg_ == b.alg_ && a.v_ == b.v_; }

    /// Linear combination using the basis names, e.g. "1 + 2x" or "-(1/2)y".
    std::string to_string() const {
        const auto names = alg_.names();
        std::string out;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (v_[i].is_zero()) continue;
            std::string coef = v_[i].to_string();
            bool negative = alg_.field().is_rational() && coef[0] == '-';
            if (negative) coef.erase(0, 1);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (names[i] == "1")
                out += coef;
            else if (coef == "1")
                out += names[i];
            else
                out += (coef.find('/') != std::string::npos ? "(" + coef + ")" : coef) + names[i];
        }
        return out.empty() ? "0" : out;
    }

private:
    const Element& checked(const Element& o) const {
        if (!(alg_ == o.alg_)) throw AlgebraMismatch();
        return o;
    }

    Algebra alg_;
    Vector v_;
};

inline Element Algebra::zero() const { return Element(*this, zero_vector(field(), dim())); }
inline Element Algebra::basis(std::size_t i) const { return Element(*this, unit_vector(field(), dim(), i)); }
inline Element Algebra::element(Vector coords) const { return Element(*this, std::move(coords)); }
inline Element Algebra::element(std::initializer_list<std::int64_t> coords) const {
    Vector v;
    for (auto x : coords) v.emplace_back(field(), x);
    return Element(*this, std::move(v));
}

/// coords_k = sum_ij a_i b_j c_ijk.
inline Element mul(const Element& a, const Element& b) {
    if (!(a.algebra() == b.algebra())) throw AlgebraMismatch();
    const auto& A = a.algebra();
    const std::size_t n = A.dim();
    Vector out = zero_vector(A.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const Scalar ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!A.c(i, j, k).is_zero()) out[k] += ab * A.c(i, j, k);
        }
    }
    return Element(A, std::move(out));
}

inline Element Element::operator*(const Element& o) const { return mul(*this, o); }

/// R_a: row i holds the coordinates of e_i a.
inline Matrix right_mult_matrix(const Element& a) {
    const auto& A = a.algebra();
    Matrix m(A.field(), A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i) {
        const auto row = mul(A.basis(i), a).coords();
        for (std::size_t k = 0; k < A.dim(); ++k) m.at(i, k) = row[k];
    }
    return m;
}

/// L_a: row i holds the coordinates of a e_i.
inline Matrix left_mult_matrix(const Element& a) {
    const auto& A = a.algebra();
    Matrix m(A.field(), A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i) {
        const auto row = mul(a, A.basis(i)).coords();
        for (std::size_t k = 0; k < A.dim(); ++k) m.at(i, k) = row[k];
    }
    return m;
}

inline bool is_commutative(const Algebra& A) {
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(A.c(i, j, k) == A.c(j, i, k))) return false;
    return true;
}

inline bool has_zero_multiplication(const Algebra& A) {
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            if (!is_zero(A.product_row(i, j))) return false;
    return true;
}

/// Two-sided unit, solved as a linear system in the unit's coordinates.
/// The system u e_i = e_i u = e_i has at most one solution.
inline std::optional<Element> find_unit(const Algebra& A) {
    const std::size_t n = A.dim();
    const auto f = A.field();
    std::vector<LinearEquation> eqs;
    eqs.reserve(2 * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            LinearEquation right{zero_vector(f, n), i == k ? Scalar::one(f) : Scalar::zero(f)};
            LinearEquation left = right;
            for (std::size_t j = 0; j < n; ++j) {
                right.coeffs[j] = A.c(i, j, k);  // e_i u
                left.coeffs[j] = A.c(j, i, k);   // u e_i
            }
            eqs.push_back(std::move(right));
            eqs.push_back(std::move(left));
        }
    auto sol = solve(f, n, eqs);
    if (!sol.has_solution()) return std::nullopt;
    return A.element(sol.point);
}

/// (u, v, w) = (uv)w - u(vw).
inline Element associator(const Element& u, const Element& v, const Element& w) {
    return (u * v) * w - u * (v * w);
}

/// Jordan identity (x^2 y) x = x^2 (y x) via its complete linearization in x, checked on all
/// basis tuples. Equivalent to the identity itself when 6 is invertible, hence the restriction
/// to characteristic 0 or p >= 5.
inline bool is_jordan(const Algebra& A) {
    if (A.field().is_prime_field() && A.field().modulus() < 5)
        throw UnsupportedCharacteristic("Jordan identity check needs characteristic 0 or p >= 5");
    if (!is_commutative(A)) throw DomainError("Jordan identity check requires a commutative algebra");
    const std::size_t n = A.dim();
    std::vector<Element> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(A.basis(i));
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    // The linearization is symmetric in (x1, x2, x3), so sorted triples suffice.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c) {
                const std::size_t xs[3] = {a, b, c};
                for (std::size_t y = 0; y < n; ++y) {
                    Element total = A.zero();
                    for (const auto& p : perms) {
                        const Element sq = e[xs[p[0]]] * e[xs[p[1]]];
                        const Element& x3 = e[xs[p[2]]];
                        total = total + (sq * e[y]) * x3 - sq * (e[y] * x3);
                    }
                    if (!total.is_zero()) return false;
                }
            }
    return true;
}

/// A copy of A over F_p; rational constants must have denominators prime to p.
inline Algebra reduce_mod_p(const Algebra& A, std::int64_t p) {
    if (!A.field().is_rational()) throw DomainError("reduction mod p needs an algebra over the rationals");
    const auto f = FieldDescriptor::prime(p);
    StructureTensor t(f, A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t k = 0; k < A.dim(); ++k) {
                const auto& s = A.c(i, j, k);
                t.at(i, j, k) = Scalar::fraction(f, s.numerator(), s.denominator());
            }
    return Algebra(std::move(t), A.has_names() ? A.names() : std::vector<std::string>{});
}

}  // namespace albert

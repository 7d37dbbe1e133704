#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "albert/algebra.hpp"
#include "albert/errors.hpp"
#include "albert/matrix.hpp"

namespace albert {

/// xi is invertible and (e_i e_j) xi = (e_i xi)(e_j xi) in B for all basis pairs.
inline bool verify_isomorphism(const Algebra& A, const Algebra& B, const Matrix& xi) {
    if (A.field() != B.field() || xi.field() != A.field()) throw FieldMismatch();
    if (A.dim() != B.dim() || xi.size() != A.dim()) throw DimensionMismatch("isomorphism candidate");
    if (det(xi).is_zero()) return false;
    const std::size_t n = A.dim();
    std::vector<Element> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(B.element(xi.row(i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(vec_mat(A.product_row(i, j), xi) == (images[i] * images[j]).coords())) return false;
    return true;
}

namespace detail {

/// Residue tables for fast enumeration over F_p.
struct ResidueTensor {
    std::size_t n;
    std::int64_t p;
    std::vector<std::int64_t> c;  // (i*n + j)*n + k

    explicit ResidueTensor(const Algebra& A) : n(A.dim()), p(A.field().modulus()), c(n * n * n) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = A.c(i, j, k).residue();
    }

    std::int64_t at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }

    /// out = u v.
    void mul(const std::int64_t* u, const std::int64_t* v, std::int64_t* out) const {
        for (std::size_t k = 0; k < n; ++k) out[k] = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!u[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!v[j]) continue;
                const std::int64_t uv = u[i] * v[j] % p;
                for (std::size_t k = 0; k < n; ++k) out[k] = (out[k] + uv * at(i, j, k)) % p;
            }
        }
    }
};

inline bool invertible_mod_p(std::vector<std::int64_t> m, std::size_t n, std::int64_t p) {
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv * n + c] == 0) ++piv;
        if (piv == n) return false;
        if (piv != c)
            for (std::size_t k = 0; k < n; ++k) std::swap(m[piv * n + k], m[c * n + k]);
        const std::int64_t inv = Scalar::pow_mod(m[c * n + c], p - 2, p);
        for (std::size_t r = c + 1; r < n; ++r) {
            const std::int64_t factor = m[r * n + c] * inv % p;
            if (!factor) continue;
            for (std::size_t k = c; k < n; ++k) m[r * n + k] = ((m[r * n + k] - factor * m[c * n + k]) % p + p) % p;
        }
    }
    return true;
}

}  // namespace detail

/// First isomorphism A -> B in lexicographic order of the row-major entries, or none.
inline std::optional<Matrix> isomorphism_search(const Algebra& A, const Algebra& B) {
    const auto f = A.field();
    if (f != B.field()) throw FieldMismatch();
    if (!f.is_prime_field()) throw DomainError("isomorphism search needs a prime field");
    if (A.dim() != B.dim()) return std::nullopt;
    const std::size_t n = A.dim();
    const std::int64_t p = f.modulus();
    if (n > 3 || p > 5) throw SearchBudgetExceeded("isomorphism search limited to n <= 3, p <= 5");

    const detail::ResidueTensor ta(A), tb(B);
    std::vector<std::int64_t> x(n * n, 0), lhs(n), rhs(n);
    auto matches = [&] {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // (e_i e_j) xi
                for (std::size_t k = 0; k < n; ++k) {
                    std::int64_t s = 0;
                    for (std::size_t m = 0; m < n; ++m) s += ta.at(i, j, m) * x[m * n + k];
                    lhs[k] = s % p;
                }
                tb.mul(&x[i * n], &x[j * n], rhs.data());
                if (lhs != rhs) return false;
            }
        return true;
    };
    for (;;) {
        if (matches() && detail::invertible_mod_p(x, n, p)) {
            Matrix xi(f, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) xi.at(i, j) = Scalar(f, x[i * n + j]);
            return xi;
        }
        std::size_t s = x.size();
        while (s > 0 && ++x[s - 1] == p) x[--s] = 0;
        if (s == 0) return std::nullopt;
    }
}

}  // namespace albert

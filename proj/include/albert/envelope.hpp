#pragma once

// Simplicity tests. Over the algebraic closure an algebra is simple iff the associative
// envelope of its left and right multiplications is all of End(A) (Burnside); the envelope
// dimension does not change under field extension, so it can be computed over the ground field.
// ideal_search_exhaustive is an independent brute-force check over small prime fields.

#include <cstddef>
#include <vector>

#include "albert/algebra.hpp"
#include "albert/errors.hpp"
#include "albert/matrix.hpp"

namespace albert {

namespace detail {

inline Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

inline Matrix unflatten(FieldDescriptor f, std::size_t n, const Vector& v) {
    Matrix m(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
    return m;
}

}  // namespace detail

/// The operators L_{e_i}, R_{e_i} for every basis element.
inline std::vector<Matrix> multiplication_generators(const Algebra& A) {
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        gens.push_back(left_mult_matrix(A.basis(i)));
        gens.push_back(right_mult_matrix(A.basis(i)));
    }
    return gens;
}

/// Dimension of the associative algebra generated by all L_{e_i}, R_{e_i}.
/// Every word in the generators is a shorter word times a generator, so closing the
/// span under right multiplication by generators reaches the fixpoint.
inline std::size_t envelope_dimension(const Algebra& A) {
    const std::size_t n = A.dim();
    const auto f = A.field();
    const auto gens = multiplication_generators(A);
    EchelonBasis span(f, n * n);
    std::vector<Matrix> frontier;
    for (const auto& g : gens)
        if (span.insert(detail::flatten(g))) frontier.push_back(g);
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& b : frontier)
            for (const auto& g : gens) {
                Matrix p = b * g;
                if (span.insert(detail::flatten(p))) next.push_back(std::move(p));
            }
        frontier = std::move(next);
    }
    return span.dimension();
}

/// Nonzero multiplication and no proper ideals after extension to the algebraic closure.
inline bool is_simple_closure(const Algebra& A) {
    if (has_zero_multiplication(A)) return false;
    return envelope_dimension(A) == A.dim() * A.dim();
}

using Subspace = std::vector<Vector>;

/// W is a two-sided ideal: e_i w and w e_i stay in W for every basis vector w of W.
inline bool is_ideal(const Algebra& A, const Subspace& basis) {
    EchelonBasis span(A.field(), A.dim());
    for (const auto& w : basis) span.insert(w);
    for (const auto& w : basis) {
        const Element we = A.element(w);
        for (std::size_t i = 0; i < A.dim(); ++i) {
            if (!span.contains((A.basis(i) * we).coords())) return false;
            if (!span.contains((we * A.basis(i)).coords())) return false;
        }
    }
    return true;
}

/// Every proper nonzero ideal defined over F_p, as reduced row echelon bases, ordered by
/// dimension, then pivot set, then free entries in lexicographic order.
inline std::vector<Subspace> ideal_search_exhaustive(const Algebra& A) {
    const auto f = A.field();
    if (!f.is_prime_field()) throw DomainError("exhaustive ideal search needs a prime field");
    const std::size_t n = A.dim();
    const std::int64_t p = f.modulus();
    if (n > 4 || p > 7) throw SearchBudgetExceeded("exhaustive ideal search limited to n <= 4, p <= 7");

    std::vector<Subspace> found;
    for (std::size_t d = 1; d < n; ++d) {
        // Pivot sets are increasing d-subsets of columns.
        std::vector<std::size_t> piv(d);
        for (std::size_t i = 0; i < d; ++i) piv[i] = i;
        for (;;) {
            // Free slots: row r, column c > piv[r], c not a pivot.
            std::vector<std::pair<std::size_t, std::size_t>> slots;
            std::vector<bool> is_piv(n, false);
            for (auto c : piv) is_piv[c] = true;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = piv[r] + 1; c < n; ++c)
                    if (!is_piv[c]) slots.emplace_back(r, c);
            std::vector<std::int64_t> vals(slots.size(), 0);
            for (;;) {
                Subspace rows(d, zero_vector(f, n));
                for (std::size_t r = 0; r < d; ++r) rows[r][piv[r]] = Scalar::one(f);
                for (std::size_t s = 0; s < slots.size(); ++s)
                    rows[slots[s].first][slots[s].second] = Scalar(f, vals[s]);
                if (is_ideal(A, rows)) found.push_back(std::move(rows));
                // Odometer with the last slot least significant.
                std::size_t s = slots.size();
                while (s > 0 && ++vals[s - 1] == p) vals[--s] = 0;
                if (s == 0) break;
            }
            // Next pivot combination.
            std::size_t i = d;
            while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
            if (i == 0) break;
            ++piv[i - 1];
            for (std::size_t k = i; k < d; ++k) piv[k] = piv[k - 1] + 1;
        }
    }
    return found;
}

}  // namespace albert

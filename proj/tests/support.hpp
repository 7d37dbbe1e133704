#pragma once

// Hand-rolled generators and independent oracles shared by the test binaries. The oracles
// deliberately avoid the library's own elimination and search routines.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "albert/albert.hpp"

namespace albert::testing {

inline const FieldDescriptor Q = FieldDescriptor::rational();
inline const FieldDescriptor F3 = FieldDescriptor::prime(3);
inline const FieldDescriptor F5 = FieldDescriptor::prime(5);
inline const FieldDescriptor F7 = FieldDescriptor::prime(7);

inline Scalar sc(FieldDescriptor f, std::int64_t v) { return Scalar(f, v); }
inline Scalar frac(std::int64_t n, std::int64_t d) { return Scalar::fraction(Q, n, d); }

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    /// Small rationals num/den with |num| <= 9, 1 <= den <= 7 over Q; uniform residues over F_p.
    Scalar scalar(FieldDescriptor f) {
        if (f.is_prime_field()) return Scalar(f, integer(0, f.modulus() - 1));
        return Scalar::fraction(f, integer(-9, 9), integer(1, 7));
    }

    Scalar nonzero(FieldDescriptor f) {
        for (;;) {
            auto s = scalar(f);
            if (!s.is_zero()) return s;
        }
    }

    Vector vector(FieldDescriptor f, std::size_t n) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f));
        return v;
    }

    Element element(const Algebra& A) { return A.element(vector(A.field(), A.dim())); }

    Matrix matrix(FieldDescriptor f, std::size_t n) {
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(vector(f, n));
        return Matrix::from_rows(f, rows);
    }

    Matrix invertible(FieldDescriptor f, std::size_t n) { return random_invertible(f, n, rng_()); }

private:
    std::mt19937_64 rng_;
};

/// Cofactor expansion along the first row.
inline Scalar det_laplace(const Matrix& m) {
    const std::size_t n = m.size();
    const auto f = m.field();
    if (n == 1) return m(0, 0);
    Scalar total = Scalar::zero(f);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(f, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor.at(r - 1, cc++) = m(r, c);
        const Scalar term = m(0, j) * det_laplace(minor);
        total = (j % 2 == 0) ? total + term : total - term;
    }
    return total;
}

/// Rank of integer rows modulo a prime, by plain elimination on int64 residues.
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
    auto inv = [p](std::int64_t a) {
        std::int64_t r = 1, e = p - 2;
        a %= p;
        while (e) {
            if (e & 1) r = r * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const std::int64_t iv = inv(((rows[rank][c] % p) + p) % p);
        for (auto& x : rows[rank]) x = ((x % p + p) % p) * iv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank) continue;
            const std::int64_t k = ((rows[r][c] % p) + p) % p;
            if (!k) continue;
            for (std::size_t cc = 0; cc < cols; ++cc) rows[r][cc] = ((rows[r][cc] - k * rows[rank][cc]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Integer structure constants of an algebra whose rational table has integer entries.
inline std::vector<std::int64_t> integer_table(const Algebra& A) {
    std::vector<std::int64_t> t;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t k = 0; k < A.dim(); ++k) {
                const auto& s = A.c(i, j, k);
                t.push_back(s.field().is_prime_field() ? s.residue() : static_cast<std::int64_t>(s.numerator()));
            }
    return t;
}

/// Envelope dimension by breadth-first word expansion: the span of all words of length
/// 1..n^2 in the operators L_{e_i}, R_{e_i}, computed modulo a large prime.
inline std::size_t envelope_dimension_words(const Algebra& A, std::int64_t p = 1'000'003) {
    const std::size_t n = A.dim();
    const auto t = integer_table(A);
    using Op = std::vector<std::int64_t>;
    std::vector<Op> gens;
    for (std::size_t a = 0; a < n; ++a) {
        Op L(n * n), R(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                L[i * n + k] = ((t[(a * n + i) * n + k] % p) + p) % p;
                R[i * n + k] = ((t[(i * n + a) * n + k] % p) + p) % p;
            }
        gens.push_back(L);
        gens.push_back(R);
    }
    auto mul = [&](const Op& x, const Op& y) {
        Op z(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) z[i * n + k] = (z[i * n + k] + x[i * n + j] * y[j * n + k]) % p;
        return z;
    };
    std::vector<Op> span;
    std::vector<Op> layer = gens;
    std::size_t current = 0;
    for (std::size_t len = 1; len <= n * n && !layer.empty(); ++len) {
        std::vector<Op> fresh;
        for (const auto& w : layer) {
            auto trial = span;
            trial.push_back(w);
            const std::size_t r = rank_mod(trial, p);
            if (r > current) {
                span.push_back(w);
                current = r;
                fresh.push_back(w);
            }
        }
        std::vector<Op> next;
        for (const auto& w : fresh)
            for (const auto& g : gens) next.push_back(mul(w, g));
        layer = std::move(next);
    }
    return current;
}

/// Simplicity over F_p by principal ideals: a nonzero proper ideal exists iff some nonzero
/// v generates one. Each candidate v is closed under left and right multiplication by
/// the basis.
inline bool has_proper_ideal_principal(const Algebra& A) {
    const auto f = A.field();
    const std::size_t n = A.dim();
    const std::int64_t p = f.modulus();
    std::vector<std::int64_t> digits(n, 0);
    for (;;) {
        std::size_t s = n;
        while (s > 0 && ++digits[s - 1] == p) digits[--s] = 0;
        if (s == 0) break;
        std::vector<Vector> gens;
        Vector v;
        for (auto d : digits) v.emplace_back(f, d);
        std::vector<std::vector<std::int64_t>> rows;
        auto as_ints = [&](const Vector& w) {
            std::vector<std::int64_t> r;
            for (const auto& x : w) r.push_back(x.residue());
            return r;
        };
        std::vector<Vector> found{v};
        rows.push_back(as_ints(v));
        for (std::size_t idx = 0; idx < found.size(); ++idx) {
            const Element w = A.element(found[idx]);
            for (std::size_t b = 0; b < n; ++b)
                for (const Element& prod : {w * A.basis(b), A.basis(b) * w}) {
                    auto trial = rows;
                    trial.push_back(as_ints(prod.coords()));
                    if (rank_mod(trial, p) > rank_mod(rows, p)) {
                        rows.push_back(as_ints(prod.coords()));
                        found.push_back(prod.coords());
                    }
                }
        }
        if (rank_mod(rows, p) < n) return true;
    }
    return false;
}

/// All nonzero a with a^2 = 0, by direct evaluation of the product formula.
inline std::size_t count_nils_direct(const Algebra& A) {
    const auto f = A.field();
    const std::size_t n = A.dim();
    const std::int64_t p = f.modulus();
    std::vector<std::int64_t> digits(n, 0);
    std::size_t count = 0;
    for (;;) {
        std::size_t s = n;
        while (s > 0 && ++digits[s - 1] == p) digits[--s] = 0;
        if (s == 0) break;
        bool zero = true;
        for (std::size_t k = 0; k < n && zero; ++k) {
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) acc = (acc + digits[i] * digits[j] % p * A.c(i, j, k).residue()) % p;
            zero = acc == 0;
        }
        count += zero;
    }
    return count;
}

/// Catalog algebras of dimension 3 and 4 used across the property tests.
inline std::vector<std::pair<std::string, Algebra>> catalog(FieldDescriptor f) {
    return {
        {"J2", make_j2(f)},
        {"C2", make_c2(f)},
        {"C3", make_c3(f)},
        {"C(-2)", make_c_rho(sc(f, -2))},
        {"C(1)", make_c_rho(sc(f, 1))},
        {"C(1,1,0)", make_c(sc(f, 1), sc(f, 1), sc(f, 0))},
        {"C(0,1,1)", make_c(sc(f, 0), sc(f, 1), sc(f, 1))},
        {"G2", make_gn(2, f)},
        {"G3", make_gn(3, f)},
    };
}

}  // namespace albert::testing

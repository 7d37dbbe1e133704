#pragma once

// Nil elements of index 2 (nonzero a with a^2 = 0) and the nil-rank, the dimension of
// their span.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "albert/algebra.hpp"
#include "albert/catalog.hpp"
#include "albert/errors.hpp"
#include "albert/isomorphism.hpp"
#include "albert/matrix.hpp"

namespace albert {

struct NilReport {
    enum class Method { ExactCFamily, BruteForceFp };

    std::size_t rank = 0;
    /// Linearly independent, each squaring to zero.
    std::vector<Element> witnesses;
    Method method = Method::BruteForceFp;
    /// Set when the count was taken over a field that is not algebraically closed.
    bool closure_caveat = false;
};

inline const char* to_string(NilReport::Method m) {
    return m == NilReport::Method::ExactCFamily ? "exact-C-family" : "brute-force-Fp";
}

inline bool is_nil_index2(const Element& a) { return !a.is_zero() && (a * a).is_zero(); }

inline constexpr std::int64_t kNilSearchBudget = 1'000'000;

/// All nonzero a with a^2 = 0, in lexicographic coordinate order (first coordinate most significant).
inline std::vector<Element> nil_set_bruteforce(const Algebra& A) {
    const auto f = A.field();
    if (!f.is_prime_field()) throw DomainError("brute-force nil search needs a prime field");
    const std::size_t n = A.dim();
    const std::int64_t p = f.modulus();
    std::int64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= p;
        if (total > kNilSearchBudget) throw SearchBudgetExceeded("p^n exceeds 10^6");
    }
    const detail::ResidueTensor t(A);
    std::vector<std::int64_t> a(n, 0), sq(n);
    std::vector<Element> out;
    for (;;) {
        std::size_t s = n;
        while (s > 0 && ++a[s - 1] == p) a[--s] = 0;
        if (s == 0) break;
        t.mul(a.data(), a.data(), sq.data());
        bool zero = true;
        for (auto v : sq) zero = zero && v == 0;
        if (!zero) continue;
        Vector coords;
        coords.reserve(n);
        for (auto v : a) coords.emplace_back(f, v);
        out.push_back(A.element(std::move(coords)));
    }
    return out;
}

/// Rank of the nil set over F_p; witnesses are picked greedily in scan order.
inline NilReport nil_rank_bruteforce(const Algebra& A) {
    NilReport report;
    report.method = NilReport::Method::BruteForceFp;
    report.closure_caveat = true;
    EchelonBasis span(A.field(), A.dim());
    for (auto& a : nil_set_bruteforce(A)) {
        if (span.insert(a.coords())) report.witnesses.push_back(std::move(a));
        if (span.dimension() == A.dim()) break;
    }
    report.rank = report.witnesses.size();
    return report;
}

/// Nil-rank of C(alpha, beta, gamma), alpha != 0, over the algebraic closure.
///
/// For a = l1 + sx + ty, a^2 = (l^2 + 2a st)1 + 2(l s + b st)x + 2(l t + g st)y. If st = 0 then
/// l = 0 and a lies on Fx or Fy. Otherwise l = -bt = -gs, and l^2 = -2a st forces b, g != 0 and
/// bg = -2a. Conversely when bg = -2a, a = 1 - g^-1 x - b^-1 y squares to zero and is
/// independent of x and y, so the rank is 3 exactly when bg + 2a = 0.
inline NilReport nil_rank_exact_C(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
    if (alpha.is_zero()) throw DomainError("exact nil-rank needs alpha != 0");
    const Algebra C = make_c(alpha, beta, gamma);
    const auto f = alpha.field();
    NilReport report;
    report.method = NilReport::Method::ExactCFamily;
    report.closure_caveat = false;
    report.witnesses = {C.basis(1), C.basis(2)};
    if ((beta * gamma + Scalar(f, 2) * alpha).is_zero())
        report.witnesses.push_back(C.element({Scalar::one(f), -gamma.inverse(), -beta.inverse()}));
    report.rank = report.witnesses.size();
    return report;
}

}  // namespace albert

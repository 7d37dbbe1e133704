#pragma once

// Albert isotopes. For invertible f, g the principal isotope A^(f,g) has product
// x * y = (x f)(y g); a triple (phi, psi, xi) is an isotopy A -> B when
// (x phi) o (y psi) = (x y) xi in B.

#include <cstddef>
#include <optional>
#include <string>

#include "albert/algebra.hpp"
#include "albert/errors.hpp"
#include "albert/matrix.hpp"

namespace albert {

struct Isotopy {
    Matrix phi;
    Matrix psi;
    Matrix xi;
};

struct RMultReport {
    Element element;
    Matrix matrix;
    /// det R_a
    Scalar determinant;
    bool invertible;
};

namespace detail {

inline void require_operator(const Algebra& A, const Matrix& m, const char* name) {
    if (m.field() != A.field()) throw FieldMismatch();
    if (m.size() != A.dim()) throw DimensionMismatch(std::string("operator ") + name);
    if (det(m).is_zero()) throw SingularOperator(std::string("operator ") + name + " is not invertible");
}

}  // namespace detail

inline Algebra principal_isotope(const Algebra& A, const Matrix& f, const Matrix& g) {
    detail::require_operator(A, f, "f");
    detail::require_operator(A, g, "g");
    const std::size_t n = A.dim();
    StructureTensor t(A.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        const Element fi = A.element(f.row(i));
        for (std::size_t j = 0; j < n; ++j) t.set_product(i, j, (fi * A.element(g.row(j))).coords());
    }
    return Algebra(std::move(t), A.has_names() ? A.names() : std::vector<std::string>{});
}

/// A^(f,f).
inline Algebra standard_isotope(const Algebra& A, const Matrix& f) { return principal_isotope(A, f, f); }

/// A proportional pair (sigma f, tau f) normalized to (f, f). The homothety omega*I with
/// omega = (sigma tau)^-1 is an isomorphism A^(f,f) -> A^(sigma f, tau f).
struct NormalizedStandardIsotope {
    Algebra isotope;
    Scalar omega;
};

inline NormalizedStandardIsotope standard_isotope(const Algebra& A, const Matrix& f, const Scalar& sigma,
                                                  const Scalar& tau) {
    if (sigma.is_zero() || tau.is_zero()) throw SingularOperator("proportionality factors must be nonzero");
    return {standard_isotope(A, f), (sigma * tau).inverse()};
}

/// Checks the defining identity on all basis pairs; bilinearity covers the rest.
inline bool verify_isotopy(const Algebra& A, const Algebra& B, const Isotopy& L) {
    if (A.field() != B.field()) throw FieldMismatch();
    if (A.dim() != B.dim()) throw DimensionMismatch("isotopy between algebras of different dimension");
    for (const Matrix* m : {&L.phi, &L.psi, &L.xi}) {
        if (m->field() != A.field()) throw FieldMismatch();
        if (m->size() != A.dim()) throw DimensionMismatch("isotopy operator");
        if (det(*m).is_zero()) return false;
    }
    const std::size_t n = A.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Element xi_phi = B.element(L.phi.row(i));
        for (std::size_t j = 0; j < n; ++j) {
            const Element lhs = xi_phi * B.element(L.psi.row(j));
            if (!(lhs.coords() == vec_mat(A.product_row(i, j), L.xi))) return false;
        }
    }
    return true;
}

inline RMultReport r_mult_report(const Element& a) {
    Matrix m = right_mult_matrix(a);
    Scalar d = det(m);
    const bool inv = !d.is_zero();
    return {a, std::move(m), std::move(d), inv};
}

struct RightMultRepresentation {
    Element element;
    /// Dimension of {g : R_g = 0}; zero when the representation is unique.
    std::size_t kernel_dimension;
};

/// Solves sum_j g_j c_ijk = M_ik for g. With free coordinates the representative sets them to zero.
inline std::optional<RightMultRepresentation> express_as_right_mult(const Algebra& A, const Matrix& M) {
    if (M.field() != A.field()) throw FieldMismatch();
    if (M.size() != A.dim()) throw DimensionMismatch("matrix size differs from algebra dimension");
    const std::size_t n = A.dim();
    std::vector<LinearEquation> eqs;
    eqs.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            LinearEquation eq{zero_vector(A.field(), n), M(i, k)};
            for (std::size_t j = 0; j < n; ++j) eq.coeffs[j] = A.c(i, j, k);
            eqs.push_back(std::move(eq));
        }
    auto sol = solve(A.field(), n, eqs);
    if (!sol.has_solution()) return std::nullopt;
    return RightMultRepresentation{A.element(sol.point), sol.kernel.size()};
}

}  // namespace albert

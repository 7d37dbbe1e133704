#pragma once

// Named algebras and the reduction of unital commutative 3-dimensional algebras with two
// independent square-zero elements to the normal forms C(rho), C(1,1,0), C(1,0,0).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "albert/algebra.hpp"
#include "albert/certificate.hpp"
#include "albert/errors.hpp"
#include "albert/isomorphism.hpp"
#include "albert/matrix.hpp"

namespace albert {

/// F1 + V with (a1 + x)(b1 + y) = (ab + f(x,y))1 + ay + bx; basis (1, v_1, ..., v_n).
inline Algebra make_jn(const Matrix& gram) {
    if (!(gram == transpose(gram))) throw DomainError("Gram matrix must be symmetric");
    const auto f = gram.field();
    const std::size_t n = gram.size() + 1;
    StructureTensor t(f, n);
    for (std::size_t i = 0; i < n; ++i) t.set_symmetric(0, i, unit_vector(f, n, i));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) t.at(i, j, 0) = gram(i - 1, j - 1);
    std::vector<std::string> names{"1"};
    if (gram.size() == 2) {
        names.insert(names.end(), {"x", "y"});
    } else {
        for (std::size_t i = 1; i < n; ++i) names.push_back("v" + std::to_string(i));
    }
    return Algebra(std::move(t), std::move(names));
}

/// C(a, b, g) = <1, x, y | x^2 = y^2 = 0, xy = a1 + bx + gy>, commutative, 1 the unit.
inline Algebra make_c(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
    const auto f = alpha.field();
    if (beta.field() != f || gamma.field() != f) throw FieldMismatch();
    StructureTensor t(f, 3);
    for (std::size_t i = 0; i < 3; ++i) t.set_symmetric(0, i, unit_vector(f, 3, i));
    t.set_symmetric(1, 2, {alpha, beta, gamma});
    return Algebra(std::move(t), {"1", "x", "y"});
}

/// Canonical J_2: x^2 = y^2 = 0, xy = 1.
inline Algebra make_j2(FieldDescriptor f = {}) { return make_jn(Matrix::from_ints(f, {{0, 1}, {1, 0}})); }

/// C(rho) = C(rho, rho, rho).
inline Algebra make_c_rho(const Scalar& rho) { return make_c(rho, rho, rho); }

/// a^2 = b, ab = a, ac = c, b^2 = c^2 = 0, bc = b.
inline Algebra make_c2(FieldDescriptor f = {}) {
    StructureTensor t(f, 3);
    const std::size_t a = 0, b = 1, c = 2;
    t.set_symmetric(a, a, unit_vector(f, 3, b));
    t.set_symmetric(a, b, unit_vector(f, 3, a));
    t.set_symmetric(a, c, unit_vector(f, 3, c));
    t.set_symmetric(b, c, unit_vector(f, 3, b));
    return Algebra(std::move(t), {"a", "b", "c"});
}

/// x^2 = y^2 = z^2 = 0, xy = z, yz = x, zx = y.
inline Algebra make_c3(FieldDescriptor f = {}) {
    StructureTensor t(f, 3);
    t.set_symmetric(0, 1, unit_vector(f, 3, 2));
    t.set_symmetric(1, 2, unit_vector(f, 3, 0));
    t.set_symmetric(2, 0, unit_vector(f, 3, 1));
    return Algebra(std::move(t), {"x", "y", "z"});
}

/// Basis (x_1..x_n, e): V = <x_i> has zero multiplication, x_1 e = e + x_2,
/// x_i e = x_i + x_{i+1} (2 <= i <= n-1), x_n e = x_n + x_1, e^2 = e.
inline Algebra make_gn(std::size_t n, FieldDescriptor f = {}) {
    if (n < 2) throw DomainError("G_n needs n >= 2");
    const std::size_t d = n + 1, e = n;
    StructureTensor t(f, d);
    t.set_product(e, e, unit_vector(f, d, e));
    t.set_symmetric(0, e, unit_vector(f, d, e) + unit_vector(f, d, 1));
    for (std::size_t i = 1; i + 1 < n; ++i) t.set_symmetric(i, e, unit_vector(f, d, i) + unit_vector(f, d, i + 1));
    t.set_symmetric(n - 1, e, unit_vector(f, d, n - 1) + unit_vector(f, d, 0));
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("e");
    return Algebra(std::move(t), std::move(names));
}

struct CatalogSpec {
    enum class Family { Jn, J2, Cabg, Crho, C2, C3, Gn };

    Family family = Family::J2;
    FieldDescriptor field;
    std::optional<Matrix> gram;
    std::vector<Scalar> params;  // (alpha, beta, gamma) for Cabg, (rho) for Crho
    std::size_t n = 0;           // Gn
};

inline Algebra construct(const CatalogSpec& spec) {
    using F = CatalogSpec::Family;
    auto param = [&](std::size_t i) -> const Scalar& {
        if (spec.params.size() <= i) throw DomainError("missing catalog parameter");
        if (spec.params[i].field() != spec.field) throw FieldMismatch();
        return spec.params[i];
    };
    switch (spec.family) {
        case F::Jn:
            if (!spec.gram) throw DomainError("J_n needs a Gram matrix");
            if (spec.gram->field() != spec.field) throw FieldMismatch();
            return make_jn(*spec.gram);
        case F::J2: return make_j2(spec.field);
        case F::Cabg: return make_c(param(0), param(1), param(2));
        case F::Crho: return make_c_rho(param(0));
        case F::C2: return make_c2(spec.field);
        case F::C3: return make_c3(spec.field);
        case F::Gn: return make_gn(spec.n, spec.field);
    }
    throw DomainError("unknown catalog family");
}

struct CanonicalCoordinates {
    Scalar alpha, beta, gamma;
    /// Rows are 1, x, y in the coordinates of A; an isomorphism C(alpha, beta, gamma) -> A.
    Matrix basis;
};

/// Reads (alpha, beta, gamma) off xy in the basis (1, x, y).
inline CanonicalCoordinates to_canonical_C(const Algebra& A, const Element& x, const Element& y) {
    if (A.dim() != 3) throw DimensionMismatch("canonical C-form needs a 3-dimensional algebra");
    if (!is_commutative(A)) throw DomainError("canonical C-form needs a commutative algebra");
    const auto unit = find_unit(A);
    if (!unit) throw NotUnital("algebra has no unit");
    if (!(x * x).is_zero() || !(y * y).is_zero()) throw DomainError("x and y must square to zero");
    const auto f = A.field();
    const Matrix basis = Matrix::from_rows(f, {unit->coords(), x.coords(), y.coords()});
    if (det(basis).is_zero()) throw DependentNils("1, x, y are linearly dependent");
    // xy = a 1 + b x + g y  <=>  coords(xy) = (a, b, g) * basis
    const Vector abg = vec_mat((x * y).coords(), mat_inv(basis));
    return {abg[0], abg[1], abg[2], basis};
}

struct CanonicalForm {
    enum class Target { Crho, C110, C100 };

    Certificate certificate;
    Target target;
    std::optional<Scalar> rho;
    Algebra target_algebra;
    /// Rows: the new canonical basis (1, x', y') in coordinates of C(alpha, beta, gamma);
    /// an isomorphism target -> C(alpha, beta, gamma).
    Matrix basis_change;
};

/// Isomorphism of a simple C(alpha, beta, gamma) onto one of the normal forms.
inline CanonicalForm canonicalize_C(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
    const auto f = alpha.field();
    if (alpha.is_zero()) throw NonSimple("alpha = 0: span{x, y} is a proper ideal");
    const Algebra source = make_c(alpha, beta, gamma);
    const Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    const Scalar ainv = alpha.inverse();
    auto diag = [&](const Scalar& s, const Scalar& t) {
        return Matrix::from_rows(f, {{one, zero, zero}, {zero, s, zero}, {zero, zero, t}});
    };

    Certificate cert("canonical form of C(" + alpha.to_string() + ", " + beta.to_string() + ", " +
                     gamma.to_string() + ")");
    std::optional<Scalar> rho;
    CanonicalForm::Target target;
    Matrix change;
    std::string how;
    if (!beta.is_zero() && !gamma.is_zero()) {
        rho = ainv * beta * gamma;
        target = CanonicalForm::Target::Crho;
        change = diag(ainv * beta, ainv * gamma);
        how = "x' = a^-1 b x, y' = a^-1 g y gives C(rho), rho = a^-1 b g";
    } else if (!beta.is_zero() || !gamma.is_zero()) {
        target = CanonicalForm::Target::C110;
        if (!beta.is_zero()) {
            change = diag(ainv * beta, beta.inverse());
            how = "x' = a^-1 b x, y' = b^-1 y gives C(1,1,0)";
        } else {
            // swap x <-> y, then the same scaling with gamma in the role of beta
            change = Matrix::from_rows(f, {{one, zero, zero}, {zero, zero, ainv * gamma}, {zero, gamma.inverse(), zero}});
            how = "swap x <-> y, then x' = a^-1 g y, y' = g^-1 x gives C(1,1,0)";
        }
    } else {
        const auto omega = exact_sqrt(alpha);
        if (!omega)
            throw SquareRootUnavailable("alpha = " + alpha.to_string() + " has no square root in " + f.to_string());
        target = CanonicalForm::Target::C100;
        change = diag(omega->inverse(), omega->inverse());
        how = "omega^2 = alpha, x' = omega^-1 x, y' = omega^-1 y gives C(1,0,0), omega = " + omega->to_string();
        cert.scalars.emplace("omega", *omega);
    }
    const Algebra target_alg = target == CanonicalForm::Target::Crho   ? make_c_rho(*rho)
                               : target == CanonicalForm::Target::C110 ? make_c(one, one, zero)
                                                                       : make_c(one, zero, zero);
    cert.expect_true(how + "; the new basis is an isomorphism from the normal form",
                     verify_isomorphism(target_alg, source, change), {{"basis change", change.to_string()}});
    cert.matrices.emplace("basis_change", change);
    if (rho) cert.scalars.emplace("rho", *rho);
    return {std::move(cert), target, rho, target_alg, change};
}

}  // namespace albert

#pragma once

// Witness pipelines: each builds the concrete objects of a constructive argument
// (operators, isotopes, bases) and records every claimed identity as a checked step.

#include <cstddef>
#include <string>
#include <vector>

#include "albert/algebra.hpp"
#include "albert/catalog.hpp"
#include "albert/certificate.hpp"
#include "albert/envelope.hpp"
#include "albert/errors.hpp"
#include "albert/isomorphism.hpp"
#include "albert/isotopy.hpp"
#include "albert/matrix.hpp"

namespace albert {

namespace detail {

/// phi R_g = 1 for the g recovered by express_as_right_mult(A, phi^-1).
inline void check_unit_operator(Certificate& cert, const Algebra& A, const Matrix& phi, const Element& expected_g) {
    const auto rep = express_as_right_mult(A, mat_inv(phi));
    if (!cert.expect_true("phi^-1 is a right multiplication R_g", rep.has_value())) return;
    cert.expect_equal("g with phi R_g = 1", expected_g, rep->element);
    cert.expect_equal("phi R_g = 1", Matrix::identity(A.field(), A.dim()), phi * right_mult_matrix(rep->element));
}

inline Scalar sc(FieldDescriptor f, std::int64_t v) { return Scalar(f, v); }

}  // namespace detail

/// A^(sigma 1, tau 1) is isomorphic to A via the homothety a -> omega a, omega = (sigma tau)^-1.
inline Certificate witness_lemma1(const Algebra& A, const Scalar& sigma, const Scalar& tau) {
    if (sigma.is_zero() || tau.is_zero()) throw DomainError("sigma and tau must be nonzero");
    const std::size_t n = A.dim();
    Certificate cert("homothety between A and A^(sigma 1, tau 1), sigma = " + sigma.to_string() +
                     ", tau = " + tau.to_string());
    const Algebra iso = principal_isotope(A, Matrix::scalar(sigma, n), Matrix::scalar(tau, n));
    const Scalar omega = (sigma * tau).inverse();
    const Matrix xi = Matrix::scalar(omega, n);
    cert.expect_true("xi = omega 1 is an isomorphism A -> A^(sigma 1, tau 1)", verify_isomorphism(A, iso, xi),
                     {{"omega", omega.to_string()}});
    cert.expect_equal("omega^2 sigma tau = omega", omega, omega * omega * sigma * tau);
    cert.scalars.emplace("omega", omega);
    cert.matrices.emplace("xi", xi);
    return cert;
}

/// C_2^(R_a, R_a) is J_2 after relabelling x := a, 1 := b, y := c.
inline Certificate witness_lemma6(FieldDescriptor f = {}) {
    Certificate cert("C2 is isotopic to J2");
    const Algebra C = make_c2(f);
    const Element a = C.basis(0);
    const Matrix Ra = right_mult_matrix(a);
    cert.expect_equal("R_a = e12 + e21 + e33", Matrix::from_ints(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), Ra);
    cert.expect_equal("R_a^2 = I", Matrix::identity(f, 3), Ra * Ra);

    const Algebra A = standard_isotope(C, Ra);
    const Element ia = A.basis(0), ib = A.basis(1), ic = A.basis(2);
    cert.expect_equal("a*a = 0", A.zero(), ia * ia);
    cert.expect_equal("b*b = b", ib, ib * ib);
    cert.expect_equal("c*c = 0", A.zero(), ic * ic);
    cert.expect_equal("a*b = a", ia, ia * ib);
    cert.expect_equal("b*c = c", ic, ib * ic);
    cert.expect_equal("a*c = b", ib, ia * ic);

    // J2 basis (1, x, y) corresponds to (b, a, c).
    const std::size_t perm[3] = {1, 0, 2};
    StructureTensor relabelled(f, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) relabelled.at(i, j, k) = A.c(perm[i], perm[j], perm[k]);
    const Algebra J = make_j2(f);
    cert.expect_true("relabelled structure tensor equals that of J2", relabelled == J.tensor());
    const Matrix P = Matrix::from_ints(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    cert.expect_true("relabelling (1, x, y) -> (b, a, c) is an isomorphism J2 -> C2^(R_a, R_a)",
                     verify_isomorphism(J, A, P));
    const auto unit = find_unit(A);
    cert.expect_equal("unit of the isotope", ib.to_string(), unit ? unit->to_string() : "none");
    detail::check_unit_operator(cert, C, Ra, a);
    cert.matrices.emplace("phi", Ra);
    cert.matrices.emplace("relabel", P);
    return cert;
}

/// C(1,1,0) and C(1,0,0) = J_2 are isotopic but not isomorphic.
inline Certificate witness_lemma10(FieldDescriptor f = {}) {
    using detail::sc;
    Certificate cert("C(1,1,0) is isotopic but not isomorphic to C(1,0,0) = J2");
    const Algebra J = make_j2(f);
    const Element c = J.element({1, 1, 0});
    const Matrix Rc = right_mult_matrix(c);
    cert.expect_equal("R_c for c = 1 + x", Matrix::from_ints(f, {{1, 1, 0}, {0, 1, 0}, {1, 0, 1}}), Rc);
    const Matrix phi = mat_inv(Rc);
    cert.expect_equal("phi = R_c^-1", Matrix::from_ints(f, {{1, -1, 0}, {0, 1, 0}, {-1, 1, 1}}), phi);

    const Algebra iso = standard_isotope(J, phi);
    const Element e_j = c * c;
    cert.expect_equal("e = c^2 = 1 + 2x", J.element({1, 2, 0}), e_j);
    cert.expect_equal("e^phi = (1,2,0) phi = 1 + x = c", c, e_j.apply(phi));
    cert.expect_equal("a^phi = x for a = x", J.basis(1), J.basis(1).apply(phi));
    cert.expect_equal("b^phi = y for b = 1 + y", J.basis(2), J.element({1, 0, 1}).apply(phi));

    const Element e = iso.element(e_j.coords());
    const auto unit = find_unit(iso);
    cert.expect_equal("e is the unit of the isotope", e.to_string(), unit ? unit->to_string() : "none");

    const Scalar half = Scalar::fraction(f, 1, 2);
    const Element a1 = sc(f, -2) * iso.basis(1);
    const Element b1 = -half * iso.element({1, 0, 1});
    cert.expect_equal("a'*a' = 0 for a' = -2x", iso.zero(), a1 * a1);
    cert.expect_equal("b'*b' = 0 for b' = -1/2 (1 + y)", iso.zero(), b1 * b1);
    cert.expect_equal("a'*b' = e + a'", e + a1, a1 * b1);
    const Algebra C110 = make_c(sc(f, 1), sc(f, 1), sc(f, 0));
    const Matrix theta = Matrix::from_rows(f, {e.coords(), a1.coords(), b1.coords()});
    cert.expect_true("(e, a', b') is a canonical basis: C(1,1,0) -> J2^(phi, phi) is an isomorphism",
                     verify_isomorphism(C110, iso, theta), {{"theta", theta.to_string()}});

    const Algebra C100 = make_c(sc(f, 1), sc(f, 0), sc(f, 0));
    cert.expect_true("C(1,0,0) is Jordan", is_jordan(C100));
    cert.expect_true("C(1,1,0) is not Jordan", !is_jordan(C110));
    const Element x = C110.basis(1), y = C110.basis(2);
    cert.expect_equal("associator (xy, x, y) = -x in C(1,1,0)", -x, associator(x * y, x, y));
    const auto f3 = FieldDescriptor::prime(3);
    const auto found = isomorphism_search(make_j2(f3), make_c(sc(f3, 1), sc(f3, 1), sc(f3, 0)));
    cert.expect_true("no isomorphism J2 -> C(1,1,0) over F_3 (exhaustive scan)", !found.has_value());

    detail::check_unit_operator(cert, J, phi, c);
    cert.expect_true("phi = R_{1+x}^-1 is not a right multiplication", !express_as_right_mult(J, phi).has_value());

    const Matrix tp = theta * phi;
    cert.expect_true("(theta phi, theta phi, theta) is an isotopy C(1,1,0) -> J2",
                     verify_isotopy(C110, J, {tp, tp, theta}));
    cert.matrices.emplace("R_c", Rc);
    cert.matrices.emplace("phi", phi);
    cert.matrices.emplace("theta", theta);
    return cert;
}

/// C(rho), rho != 0, -2, is isotopic to J_2 through the standard isotope by R_c^-1,
/// c = 1 + gamma x + y, gamma = rho / (2 rho + 4).
inline Certificate witness_lemma11(const Scalar& rho) {
    using detail::sc;
    const auto f = rho.field();
    if (rho.is_zero()) throw DomainError("rho = 0: C(0) is not simple");
    if (rho == sc(f, -2)) throw DomainError("rho = -2: C(-2) has nil-rank 3");
    Certificate cert("C(" + rho.to_string() + ") is isotopic to J2");
    const Scalar one = sc(f, 1), two = sc(f, 2);
    const Scalar gamma = rho / (two * rho + sc(f, 4));
    const Scalar delta = (one - two * gamma).inverse();
    cert.expect_true("gamma = rho/(2 rho + 4) is neither 0 nor 1/2",
                     !gamma.is_zero() && !(two * gamma == one), {{"gamma", gamma.to_string()}});

    const Algebra J = make_j2(f);
    const Element c = J.element({one, gamma, one});
    const Matrix Rc = right_mult_matrix(c);
    const Scalar zero = sc(f, 0);
    cert.expect_equal("R_c for c = 1 + gamma x + y",
                      Matrix::from_rows(f, {{one, gamma, one}, {one, one, zero}, {gamma, zero, one}}), Rc);
    cert.expect_equal("det R_c = 1 - 2 gamma", one - two * gamma, det(Rc));
    const Matrix phi = mat_inv(Rc);
    cert.expect_equal("phi = R_c^-1 = delta [[1,-g,-1],[-1,1-g,1],[-g,g^2,1-g]]",
                      delta * Matrix::from_rows(f, {{one, -gamma, -one},
                                                    {-one, one - gamma, one},
                                                    {-gamma, gamma * gamma, one - gamma}}),
                      phi);

    const Algebra iso = standard_isotope(J, phi);
    const Element e_j = c * c;
    cert.expect_equal("e = c^2 = (1 + 2 gamma)1 + 2 gamma x + 2y", J.element({one + two * gamma, two * gamma, two}), e_j);
    const Element e = iso.element(e_j.coords());
    const auto unit = find_unit(iso);
    cert.expect_equal("e is the unit of the isotope", e.to_string(), unit ? unit->to_string() : "none");

    const Element xc = J.basis(1) * c, yc = J.basis(2) * c;
    cert.expect_equal("x' = xc = 1 + x", J.element({1, 1, 0}), xc);
    cert.expect_equal("y' = yc = gamma 1 + y", J.element({gamma, zero, one}), yc);
    cert.expect_equal("x'^phi = x", J.basis(1), xc.apply(phi));
    cert.expect_equal("y'^phi = y", J.basis(2), yc.apply(phi));
    const Element x1 = iso.element(xc.coords()), y1 = iso.element(yc.coords());
    cert.expect_equal("x'*x' = 0", iso.zero(), x1 * x1);
    cert.expect_equal("y'*y' = 0", iso.zero(), y1 * y1);
    const Element rhs = delta * (e - two * gamma * x1 - two * y1);
    cert.expect_equal("x'*y' = delta (e - 2 gamma x' - 2 y')", rhs, x1 * y1);
    cert.expect_equal("1 = delta (e - 2 gamma x' - 2 y')", iso.basis(0), rhs);

    const Scalar a2 = delta, b2 = -two * gamma * delta, g2 = -two * delta;
    const Matrix basis = Matrix::from_rows(f, {e.coords(), x1.coords(), y1.coords()});
    cert.expect_true("(e, x', y') is a canonical basis: C(delta, -2 gamma delta, -2 delta) -> J2^(phi, phi)",
                     verify_isomorphism(make_c(a2, b2, g2), iso, basis));
    const CanonicalForm canon = canonicalize_C(a2, b2, g2);
    cert.absorb(canon.certificate);
    const Scalar recovered = canon.rho.value_or(zero);
    cert.expect_equal("canonical parameter is 4 gamma delta", sc(f, 4) * gamma * delta, recovered);
    cert.expect_equal("4 gamma delta = rho", rho, recovered);

    const Matrix theta = canon.basis_change * basis;
    cert.expect_true("C(rho) -> J2^(phi, phi) is an isomorphism", verify_isomorphism(make_c_rho(rho), iso, theta),
                     {{"theta", theta.to_string()}});
    detail::check_unit_operator(cert, J, phi, c);
    const Matrix tp = theta * phi;
    cert.expect_true("(theta phi, theta phi, theta) is an isotopy C(rho) -> J2",
                     verify_isotopy(make_c_rho(rho), J, {tp, tp, theta}));

    cert.scalars.emplace("gamma", gamma);
    cert.scalars.emplace("delta", delta);
    cert.scalars.emplace("rho_recovered", recovered);
    cert.matrices.emplace("R_c", Rc);
    cert.matrices.emplace("phi", phi);
    cert.matrices.emplace("theta", theta);
    return cert;
}

/// A simple C(alpha, beta, gamma) of nil-rank 2 is isotopic to J_2. Rank 2 means
/// beta gamma != -2 alpha (see nil_rank_exact_C).
inline Certificate witness_theorem1(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
    using detail::sc;
    const auto f = alpha.field();
    if (alpha.is_zero()) throw NonSimple("alpha = 0: C(alpha, beta, gamma) is not simple");
    if ((beta * gamma + sc(f, 2) * alpha).is_zero())
        throw NilRank3("beta gamma = -2 alpha: C(alpha, beta, gamma) has nil-rank 3");
    Certificate cert("C(" + alpha.to_string() + ", " + beta.to_string() + ", " + gamma.to_string() +
                     ") is isotopic to J2");
    const Algebra source = make_c(alpha, beta, gamma);
    const Algebra J = make_j2(f);
    const CanonicalForm canon = canonicalize_C(alpha, beta, gamma);
    cert.absorb(canon.certificate);
    const Matrix kappa = mat_inv(canon.basis_change);

    Matrix theta = Matrix::identity(f, 3), phi = Matrix::identity(f, 3);
    switch (canon.target) {
        case CanonicalForm::Target::Crho: {
            const Certificate sub = witness_lemma11(*canon.rho);
            cert.absorb(sub);
            theta = sub.matrices.at("theta");
            phi = sub.matrices.at("phi");
            break;
        }
        case CanonicalForm::Target::C110: {
            const Certificate sub = witness_lemma10(f);
            cert.absorb(sub);
            theta = sub.matrices.at("theta");
            phi = sub.matrices.at("phi");
            break;
        }
        case CanonicalForm::Target::C100:
            cert.expect_true("C(1,0,0) has the structure tensor of J2", canon.target_algebra == J);
            break;
    }
    const Matrix xi = kappa * theta;
    const Matrix xp = xi * phi;
    cert.expect_true("composed triple is an isotopy C(alpha, beta, gamma) -> J2",
                     verify_isotopy(source, J, {xp, xp, xi}),
                     {{"phi", xp.to_string()}, {"xi", xi.to_string()}});
    cert.matrices.emplace("isotopy_phi", xp);
    cert.matrices.emplace("isotopy_xi", xi);
    if (canon.rho) cert.scalars.emplace("rho", *canon.rho);
    return cert;
}

/// C_3 has a standard isotope isomorphic to C(-2), built from c = x + y + z.
inline Certificate witness_theorem2(FieldDescriptor f = {}) {
    using detail::sc;
    Certificate cert("C3 has a standard isotope isomorphic to C(-2)");
    const Algebra C = make_c3(f);
    const Element c = C.element({1, 1, 1});
    const Element e_c = c * c;
    cert.expect_equal("e = c^2 = (2, 2, 2)", C.element({2, 2, 2}), e_c);
    cert.expect_equal("c^2 = 2c", sc(f, 2) * c, e_c);
    const Matrix Rc = right_mult_matrix(c);
    cert.expect_equal("R_c", Matrix::from_ints(f, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), Rc);
    const Matrix phi = mat_inv(Rc);
    const Scalar half = Scalar::fraction(f, 1, 2);
    cert.expect_equal("phi = R_c^-1 = 1/2 [[-1,1,1],[1,-1,1],[1,1,-1]]",
                      half * Matrix::from_ints(f, {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}), phi);
    cert.expect_equal("(x + y)^phi = z", C.basis(2), C.element({1, 1, 0}).apply(phi));
    cert.expect_equal("(y + z)^phi = x", C.basis(0), C.element({0, 1, 1}).apply(phi));
    cert.expect_equal("(z + x)^phi = y", C.basis(1), C.element({1, 0, 1}).apply(phi));

    const Algebra iso = standard_isotope(C, phi);
    const Element x1 = iso.element({0, 1, 1}), y1 = iso.element({1, 0, 1}), z1 = iso.element({1, 1, 0});
    const Element e = iso.element(e_c.coords());
    cert.expect_true("x' = y + z, y' = z + x, z' = x + y square to zero in the isotope",
                     (x1 * x1).is_zero() && (y1 * y1).is_zero() && (z1 * z1).is_zero());
    cert.expect_equal("e = x' + y' + z'", e, x1 + y1 + z1);
    const auto unit = find_unit(iso);
    cert.expect_equal("e is the unit of the isotope", e.to_string(), unit ? unit->to_string() : "none");
    cert.expect_equal("x'*y' = z", iso.basis(2), x1 * y1);
    const Element a = sc(f, -2) * x1, b = sc(f, -2) * y1;
    cert.expect_equal("a*b = -2(e + a + b) for a = -2x', b = -2y'", sc(f, -2) * (e + a + b), a * b);
    const Matrix theta = Matrix::from_rows(f, {e.coords(), a.coords(), b.coords()});
    cert.expect_true("C(-2) -> C3^(phi, phi) is an isomorphism", verify_isomorphism(make_c_rho(sc(f, -2)), iso, theta),
                     {{"theta", theta.to_string()}});
    detail::check_unit_operator(cert, C, phi, c);
    cert.matrices.emplace("R_c", Rc);
    cert.matrices.emplace("phi", phi);
    cert.matrices.emplace("theta", theta);
    return cert;
}

inline constexpr std::size_t kMaxGn = 8;

/// G_n is simple: full multiplication envelope, and no F_3 ideals for small n.
inline Certificate witness_prop1(std::size_t n) {
    if (n < 2) throw DomainError("G_n needs n >= 2");
    if (n > kMaxGn) throw SearchBudgetExceeded("G_n witnesses limited to n <= 8");
    Certificate cert("G" + std::to_string(n) + " is simple");
    const Algebra G = make_gn(n);
    const std::size_t d = n + 1;
    cert.expect_equal("envelope dimension = (n+1)^2", std::to_string(d * d), std::to_string(envelope_dimension(G)));
    cert.expect_true("nonzero multiplication and full envelope", is_simple_closure(G));
    if (n <= 3) {
        const auto ideals = ideal_search_exhaustive(make_gn(n, FieldDescriptor::prime(3)));
        cert.expect_equal("proper ideals over F_3 (exhaustive)", "0", std::to_string(ideals.size()));
    }
    return cert;
}

/// The standard isotope of G_n by R_t^-1 (t = e) is unital with unit t^2 and has the proper
/// zero-multiplication ideal Z = V R_t, so G_n is not isotopically simple.
inline Certificate witness_prop2(std::size_t n) {
    if (n < 2) throw DomainError("G_n needs n >= 2");
    if (n > kMaxGn) throw SearchBudgetExceeded("G_n witnesses limited to n <= 8");
    Certificate cert("G" + std::to_string(n) + " is not isotopically simple");
    const Algebra G = make_gn(n);
    const auto f = G.field();
    const Element t = G.basis(n);
    const RMultReport rt = r_mult_report(t);
    cert.expect_true("R_t is invertible", rt.invertible, {{"det R_t", rt.determinant.to_string()}});
    if (!rt.invertible) return cert;
    const Matrix phi = mat_inv(rt.matrix);
    const Algebra iso = standard_isotope(G, phi);
    const Element t2 = iso.element((t * t).coords());
    const auto unit = find_unit(iso);
    cert.expect_equal("the unit of the isotope is t^2", t2.to_string(), unit ? unit->to_string() : "none");
    cert.expect_equal("t^2 = t", t, t * t);

    Subspace Z;
    for (std::size_t i = 0; i < n; ++i) Z.push_back(vec_mat(G.basis(i).coords(), rt.matrix));
    bool zero_products = true;
    for (const auto& zi : Z)
        for (const auto& zj : Z) zero_products = zero_products && (iso.element(zi) * iso.element(zj)).is_zero();
    cert.expect_true("z_i * z_j = 0 for z_i = x_i R_t", zero_products);
    cert.expect_equal("dim Z", std::to_string(n), std::to_string(rank(Z, n + 1)));
    cert.expect_true("Z is a two-sided ideal of the isotope", is_ideal(iso, Z));
    EchelonBasis span(f, n + 1);
    for (const auto& z : Z) span.insert(z);
    cert.expect_true("the unit is not in Z", unit && !span.contains(unit->coords()));
    const std::size_t env = envelope_dimension(iso);
    cert.expect_true("isotope envelope dimension < (n+1)^2", env < (n + 1) * (n + 1),
                     {{"envelope dimension", std::to_string(env)}});
    cert.expect_true("isotope is not simple over the closure", !is_simple_closure(iso));
    detail::check_unit_operator(cert, G, phi, t);
    cert.matrices.emplace("phi", phi);
    return cert;
}

}  // namespace albert

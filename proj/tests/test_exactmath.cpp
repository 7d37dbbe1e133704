#include <gtest/gtest.h>

#include "support.hpp"

using namespace albert;
using namespace albert::testing;

TEST(FieldDescriptor, RejectsCharacteristicTwo) {
    EXPECT_THROW(FieldDescriptor::prime(2), Char2Field);
    EXPECT_THROW(FieldDescriptor::prime(2), InvalidField);
}

TEST(FieldDescriptor, RejectsNonPrimes) {
    for (std::int64_t n : {-7, 0, 1, 4, 9, 15, 91}) EXPECT_THROW(FieldDescriptor::prime(n), InvalidField) << n;
    EXPECT_THROW(FieldDescriptor::prime(kMaxModulus + 2), InvalidField);
    EXPECT_NO_THROW(FieldDescriptor::prime(kMaxModulus));
}

TEST(Scalar, RationalsAreStoredInLowestTerms) {
    const Scalar s = Scalar::fraction(Q, 6, -4);
    EXPECT_EQ(s.numerator(), -3);
    EXPECT_EQ(s.denominator(), 2);
    EXPECT_EQ(s.to_string(), "-3/2");
    EXPECT_EQ(Scalar::parse(Q, "-3/2"), s);
    EXPECT_EQ(Scalar::parse(Q, " 12/-8 "), s);
}

TEST(Scalar, NormalizationPropertyOverRandomRepresentations) {
    Gen g(11);
    for (int trial = 0; trial < 500; ++trial) {
        const auto num = g.integer(-50, 50), den = g.integer(1, 40), k = g.integer(1, 30) * (g.integer(0, 1) ? 1 : -1);
        const Scalar a = Scalar::fraction(Q, num, den);
        const Scalar b = Scalar::fraction(Q, num * k, den * k);
        EXPECT_EQ(a, b);
        EXPECT_EQ(a.to_string(), b.to_string());
        EXPECT_GT(b.denominator(), 0);
        EXPECT_EQ(boost::multiprecision::gcd(b.numerator(), b.denominator()), num == 0 ? b.denominator() : 1);
    }
}

TEST(Scalar, ResiduesAreReduced) {
    EXPECT_EQ(Scalar(F5, -1).residue(), 4);
    EXPECT_EQ(Scalar(F5, 17).residue(), 2);
    EXPECT_EQ(Scalar::parse(F5, "1/2").residue(), 3);
    EXPECT_EQ(Scalar::parse(F5, "-3/2").to_string(), "1");
    EXPECT_THROW(Scalar::parse(F5, "1/5"), DomainError);
    EXPECT_THROW(Scalar::parse(Q, "1/0"), DomainError);
    EXPECT_THROW(Scalar::parse(Q, "x"), DomainError);
}

TEST(Scalar, MixedFieldsAreRejected) {
    EXPECT_THROW(Scalar(Q, 1) + Scalar(F5, 1), FieldMismatch);
    EXPECT_THROW(Scalar(F3, 1) * Scalar(F5, 1), FieldMismatch);
    EXPECT_THROW(Scalar(Q, 0).inverse(), DomainError);
}

TEST(Scalar, FieldAxiomsOnRandomSamples) {
    for (auto f : {Q, F5, F7}) {
        Gen g(f.is_rational() ? 1 : f.modulus());
        for (int trial = 0; trial < 300; ++trial) {
            const Scalar a = g.scalar(f), b = g.scalar(f), c = g.scalar(f);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a - a, Scalar::zero(f));
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inverse()).is_one());
            }
        }
    }
}

TEST(ExactSqrt, RationalAndPrime) {
    EXPECT_EQ(exact_sqrt(Scalar(Q, 4)), Scalar(Q, 2));
    EXPECT_EQ(exact_sqrt(Scalar::fraction(Q, 9, 25)), Scalar::fraction(Q, 3, 5));
    EXPECT_FALSE(exact_sqrt(Scalar(Q, 2)));
    EXPECT_FALSE(exact_sqrt(Scalar(Q, -4)));
    for (std::int64_t a = 1; a < 7; ++a) {
        const Scalar s(F7, a);
        const auto r = exact_sqrt(s);
        EXPECT_EQ(r.has_value(), is_quadratic_residue(s)) << a;
        if (r) {
            EXPECT_EQ(*r * *r, s);
        }
    }
}

TEST(MatMul, IdentityAndKnownInversePair) {
    Gen g(3);
    const Matrix M = g.matrix(Q, 3);
    EXPECT_EQ(Matrix::identity(Q, 3) * M, M);
    const Matrix Rc = Matrix::from_ints(Q, {{1, 1, 0}, {0, 1, 0}, {1, 0, 1}});
    const Matrix phi = Matrix::from_ints(Q, {{1, -1, 0}, {0, 1, 0}, {-1, 1, 1}});
    EXPECT_EQ(Rc * phi, Matrix::identity(Q, 3));
    EXPECT_EQ(Matrix::from_ints(F5, {{2, 0}, {0, 3}}) * Matrix::from_ints(F5, {{3, 0}, {0, 2}}),
              Matrix::identity(F5, 2));
}

TEST(MatMul, MismatchesThrow) {
    EXPECT_THROW(Matrix::identity(Q, 2) * Matrix::identity(Q, 3), DimensionMismatch);
    EXPECT_THROW(Matrix::identity(Q, 2) * Matrix::identity(F5, 2), FieldMismatch);
}

TEST(MatInv, CRhoOperatorClosedForm) {
    const Scalar g = frac(1, 6), one(Q, 1), zero(Q, 0);
    const Matrix Rc = Matrix::from_rows(Q, {{one, g, one}, {one, one, zero}, {g, zero, one}});
    const Scalar delta = (one - Scalar(Q, 2) * g).inverse();
    const Matrix expected =
        delta * Matrix::from_rows(Q, {{one, -g, -one}, {-one, one - g, one}, {-g, g * g, one - g}});
    EXPECT_EQ(mat_inv(Rc), expected);
}

TEST(MatInv, CThreeOperator) {
    const Matrix R = Matrix::from_ints(Q, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    EXPECT_EQ(mat_inv(R), frac(1, 2) * Matrix::from_ints(Q, {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}));
    EXPECT_EQ(mat_inv(Matrix::identity(Q, 4)), Matrix::identity(Q, 4));
    EXPECT_THROW(mat_inv(Matrix::from_ints(Q, {{1, 2}, {2, 4}})), Singular);
}

TEST(MatInv, InverseIsTwoSidedOnRandomInvertibles) {
    for (auto f : {Q, F5, F7}) {
        Gen g(29);
        for (int trial = 0; trial < 60; ++trial) {
            const Matrix M = g.invertible(f, 1 + trial % 4);
            const Matrix I = Matrix::identity(f, M.size());
            EXPECT_EQ(M * mat_inv(M), I);
            EXPECT_EQ(mat_inv(M) * M, I);
        }
    }
}

TEST(Det, AgreesWithCofactorExpansion) {
    for (auto f : {Q, F5}) {
        Gen g(5);
        for (int trial = 0; trial < 100; ++trial) {
            const Matrix M = g.matrix(f, 1 + trial % 5);
            EXPECT_EQ(det(M), det_laplace(M));
        }
    }
}

TEST(Det, IsMultiplicative) {
    for (auto f : {Q, F5}) {
        Gen g(8);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 1 + trial % 4;
            const Matrix A = g.matrix(f, n), B = g.matrix(f, n);
            EXPECT_EQ(det(A * B), det(A) * det(B));
        }
    }
}

TEST(Det, JTwoRightMultiplication) {
    Gen g(2);
    for (int trial = 0; trial < 30; ++trial) {
        const Scalar a = g.scalar(Q), b = g.scalar(Q);
        const Matrix R = right_mult_matrix(make_j2(Q).element({Scalar(Q, 1), a, b}));
        EXPECT_EQ(det(R), Scalar(Q, 1) - Scalar(Q, 2) * a * b);
    }
}

TEST(Rank, SpanOfCoordinateRows) {
    const std::vector<Vector> rows{{Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 0)},
                                   {Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 1)},
                                   {Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 1)}};
    EXPECT_EQ(rank(rows, 3), 2u);
    EXPECT_EQ(rank(Matrix::identity(F3, 3)), 3u);
    EXPECT_EQ(rank(Matrix(F3, 3)), 0u);
}

TEST(Solve, UnitSystemForCTwoHasNoSolution) {
    const Algebra C2 = make_c2(Q);
    // u e_i = e_i and e_i u = e_i, unknowns u_1..u_3
    std::vector<LinearEquation> eqs;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            Vector right, left;
            for (std::size_t j = 0; j < 3; ++j) {
                right.push_back(C2.c(i, j, k));
                left.push_back(C2.c(j, i, k));
            }
            const Scalar rhs(Q, i == k ? 1 : 0);
            eqs.push_back({right, rhs});
            eqs.push_back({left, rhs});
        }
    EXPECT_EQ(solve(Q, 3, eqs).kind, SolutionSet::Kind::None);
}

TEST(Solve, ReportsUniqueAndAffineSolutions) {
    const std::vector<LinearEquation> unique{{{Scalar(Q, 1), Scalar(Q, 1)}, Scalar(Q, 3)},
                                             {{Scalar(Q, 1), Scalar(Q, -1)}, Scalar(Q, 1)}};
    const auto u = solve(Q, 2, unique);
    ASSERT_EQ(u.kind, SolutionSet::Kind::Unique);
    EXPECT_EQ(u.point, (Vector{Scalar(Q, 2), Scalar(Q, 1)}));

    const std::vector<LinearEquation> affine{{{Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, 0)}, Scalar(Q, 4)}};
    const auto a = solve(Q, 3, affine);
    ASSERT_EQ(a.kind, SolutionSet::Kind::Affine);
    EXPECT_EQ(a.point, (Vector{Scalar(Q, 4), Scalar(Q, 0), Scalar(Q, 0)}));
    EXPECT_EQ(a.kernel.size(), 2u);
    for (const auto& k : a.kernel) EXPECT_TRUE((k[0] + Scalar(Q, 2) * k[1]).is_zero());

    const std::vector<LinearEquation> mixed{{{Scalar(F5, 1)}, Scalar(Q, 1)}};
    EXPECT_THROW(solve(F5, 1, mixed), FieldMismatch);
}

TEST(RandomInvertible, DeterministicAndInvertible) {
    const Matrix a = random_invertible(F5, 3, 1), b = random_invertible(F5, 3, 1);
    EXPECT_EQ(a, b);
    EXPECT_FALSE(det(a).is_zero());
    EXPECT_EQ(rank(random_invertible(F3, 2, 7)), 2u);
    for (std::uint64_t seed = 0; seed < 100; ++seed) EXPECT_FALSE(det(random_invertible(Q, 3, seed)).is_zero());
}

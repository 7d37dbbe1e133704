#include <gtest/gtest.h>

#include "support.hpp"

using namespace albert;
using namespace albert::testing;

namespace {

void expect_well_formed(const NilReport& r, std::size_t n) {
    EXPECT_EQ(r.rank, r.witnesses.size());
    std::vector<Vector> rows;
    for (const auto& w : r.witnesses) {
        EXPECT_TRUE(is_nil_index2(w)) << w.to_string();
        rows.push_back(w.coords());
    }
    if (!rows.empty()) {
        EXPECT_EQ(rank(rows, n), rows.size());
    }
}

}  // namespace

TEST(IsNilIndex2, Examples) {
    const Algebra J = make_j2(Q);
    EXPECT_TRUE(is_nil_index2(J.basis(1)));
    EXPECT_FALSE(is_nil_index2(J.element({0, 1, 1})));
    EXPECT_FALSE(is_nil_index2(J.zero()));
    const Algebra C = make_c_rho(Scalar(Q, -2));
    EXPECT_TRUE(is_nil_index2(C.element({Scalar(Q, 1), frac(1, 2), frac(1, 2)})));
}

TEST(NilSet, JTwoIsTheUnionOfTheCoordinateLines) {
    for (auto f : {F3, F5, F7}) {
        const Algebra J = make_j2(f);
        const auto nils = nil_set_bruteforce(J);
        const std::size_t p = static_cast<std::size_t>(f.modulus());
        EXPECT_EQ(nils.size(), 2 * (p - 1));
        for (const auto& a : nils) EXPECT_TRUE(a[0].is_zero() && (a[1].is_zero() || a[2].is_zero()));
    }
}

TEST(NilSet, CTwoIsTheUnionOfLinesThroughBAndC) {
    const auto nils = nil_set_bruteforce(make_c2(F5));
    EXPECT_EQ(nils.size(), 8u);
    for (const auto& a : nils) EXPECT_TRUE(a[0].is_zero() && (a[1].is_zero() || a[2].is_zero()));
}

TEST(NilSet, CThreeContainsItsBasis) {
    const Algebra C3 = make_c3(F3);
    const auto nils = nil_set_bruteforce(C3);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_NE(std::find(nils.begin(), nils.end(), C3.basis(i)), nils.end());
}

TEST(NilSet, CountAgreesWithDirectEvaluation) {
    for (auto f : {F3, F5, F7})
        for (const auto& [name, A] : catalog(f)) {
            if (A.dim() > 3) continue;
            EXPECT_EQ(nil_set_bruteforce(A).size(), count_nils_direct(A)) << name;
        }
}

TEST(NilSet, ScanOrderIsLexicographic) {
    const auto nils = nil_set_bruteforce(make_c3(F5));
    for (std::size_t i = 1; i < nils.size(); ++i) {
        std::vector<std::int64_t> a, b;
        for (std::size_t k = 0; k < 3; ++k) {
            a.push_back(nils[i - 1][k].residue());
            b.push_back(nils[i][k].residue());
        }
        EXPECT_LT(a, b);
    }
}

TEST(NilSet, BudgetAndFieldChecks) {
    EXPECT_THROW(nil_set_bruteforce(make_j2(Q)), DomainError);
    EXPECT_THROW(nil_set_bruteforce(make_gn(7, F7)), SearchBudgetExceeded);
}

TEST(NilRankBruteForce, FrozenTable) {
    EXPECT_EQ(nil_rank_bruteforce(make_j2(F5)).rank, 2u);
    EXPECT_EQ(nil_rank_bruteforce(make_c2(F5)).rank, 2u);
    EXPECT_EQ(nil_rank_bruteforce(make_c3(F5)).rank, 3u);
    EXPECT_EQ(nil_rank_bruteforce(make_c_rho(Scalar(F5, -2))).rank, 3u);
    EXPECT_EQ(nil_rank_bruteforce(make_c_rho(Scalar(F5, 1))).rank, 2u);
    EXPECT_EQ(nil_rank_bruteforce(make_c(Scalar(F5, 1), Scalar(F5, 1), Scalar(F5, 0))).rank, 2u);
    const auto r = nil_rank_bruteforce(make_j2(F5));
    EXPECT_EQ(r.method, NilReport::Method::BruteForceFp);
    EXPECT_TRUE(r.closure_caveat);
}

TEST(NilRankBruteForce, ReportsAreWellFormed) {
    for (auto f : {F3, F5, F7})
        for (const auto& [name, A] : catalog(f)) {
            if (A.dim() > 3) continue;
            expect_well_formed(nil_rank_bruteforce(A), A.dim());
        }
}

TEST(NilRankExact, Examples) {
    const auto r = nil_rank_exact_C(Scalar(Q, -2), Scalar(Q, -2), Scalar(Q, -2));
    EXPECT_EQ(r.rank, 3u);
    const Algebra C = make_c_rho(Scalar(Q, -2));
    EXPECT_EQ(r.witnesses.at(2), C.element({Scalar(Q, 1), frac(1, 2), frac(1, 2)}));
    EXPECT_EQ(r.method, NilReport::Method::ExactCFamily);
    EXPECT_FALSE(r.closure_caveat);
    EXPECT_EQ(nil_rank_exact_C(Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, 0)).rank, 2u);
    EXPECT_EQ(nil_rank_exact_C(Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, -2)).rank, 3u);
    EXPECT_THROW(nil_rank_exact_C(Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 1)), DomainError);
}

TEST(NilRankExact, WitnessesAreValidOverTheRationals) {
    Gen g(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Scalar a = g.nonzero(Q), b = g.scalar(Q);
        // Half of the samples sit on the rank-3 surface b g = -2 a.
        const Scalar c = (trial % 2 && !b.is_zero()) ? Scalar(Q, -2) * a / b : g.scalar(Q);
        const auto r = nil_rank_exact_C(a, b, c);
        expect_well_formed(r, 3);
        EXPECT_EQ(r.rank == 3, (b * c + Scalar(Q, 2) * a).is_zero());
    }
}

TEST(NilRankExact, AgreesWithBruteForceOnFullSweeps) {
    for (auto f : {F5, F7}) {
        const std::int64_t p = f.modulus();
        for (std::int64_t a = 1; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b)
                for (std::int64_t c = 0; c < p; ++c) {
                    const Scalar sa(f, a), sb(f, b), sc(f, c);
                    EXPECT_EQ(nil_rank_exact_C(sa, sb, sc).rank, nil_rank_bruteforce(make_c(sa, sb, sc)).rank)
                        << "(" << a << "," << b << "," << c << ") over " << f.to_string();
                }
    }
}

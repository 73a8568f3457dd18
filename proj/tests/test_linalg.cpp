#include <catch_amalgamated.hpp>

#include "talg/linalg.hpp"

#include "test_util.hpp"

using namespace talg;

namespace {
const ScalarField Q{1};
const ScalarField Q12{12};
} // namespace

TEST_CASE("rref basics") {
    Mat id = Mat::identity(Q, 3);
    auto rr = rref(id);
    CHECK(rr.r == id);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});

    Mat zero(Q, 2, 3);
    auto rz = rref(zero);
    CHECK(rz.r == zero);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref rank-1 over Q(zeta_12)") {
    // rows ((1, q), (q^2, 1)): second row is q^2 times the first since q^2 q = 1
    CycScalar q = CycScalar::zeta_pow(Q12, 4);
    Mat m(Q12, 2, 2);
    m.at(0, 0) = CycScalar::one(Q12);
    m.at(0, 1) = q;
    m.at(1, 0) = q * q;
    m.at(1, 1) = CycScalar::one(Q12);
    CHECK(q * q * q == CycScalar::one(Q12));
    auto rr = rref(m);
    CHECK(rr.pivots.size() == 1);
    CHECK(rr.r.at(0, 0) == CycScalar::one(Q12));
    CHECK(rr.r.at(0, 1) == q);
    CHECK(rr.r.row(1).is_zero());
}

TEST_CASE("rref idempotence and rank-nullity on random matrices") {
    testutil::Rng rng;
    for (int t = 0; t < 30; ++t) {
        std::size_t rows = 1 + t % 4, cols = 1 + (t * 7) % 5;
        Mat m = rng.mat(t % 2 ? Q12 : Q, rows, cols);
        auto rr = rref(m);
        CHECK(rref(rr.r).r == rr.r);
        CHECK(rr.pivots.size() + nullspace(m).size() == cols);
        for (const auto& v : nullspace(m)) CHECK(m.apply(v).is_zero());
    }
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace(Mat::identity(Q, 4)).empty());

    Mat m(Q, 1, 2);
    m.at(0, 0) = CycScalar::one(Q);
    m.at(0, 1) = -CycScalar::one(Q);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] == CycScalar::one(Q));
    CHECK(ns[0][1] == CycScalar::one(Q));
}

TEST_CASE("quotient basis") {
    SECTION("no relations: quotient = ambient") {
        auto qb = quotient_basis(Q, 3, {});
        CHECK(qb.dim() == 3);
        CHECK(qb.relation_rank == 0);
        CHECK(qb.projection == Mat::identity(Q, 3));
    }
    SECTION("relations spanning everything: zero quotient") {
        std::vector<Vec> rel;
        for (std::size_t i = 0; i < 3; ++i) rel.push_back(Vec::unit(Q, 3, i));
        auto qb = quotient_basis(Q, 3, rel);
        CHECK(qb.dim() == 0);
        CHECK(qb.relation_rank == 3);
    }
    SECTION("single identification e0 - e1 in dim 4") {
        Vec r(Q, 4);
        r[0] = CycScalar::one(Q);
        r[1] = -CycScalar::one(Q);
        auto qb = quotient_basis(Q, 4, {r});
        CHECK(qb.dim() == 3);
        CHECK(qb.representative_indices == std::vector<std::size_t>{1, 2, 3});
        CHECK(qb.project(Vec::unit(Q, 4, 0)) == qb.project(Vec::unit(Q, 4, 1)));
        CHECK(qb.project(r).is_zero());
    }
    SECTION("projection annihilates relations, fixes representatives (random)") {
        testutil::Rng rng;
        for (int t = 0; t < 10; ++t) {
            std::vector<Vec> rel;
            for (int i = 0; i < 3; ++i) rel.push_back(rng.vec(Q12, 6));
            auto qb = quotient_basis(Q12, 6, rel);
            for (const auto& r : rel) CHECK(qb.project(r).is_zero());
            for (std::size_t k = 0; k < qb.dim(); ++k) {
                Vec unit = Vec::unit(Q12, qb.dim(), k);
                CHECK(qb.project(qb.embed(unit)) == unit);
            }
            CHECK(qb.relation_rank + qb.dim() == 6);
        }
    }
}

TEST_CASE("solve_linear") {
    SECTION("identity system") {
        Mat id = Mat::identity(Q, 3);
        Vec b(Q, 3);
        b[0] = CycScalar::from_rational(Q, Rational(2));
        b[2] = CycScalar::from_rational(Q, Rational(-7));
        auto s = solve_linear(id, b);
        REQUIRE(s.ok());
        CHECK(*s.solution == b);
    }
    SECTION("inconsistent zero system") {
        Mat zero(Q, 2, 2);
        Vec b(Q, 2);
        b[1] = CycScalar::one(Q);
        auto s = solve_linear(zero, b);
        CHECK_FALSE(s.ok());
        CHECK(s.inconsistent_row == 0);
    }
    SECTION("least-index free variable set to zero") {
        Mat m(Q, 2, 2);
        m.at(0, 0) = CycScalar::one(Q);
        m.at(0, 1) = CycScalar::one(Q);
        Vec b(Q, 2);
        b[0] = CycScalar::from_rational(Q, Rational(2));
        auto s = solve_linear(m, b);
        REQUIRE(s.ok());
        CHECK((*s.solution)[0] == CycScalar::from_rational(Q, Rational(2)));
        CHECK((*s.solution)[1].is_zero());
    }
    SECTION("random consistent systems") {
        testutil::Rng rng;
        for (int t = 0; t < 20; ++t) {
            Mat m = rng.mat(Q12, 3, 4);
            Vec x0 = rng.vec(Q12, 4);
            Vec rhs = m.apply(x0);
            auto s = solve_linear(m, rhs);
            REQUIRE(s.ok());
            CHECK(m.apply(*s.solution) == rhs);
        }
    }
}

#include <catch_amalgamated.hpp>

#include "talg/catalog.hpp"
#include "talg/cubic.hpp"

#include "test_util.hpp"

using namespace talg;

namespace {
const ScalarField Q12{12};
CycScalar qroot() { return CycScalar::zeta_pow(Q12, 4); }
} // namespace

TEST_CASE("cubic triple product basics") {
    SECTION("all-zero input") {
        CubicMatrix z(Q12, 2);
        CHECK(cubic_triple_product(z, z, z).is_zero());
    }
    SECTION("dim 1 collapses to the scalar product") {
        ScalarField Q{1};
        CubicMatrix a(Q, 1), b(Q, 1), c(Q, 1);
        a.at(0, 0, 0) = CycScalar::from_rational(Q, Rational(2));
        b.at(0, 0, 0) = CycScalar::from_rational(Q, Rational(3));
        c.at(0, 0, 0) = CycScalar::from_rational(Q, Rational(-5));
        CHECK(cubic_triple_product(a, b, c).at(0, 0, 0) ==
              CycScalar::from_rational(Q, Rational(-30)));
    }
}

TEST_CASE("cubic products of the z3dim2 slices match frozen values") {
    TernaryAlgebra alg = catalog_z3dim2();
    CubicMatrix r0 = tensor_slice(alg, 0), r1 = tensor_slice(alg, 1);
    CycScalar one = CycScalar::one(Q12), q = qroot(), q2 = qroot() * qroot();

    // (rho^0 * rho^0 * rho^0): ones at (0,0,0), (0,1,1), (1,0,1), (1,1,0)
    CubicMatrix p000 = cubic_triple_product(r0, r0, r0);
    CubicMatrix e000(Q12, 2);
    e000.at(0, 0, 0) = one;
    e000.at(0, 1, 1) = one;
    e000.at(1, 0, 1) = one;
    e000.at(1, 1, 0) = one;
    CHECK(p000 == e000);

    // (rho^0 * rho^0 * rho^1): q^2 at (0,1,0), q at (1,0,0), 1 at (1,1,1)
    CubicMatrix p001 = cubic_triple_product(r0, r0, r1);
    CubicMatrix e001(Q12, 2);
    e001.at(0, 1, 0) = q2;
    e001.at(1, 0, 0) = q;
    e001.at(1, 1, 1) = one;
    CHECK(p001 == e001);

    // the q-skew combination of the slices, frozen: {rho^0 rho^0 rho^1}_q
    CubicMatrix s001 = cubic_qskew(r0, r0, r1, q);
    CubicMatrix es(Q12, 2);
    es.at(0, 0, 1) = -one;
    es.at(0, 1, 0) = -q;
    es.at(1, 0, 0) = -q2;
    CHECK(s001 == es);
}

TEST_CASE("cubic representation closure for z3dim2") {
    TernaryAlgebra alg = catalog_z3dim2();
    auto rep = check_cubic_representation(alg, qroot());
    REQUIRE(rep.closes);
    // exactly the conventions with conjugated slices close; first winner is
    // the identity ordering with lambda = -1
    CHECK(rep.winners.size() == 6);
    for (const auto& w : rep.winners) CHECK(w.conj_basis);
    const auto& first = rep.winners.front();
    CHECK(first.perm == "ijk");
    CHECK_FALSE(first.conj_coeff);
    CHECK(first.lambda == -CycScalar::one(Q12));
    // cyclic reorderings shift lambda by powers of q
    CHECK(rep.winners[1].perm == "jki");
    CHECK(rep.winners[1].lambda == -qroot());
    CHECK(rep.winners[2].perm == "kij");
    CHECK(rep.winners[2].lambda == -(qroot() * qroot()));
}

TEST_CASE("cubic representation degenerate and negative cases") {
    SECTION("zero algebra closes trivially") {
        TernaryAlgebra zero(Q12, 2);
        auto rep = check_cubic_representation(zero, qroot());
        CHECK(rep.closes);
        CHECK(rep.winners.size() == 24); // every convention, vacuously
    }
    SECTION("generic random tensor does not close") {
        testutil::Rng rng;
        TernaryAlgebra alg(Q12, 2);
        for (auto& e : alg.tensor.rho) e = rng.scalar(Q12);
        auto rep = check_cubic_representation(alg, qroot());
        CHECK_FALSE(rep.closes);
    }
    SECTION("preconditions") {
        TernaryAlgebra alg = catalog_z3dim2();
        CHECK_THROWS_AS(check_cubic_representation(alg, CycScalar::one(Q12)),
                        PreconditionError);
        TernaryAlgebra big(Q12, 4);
        CHECK_THROWS_AS(check_cubic_representation(big, qroot()), PreconditionError);
    }
}

TEST_CASE("exact Pauli matrices") {
    auto s = pauli_matrices(Q12);
    CycScalar i = CycScalar::zeta_pow(Q12, 3);
    // sigma_1 sigma_2 = i sigma_3, sigma_2 sigma_1 = -i sigma_3
    Mat s12 = s[0] * s[1];
    Mat s21 = s[1] * s[0];
    Mat is3 = s[2];
    for (auto& e : is3.entries) e = i * e;
    CHECK(s12 == is3);
    Mat mis3 = s[2];
    for (auto& e : mis3.entries) e = -i * e;
    CHECK(s21 == mis3);
    // squares are the identity
    CHECK(s[0] * s[0] == Mat::identity(Q12, 2));
    CHECK(s[1] * s[1] == Mat::identity(Q12, 2));
    CHECK_THROWS_AS(pauli_matrices(ScalarField{3}), PreconditionError);
}

TEST_CASE("pauli_check: uniform lambda = -2q") {
    CycScalar q = qroot();
    auto rep = pauli_check(q);
    REQUIRE(rep.pass);
    CycScalar minus2q = -(CycScalar::from_rational(Q12, Rational(2)) * q);
    CHECK(rep.lambda == minus2q);

    // spot oracle for (1,1,2): S = (1 - q + q^2) sigma_2 = -2q sigma_2
    auto s = pauli_matrices(Q12);
    Mat S = s[0] * s[0] * s[1];
    Mat T1 = s[0] * s[1] * s[0];
    Mat T2 = s[1] * s[0] * s[0];
    for (std::size_t t = 0; t < 4; ++t) S.entries[t] += q * T1.entries[t] + q * q * T2.entries[t];
    Mat expect = s[1];
    for (auto& e : expect.entries) e = minus2q * e;
    CHECK(S == expect);

    // spot oracle for (2,2,1): S = -2q sigma_1
    Mat S2 = s[1] * s[1] * s[0];
    Mat U1 = s[1] * s[0] * s[1];
    Mat U2 = s[0] * s[1] * s[1];
    for (std::size_t t = 0; t < 4; ++t)
        S2.entries[t] += q * U1.entries[t] + q * q * U2.entries[t];
    Mat expect2 = s[0];
    for (auto& e : expect2.entries) e = minus2q * e;
    CHECK(S2 == expect2);

    // (1,1,1): the combination vanishes with the vanishing rhs
    Mat S3 = s[0] * s[0] * s[0];
    Mat V1 = S3, V2 = S3;
    for (std::size_t t = 0; t < 4; ++t)
        S3.entries[t] += q * V1.entries[t] + q * q * V2.entries[t];
    CHECK(S3.is_zero());

    CHECK_THROWS_AS(pauli_check(CycScalar::zeta_pow(ScalarField{3}, 1)), PreconditionError);
}

TEST_CASE("pauli fixture algebra equals -2q times z3dim2") {
    TernaryAlgebra fix = catalog_pauli_fixture();
    TernaryAlgebra z = catalog_z3dim2();
    CycScalar minus2q = -(CycScalar::from_rational(Q12, Rational(2)) * qroot());
    for (std::size_t t = 0; t < z.tensor.rho.size(); ++t)
        CHECK(fix.tensor.rho[t] == minus2q * z.tensor.rho[t]);
}

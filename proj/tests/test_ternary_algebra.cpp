#include <catch_amalgamated.hpp>

#include "talg/catalog.hpp"
#include "talg/ternary_algebra.hpp"

#include "test_util.hpp"

using namespace talg;

namespace {
const ScalarField Q{1};
const ScalarField Q12{12};

CycScalar qroot() { return CycScalar::zeta_pow(Q12, 4); }

// The displayed dim-2 Z3-skew structure constants, written out directly
// (0-based indices).
TernaryAlgebra expected_z3dim2() {
    TernaryAlgebra t(Q12, 2);
    CycScalar one = CycScalar::one(Q12), q = qroot(), q2 = qroot() * qroot();
    t.tensor.at(0, 1, 1, 0) = one;
    t.tensor.at(0, 1, 0, 1) = q2;
    t.tensor.at(0, 0, 1, 1) = q;
    t.tensor.at(1, 0, 0, 1) = one;
    t.tensor.at(1, 0, 1, 0) = q2;
    t.tensor.at(1, 1, 0, 0) = q;
    return t;
}
} // namespace

TEST_CASE("z3dim2 reproduces the displayed structure constants entrywise") {
    CHECK(catalog_z3dim2().tensor == expected_z3dim2().tensor);
}

TEST_CASE("ternary product basics") {
    TernaryAlgebra alg = catalog_z3dim2();
    // [e2 e2 e1] = e1 (1-based), i.e. [e1 e1 e0] = e0
    CHECK(basis_product(alg, 1, 1, 0) == Vec::unit(Q12, 2, 0));
    // rho^i_{111} = rho^i_{222} = 0
    CHECK(basis_product(alg, 0, 0, 0).is_zero());
    CHECK(basis_product(alg, 1, 1, 1).is_zero());
    // trilinearity: zero slot kills the product
    testutil::Rng rng;
    Vec zero(Q12, 2);
    CHECK(ternary_product(alg, zero, rng.vec(Q12, 2), rng.vec(Q12, 2)).is_zero());
}

TEST_CASE("trilinearity in each slot on random exact inputs") {
    TernaryAlgebra alg = catalog_z3dim2();
    testutil::Rng rng;
    for (int t = 0; t < 20; ++t) {
        Vec a = rng.vec(Q12, 2), a2 = rng.vec(Q12, 2), b = rng.vec(Q12, 2), c = rng.vec(Q12, 2);
        CycScalar al = rng.scalar(Q12);
        Vec lhs = ternary_product(alg, al * a + a2, b, c);
        Vec rhs = al * ternary_product(alg, a, b, c) + ternary_product(alg, a2, b, c);
        CHECK(lhs == rhs);
        lhs = ternary_product(alg, b, al * a + a2, c);
        rhs = al * ternary_product(alg, b, a, c) + ternary_product(alg, b, a2, c);
        CHECK(lhs == rhs);
        lhs = ternary_product(alg, b, c, al * a + a2);
        rhs = al * ternary_product(alg, b, c, a) + ternary_product(alg, b, c, a2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("strong associativity of trivial ternary algebras") {
    TernaryAlgebra mt2 = catalog_matrix_trivial(2);
    auto res = check_associativity(mt2, AssocKind::strong);
    CHECK(res.pass);
    CHECK(res.checks == 3 * 1024); // 3 identities on 4^5 quintuples
}

TEST_CASE("metric algebras are B-associative") {
    CHECK(check_associativity(catalog_metric(Mat::identity(Q, 3)), AssocKind::B).pass);
    CHECK(check_associativity(
              catalog_metric(diagonal_metric(Q, {Rational(1), Rational(1), Rational(-1)})),
              AssocKind::B)
              .pass);
}

TEST_CASE("z3dim2 fails strong associativity with a reproducible counterexample") {
    auto res = check_associativity(catalog_z3dim2(), AssocKind::strong);
    REQUIRE_FALSE(res.pass);
    REQUIRE(res.counterexample.has_value());
    const auto& ce = *res.counterexample;
    CHECK(ce.tuple == std::vector<std::size_t>{0, 0, 0, 0, 1});
    CHECK(ce.identity == "central=right");
    CHECK(ce.residual[0].is_zero());
    CHECK(ce.residual[1] == -CycScalar::one(Q12));
}

TEST_CASE("single-identity kinds: the metric algebra separates them") {
    TernaryAlgebra m2 = catalog_metric(Mat::identity(Q, 2));
    CHECK_FALSE(check_associativity(m2, AssocKind::left).pass);    // [[abc]de]=[a[bcd]e]
    CHECK(check_associativity(m2, AssocKind::central).pass);       // [[abc]de]=[ab[cde]]
    CHECK_FALSE(check_associativity(m2, AssocKind::right).pass);   // [a[bcd]e]=[ab[cde]]
}

TEST_CASE("basis verdict agrees with random-vector evaluation") {
    testutil::Rng rng;
    auto eval_strong = [&](const TernaryAlgebra& alg, testutil::Rng& r) {
        Vec a = r.vec(alg.field, alg.dim), b = r.vec(alg.field, alg.dim),
            c = r.vec(alg.field, alg.dim), d = r.vec(alg.field, alg.dim),
            e = r.vec(alg.field, alg.dim);
        Vec L = ternary_product(alg, ternary_product(alg, a, b, c), d, e);
        Vec C = ternary_product(alg, a, ternary_product(alg, b, c, d), e);
        Vec R = ternary_product(alg, a, b, ternary_product(alg, c, d, e));
        return (L - C).is_zero() && (C - R).is_zero();
    };
    TernaryAlgebra good = catalog_matrix_trivial(2);
    for (int t = 0; t < 20; ++t) CHECK(eval_strong(good, rng));
    TernaryAlgebra bad = catalog_z3dim2();
    bool any_fail = false;
    for (int t = 0; t < 20; ++t) any_fail |= !eval_strong(bad, rng);
    CHECK(any_fail);
}

TEST_CASE("star structure checks") {
    SECTION("matrix algebra with transpose star passes") {
        TernaryAlgebra mt2 = catalog_matrix_trivial(2);
        CHECK(check_star(mt2).pass);
    }
    SECTION("identity star on a noncommutative algebra fails") {
        TernaryAlgebra mt2 = catalog_matrix_trivial(2);
        mt2.star = Mat::identity(Q, 4);
        auto res = check_star(mt2);
        REQUIRE_FALSE(res.pass);
        CHECK(res.counterexample->identity == "[abc]*=[c*b*a*]");
    }
    SECTION("one-dimensional algebra with identity star passes") {
        TernaryAlgebra one = catalog_matrix_trivial(1);
        one.star = Mat::identity(Q, 1);
        CHECK(check_star(one).pass);
    }
    SECTION("non-involutive star matrix is rejected") {
        TernaryAlgebra mt2 = catalog_matrix_trivial(2);
        Mat s = Mat::identity(Q, 4);
        s.at(0, 0) = CycScalar::from_rational(Q, Rational(2));
        mt2.star = s;
        auto res = check_star(mt2);
        REQUIRE_FALSE(res.pass);
        CHECK(res.counterexample->identity == "anti-involution");
    }
    SECTION("missing star throws") {
        TernaryAlgebra alg = catalog_z3dim2();
        CHECK_THROWS_AS(check_star(alg), PreconditionError);
    }
}

TEST_CASE("star_to_btype") {
    SECTION("matrix trivial with transpose: [abc]_* = a b^T c passes B") {
        TernaryAlgebra bt = star_to_btype(catalog_matrix_trivial(2));
        CHECK(bt.declared_kind == AssocKind::B);
        CHECK_FALSE(bt.conjugate_middle); // rational field: no conjugation
        CHECK(check_associativity(bt, AssocKind::B).pass);
        // [E01 E01 E01]_* = E01 E10 E01 = E01 (basis index 1)
        CHECK(basis_product(bt, 1, 1, 1) == Vec::unit(Q, 4, 1));
    }
    SECTION("one-dimensional algebra with trivial star is unchanged") {
        TernaryAlgebra one = catalog_matrix_trivial(1);
        one.star = Mat::identity(Q, 1);
        TernaryAlgebra bt = star_to_btype(one);
        CHECK(bt.tensor == one.tensor);
    }
    SECTION("diagonal 2-dim algebra with coordinate-swap star") {
        // diagonal matrices: e_i e_j = delta_ij e_i
        BinaryAlgebra diag(Q, 2);
        diag.at(0, 0, 0) = CycScalar::one(Q);
        diag.at(1, 1, 1) = CycScalar::one(Q);
        TernaryAlgebra alg = trivial_ternary(diag);
        Mat swap(Q, 2, 2);
        swap.at(0, 1) = CycScalar::one(Q);
        swap.at(1, 0) = CycScalar::one(Q);
        alg.star = swap;
        REQUIRE(check_star(alg).pass);
        TernaryAlgebra bt = star_to_btype(alg);
        CHECK(check_associativity(bt, AssocKind::B).pass);
        // [e_i e_j e_k]_* = [e_i swap(e_j) e_k]
        CHECK(basis_product(bt, 0, 1, 0) == Vec::unit(Q, 2, 0));
        CHECK(basis_product(bt, 0, 0, 0).is_zero());
    }
    SECTION("preconditions: star and strong associativity required") {
        CHECK_THROWS_AS(star_to_btype(catalog_z3dim2()), PreconditionError);
        TernaryAlgebra z = catalog_z3dim2();
        z.star = Mat::identity(Q12, 2);
        CHECK_THROWS_AS(star_to_btype(z), PreconditionError);
    }
}

TEST_CASE("symmetrized product") {
    SECTION("metric dim 2: delta_ij e_k + delta_jk e_i + delta_ki e_j") {
        TernaryAlgebra sym = symmetrize_product(catalog_metric(Mat::identity(Q, 2)));
        TernaryAlgebra expect(Q, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t k = 0; k < 2; ++k) {
                    Vec v(Q, 2);
                    if (i == j) v[k] += CycScalar::one(Q);
                    if (j == k) v[i] += CycScalar::one(Q);
                    if (k == i) v[j] += CycScalar::one(Q);
                    for (std::size_t n = 0; n < 2; ++n) expect.tensor.at(n, i, j, k) = v[n];
                }
        CHECK(sym.tensor == expect.tensor);
    }
    SECTION("zero algebra stays zero") {
        TernaryAlgebra zero(Q, 2);
        CHECK(symmetrize_product(zero).tensor.rho == zero.tensor.rho);
    }
    SECTION("z3dim2 symmetrizes to zero (1 + q + q^2 collapse)") {
        TernaryAlgebra alg = catalog_z3dim2();
        TernaryAlgebra sym = symmetrize_product(alg);
        // brute-force oracle: sum the three cyclic reindexings entrywise
        for (std::size_t n = 0; n < 2; ++n)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    for (std::size_t k = 0; k < 2; ++k) {
                        CycScalar expect = alg.tensor.at(n, i, j, k) + alg.tensor.at(n, j, k, i) +
                                           alg.tensor.at(n, k, i, j);
                        CHECK(sym.tensor.at(n, i, j, k) == expect);
                        CHECK(sym.tensor.at(n, i, j, k).is_zero());
                    }
    }
    SECTION("output invariant under cyclic reindexings") {
        testutil::Rng rng;
        TernaryAlgebra alg(Q12, 2);
        for (auto& e : alg.tensor.rho) e = rng.scalar(Q12);
        TernaryAlgebra sym = symmetrize_product(alg);
        for (std::size_t n = 0; n < 2; ++n)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    for (std::size_t k = 0; k < 2; ++k) {
                        CHECK(sym.tensor.at(n, i, j, k) == sym.tensor.at(n, j, k, i));
                        CHECK(sym.tensor.at(n, i, j, k) == sym.tensor.at(n, k, i, j));
                    }
    }
}

TEST_CASE("q-skew product") {
    SECTION("rejects non-primitive q") {
        TernaryAlgebra alg = catalog_metric(Mat::identity(Q12, 2));
        CHECK_THROWS_AS(qskew_product(alg, CycScalar::one(Q12)), PreconditionError);
        CHECK_THROWS_AS(qskew_product(alg, CycScalar::zeta_pow(Q12, 1)), PreconditionError);
        CHECK_THROWS_AS(qskew_product(alg, CycScalar::zeta_pow(Q12, 3)), PreconditionError);
    }
    SECTION("zero input gives zero output") {
        TernaryAlgebra zero(Q12, 2);
        CHECK(qskew_product(zero, qroot()).tensor.rho == zero.tensor.rho);
    }
    SECTION("q replaced by q^2 conjugates the output of a rational base") {
        TernaryAlgebra base = catalog_metric(Mat::identity(Q12, 2));
        TernaryAlgebra t1 = qskew_product(base, qroot());
        TernaryAlgebra t2 = qskew_product(base, qroot() * qroot());
        for (std::size_t t = 0; t < t1.tensor.rho.size(); ++t)
            CHECK(t2.tensor.rho[t] == t1.tensor.rho[t].conjugate());
    }
    SECTION("cyclic reindexing scales the q-skew output by q^2") {
        testutil::Rng rng;
        TernaryAlgebra alg(Q12, 2);
        for (auto& e : alg.tensor.rho) e = rng.scalar(Q12);
        TernaryAlgebra tau = qskew_product(alg, qroot());
        CycScalar q2 = qroot() * qroot();
        for (std::size_t n = 0; n < 2; ++n)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    for (std::size_t k = 0; k < 2; ++k)
                        CHECK(tau.tensor.at(n, j, k, i) == q2 * tau.tensor.at(n, i, j, k));
    }
}

TEST_CASE("metric algebra variants") {
    SECTION("middle with identity metric: {e_i e_j c} = delta_ij c") {
        TernaryAlgebra m = catalog_metric(Mat::identity(Q, 2));
        CHECK(basis_product(m, 0, 0, 1) == Vec::unit(Q, 2, 1));
        CHECK(basis_product(m, 0, 1, 1).is_zero());
    }
    SECTION("diag(1,-1) middle: {e2 e2 c} = -c") {
        TernaryAlgebra m = catalog_metric(diagonal_metric(Q, {Rational(1), Rational(-1)}));
        CHECK(basis_product(m, 1, 1, 0) == -CycScalar::one(Q) * Vec::unit(Q, 2, 0));
        CHECK(basis_product(m, 1, 1, 1) == -CycScalar::one(Q) * Vec::unit(Q, 2, 1));
    }
    SECTION("left and right variants") {
        TernaryAlgebra l = catalog_metric(Mat::identity(Q, 2), MetricVariant::left);
        CHECK(basis_product(l, 1, 0, 0) == Vec::unit(Q, 2, 1)); // <b,c> a
        TernaryAlgebra r = catalog_metric(Mat::identity(Q, 2), MetricVariant::right);
        CHECK(basis_product(r, 1, 0, 1) == Vec::unit(Q, 2, 0)); // <c,a> b
    }
    SECTION("combination reproducing the middle variant") {
        Mat g = Mat::identity(Q, 2);
        MetricCombination comb(g);
        Rational half(BigInt(1), BigInt(2));
        for (std::size_t l = 0; l < 2; ++l)
            for (std::size_t m = 0; m < 2; ++m)
                for (std::size_t n = 0; n < 2; ++n)
                    for (std::size_t i = 0; i < 2; ++i)
                        for (std::size_t j = 0; j < 2; ++j)
                            for (std::size_t k = 0; k < 2; ++k) {
                                Rational v;
                                if (l == i && m == j) v += half;
                                if (l == j && m == i) v += half;
                                if (n != k) v = Rational(0);
                                comb.at(l, m, n, i, j, k) = CycScalar::from_rational(Q, v);
                            }
        CHECK(metric_algebra(comb).tensor == catalog_metric(g).tensor);
    }
    SECTION("invalid metrics are rejected") {
        Mat asym(Q, 2, 2);
        asym.at(0, 1) = CycScalar::one(Q);
        CHECK_THROWS_AS(metric_algebra(asym, MetricVariant::middle), PreconditionError);
        Mat sing(Q, 2, 2);
        sing.at(0, 0) = CycScalar::one(Q);
        CHECK_THROWS_AS(metric_algebra(sing, MetricVariant::middle), PreconditionError);
    }
}

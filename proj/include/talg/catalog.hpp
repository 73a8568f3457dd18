#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "talg/binary_algebra.hpp"
#include "talg/cubic.hpp"
#include "talg/free_ternary.hpp"
#include "talg/ternary_algebra.hpp"

namespace talg {

/// The dim-2 Z_3-skew algebra over Q(zeta_12): q-skew product of the
/// middle-variant identity-metric algebra, q = zeta^4.  Not strongly
/// associative.
inline TernaryAlgebra catalog_z3dim2() {
    ScalarField f{12};
    TernaryAlgebra base = metric_algebra(Mat::identity(f, 2), MetricVariant::middle);
    TernaryAlgebra out = qskew_product(base, CycScalar::zeta_pow(f, 4));
    out.declared_kind = AssocKind::none;
    return out;
}

/// Trivial ternary algebra of the full matrix algebra M_n (dimension n^2),
/// with transpose as the star structure.
inline TernaryAlgebra catalog_matrix_trivial(std::size_t n, ScalarField f = ScalarField{1}) {
    if (n == 0) throw PreconditionError("matrix_trivial: size must be positive");
    TernaryAlgebra out = trivial_ternary(matrix_binary_algebra(n, f));
    Mat star(f, n * n, n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) star.at(s * n + r, r * n + s) = CycScalar::one(f);
    out.star = star;
    return out;
}

/// Metric-induced algebra with the given symmetric nondegenerate metric.
inline TernaryAlgebra catalog_metric(const Mat& g, MetricVariant variant = MetricVariant::middle) {
    return metric_algebra(g, variant);
}

inline Mat diagonal_metric(ScalarField f, const std::vector<Rational>& diag) {
    Mat g(f, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        g.at(i, i) = CycScalar::from_rational(f, diag[i]);
    return g;
}

/// The dim-2 ternary algebra realized by the q-skew triple product on two
/// exact Pauli matrices over Q(zeta_12); its structure constants are computed
/// from the matrix products (they come out as -2q times the z3dim2 tensor).
inline TernaryAlgebra catalog_pauli_fixture() {
    ScalarField f{12};
    CycScalar q = CycScalar::zeta_pow(f, 4);
    CycScalar i = CycScalar::zeta_pow(f, 3);
    CycScalar two = CycScalar::from_rational(f, Rational(2));
    auto sigma = pauli_matrices(f);
    TernaryAlgebra out(f, 2);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c) {
                Mat S = sigma[a] * sigma[b] * sigma[c];
                Mat T1 = sigma[b] * sigma[c] * sigma[a];
                Mat T2 = sigma[c] * sigma[a] * sigma[b];
                for (std::size_t t = 0; t < 4; ++t)
                    S.entries[t] += q * T1.entries[t] + q * q * T2.entries[t];
                // decompose S = x sigma_1 + y sigma_2 over the exact field
                if (!S.at(0, 0).is_zero() || !S.at(1, 1).is_zero())
                    throw Error("pauli fixture: combination not in span{sigma_1, sigma_2}");
                CycScalar x = (S.at(0, 1) + S.at(1, 0)) / two;
                CycScalar y = i * (S.at(0, 1) - S.at(1, 0)) / two;
                out.tensor.at(0, a, b, c) = x;
                out.tensor.at(1, a, b, c) = y;
            }
    return out;
}

/// Free ternary algebra fixture (truncated).
inline FreeTernary catalog_free_truncated(std::size_t generators, std::size_t degree_cap,
                                          ScalarField f = ScalarField{12}) {
    return FreeTernary(generators, degree_cap, f);
}

struct CatalogEntry {
    std::string name;
    std::string params;
    std::string description;
};

inline std::vector<CatalogEntry> catalog_list() {
    return {
        {"z3dim2", "", "dim-2 Z3-skew algebra over Q(zeta_12); fails strong associativity"},
        {"metric", "--dim N [--diag a,b,...] [--variant middle|left|right] [--order n]",
         "metric-induced algebra <a,b>c (middle variant is B-associative)"},
        {"matrix_trivial", "--size n [--order n]",
         "trivial ternary algebra of M_n with transpose star; strongly associative"},
        {"pauli_fixture", "", "q-skew triple product on two Pauli matrices over Q(zeta_12)"},
        {"free_truncated", "--generators n --degree d (odd)",
         "free ternary algebra T^odd V, truncated"},
    };
}

} // namespace talg

#pragma once

#include <cstddef>
#include <vector>

#include "talg/check.hpp"
#include "talg/errors.hpp"
#include "talg/linalg.hpp"
#include "talg/ternary_algebra.hpp"

namespace talg {

/// Binary (possibly nonunital) algebra by multiplication table:
/// e_i e_j = sum_k mult(i,j,k) e_k.
struct BinaryAlgebra {
    std::size_t dim = 0;
    ScalarField field;
    std::vector<CycScalar> mult;

    BinaryAlgebra() = default;
    BinaryAlgebra(ScalarField f, std::size_t d)
        : dim(d), field(f), mult(d * d * d, CycScalar::zero(f)) {}

    CycScalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return mult[(i * dim + j) * dim + k];
    }
    const CycScalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return mult[(i * dim + j) * dim + k];
    }

    Vec basis_product(std::size_t i, std::size_t j) const {
        Vec r(field, dim);
        for (std::size_t k = 0; k < dim; ++k) r[k] = at(i, j, k);
        return r;
    }

    Vec product(const Vec& a, const Vec& b) const {
        if (a.dim() != dim || b.dim() != dim)
            throw DimensionError("binary product: dimension mismatch");
        Vec r(field, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (b[j].is_zero()) continue;
                CycScalar c = a[i] * b[j];
                for (std::size_t k = 0; k < dim; ++k)
                    if (!at(i, j, k).is_zero()) r[k] += at(i, j, k) * c;
            }
        }
        return r;
    }
};

/// (e_i e_j) e_k = e_i (e_j e_k) on all basis triples.
inline CheckResult check_binary_associativity(const BinaryAlgebra& alg) {
    const std::size_t d = alg.dim;
    std::size_t checks = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                ++checks;
                Vec lhs = alg.product(alg.basis_product(i, j), Vec::unit(alg.field, d, k));
                Vec rhs = alg.product(Vec::unit(alg.field, d, i), alg.basis_product(j, k));
                Vec res = lhs - rhs;
                if (!res.is_zero())
                    return CheckResult::failure("(ab)c=a(bc)", {i, j, k}, std::move(res), checks);
            }
    CheckResult ok;
    ok.checks = checks;
    return ok;
}

/// Full matrix algebra M_n with matrix-unit basis E_{rs} at index r*n+s.
inline BinaryAlgebra matrix_binary_algebra(std::size_t n, ScalarField f) {
    BinaryAlgebra alg(f, n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    if (q == r) alg.at(p * n + q, r * n + s, p * n + s) = CycScalar::one(f);
    return alg;
}

/// Trivial ternary algebra of a binary associative algebra: [abc] = (ab)c.
inline TernaryAlgebra trivial_ternary(const BinaryAlgebra& bin) {
    const std::size_t d = bin.dim;
    TernaryAlgebra out(bin.field, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec ij = bin.basis_product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                Vec ijk = bin.product(ij, Vec::unit(bin.field, d, k));
                for (std::size_t n = 0; n < d; ++n) out.tensor.at(n, i, j, k) = ijk[n];
            }
        }
    out.declared_kind = AssocKind::strong;
    return out;
}

} // namespace talg

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "talg/check.hpp"
#include "talg/errors.hpp"
#include "talg/ternary_algebra.hpp"

namespace talg {

/// Three-index array; the structure-constant slices rho^i viewed as "cubic
/// matrices" composed by the triple contraction below.
struct CubicMatrix {
    std::size_t dim = 0;
    ScalarField field;
    std::vector<CycScalar> e;

    CubicMatrix() = default;
    CubicMatrix(ScalarField f, std::size_t d)
        : dim(d), field(f), e(d * d * d, CycScalar::zero(f)) {}

    CycScalar& at(std::size_t p, std::size_t r, std::size_t s) {
        return e[(p * dim + r) * dim + s];
    }
    const CycScalar& at(std::size_t p, std::size_t r, std::size_t s) const {
        return e[(p * dim + r) * dim + s];
    }

    friend bool operator==(const CubicMatrix& a, const CubicMatrix& b) {
        return a.dim == b.dim && a.field == b.field && a.e == b.e;
    }
    friend CubicMatrix operator+(const CubicMatrix& a, const CubicMatrix& b) {
        if (a.dim != b.dim) throw DimensionError("cubic matrix dimension mismatch");
        CubicMatrix r = a;
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }
    friend CubicMatrix operator*(const CycScalar& c, const CubicMatrix& m) {
        CubicMatrix r = m;
        for (auto& x : r.e) x *= c;
        return r;
    }
    bool is_zero() const {
        for (const auto& x : e)
            if (!x.is_zero()) return false;
        return true;
    }

    CubicMatrix conjugate() const {
        CubicMatrix r = *this;
        for (auto& x : r.e) x = x.conjugate();
        return r;
    }
};

/// (x * y * z)_{prs} = sum_{n,m,t} x_{npm} y_{mrt} z_{tsn}
inline CubicMatrix cubic_triple_product(const CubicMatrix& x, const CubicMatrix& y,
                                        const CubicMatrix& z) {
    if (x.dim != y.dim || y.dim != z.dim)
        throw DimensionError("cubic matrix dimension mismatch");
    const std::size_t d = x.dim;
    CubicMatrix out(x.field, d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s = 0; s < d; ++s) {
                CycScalar acc = CycScalar::zero(x.field);
                for (std::size_t n = 0; n < d; ++n)
                    for (std::size_t m = 0; m < d; ++m) {
                        const CycScalar& xn = x.at(n, p, m);
                        if (xn.is_zero()) continue;
                        for (std::size_t t = 0; t < d; ++t) {
                            const CycScalar& ym = y.at(m, r, t);
                            if (ym.is_zero()) continue;
                            const CycScalar& zt = z.at(t, s, n);
                            if (!zt.is_zero()) acc += xn * ym * zt;
                        }
                    }
                out.at(p, r, s) = acc;
            }
    return out;
}

/// {x y z}_q = x*y*z + q (y*z*x) + q^2 (z*x*y)
inline CubicMatrix cubic_qskew(const CubicMatrix& x, const CubicMatrix& y,
                               const CubicMatrix& z, const CycScalar& q) {
    return cubic_triple_product(x, y, z) + q * cubic_triple_product(y, z, x) +
           (q * q) * cubic_triple_product(z, x, y);
}

/// Slice of the structure tensor by its upper index: (rho^n)_{ijk}.
inline CubicMatrix tensor_slice(const TernaryAlgebra& alg, std::size_t n) {
    CubicMatrix m(alg.field, alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k) m.at(i, j, k) = alg.tensor.at(n, i, j, k);
    return m;
}

/// One candidate reading of the raised-index coefficients: a permutation of
/// (i,j,k) inside rho^m, optional conjugation of the coefficient, optional
/// conjugation of the slice basis on the right-hand side (index raising by a
/// Hermitian metric conjugates).
struct CubicConvention {
    std::string perm;    // one of ijk jki kij kji jik ikj
    bool conj_coeff = false;
    bool conj_basis = false;
    CycScalar lambda;
};

struct CubicRepReport {
    bool closes = false;
    std::vector<CubicConvention> winners; // in search order
};

/// Tests {rho^i rho^j rho^k}_q = lambda * sum_m c^{ijk}_m rho^m over every
/// convention for c, reporting the conventions (and uniform scalars) that
/// close the identity exactly.
inline CubicRepReport check_cubic_representation(const TernaryAlgebra& alg,
                                                 const CycScalar& q) {
    CycScalar one = CycScalar::one(alg.field);
    if (q == one || !(q * q * q == one))
        throw PreconditionError("check_cubic_representation: q must be a primitive cube root");
    if (alg.dim > 3)
        throw PreconditionError("check_cubic_representation: dimension must be <= 3");
    const std::size_t d = alg.dim;

    std::vector<CubicMatrix> slice, slice_conj;
    for (std::size_t n = 0; n < d; ++n) {
        slice.push_back(tensor_slice(alg, n));
        slice_conj.push_back(slice.back().conjugate());
    }
    std::vector<CubicMatrix> lhs;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                lhs.push_back(cubic_qskew(slice[i], slice[j], slice[k], q));

    using PermFn = std::array<std::size_t, 3> (*)(std::size_t, std::size_t, std::size_t);
    struct Perm {
        const char* name;
        PermFn fn;
    };
    static const Perm perms[6] = {
        {"ijk", [](std::size_t i, std::size_t j, std::size_t k) { return std::array{i, j, k}; }},
        {"jki", [](std::size_t i, std::size_t j, std::size_t k) { return std::array{j, k, i}; }},
        {"kij", [](std::size_t i, std::size_t j, std::size_t k) { return std::array{k, i, j}; }},
        {"kji", [](std::size_t i, std::size_t j, std::size_t k) { return std::array{k, j, i}; }},
        {"jik", [](std::size_t i, std::size_t j, std::size_t k) { return std::array{j, i, k}; }},
        {"ikj", [](std::size_t i, std::size_t j, std::size_t k) { return std::array{i, k, j}; }},
    };

    CubicRepReport report;
    for (const auto& perm : perms)
        for (bool cc : {false, true})
            for (bool cb : {false, true}) {
                bool ok = true;
                bool lambda_set = false;
                CycScalar lambda = CycScalar::zero(alg.field);
                for (std::size_t i = 0; i < d && ok; ++i)
                    for (std::size_t j = 0; j < d && ok; ++j)
                        for (std::size_t k = 0; k < d && ok; ++k) {
                            auto p = perm.fn(i, j, k);
                            CubicMatrix rhs(alg.field, d);
                            for (std::size_t m = 0; m < d; ++m) {
                                CycScalar c = alg.tensor.at(m, p[0], p[1], p[2]);
                                if (cc) c = c.conjugate();
                                if (c.is_zero()) continue;
                                rhs = rhs + c * (cb ? slice_conj[m] : slice[m]);
                            }
                            const CubicMatrix& L = lhs[(i * d + j) * d + k];
                            for (std::size_t t = 0; t < rhs.e.size() && ok; ++t) {
                                if (rhs.e[t].is_zero()) {
                                    if (!L.e[t].is_zero()) ok = false;
                                } else if (!lambda_set) {
                                    lambda = L.e[t] / rhs.e[t];
                                    lambda_set = true;
                                } else if (!(L.e[t] == lambda * rhs.e[t])) {
                                    ok = false;
                                }
                            }
                        }
                // !lambda_set means both sides vanished identically: closes trivially
                if (ok)
                    report.winners.push_back(CubicConvention{
                        perm.name, cc, cb, lambda_set ? lambda : CycScalar::one(alg.field)});
            }
    report.closes = !report.winners.empty();
    return report;
}

/// Exact 2x2 Pauli matrices over a field containing i (order divisible by 4).
inline std::array<Mat, 3> pauli_matrices(ScalarField f) {
    if (f.order % 4 != 0)
        throw PreconditionError("pauli_matrices: field lacks i (order not divisible by 4)");
    CycScalar i = CycScalar::zeta_pow(f, f.order / 4);
    CycScalar one = CycScalar::one(f);
    Mat s1(f, 2, 2), s2(f, 2, 2), s3(f, 2, 2);
    s1.at(0, 1) = one;
    s1.at(1, 0) = one;
    s2.at(0, 1) = -i;
    s2.at(1, 0) = i;
    s3.at(0, 0) = one;
    s3.at(1, 1) = -one;
    return {s1, s2, s3};
}

struct PauliReport {
    bool pass = false;
    CycScalar lambda;
    std::string failure;
};

/// Checks sigma_i sigma_j sigma_k + q sigma_j sigma_k sigma_i
/// + q^2 sigma_k sigma_i sigma_j = lambda * sum_m rho^m_{ijk} sigma_m for all
/// (i,j,k) in {1,2}^3 with one shared lambda, rho being the q-skew metric
/// tensor in dimension 2.  Reports the measured lambda.
inline PauliReport pauli_check(const CycScalar& q) {
    ScalarField f = q.field();
    if (f.order % 12 != 0)
        throw PreconditionError("pauli_check: field order must be divisible by 12");
    CycScalar one = CycScalar::one(f);
    if (q == one || !(q * q * q == one))
        throw PreconditionError("pauli_check: q must be a primitive cube root of unity");

    auto sigma = pauli_matrices(f);
    TernaryAlgebra rho = qskew_product(metric_algebra(Mat::identity(f, 2), MetricVariant::middle), q);

    PauliReport rep;
    rep.lambda = CycScalar::zero(f);
    bool lambda_set = false;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                Mat S = sigma[i] * sigma[j] * sigma[k];
                Mat T1 = sigma[j] * sigma[k] * sigma[i];
                Mat T2 = sigma[k] * sigma[i] * sigma[j];
                for (std::size_t t = 0; t < 4; ++t)
                    S.entries[t] += q * T1.entries[t] + q * q * T2.entries[t];
                Mat R(f, 2, 2);
                for (std::size_t m = 0; m < 2; ++m) {
                    const CycScalar& c = rho.tensor.at(m, i, j, k);
                    if (c.is_zero()) continue;
                    for (std::size_t t = 0; t < 4; ++t) R.entries[t] += c * sigma[m].entries[t];
                }
                for (std::size_t t = 0; t < 4; ++t) {
                    if (R.entries[t].is_zero()) {
                        if (!S.entries[t].is_zero()) {
                            rep.failure = "nonzero combination against zero rhs at triple (" +
                                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          "," + std::to_string(k + 1) + ")";
                            return rep;
                        }
                    } else {
                        CycScalar cand = S.entries[t] / R.entries[t];
                        if (!lambda_set) {
                            rep.lambda = cand;
                            lambda_set = true;
                        } else if (!(cand == rep.lambda)) {
                            rep.failure = "lambda not uniform at triple (" + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) + "," +
                                          std::to_string(k + 1) + ")";
                            return rep;
                        }
                    }
                }
            }
    rep.pass = lambda_set;
    if (!lambda_set) rep.failure = "all right-hand sides vanished";
    return rep;
}

} // namespace talg

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "talg/check.hpp"
#include "talg/cyclotomic.hpp"
#include "talg/errors.hpp"
#include "talg/linalg.hpp"

namespace talg {

/// Structure constants rho^n_{ijk} of a ternary product on a basis:
/// [e_i e_j e_k] = sum_n rho^n_{ijk} e_n.  Dense storage, index order (n,i,j,k).
struct StructureTensor {
    std::size_t dim = 0;
    ScalarField field;
    std::vector<CycScalar> rho;

    StructureTensor() = default;
    StructureTensor(ScalarField f, std::size_t d)
        : dim(d), field(f), rho(d * d * d * d, CycScalar::zero(f)) {}

    CycScalar& at(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
        return rho[((n * dim + i) * dim + j) * dim + k];
    }
    const CycScalar& at(std::size_t n, std::size_t i, std::size_t j, std::size_t k) const {
        return rho[((n * dim + i) * dim + j) * dim + k];
    }

    friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
        return a.dim == b.dim && a.field == b.field && a.rho == b.rho;
    }
};

enum class AssocKind { none, strong, B, left, right, central };

inline std::string to_string(AssocKind k) {
    switch (k) {
        case AssocKind::none: return "none";
        case AssocKind::strong: return "strong";
        case AssocKind::B: return "B";
        case AssocKind::left: return "left";
        case AssocKind::right: return "right";
        case AssocKind::central: return "central";
    }
    return "none";
}

inline std::optional<AssocKind> assoc_kind_from_string(const std::string& s) {
    if (s == "none") return AssocKind::none;
    if (s == "strong") return AssocKind::strong;
    if (s == "B") return AssocKind::B;
    if (s == "left") return AssocKind::left;
    if (s == "right") return AssocKind::right;
    if (s == "central") return AssocKind::central;
    return std::nullopt;
}

/// Finite-dimensional ternary algebra given by structure constants, with an
/// optional star structure (anti-involution matrix applied with scalar
/// conjugation).  `conjugate_middle` marks B-with-star algebras whose product
/// is anti-linear in the middle factor; products of explicit vectors then
/// conjugate the middle coordinates (basis products are unaffected).
struct TernaryAlgebra {
    std::size_t dim = 0;
    ScalarField field;
    StructureTensor tensor;
    std::optional<Mat> star;
    AssocKind declared_kind = AssocKind::none;
    bool conjugate_middle = false;

    TernaryAlgebra() = default;
    TernaryAlgebra(ScalarField f, std::size_t d) : dim(d), field(f), tensor(f, d) {}
};

/// [e_i e_j e_k] as a coordinate vector.
inline Vec basis_product(const TernaryAlgebra& alg, std::size_t i, std::size_t j,
                         std::size_t k) {
    Vec r(alg.field, alg.dim);
    for (std::size_t n = 0; n < alg.dim; ++n) r[n] = alg.tensor.at(n, i, j, k);
    return r;
}

/// Trilinear product of coordinate vectors (anti-linear in the middle factor
/// when the algebra is flagged conjugate_middle).
inline Vec ternary_product(const TernaryAlgebra& alg, const Vec& a, const Vec& b,
                           const Vec& c) {
    if (a.dim() != alg.dim || b.dim() != alg.dim || c.dim() != alg.dim)
        throw DimensionError("ternary_product: vector dimension mismatch");
    Vec r(alg.field, alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < alg.dim; ++j) {
            if (b[j].is_zero()) continue;
            CycScalar bj = alg.conjugate_middle ? b[j].conjugate() : b[j];
            CycScalar ab = a[i] * bj;
            for (std::size_t k = 0; k < alg.dim; ++k) {
                if (c[k].is_zero()) continue;
                CycScalar coeff = ab * c[k];
                for (std::size_t n = 0; n < alg.dim; ++n) {
                    const CycScalar& rho = alg.tensor.at(n, i, j, k);
                    if (!rho.is_zero()) r[n] += rho * coeff;
                }
            }
        }
    }
    return r;
}

namespace detail {

// Precomputed basis products for identity scans.
struct ProductTable {
    const TernaryAlgebra& alg;
    std::vector<Vec> bp; // (i*d+j)*d+k -> [e_i e_j e_k]

    explicit ProductTable(const TernaryAlgebra& a) : alg(a) {
        const std::size_t d = a.dim;
        bp.reserve(d * d * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) bp.push_back(basis_product(a, i, j, k));
    }

    const Vec& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return bp[(i * alg.dim + j) * alg.dim + k];
    }

    // [u e_j e_k] for a coordinate vector u in the first slot
    Vec left(const Vec& u, std::size_t j, std::size_t k) const {
        Vec r(alg.field, alg.dim);
        for (std::size_t n = 0; n < alg.dim; ++n)
            if (!u[n].is_zero()) r += u[n] * (*this)(n, j, k);
        return r;
    }
    // [e_i u e_k]; honors middle anti-linearity
    Vec middle(std::size_t i, const Vec& u, std::size_t k) const {
        Vec r(alg.field, alg.dim);
        for (std::size_t n = 0; n < alg.dim; ++n) {
            if (u[n].is_zero()) continue;
            CycScalar c = alg.conjugate_middle ? u[n].conjugate() : u[n];
            r += c * (*this)(i, n, k);
        }
        return r;
    }
    // [e_i e_j u]
    Vec right(std::size_t i, std::size_t j, const Vec& u) const {
        Vec r(alg.field, alg.dim);
        for (std::size_t n = 0; n < alg.dim; ++n)
            if (!u[n].is_zero()) r += u[n] * (*this)(i, j, n);
        return r;
    }
};

} // namespace detail

/// Exhaustive basis-quintuple associativity check.  Multilinearity makes the
/// basis scan complete.  strong and B check all three pairwise equalities of
/// their chain; left/right/central check the single corresponding one.
/// The counterexample returned is the lexicographically first failing
/// quintuple (identities tried in chain order at each quintuple).
inline CheckResult check_associativity(const TernaryAlgebra& alg, AssocKind kind) {
    if (kind == AssocKind::none)
        throw PreconditionError("check_associativity: kind must not be 'none'");
    const std::size_t d = alg.dim;
    detail::ProductTable pt(alg);
    std::size_t checks = 0;

    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e)
                    for (std::size_t f = 0; f < d; ++f) {
                        // the three bracketings of [abcef]
                        Vec L = pt.left(pt(a, b, c), e, f);
                        Vec C = kind == AssocKind::B ? pt.middle(a, pt(e, c, b), f)
                                                     : pt.middle(a, pt(b, c, e), f);
                        Vec R = pt.right(a, b, pt(c, e, f));
                        const char* cname =
                            kind == AssocKind::B ? "left=central(B)" : "left=central";
                        const char* rname =
                            kind == AssocKind::B ? "central(B)=right" : "central=right";
                        struct Eq {
                            const char* name;
                            const Vec *lhs, *rhs;
                        };
                        std::vector<Eq> eqs;
                        switch (kind) {
                            case AssocKind::strong:
                            case AssocKind::B:
                                eqs = {{cname, &L, &C}, {rname, &C, &R}, {"left=right", &L, &R}};
                                break;
                            case AssocKind::left: eqs = {{"left=central", &L, &C}}; break;
                            case AssocKind::right: eqs = {{"central=right", &C, &R}}; break;
                            case AssocKind::central: eqs = {{"left=right", &L, &R}}; break;
                            case AssocKind::none: break;
                        }
                        for (const auto& eq : eqs) {
                            ++checks;
                            Vec res = *eq.lhs - *eq.rhs;
                            if (!res.is_zero())
                                return CheckResult::failure(eq.name, {a, b, c, e, f},
                                                            std::move(res), checks);
                        }
                    }
    CheckResult ok;
    ok.checks = checks;
    return ok;
}

/// star(v) = S conj(v) where column i of S is star(e_i).
inline Vec apply_star(const TernaryAlgebra& alg, const Vec& v) {
    if (!alg.star) throw PreconditionError("algebra has no star structure");
    Vec cv = v;
    for (auto& e : cv.entries) e = e.conjugate();
    return alg.star->apply(cv);
}

/// Checks [abc]^* = [c^* b^* a^*] on all basis triples, plus that star is an
/// anti-involution ((a^*)^* = a, i.e. S conj(S) = I).
inline CheckResult check_star(const TernaryAlgebra& alg) {
    if (!alg.star) throw PreconditionError("algebra has no star structure");
    const std::size_t d = alg.dim;
    const Mat& S = *alg.star;
    if (S.rows != d || S.cols != d) throw DimensionError("star matrix must be dim x dim");

    Mat Sc = S;
    for (auto& e : Sc.entries) e = e.conjugate();
    Mat invol = S * Sc;
    Mat I = Mat::identity(alg.field, d);
    std::size_t checks = 0;
    for (std::size_t i = 0; i < d; ++i) {
        ++checks;
        Vec res = invol.col(i) - I.col(i);
        if (!res.is_zero())
            return CheckResult::failure("anti-involution", {i}, std::move(res), checks);
    }

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                ++checks;
                Vec lhs = apply_star(alg, basis_product(alg, i, j, k));
                Vec rhs = ternary_product(alg, apply_star(alg, Vec::unit(alg.field, d, k)),
                                          apply_star(alg, Vec::unit(alg.field, d, j)),
                                          apply_star(alg, Vec::unit(alg.field, d, i)));
                Vec res = lhs - rhs;
                if (!res.is_zero())
                    return CheckResult::failure("[abc]*=[c*b*a*]", {i, j, k}, std::move(res),
                                                checks);
            }
    CheckResult ok;
    ok.checks = checks;
    return ok;
}

/// [abc]_* = [a b^* c]: turns a strongly associative star algebra into a
/// B-type one.  Over fields with nontrivial conjugation the middle slot of
/// the result is anti-linear (conjugate_middle is set).
inline TernaryAlgebra star_to_btype(const TernaryAlgebra& alg) {
    if (!alg.star) throw PreconditionError("star_to_btype: star structure missing");
    if (!check_star(alg).pass) throw PreconditionError("star_to_btype: check_star fails");
    if (!check_associativity(alg, AssocKind::strong).pass)
        throw PreconditionError("star_to_btype: input is not strongly associative");
    const std::size_t d = alg.dim;
    TernaryAlgebra out(alg.field, d);
    const Mat& S = *alg.star;
    for (std::size_t n = 0; n < d; ++n)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    CycScalar acc = CycScalar::zero(alg.field);
                    for (std::size_t m = 0; m < d; ++m) {
                        const CycScalar& s = S.at(m, j);
                        if (!s.is_zero() && !alg.tensor.at(n, i, m, k).is_zero())
                            acc += alg.tensor.at(n, i, m, k) * s;
                    }
                    out.tensor.at(n, i, j, k) = acc;
                }
    out.star = alg.star;
    out.declared_kind = AssocKind::B;
    // conjugation is trivial on Q(zeta_1) and Q(zeta_2)
    out.conjugate_middle = alg.field.order > 2;
    return out;
}

/// rho'^n_{ijk} = rho^n_{ijk} + rho^n_{jki} + rho^n_{kij}; the result is
/// invariant under cyclic permutation of the arguments.
inline TernaryAlgebra symmetrize_product(const TernaryAlgebra& alg) {
    const std::size_t d = alg.dim;
    TernaryAlgebra out(alg.field, d);
    for (std::size_t n = 0; n < d; ++n)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    out.tensor.at(n, i, j, k) = alg.tensor.at(n, i, j, k) +
                                                alg.tensor.at(n, j, k, i) +
                                                alg.tensor.at(n, k, i, j);
    return out;
}

/// Z_3-skew product {abc}_q = {abc} + q {bca} + q^2 {cab} with q a primitive
/// cube root of unity.
inline TernaryAlgebra qskew_product(const TernaryAlgebra& alg, const CycScalar& q) {
    if (q.order() != alg.field.order)
        throw FieldMismatchError("qskew_product: q must live in the algebra's field");
    CycScalar one = CycScalar::one(alg.field);
    if (q == one || !(q * q * q == one))
        throw PreconditionError("qskew_product: q must be a primitive cube root of unity");
    const std::size_t d = alg.dim;
    CycScalar q2 = q * q;
    TernaryAlgebra out(alg.field, d);
    for (std::size_t n = 0; n < d; ++n)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    out.tensor.at(n, i, j, k) = alg.tensor.at(n, i, j, k) +
                                                q * alg.tensor.at(n, j, k, i) +
                                                q2 * alg.tensor.at(n, k, i, j);
    return out;
}

enum class MetricVariant { left, middle, right };

inline void require_metric(const Mat& g) {
    if (g.rows != g.cols) throw DimensionError("metric must be square");
    if (!(g == g.transpose())) throw PreconditionError("metric must be symmetric");
    if (rank(g) != g.rows) throw PreconditionError("metric must be nondegenerate");
}

/// Metric-induced products: middle {abc} = <a,b>c, left {abc}' = <b,c>a,
/// right {abc}'' = <c,a>b.  The middle variant is B-associative.
inline TernaryAlgebra metric_algebra(const Mat& g, MetricVariant variant) {
    require_metric(g);
    const std::size_t d = g.rows;
    TernaryAlgebra out(g.field, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                switch (variant) {
                    case MetricVariant::middle: out.tensor.at(k, i, j, k) = g.at(i, j); break;
                    case MetricVariant::left: out.tensor.at(i, i, j, k) = g.at(j, k); break;
                    case MetricVariant::right: out.tensor.at(j, i, j, k) = g.at(k, i); break;
                }
            }
    if (variant == MetricVariant::middle) out.declared_kind = AssocKind::B;
    return out;
}

/// The general metric combination rho^n_{ijk} = sum_{l,m} M^{lmn}_{ijk} g_{lm}
/// with M symmetric in (l,m).
struct MetricCombination {
    std::size_t dim = 0;
    Mat metric;
    std::vector<CycScalar> m_tensor; // (l,m,n,i,j,k), dense d^6

    MetricCombination(const Mat& g)
        : dim(g.rows), metric(g),
          m_tensor(dim * dim * dim * dim * dim * dim, CycScalar::zero(g.field)) {}

    CycScalar& at(std::size_t l, std::size_t m, std::size_t n, std::size_t i, std::size_t j,
                  std::size_t k) {
        return m_tensor[((((l * dim + m) * dim + n) * dim + i) * dim + j) * dim + k];
    }
    const CycScalar& at(std::size_t l, std::size_t m, std::size_t n, std::size_t i,
                        std::size_t j, std::size_t k) const {
        return m_tensor[((((l * dim + m) * dim + n) * dim + i) * dim + j) * dim + k];
    }
};

inline TernaryAlgebra metric_algebra(const MetricCombination& comb) {
    require_metric(comb.metric);
    const std::size_t d = comb.dim;
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t n = 0; n < d; ++n)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t k = 0; k < d; ++k)
                            if (!(comb.at(l, m, n, i, j, k) == comb.at(m, l, n, i, j, k)))
                                throw PreconditionError(
                                    "metric combination tensor must be symmetric in (l,m)");
    TernaryAlgebra out(comb.metric.field, d);
    for (std::size_t n = 0; n < d; ++n)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    CycScalar acc = CycScalar::zero(out.field);
                    for (std::size_t l = 0; l < d; ++l)
                        for (std::size_t m = 0; m < d; ++m) {
                            const CycScalar& mv = comb.at(l, m, n, i, j, k);
                            if (!mv.is_zero() && !comb.metric.at(l, m).is_zero())
                                acc += mv * comb.metric.at(l, m);
                        }
                    out.tensor.at(n, i, j, k) = acc;
                }
    return out;
}

} // namespace talg

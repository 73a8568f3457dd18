#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "talg/binary_algebra.hpp"
#include "talg/errors.hpp"
#include "talg/linalg.hpp"
#include "talg/ternary_algebra.hpp"

namespace talg {

/// Element of U_A = A_1 (+) A_0, in coordinates over the computed quotient
/// basis of A_0.
struct GradedElement {
    Vec odd;
    Vec even;

    friend GradedElement operator+(const GradedElement& a, const GradedElement& b) {
        return {a.odd + b.odd, a.even + b.even};
    }
    friend GradedElement operator-(const GradedElement& a, const GradedElement& b) {
        return {a.odd - b.odd, a.even - b.even};
    }
    friend GradedElement operator*(const CycScalar& c, const GradedElement& a) {
        return {c * a.odd, c * a.even};
    }
    friend bool operator==(const GradedElement& a, const GradedElement& b) {
        return a.odd == b.odd && a.even == b.even;
    }
    bool is_zero() const { return odd.is_zero() && even.is_zero(); }
};

/// The universal binary envelope U_A = A_1 (+) A_0 of a strongly associative
/// ternary algebra, with A_0 = (A (x) A) / span<[xyz](x)w - x(x)[yzw]> and the
/// four graded product tables of the multiplication (circled-ast-bar).
struct EnvelopeAlgebra {
    TernaryAlgebra base;
    QuotientBasis a0; // quotient of the d^2-dimensional ambient A (x) A

    // product tables; rep_u denotes the ambient representative pair of class u
    std::vector<Vec> odd_odd;   // (a*d + b)        -> class(e_a (x) e_b)      in A_0
    std::vector<Vec> even_odd;  // (u*d + c)        -> [rep_u e_c]             in A
    std::vector<Vec> odd_even;  // (a*e_dim + u)    -> [e_a rep_u]             in A
    std::vector<Vec> even_even; // (u*e_dim + v)    -> class([rep_u fst_v] (x) snd_v)

    std::size_t odd_dim() const { return base.dim; }
    std::size_t even_dim() const { return a0.dim(); }
    std::size_t dim() const { return odd_dim() + even_dim(); }

    std::pair<std::size_t, std::size_t> rep_pair(std::size_t u) const {
        std::size_t amb = a0.representative_indices[u];
        return {amb / base.dim, amb % base.dim};
    }

    GradedElement zero() const {
        return {Vec(base.field, odd_dim()), Vec(base.field, even_dim())};
    }
    /// The canonical embedding iota of A into the odd part.
    GradedElement iota(const Vec& a) const { return {a, Vec(base.field, even_dim())}; }
    GradedElement odd_unit(std::size_t i) const {
        return {Vec::unit(base.field, odd_dim(), i), Vec(base.field, even_dim())};
    }
    GradedElement even_unit(std::size_t u) const {
        return {Vec(base.field, odd_dim()), Vec::unit(base.field, even_dim(), u)};
    }
    /// Graded basis element by flat index (odd first, then even).
    GradedElement unit(std::size_t t) const {
        return t < odd_dim() ? odd_unit(t) : even_unit(t - odd_dim());
    }
};

/// The defining relation vectors [xyz] (x) w - x (x) [yzw] over all basis
/// quadruples, in the d^2-dimensional ambient A (x) A.
inline std::vector<Vec> envelope_relations(const TernaryAlgebra& alg) {
    const std::size_t d = alg.dim;
    std::vector<Vec> rel;
    rel.reserve(d * d * d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                Vec u = basis_product(alg, x, y, z);
                for (std::size_t w = 0; w < d; ++w) {
                    Vec r(alg.field, d * d);
                    for (std::size_t n = 0; n < d; ++n)
                        if (!u[n].is_zero()) r[n * d + w] += u[n];
                    Vec v = basis_product(alg, y, z, w);
                    for (std::size_t n = 0; n < d; ++n)
                        if (!v[n].is_zero()) r[x * d + n] -= v[n];
                    rel.push_back(std::move(r));
                }
            }
    return rel;
}

/// Graded multiplication in U_A via the four tables; bilinear, parity
/// additive mod 2.
inline GradedElement envelope_multiply(const EnvelopeAlgebra& env, const GradedElement& x,
                                       const GradedElement& y) {
    const std::size_t d = env.odd_dim(), e = env.even_dim();
    if (x.odd.dim() != d || y.odd.dim() != d || x.even.dim() != e || y.even.dim() != e)
        throw DimensionError("envelope_multiply: element belongs to a different envelope");
    GradedElement r = env.zero();
    for (std::size_t a = 0; a < d; ++a) {
        if (x.odd[a].is_zero()) continue;
        for (std::size_t b = 0; b < d; ++b)
            if (!y.odd[b].is_zero()) r.even += (x.odd[a] * y.odd[b]) * env.odd_odd[a * d + b];
        for (std::size_t v = 0; v < e; ++v)
            if (!y.even[v].is_zero()) r.odd += (x.odd[a] * y.even[v]) * env.odd_even[a * e + v];
    }
    for (std::size_t u = 0; u < e; ++u) {
        if (x.even[u].is_zero()) continue;
        for (std::size_t b = 0; b < d; ++b)
            if (!y.odd[b].is_zero()) r.odd += (x.even[u] * y.odd[b]) * env.even_odd[u * d + b];
        for (std::size_t v = 0; v < e; ++v)
            if (!y.even[v].is_zero())
                r.even += (x.even[u] * y.even[v]) * env.even_even[u * e + v];
    }
    return r;
}

/// Constructs U_A.  Requires strong associativity; every product table is
/// verified well-defined on quotient classes (it must annihilate the relation
/// basis), and binary associativity is verified on all graded basis triples.
inline EnvelopeAlgebra build_envelope(const TernaryAlgebra& alg) {
    auto strong = check_associativity(alg, AssocKind::strong);
    if (!strong.pass) {
        const auto& ce = *strong.counterexample;
        std::string tuple;
        for (auto t : ce.tuple) tuple += (tuple.empty() ? "" : ",") + std::to_string(t);
        throw PreconditionError(
            "build_envelope: algebra is not strongly associative (identity '" + ce.identity +
            "' fails on basis quintuple (" + tuple + "))");
    }
    const std::size_t d = alg.dim;
    EnvelopeAlgebra env;
    env.base = alg;
    env.a0 = quotient_basis(alg.field, d * d, envelope_relations(alg));
    const std::size_t e = env.a0.dim();

    env.odd_odd.reserve(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            env.odd_odd.push_back(env.a0.project(Vec::unit(alg.field, d * d, a * d + b)));

    env.even_odd.reserve(e * d);
    env.odd_even.reserve(d * e);
    for (std::size_t u = 0; u < e; ++u) {
        auto [p, q] = env.rep_pair(u);
        for (std::size_t c = 0; c < d; ++c) env.even_odd.push_back(basis_product(alg, p, q, c));
    }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t u = 0; u < e; ++u) {
            auto [p, q] = env.rep_pair(u);
            env.odd_even.push_back(basis_product(alg, a, p, q));
        }

    env.even_even.reserve(e * e);
    for (std::size_t u = 0; u < e; ++u) {
        auto [p, q] = env.rep_pair(u);
        for (std::size_t v = 0; v < e; ++v) {
            auto [r, s] = env.rep_pair(v);
            Vec amb(alg.field, d * d);
            Vec prod = basis_product(alg, p, q, r);
            for (std::size_t n = 0; n < d; ++n)
                if (!prod[n].is_zero()) amb[n * d + s] += prod[n];
            env.even_even.push_back(env.a0.project(amb));
        }
    }

    // well-definedness: each table must send the relation span to zero
    const Mat& relb = env.a0.relation_rref;
    for (std::size_t ri = 0; ri < relb.rows; ++ri) {
        for (std::size_t c = 0; c < d; ++c) {
            Vec acc(alg.field, d);
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q)
                    if (!relb.at(ri, p * d + q).is_zero())
                        acc += relb.at(ri, p * d + q) * basis_product(alg, p, q, c);
            if (!acc.is_zero())
                throw Error("build_envelope: even*odd product not well-defined on classes");
        }
        for (std::size_t a = 0; a < d; ++a) {
            Vec acc(alg.field, d);
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q)
                    if (!relb.at(ri, p * d + q).is_zero())
                        acc += relb.at(ri, p * d + q) * basis_product(alg, a, p, q);
            if (!acc.is_zero())
                throw Error("build_envelope: odd*even product not well-defined on classes");
        }
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t l = 0; l < d; ++l) {
                // relation in the left factor of even*even
                Vec amb(alg.field, d * d);
                for (std::size_t p = 0; p < d; ++p)
                    for (std::size_t q = 0; q < d; ++q) {
                        const CycScalar& rc = relb.at(ri, p * d + q);
                        if (rc.is_zero()) continue;
                        Vec prod = basis_product(alg, p, q, k);
                        for (std::size_t n = 0; n < d; ++n)
                            if (!prod[n].is_zero()) amb[n * d + l] += rc * prod[n];
                    }
                if (!env.a0.project(amb).is_zero())
                    throw Error("build_envelope: even*even product not well-defined (left)");
                // relation in the right factor
                Vec amb2(alg.field, d * d);
                for (std::size_t p = 0; p < d; ++p)
                    for (std::size_t q = 0; q < d; ++q) {
                        const CycScalar& rc = relb.at(ri, p * d + q);
                        if (rc.is_zero()) continue;
                        Vec prod = basis_product(alg, k, l, p);
                        for (std::size_t n = 0; n < d; ++n)
                            if (!prod[n].is_zero()) amb2[n * d + q] += rc * prod[n];
                    }
                if (!env.a0.project(amb2).is_zero())
                    throw Error("build_envelope: even*even product not well-defined (right)");
            }
    }

    // binary associativity on all graded basis triples
    for (std::size_t x = 0; x < env.dim(); ++x)
        for (std::size_t y = 0; y < env.dim(); ++y)
            for (std::size_t z = 0; z < env.dim(); ++z) {
                GradedElement lhs = envelope_multiply(
                    env, envelope_multiply(env, env.unit(x), env.unit(y)), env.unit(z));
                GradedElement rhs = envelope_multiply(
                    env, env.unit(x), envelope_multiply(env, env.unit(y), env.unit(z)));
                if (!(lhs == rhs))
                    throw Error("build_envelope: graded product is not associative at (" +
                                std::to_string(x) + "," + std::to_string(y) + "," +
                                std::to_string(z) + ")");
            }
    return env;
}

/// U_A flattened into a plain binary algebra, basis = [odd | even].
inline BinaryAlgebra envelope_to_binary(const EnvelopeAlgebra& env) {
    const std::size_t n = env.dim(), d = env.odd_dim();
    BinaryAlgebra out(env.base.field, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            GradedElement p = envelope_multiply(env, env.unit(x), env.unit(y));
            for (std::size_t k = 0; k < d; ++k) out.at(x, y, k) = p.odd[k];
            for (std::size_t k = 0; k < env.even_dim(); ++k) out.at(x, y, d + k) = p.even[k];
        }
    return out;
}

/// Result of verifying the universal property against a concrete binary
/// algebra B and ternary homomorphism phi : A -> B.
struct EnvelopeUniversal {
    bool ok = false;
    std::string failure;
    Mat odd_map;  // = phi
    Mat even_map; // class(a (x) b) -> phi(a) phi(b)
};

/// Builds the unique candidate binary homomorphism phi~ : U_A -> B extending
/// phi and verifies well-definedness on the quotient plus multiplicativity on
/// all graded basis pairs.
inline EnvelopeUniversal check_envelope_universal(const EnvelopeAlgebra& env,
                                                  const BinaryAlgebra& B, const Mat& phi) {
    EnvelopeUniversal out;
    const std::size_t d = env.odd_dim(), e = env.even_dim();
    if (phi.rows != B.dim || phi.cols != d) {
        out.failure = "phi must be a (dim B) x (dim A) matrix";
        return out;
    }
    // phi([abc]) = phi(a) phi(b) phi(c) on basis triples
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec lhs = phi.apply(basis_product(env.base, i, j, k));
                Vec rhs = B.product(B.product(phi.col(i), phi.col(j)), phi.col(k));
                if (!(lhs == rhs)) {
                    out.failure = "phi is not a ternary homomorphism at basis triple (" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")";
                    return out;
                }
            }
    // phi~ on A_0: class(a (x) b) -> phi(a) phi(b); well-defined iff the
    // relation basis maps to zero
    for (std::size_t ri = 0; ri < env.a0.relation_rref.rows; ++ri) {
        Vec acc(B.field, B.dim);
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) {
                const CycScalar& c = env.a0.relation_rref.at(ri, p * d + q);
                if (!c.is_zero()) acc += c * B.product(phi.col(p), phi.col(q));
            }
        if (!acc.is_zero()) {
            out.failure = "phi~ is not well-defined on the quotient (relation " +
                          std::to_string(ri) + ")";
            return out;
        }
    }
    out.odd_map = phi;
    out.even_map = Mat(B.field, B.dim, e);
    for (std::size_t u = 0; u < e; ++u) {
        auto [p, q] = env.rep_pair(u);
        Vec img = B.product(phi.col(p), phi.col(q));
        for (std::size_t r = 0; r < B.dim; ++r) out.even_map.at(r, u) = img[r];
    }
    auto apply = [&](const GradedElement& g) {
        return out.odd_map.apply(g.odd) + out.even_map.apply(g.even);
    };
    // multiplicativity on all graded basis pairs
    for (std::size_t x = 0; x < env.dim(); ++x)
        for (std::size_t y = 0; y < env.dim(); ++y) {
            GradedElement prod = envelope_multiply(env, env.unit(x), env.unit(y));
            Vec lhs = apply(prod);
            Vec rhs = B.product(apply(env.unit(x)), apply(env.unit(y)));
            if (!(lhs == rhs)) {
                out.failure = "phi~ fails multiplicativity at graded basis pair (" +
                              std::to_string(x) + "," + std::to_string(y) + ")";
                return out;
            }
        }
    out.ok = true;
    return out;
}

} // namespace talg

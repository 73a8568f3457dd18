#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "talg/binary_algebra.hpp"
#include "talg/check.hpp"
#include "talg/envelope.hpp"
#include "talg/errors.hpp"
#include "talg/ternary_algebra.hpp"

namespace talg {

enum class TriKind { standard, B };

inline std::string to_string(TriKind k) { return k == TriKind::standard ? "standard" : "B"; }

/// Tri-module over a ternary algebra: three action tensors
///   [e_i e_j m_a]_L = sum_b actL(i,j,a,b) m_b
///   [e_i m_a e_j]_C = sum_b actC(i,j,a,b) m_b
///   [m_a e_i e_j]_R = sum_b actR(i,j,a,b) m_b
struct TriModule {
    TernaryAlgebra alg;
    std::size_t mdim = 0;
    std::vector<CycScalar> actL, actC, actR; // (i,j,a,b) dense d*d*m*m
    TriKind kind = TriKind::standard;

    TriModule() = default;
    TriModule(TernaryAlgebra a, std::size_t m)
        : alg(std::move(a)), mdim(m),
          actL(alg.dim * alg.dim * m * m, CycScalar::zero(alg.field)),
          actC(alg.dim * alg.dim * m * m, CycScalar::zero(alg.field)),
          actR(alg.dim * alg.dim * m * m, CycScalar::zero(alg.field)) {}

    std::size_t idx(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
        return ((i * alg.dim + j) * mdim + a) * mdim + b;
    }
    CycScalar& l_at(std::size_t i, std::size_t j, std::size_t a, std::size_t b) {
        return actL[idx(i, j, a, b)];
    }
    CycScalar& c_at(std::size_t i, std::size_t j, std::size_t a, std::size_t b) {
        return actC[idx(i, j, a, b)];
    }
    CycScalar& r_at(std::size_t i, std::size_t j, std::size_t a, std::size_t b) {
        return actR[idx(i, j, a, b)];
    }
    const CycScalar& l_at(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
        return actL[idx(i, j, a, b)];
    }
    const CycScalar& c_at(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
        return actC[idx(i, j, a, b)];
    }
    const CycScalar& r_at(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
        return actR[idx(i, j, a, b)];
    }
};

namespace detail {

/// Sparse views of the three actions plus trilinear application helpers.
struct TriOps {
    const TriModule& tm;
    std::size_t d, m;
    // per (i,j,a): list of (b, coeff)
    std::vector<std::vector<std::pair<std::size_t, CycScalar>>> sl, sc, sr;

    explicit TriOps(const TriModule& t) : tm(t), d(t.alg.dim), m(t.mdim) {
        auto build = [&](const std::vector<CycScalar>& act,
                         std::vector<std::vector<std::pair<std::size_t, CycScalar>>>& out) {
            out.resize(d * d * m);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    for (std::size_t a = 0; a < m; ++a) {
                        auto& lst = out[(i * d + j) * m + a];
                        for (std::size_t b = 0; b < m; ++b) {
                            const CycScalar& c = act[tm.idx(i, j, a, b)];
                            if (!c.is_zero()) lst.emplace_back(b, c);
                        }
                    }
        };
        build(tm.actL, sl);
        build(tm.actC, sc);
        build(tm.actR, sr);
    }

    Vec apply(const std::vector<std::vector<std::pair<std::size_t, CycScalar>>>& s,
              const Vec& x, const Vec& y, const Vec& mv) const {
        Vec r(tm.alg.field, m);
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (y[j].is_zero()) continue;
                CycScalar xy = x[i] * y[j];
                for (std::size_t a = 0; a < m; ++a) {
                    if (mv[a].is_zero()) continue;
                    CycScalar c = xy * mv[a];
                    for (const auto& [b, v] : s[(i * d + j) * m + a]) r[b] += v * c;
                }
            }
        }
        return r;
    }

    // [x y m]_L, [x m y]_C, [m x y]_R with algebra slots x,y and module slot m
    Vec L(const Vec& x, const Vec& y, const Vec& mv) const { return apply(sl, x, y, mv); }
    Vec C(const Vec& x, const Vec& mv, const Vec& y) const { return apply(sc, x, y, mv); }
    Vec R(const Vec& mv, const Vec& x, const Vec& y) const { return apply(sr, x, y, mv); }

    Vec aunit(std::size_t i) const { return Vec::unit(tm.alg.field, d, i); }
    Vec munit(std::size_t a) const { return Vec::unit(tm.alg.field, m, a); }
};

} // namespace detail

/// Exhaustive basis check of the tri-module compatibility conditions.  For
/// standard kind: lmod, rmod, cmod, lcmod, rcmod, lrmod; for B-type modules
/// lmod/rmod/lrmod are kept and cmod/lcmod/rcmod are replaced by
/// newcmod/newlcmod/newrcmod.  Tuples scan lexicographically; chains check
/// adjacent equalities, suffix .1/.2 names which one failed.
inline CheckResult trimodule_check(const TriModule& tm) {
    const std::size_t d = tm.alg.dim, m = tm.mdim;
    detail::TriOps ops(tm);
    detail::ProductTable pt(tm.alg);
    std::size_t checks = 0;
    const bool btype = tm.kind == TriKind::B;

    // chain identities over (a,b,c,e | mu)
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e)
                    for (std::size_t mu = 0; mu < m; ++mu) {
                        const Vec &ea = ops.aunit(a), &eb = ops.aunit(b), &ec = ops.aunit(c),
                                  &ee = ops.aunit(e);
                        const Vec& em = ops.munit(mu);
                        struct Chain {
                            const char* name;
                            std::vector<Vec> exprs;
                        };
                        std::vector<Chain> chains;
                        // lmod: [ab[cem]_L]_L = [[abc]em]_L = [a[bce]m]_L
                        chains.push_back({"lmod",
                                          {ops.L(ea, eb, ops.L(ec, ee, em)),
                                           ops.L(pt(a, b, c), ee, em),
                                           ops.L(ea, pt(b, c, e), em)}});
                        // rmod: [[mab]_R ce]_R = [ma[bce]]_R = [m[abc]e]_R
                        chains.push_back({"rmod",
                                          {ops.R(ops.R(em, ea, eb), ec, ee),
                                           ops.R(em, ea, pt(b, c, e)),
                                           ops.R(em, pt(a, b, c), ee)}});
                        // lrmod: [[abm]_L ce]_R = [ab[mce]_R]_L = [a[bmc]_C e]_C
                        chains.push_back({"lrmod",
                                          {ops.R(ops.L(ea, eb, em), ec, ee),
                                           ops.L(ea, eb, ops.R(em, ec, ee)),
                                           ops.C(ea, ops.C(eb, em, ec), ee)}});
                        if (!btype) {
                            // lcmod: [a[bcm]_L e]_C = [ab[cme]_C]_L = [[abc]me]_C
                            chains.push_back({"lcmod",
                                              {ops.C(ea, ops.L(eb, ec, em), ee),
                                               ops.L(ea, eb, ops.C(ec, em, ee)),
                                               ops.C(pt(a, b, c), em, ee)}});
                            // rcmod: [a[mbc]_R e]_C = [[amb]_C ce]_R = [am[bce]]_C
                            chains.push_back({"rcmod",
                                              {ops.C(ea, ops.R(em, eb, ec), ee),
                                               ops.R(ops.C(ea, em, eb), ec, ee),
                                               ops.C(ea, em, pt(b, c, e))}});
                        } else {
                            // newlcmod: [a[cbm]_L e]_C = [[amb]_C ce]_R
                            chains.push_back({"newlcmod",
                                              {ops.C(ea, ops.L(ec, eb, em), ee),
                                               ops.R(ops.C(ea, em, eb), ec, ee)}});
                            // newrcmod: [a[mbc]_R e]_C = [ab[cme]_C]_L
                            chains.push_back({"newrcmod",
                                              {ops.C(ea, ops.R(em, eb, ec), ee),
                                               ops.L(ea, eb, ops.C(ec, em, ee))}});
                        }
                        for (const auto& chain : chains)
                            for (std::size_t t = 0; t + 1 < chain.exprs.size(); ++t) {
                                ++checks;
                                Vec res = chain.exprs[t] - chain.exprs[t + 1];
                                if (!res.is_zero()) {
                                    std::string name = chain.name;
                                    if (chain.exprs.size() > 2)
                                        name += "." + std::to_string(t + 1);
                                    return CheckResult::failure(name, {a, b, c, e, mu},
                                                                std::move(res), checks);
                                }
                            }
                    }

    // central identity over (a,b,c,x,y,z | mu)
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t x = 0; x < d; ++x)
                    for (std::size_t y = 0; y < d; ++y)
                        for (std::size_t z = 0; z < d; ++z)
                            for (std::size_t mu = 0; mu < m; ++mu) {
                                ++checks;
                                const Vec &ea = ops.aunit(a), &eb = ops.aunit(b),
                                          &ec = ops.aunit(c), &ex = ops.aunit(x),
                                          &ey = ops.aunit(y), &ez = ops.aunit(z);
                                const Vec& em = ops.munit(mu);
                                // [a[b[cmx]_C y]_C z]_C
                                Vec lhs = ops.C(ea, ops.C(eb, ops.C(ec, em, ex), ey), ez);
                                Vec rhs =
                                    btype
                                        // newcmod: [[ayc]m[xbz]]_C
                                        ? ops.C(pt(a, y, c), em, pt(x, b, z))
                                        // cmod: [[abc]m[xyz]]_C
                                        : ops.C(pt(a, b, c), em, pt(x, y, z));
                                Vec res = lhs - rhs;
                                if (!res.is_zero())
                                    return CheckResult::failure(btype ? "newcmod" : "cmod",
                                                                {a, b, c, x, y, z, mu},
                                                                std::move(res), checks);
                            }
    CheckResult ok;
    ok.checks = checks;
    return ok;
}

/// Bimodule over a binary algebra: e_i . m_a = sum_b left(i,a,b) m_b and
/// m_a . e_i = sum_b right(a,i,b) m_b.
struct Bimodule {
    BinaryAlgebra alg;
    std::size_t mdim = 0;
    std::vector<CycScalar> left;  // (i,a,b)
    std::vector<CycScalar> right; // (a,i,b)

    Bimodule() = default;
    Bimodule(BinaryAlgebra a, std::size_t m)
        : alg(std::move(a)), mdim(m), left(alg.dim * m * m, CycScalar::zero(alg.field)),
          right(m * alg.dim * m, CycScalar::zero(alg.field)) {}

    CycScalar& l_at(std::size_t i, std::size_t a, std::size_t b) {
        return left[(i * mdim + a) * mdim + b];
    }
    CycScalar& r_at(std::size_t a, std::size_t i, std::size_t b) {
        return right[(a * alg.dim + i) * mdim + b];
    }

    Vec act_left(std::size_t i, const Vec& mv) const {
        Vec r(alg.field, mdim);
        for (std::size_t a = 0; a < mdim; ++a) {
            if (mv[a].is_zero()) continue;
            for (std::size_t b = 0; b < mdim; ++b) {
                const CycScalar& c = left[(i * mdim + a) * mdim + b];
                if (!c.is_zero()) r[b] += c * mv[a];
            }
        }
        return r;
    }
    Vec act_right(const Vec& mv, std::size_t i) const {
        Vec r(alg.field, mdim);
        for (std::size_t a = 0; a < mdim; ++a) {
            if (mv[a].is_zero()) continue;
            for (std::size_t b = 0; b < mdim; ++b) {
                const CycScalar& c = right[(a * alg.dim + i) * mdim + b];
                if (!c.is_zero()) r[b] += c * mv[a];
            }
        }
        return r;
    }
};

/// (ab)m = a(bm), m(ab) = (ma)b, (am)b = a(mb) on all basis tuples.
inline CheckResult check_bimodule(const Bimodule& bm) {
    const std::size_t d = bm.alg.dim, m = bm.mdim;
    std::size_t checks = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t a = 0; a < m; ++a) {
                const Vec ma = Vec::unit(bm.alg.field, m, a);
                Vec ij = bm.alg.basis_product(i, j);
                auto act_l = [&](const Vec& x, const Vec& mv) {
                    Vec r(bm.alg.field, m);
                    for (std::size_t t = 0; t < d; ++t)
                        if (!x[t].is_zero()) r += x[t] * bm.act_left(t, mv);
                    return r;
                };
                auto act_r = [&](const Vec& mv, const Vec& x) {
                    Vec r(bm.alg.field, m);
                    for (std::size_t t = 0; t < d; ++t)
                        if (!x[t].is_zero()) r += x[t] * bm.act_right(mv, t);
                    return r;
                };
                struct Eq {
                    const char* name;
                    Vec lhs, rhs;
                };
                Eq eqs[3] = {
                    {"(ab)m=a(bm)", act_l(ij, ma), bm.act_left(i, bm.act_left(j, ma))},
                    {"m(ab)=(ma)b", act_r(ma, ij), bm.act_right(bm.act_right(ma, i), j)},
                    {"(am)b=a(mb)", bm.act_right(bm.act_left(i, ma), j),
                     bm.act_left(i, bm.act_right(ma, j))},
                };
                for (auto& eq : eqs) {
                    ++checks;
                    Vec res = eq.lhs - eq.rhs;
                    if (!res.is_zero())
                        return CheckResult::failure(eq.name, {i, j, a}, std::move(res), checks);
                }
            }
    CheckResult ok;
    ok.checks = checks;
    return ok;
}

/// A binary algebra acting on itself: left/right regular bimodule.
inline Bimodule regular_bimodule(const BinaryAlgebra& alg) {
    Bimodule bm(alg, alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t a = 0; a < alg.dim; ++a)
            for (std::size_t b = 0; b < alg.dim; ++b) {
                bm.l_at(i, a, b) = alg.at(i, a, b);
                bm.r_at(a, i, b) = alg.at(a, i, b);
            }
    return bm;
}

/// The induced tri-module of a bimodule over the trivial ternary algebra:
/// [abm]_L = a(bm), [amb]_C = a(mb), [mab]_R = (ma)b.
inline TriModule trivial_trimodule(const Bimodule& bm) {
    auto ax = check_bimodule(bm);
    if (!ax.pass)
        throw PreconditionError("trivial_trimodule: bimodule axiom '" +
                                ax.counterexample->identity + "' fails");
    const std::size_t d = bm.alg.dim, m = bm.mdim;
    TriModule tm(trivial_ternary(bm.alg), m);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t a = 0; a < m; ++a) {
                Vec ma = Vec::unit(bm.alg.field, m, a);
                Vec l = bm.act_left(i, bm.act_left(j, ma));
                Vec c = bm.act_left(i, bm.act_right(ma, j));
                Vec r = bm.act_right(bm.act_right(ma, i), j);
                for (std::size_t b = 0; b < m; ++b) {
                    tm.l_at(i, j, a, b) = l[b];
                    tm.c_at(i, j, a, b) = c[b];
                    tm.r_at(i, j, a, b) = r[b];
                }
            }
    return tm;
}

/// A strongly associative algebra as a tri-module over itself (all three
/// actions are the ternary product).
inline TriModule algebra_as_trimodule(const TernaryAlgebra& alg) {
    const std::size_t d = alg.dim;
    TriModule tm(alg, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) {
                    tm.l_at(i, j, a, b) = alg.tensor.at(b, i, j, a);
                    tm.c_at(i, j, a, b) = alg.tensor.at(b, i, a, j);
                    tm.r_at(i, j, a, b) = alg.tensor.at(b, a, i, j);
                }
    return tm;
}

/// Element of U_M = M_1 (+) M_0.
struct UMElement {
    Vec odd;  // in M
    Vec even; // in M_0 quotient coordinates

    friend UMElement operator+(const UMElement& a, const UMElement& b) {
        return {a.odd + b.odd, a.even + b.even};
    }
    friend UMElement operator-(const UMElement& a, const UMElement& b) {
        return {a.odd - b.odd, a.even - b.even};
    }
    friend bool operator==(const UMElement& a, const UMElement& b) {
        return a.odd == b.odd && a.even == b.even;
    }
    bool is_zero() const { return odd.is_zero() && even.is_zero(); }
};

/// The Z_2-graded enveloping bimodule U_M = M_1 (+) M_0 over U_A, with
/// M_0 = (A (x) M (+) M (x) A)/lin<S>.  Ambient coordinates: block E0 holds
/// e_a (x) m_b at a*mdim+b, block E1 holds m_a (x) e_q at d*mdim + a*d + q.
struct UMBimodule {
    EnvelopeAlgebra env;
    TriModule tm;
    QuotientBasis m0;

    std::vector<Vec> l_oo, l_oe, l_eo, l_ee; // left action tables
    std::vector<Vec> r_oo, r_oe, r_eo, r_ee; // right action tables

    std::size_t d() const { return env.odd_dim(); }
    std::size_t e() const { return env.even_dim(); }
    std::size_t m() const { return tm.mdim; }
    std::size_t m0dim() const { return m0.dim(); }

    std::size_t e0_index(std::size_t a, std::size_t b) const { return a * m() + b; }
    std::size_t e1_index(std::size_t a, std::size_t q) const {
        return d() * m() + a * d() + q;
    }
    /// Decodes an ambient index: (block, algebra index, module index).
    struct AmbientSlot {
        bool in_am; // true: A (x) M, false: M (x) A
        std::size_t alg_idx, mod_idx;
    };
    AmbientSlot decode(std::size_t amb) const {
        if (amb < d() * m()) return {true, amb / m(), amb % m()};
        std::size_t t = amb - d() * m();
        return {false, t % d(), t / d()}; // m_{t/d} (x) e_{t%d}
    }

    UMElement zero() const {
        return {Vec(tm.alg.field, m()), Vec(tm.alg.field, m0dim())};
    }
    UMElement odd_unit(std::size_t a) const {
        return {Vec::unit(tm.alg.field, m(), a), Vec(tm.alg.field, m0dim())};
    }
    UMElement even_unit(std::size_t w) const {
        return {Vec(tm.alg.field, m()), Vec::unit(tm.alg.field, m0dim(), w)};
    }
    UMElement unit(std::size_t t) const {
        return t < m() ? odd_unit(t) : even_unit(t - m());
    }
    std::size_t dim() const { return m() + m0dim(); }
};

inline UMElement um_left_multiply(const UMBimodule& um, const GradedElement& x,
                                  const UMElement& mu) {
    UMElement r = um.zero();
    for (std::size_t a = 0; a < um.d(); ++a) {
        if (x.odd[a].is_zero()) continue;
        for (std::size_t b = 0; b < um.m(); ++b)
            if (!mu.odd[b].is_zero()) r.even += (x.odd[a] * mu.odd[b]) * um.l_oo[a * um.m() + b];
        for (std::size_t w = 0; w < um.m0dim(); ++w)
            if (!mu.even[w].is_zero())
                r.odd += (x.odd[a] * mu.even[w]) * um.l_oe[a * um.m0dim() + w];
    }
    for (std::size_t u = 0; u < um.e(); ++u) {
        if (x.even[u].is_zero()) continue;
        for (std::size_t b = 0; b < um.m(); ++b)
            if (!mu.odd[b].is_zero()) r.odd += (x.even[u] * mu.odd[b]) * um.l_eo[u * um.m() + b];
        for (std::size_t w = 0; w < um.m0dim(); ++w)
            if (!mu.even[w].is_zero())
                r.even += (x.even[u] * mu.even[w]) * um.l_ee[u * um.m0dim() + w];
    }
    return r;
}

inline UMElement um_right_multiply(const UMBimodule& um, const UMElement& mu,
                                   const GradedElement& x) {
    UMElement r = um.zero();
    for (std::size_t a = 0; a < um.m(); ++a) {
        if (mu.odd[a].is_zero()) continue;
        for (std::size_t y = 0; y < um.d(); ++y)
            if (!x.odd[y].is_zero()) r.even += (mu.odd[a] * x.odd[y]) * um.r_oo[a * um.d() + y];
        for (std::size_t u = 0; u < um.e(); ++u)
            if (!x.even[u].is_zero()) r.odd += (mu.odd[a] * x.even[u]) * um.r_oe[a * um.e() + u];
    }
    for (std::size_t w = 0; w < um.m0dim(); ++w) {
        if (mu.even[w].is_zero()) continue;
        for (std::size_t y = 0; y < um.d(); ++y)
            if (!x.odd[y].is_zero())
                r.odd += (mu.even[w] * x.odd[y]) * um.r_eo[w * um.d() + y];
        for (std::size_t u = 0; u < um.e(); ++u)
            if (!x.even[u].is_zero())
                r.even += (mu.even[w] * x.even[u]) * um.r_ee[w * um.e() + u];
    }
    return r;
}

/// The four relation families generating lin<S> over all basis tuples.
inline std::vector<Vec> um_relations(const TernaryAlgebra& alg, const TriModule& tm) {
    const std::size_t d = alg.dim, m = tm.mdim;
    const std::size_t ambient = 2 * d * m;
    auto e0 = [&](std::size_t a, std::size_t b) { return a * m + b; };
    auto e1 = [&](std::size_t a, std::size_t q) { return d * m + a * d + q; };
    std::vector<Vec> rel;
    rel.reserve(4 * d * d * d * m);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t mu = 0; mu < m; ++mu) {
                    Vec prod = basis_product(alg, a, b, c);
                    // r1: [abc] (x) m - a (x) [bcm]_L
                    Vec r(alg.field, ambient);
                    for (std::size_t n = 0; n < d; ++n)
                        if (!prod[n].is_zero()) r[e0(n, mu)] += prod[n];
                    for (std::size_t bb = 0; bb < m; ++bb)
                        if (!tm.l_at(b, c, mu, bb).is_zero())
                            r[e0(a, bb)] -= tm.l_at(b, c, mu, bb);
                    rel.push_back(std::move(r));
                    // r2: [abm]_L (x) c - a (x) [bmc]_C
                    Vec r2(alg.field, ambient);
                    for (std::size_t bb = 0; bb < m; ++bb)
                        if (!tm.l_at(a, b, mu, bb).is_zero())
                            r2[e1(bb, c)] += tm.l_at(a, b, mu, bb);
                    for (std::size_t bb = 0; bb < m; ++bb)
                        if (!tm.c_at(b, c, mu, bb).is_zero())
                            r2[e0(a, bb)] -= tm.c_at(b, c, mu, bb);
                    rel.push_back(std::move(r2));
                    // r3: [amb]_C (x) c - a (x) [mbc]_R
                    Vec r3(alg.field, ambient);
                    for (std::size_t bb = 0; bb < m; ++bb)
                        if (!tm.c_at(a, b, mu, bb).is_zero())
                            r3[e1(bb, c)] += tm.c_at(a, b, mu, bb);
                    for (std::size_t bb = 0; bb < m; ++bb)
                        if (!tm.r_at(b, c, mu, bb).is_zero())
                            r3[e0(a, bb)] -= tm.r_at(b, c, mu, bb);
                    rel.push_back(std::move(r3));
                    // r4: [mab]_R (x) c - m (x) [abc]
                    Vec r4(alg.field, ambient);
                    for (std::size_t bb = 0; bb < m; ++bb)
                        if (!tm.r_at(a, b, mu, bb).is_zero())
                            r4[e1(bb, c)] += tm.r_at(a, b, mu, bb);
                    for (std::size_t n = 0; n < d; ++n)
                        if (!prod[n].is_zero()) r4[e1(mu, n)] -= prod[n];
                    rel.push_back(std::move(r4));
                }
    return rel;
}

/// Builds the enveloping bimodule.  Preconditions: the algebra is strongly
/// associative (checked by the envelope) and tm passes trimodule_check.
/// Every table is verified well-defined against the quotient relation bases.
inline UMBimodule build_UM(const TernaryAlgebra& alg, const TriModule& tm) {
    auto tmres = trimodule_check(tm);
    if (!tmres.pass)
        throw PreconditionError("build_UM: tri-module axiom '" +
                                tmres.counterexample->identity + "' fails");
    UMBimodule um;
    um.env = build_envelope(alg);
    um.tm = tm;
    const std::size_t d = alg.dim, m = tm.mdim;
    um.m0 = quotient_basis(alg.field, 2 * d * m, um_relations(alg, tm));
    const std::size_t e = um.e(), m0 = um.m0dim();

    auto modvec = [&](auto&& fill) {
        Vec v(alg.field, m);
        fill(v);
        return v;
    };
    // left tables
    um.l_oo.reserve(d * m);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t b = 0; b < m; ++b)
            um.l_oo.push_back(um.m0.project(Vec::unit(alg.field, 2 * d * m, um.e0_index(x, b))));
    um.l_oe.reserve(d * m0);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t w = 0; w < m0; ++w) {
            auto slot = um.decode(um.m0.representative_indices[w]);
            um.l_oe.push_back(modvec([&](Vec& v) {
                for (std::size_t bb = 0; bb < m; ++bb)
                    v[bb] = slot.in_am ? tm.l_at(x, slot.alg_idx, slot.mod_idx, bb)
                                       : tm.c_at(x, slot.alg_idx, slot.mod_idx, bb);
            }));
        }
    um.l_eo.reserve(e * m);
    for (std::size_t u = 0; u < e; ++u) {
        auto [p, q] = um.env.rep_pair(u);
        for (std::size_t b = 0; b < m; ++b)
            um.l_eo.push_back(modvec([&](Vec& v) {
                for (std::size_t bb = 0; bb < m; ++bb) v[bb] = tm.l_at(p, q, b, bb);
            }));
    }
    um.l_ee.reserve(e * m0);
    for (std::size_t u = 0; u < e; ++u) {
        auto [p, q] = um.env.rep_pair(u);
        for (std::size_t w = 0; w < m0; ++w) {
            auto slot = um.decode(um.m0.representative_indices[w]);
            Vec amb(alg.field, 2 * d * m);
            if (slot.in_am) {
                // (p (*) q) (*) (a (x) m) = [pqa] (x) m
                Vec pr = basis_product(alg, p, q, slot.alg_idx);
                for (std::size_t n = 0; n < d; ++n)
                    if (!pr[n].is_zero()) amb[um.e0_index(n, slot.mod_idx)] += pr[n];
            } else {
                // (p (*) q) (*) (m (x) a) = [pqm]_L (x) a
                for (std::size_t bb = 0; bb < m; ++bb) {
                    const CycScalar& c = tm.l_at(p, q, slot.mod_idx, bb);
                    if (!c.is_zero()) amb[um.e1_index(bb, slot.alg_idx)] += c;
                }
            }
            um.l_ee.push_back(um.m0.project(amb));
        }
    }
    // right tables
    um.r_oo.reserve(m * d);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t y = 0; y < d; ++y)
            um.r_oo.push_back(um.m0.project(Vec::unit(alg.field, 2 * d * m, um.e1_index(a, y))));
    um.r_oe.reserve(m * e);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t u = 0; u < e; ++u) {
            auto [p, q] = um.env.rep_pair(u);
            um.r_oe.push_back(modvec([&](Vec& v) {
                for (std::size_t bb = 0; bb < m; ++bb) v[bb] = tm.r_at(p, q, a, bb);
            }));
        }
    um.r_eo.reserve(m0 * d);
    for (std::size_t w = 0; w < m0; ++w) {
        auto slot = um.decode(um.m0.representative_indices[w]);
        for (std::size_t y = 0; y < d; ++y)
            um.r_eo.push_back(modvec([&](Vec& v) {
                for (std::size_t bb = 0; bb < m; ++bb)
                    v[bb] = slot.in_am ? tm.c_at(slot.alg_idx, y, slot.mod_idx, bb)
                                       : tm.r_at(slot.alg_idx, y, slot.mod_idx, bb);
            }));
    }
    um.r_ee.reserve(m0 * e);
    for (std::size_t w = 0; w < m0; ++w) {
        auto slot = um.decode(um.m0.representative_indices[w]);
        for (std::size_t u = 0; u < e; ++u) {
            auto [p, q] = um.env.rep_pair(u);
            Vec amb(alg.field, 2 * d * m);
            if (slot.in_am) {
                // (a (x) m) (*) (p (*) q) = a (x) [mpq]_R
                for (std::size_t bb = 0; bb < m; ++bb) {
                    const CycScalar& c = tm.r_at(p, q, slot.mod_idx, bb);
                    if (!c.is_zero()) amb[um.e0_index(slot.alg_idx, bb)] += c;
                }
            } else {
                // (m (x) a) (*) (p (*) q) = m (x) [apq]
                Vec pr = basis_product(alg, slot.alg_idx, p, q);
                for (std::size_t n = 0; n < d; ++n)
                    if (!pr[n].is_zero()) amb[um.e1_index(slot.mod_idx, n)] += pr[n];
            }
            um.r_ee.push_back(um.m0.project(amb));
        }
    }

    // well-definedness against the M_0 relation basis (tables taking an M_0
    // argument) and the A_0 relation basis (tables taking an A_0 argument)
    const Mat& relM = um.m0.relation_rref;
    for (std::size_t ri = 0; ri < relM.rows; ++ri) {
        for (std::size_t x = 0; x < d; ++x) {
            Vec acc(alg.field, m);
            Vec acc_r(alg.field, m);
            for (std::size_t amb = 0; amb < 2 * d * m; ++amb) {
                const CycScalar& c = relM.at(ri, amb);
                if (c.is_zero()) continue;
                auto slot = um.decode(amb);
                for (std::size_t bb = 0; bb < m; ++bb) {
                    acc[bb] += c * (slot.in_am ? tm.l_at(x, slot.alg_idx, slot.mod_idx, bb)
                                               : tm.c_at(x, slot.alg_idx, slot.mod_idx, bb));
                    acc_r[bb] += c * (slot.in_am ? tm.c_at(slot.alg_idx, x, slot.mod_idx, bb)
                                                 : tm.r_at(slot.alg_idx, x, slot.mod_idx, bb));
                }
            }
            if (!acc.is_zero() || !acc_r.is_zero())
                throw Error("build_UM: odd action not well-defined on M_0 classes");
        }
    }
    const Mat& relA = um.env.a0.relation_rref;
    for (std::size_t ri = 0; ri < relA.rows; ++ri)
        for (std::size_t a = 0; a < m; ++a) {
            Vec accL(alg.field, m), accR(alg.field, m);
            for (std::size_t p = 0; p < d; ++p)
                for (std::size_t q = 0; q < d; ++q) {
                    const CycScalar& c = relA.at(ri, p * d + q);
                    if (c.is_zero()) continue;
                    for (std::size_t bb = 0; bb < m; ++bb) {
                        accL[bb] += c * tm.l_at(p, q, a, bb);
                        accR[bb] += c * tm.r_at(p, q, a, bb);
                    }
                }
            if (!accL.is_zero() || !accR.is_zero())
                throw Error("build_UM: even action not well-defined on A_0 classes");
        }
    return um;
}

/// The eight consequence identities of the graded action, the bimodule laws,
/// and the parity-grading rule, checked exhaustively on basis tuples.
inline CheckResult check_um_properties(const UMBimodule& um) {
    const TernaryAlgebra& alg = um.tm.alg;
    const std::size_t d = um.d(), m = um.m();
    detail::TriOps ops(um.tm);
    std::size_t checks = 0;
    ScalarField f = alg.field;

    auto odd_alg = [&](const Vec& v) {
        GradedElement g{v, Vec(f, um.e())};
        return g;
    };
    auto even_class = [&](const Vec& ambientAA) {
        GradedElement g{Vec(f, d), um.env.a0.project(ambientAA)};
        return g;
    };
    auto tensorAA = [&](const Vec& x, std::size_t y) {
        Vec amb(f, d * d);
        for (std::size_t n = 0; n < d; ++n)
            if (!x[n].is_zero()) amb[n * d + y] += x[n];
        return amb;
    };
    auto tensorAA2 = [&](std::size_t x, const Vec& y) {
        Vec amb(f, d * d);
        for (std::size_t n = 0; n < d; ++n)
            if (!y[n].is_zero()) amb[x * d + n] += y[n];
        return amb;
    };
    auto odd_mod = [&](const Vec& v) {
        UMElement e{v, Vec(f, um.m0dim())};
        return e;
    };
    auto class_am = [&](std::size_t a, const Vec& mv) { // class(e_a (x) mv)
        Vec amb(f, 2 * d * m);
        for (std::size_t b = 0; b < m; ++b)
            if (!mv[b].is_zero()) amb[um.e0_index(a, b)] += mv[b];
        UMElement e{Vec(f, m), um.m0.project(amb)};
        return e;
    };
    auto class_ma = [&](const Vec& mv, const Vec& av) { // class(mv (x) av)
        Vec amb(f, 2 * d * m);
        for (std::size_t b = 0; b < m; ++b)
            if (!mv[b].is_zero())
                for (std::size_t n = 0; n < d; ++n)
                    if (!av[n].is_zero()) amb[um.e1_index(b, n)] += mv[b] * av[n];
        UMElement e{Vec(f, m), um.m0.project(amb)};
        return e;
    };
    auto aunit = [&](std::size_t i) { return Vec::unit(f, d, i); };
    auto munit = [&](std::size_t a) { return Vec::unit(f, m, a); };

    auto fail = [&](const char* name, std::vector<std::size_t> tuple, UMElement res) {
        Vec flat(f, um.dim());
        for (std::size_t t = 0; t < m; ++t) flat[t] = res.odd[t];
        for (std::size_t t = 0; t < um.m0dim(); ++t) flat[m + t] = res.even[t];
        return CheckResult::failure(name, std::move(tuple), std::move(flat), checks);
    };

    // identities over (a,b,c,mu) and (a,b,c,e2,mu)
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t mu = 0; mu < m; ++mu) {
                    Vec abc = basis_product(alg, a, b, c);
                    // 1: [abc] (*) m = a (*) [bcm]_L
                    {
                        ++checks;
                        UMElement lhs = um_left_multiply(um, odd_alg(abc), um.odd_unit(mu));
                        UMElement rhs = um_left_multiply(
                            um, odd_alg(aunit(a)),
                            odd_mod(ops.L(aunit(b), aunit(c), munit(mu))));
                        if (!(lhs == rhs)) return fail("[abc]*m=a*[bcm]L", {a, b, c, mu}, lhs - rhs);
                    }
                    // 2: m (*) [abc] = [mab]_R (*) c
                    {
                        ++checks;
                        UMElement lhs = um_right_multiply(um, um.odd_unit(mu), odd_alg(abc));
                        UMElement rhs = um_right_multiply(
                            um, odd_mod(ops.R(munit(mu), aunit(a), aunit(b))),
                            odd_alg(aunit(c)));
                        if (!(lhs == rhs)) return fail("m*[abc]=[mab]R*c", {a, b, c, mu}, lhs - rhs);
                    }
                    for (std::size_t e2 = 0; e2 < d; ++e2) {
                        // 3: [abc] (*) (m (*) e2) = [ab[cme2]_C]_L
                        {
                            ++checks;
                            UMElement lhs = um_left_multiply(
                                um, odd_alg(abc), class_ma(munit(mu), aunit(e2)));
                            UMElement rhs = odd_mod(ops.L(
                                aunit(a), aunit(b), ops.C(aunit(c), munit(mu), aunit(e2))));
                            if (!(lhs == rhs))
                                return fail("[abc]*(m*e)=[ab[cme]C]L", {a, b, c, mu, e2},
                                            lhs - rhs);
                        }
                        // 4: (a (*) m) (*) [bce2] = [[amb]_C ce2]_R
                        {
                            ++checks;
                            UMElement lhs = um_right_multiply(
                                um, class_am(a, munit(mu)),
                                odd_alg(basis_product(alg, b, c, e2)));
                            UMElement rhs = odd_mod(ops.R(ops.C(aunit(a), munit(mu), aunit(b)),
                                                          aunit(c), aunit(e2)));
                            if (!(lhs == rhs))
                                return fail("(a*m)*[bce]=[[amb]C ce]R", {a, b, c, mu, e2},
                                            lhs - rhs);
                        }
                        // 5: (a (*) [bce2]) (*) m = ([abc] (*) e2) (*) m
                        //    = [abc] (*) (e2 (*) m) = [ab[ce2 m]_L]_L
                        {
                            Vec bce = basis_product(alg, b, c, e2);
                            UMElement x1 = um_left_multiply(
                                um, even_class(tensorAA2(a, bce)), um.odd_unit(mu));
                            UMElement x2 = um_left_multiply(um, even_class(tensorAA(abc, e2)),
                                                            um.odd_unit(mu));
                            UMElement x3 = um_left_multiply(um, odd_alg(abc),
                                                            class_am(e2, munit(mu)));
                            UMElement x4 = odd_mod(ops.L(
                                aunit(a), aunit(b), ops.L(aunit(c), aunit(e2), munit(mu))));
                            ++checks;
                            if (!(x1 == x2))
                                return fail("(a*[bce])*m=([abc]*e)*m", {a, b, c, e2, mu}, x1 - x2);
                            ++checks;
                            if (!(x2 == x3))
                                return fail("([abc]*e)*m=[abc]*(e*m)", {a, b, c, e2, mu}, x2 - x3);
                            ++checks;
                            if (!(x3 == x4))
                                return fail("[abc]*(e*m)=[ab[cem]L]L", {a, b, c, e2, mu}, x3 - x4);
                        }
                        // 6: m (*) ([abc] (*) e2) = m (*) (a (*) [bce2])
                        //    = (m (*) a) (*) [bce2] = [[mab]_R ce2]_R
                        {
                            Vec bce = basis_product(alg, b, c, e2);
                            UMElement x1 = um_right_multiply(um, um.odd_unit(mu),
                                                             even_class(tensorAA(abc, e2)));
                            UMElement x2 = um_right_multiply(um, um.odd_unit(mu),
                                                             even_class(tensorAA2(a, bce)));
                            UMElement x3 = um_right_multiply(
                                um, class_ma(munit(mu), aunit(a)), odd_alg(bce));
                            UMElement x4 = odd_mod(ops.R(
                                ops.R(munit(mu), aunit(a), aunit(b)), aunit(c), aunit(e2)));
                            ++checks;
                            if (!(x1 == x2))
                                return fail("m*([abc]*e)=m*(a*[bce])", {a, b, c, e2, mu}, x1 - x2);
                            ++checks;
                            if (!(x2 == x3))
                                return fail("m*(a*[bce])=(m*a)*[bce]", {a, b, c, e2, mu}, x2 - x3);
                            ++checks;
                            if (!(x3 == x4))
                                return fail("(m*a)*[bce]=[[mab]R ce]R", {a, b, c, e2, mu}, x3 - x4);
                        }
                        for (std::size_t g2 = 0; g2 < d; ++g2) {
                            // 7: (a (*) [bce2]) (*) (m (*) g2)
                            //    = ([abc] (*) e2) (*) (m (*) g2) = [abc] (*) [e2 m g2]_C
                            Vec bce = basis_product(alg, b, c, e2);
                            UMElement y1 = um_left_multiply(um, even_class(tensorAA2(a, bce)),
                                                            class_ma(munit(mu), aunit(g2)));
                            UMElement y2 = um_left_multiply(um, even_class(tensorAA(abc, e2)),
                                                            class_ma(munit(mu), aunit(g2)));
                            UMElement y3 = um.zero();
                            {
                                // [abc] (x) [e2 m g2]_C as an A (x) M class
                                Vec cmid = ops.C(aunit(e2), munit(mu), aunit(g2));
                                Vec amb(f, 2 * d * m);
                                for (std::size_t n = 0; n < d; ++n)
                                    if (!abc[n].is_zero())
                                        for (std::size_t bb = 0; bb < m; ++bb)
                                            if (!cmid[bb].is_zero())
                                                amb[um.e0_index(n, bb)] += abc[n] * cmid[bb];
                                y3.even = um.m0.project(amb);
                            }
                            ++checks;
                            if (!(y1 == y2))
                                return fail("(a*[bce])*(m*g)=([abc]*e)*(m*g)",
                                            {a, b, c, e2, mu, g2}, y1 - y2);
                            ++checks;
                            if (!(y2 == y3))
                                return fail("([abc]*e)*(m*g)=[abc]*[emg]C",
                                            {a, b, c, e2, mu, g2}, y2 - y3);
                            // 8: (a (*) m) (*) ([bce2] (*) g2)
                            //    = (a (*) m) (*) (b (*) [ce2 g2]) = [amb]_C (*) [ce2 g2]
                            Vec ceg = basis_product(alg, c, e2, g2);
                            UMElement z1 = um_right_multiply(um, class_am(a, munit(mu)),
                                                             even_class(tensorAA(bce, g2)));
                            UMElement z2 = um_right_multiply(um, class_am(a, munit(mu)),
                                                             even_class(tensorAA2(b, ceg)));
                            UMElement z3 =
                                class_ma(ops.C(aunit(a), munit(mu), aunit(b)), ceg);
                            ++checks;
                            if (!(z1 == z2))
                                return fail("(a*m)*([bce]*g)=(a*m)*(b*[ceg])",
                                            {a, b, c, e2, mu, g2}, z1 - z2);
                            ++checks;
                            if (!(z2 == z3))
                                return fail("(a*m)*(b*[ceg])=[amb]C*[ceg]",
                                            {a, b, c, e2, mu, g2}, z2 - z3);
                        }
                    }
                }

    // bimodule laws and grading on all graded basis tuples
    for (std::size_t x = 0; x < um.env.dim(); ++x)
        for (std::size_t t = 0; t < um.dim(); ++t) {
            GradedElement gx = um.env.unit(x);
            UMElement mt = um.unit(t);
            bool ox = x < um.env.odd_dim(), om = t < um.m();
            // grading: A_i (*) M_j lands in M_{i+j mod 2}
            UMElement lp = um_left_multiply(um, gx, mt);
            UMElement rp = um_right_multiply(um, mt, gx);
            ++checks;
            if (ox == om ? !lp.odd.is_zero() || !rp.odd.is_zero()
                         : !lp.even.is_zero() || !rp.even.is_zero())
                return fail("grading", {x, t}, ox == om ? lp : rp);
            for (std::size_t y = 0; y < um.env.dim(); ++y) {
                GradedElement gy = um.env.unit(y);
                ++checks;
                UMElement m1 = um_left_multiply(
                    um, envelope_multiply(um.env, gx, gy), mt);
                UMElement m2 = um_left_multiply(um, gx, um_left_multiply(um, gy, mt));
                if (!(m1 == m2)) return fail("(xy)*mu=x*(y*mu)", {x, y, t}, m1 - m2);
                ++checks;
                UMElement m3 = um_right_multiply(um, um_right_multiply(um, mt, gx), gy);
                UMElement m4 = um_right_multiply(um, mt, envelope_multiply(um.env, gx, gy));
                if (!(m3 == m4)) return fail("(mu*x)*y=mu*(xy)", {x, y, t}, m3 - m4);
                ++checks;
                UMElement m5 = um_right_multiply(um, um_left_multiply(um, gx, mt), gy);
                UMElement m6 = um_left_multiply(um, gx, um_right_multiply(um, mt, gy));
                if (!(m5 == m6)) return fail("(x*mu)*y=x*(mu*y)", {x, y, t}, m5 - m6);
            }
        }

    CheckResult ok;
    ok.checks = checks;
    return ok;
}

} // namespace talg

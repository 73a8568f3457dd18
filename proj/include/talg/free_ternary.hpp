#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "talg/cyclotomic.hpp"
#include "talg/errors.hpp"
#include "talg/ternary_algebra.hpp"

namespace talg {

/// The free ternary algebra T^odd V on n generators, truncated at an odd
/// maximum word length.  Elements are formal combinations of odd-length words.
struct FreeTernary {
    std::size_t generators = 1;
    std::size_t max_degree = 7; // odd truncation bound
    ScalarField field;

    FreeTernary() = default;
    FreeTernary(std::size_t n, std::size_t cap, ScalarField f)
        : generators(n), max_degree(cap), field(f) {
        if (n == 0) throw PreconditionError("free ternary algebra needs >= 1 generator");
        if (cap % 2 == 0) throw PreconditionError("truncation bound must be odd");
    }
};

using Word = std::vector<std::uint32_t>;

/// Canonical word order: by length, then lexicographically.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Formal linear combination of odd-length words, canonically ordered, with
/// zero coefficients dropped.
struct FreeElement {
    std::map<Word, CycScalar, WordOrder> terms;

    bool is_zero() const { return terms.empty(); }

    void add(const Word& w, const CycScalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend FreeElement operator+(const FreeElement& a, const FreeElement& b) {
        FreeElement r = a;
        for (const auto& [w, c] : b.terms) r.add(w, c);
        return r;
    }
    friend FreeElement operator-(const FreeElement& a, const FreeElement& b) {
        FreeElement r = a;
        for (const auto& [w, c] : b.terms) r.add(w, -c);
        return r;
    }
    friend FreeElement operator*(const CycScalar& c, const FreeElement& a) {
        FreeElement r;
        for (const auto& [w, x] : a.terms) r.add(w, c * x);
        return r;
    }
    friend bool operator==(const FreeElement& a, const FreeElement& b) {
        return a.terms == b.terms;
    }
};

inline FreeElement free_word(const FreeTernary& F, const Word& w) {
    if (w.size() % 2 == 0 || w.size() > F.max_degree)
        throw PreconditionError("word must have odd length within the truncation bound");
    for (auto l : w)
        if (l >= F.generators) throw PreconditionError("letter out of range");
    FreeElement e;
    e.add(w, CycScalar::one(F.field));
    return e;
}

inline FreeElement free_generator(const FreeTernary& F, std::uint32_t letter) {
    return free_word(F, Word{letter});
}

/// Raised when a product would exceed the truncation bound; carries the
/// offending word triple.
class TruncationError : public Error {
public:
    TruncationError(const Word& u, const Word& v, const Word& w, std::size_t cap)
        : Error("free product exceeds degree bound " + std::to_string(cap) + ": |" +
                word_str(u) + "| + |" + word_str(v) + "| + |" + word_str(w) + "|") {}

    static std::string word_str(const Word& w) {
        std::string s;
        for (auto l : w) s += static_cast<char>('a' + (l % 26));
        return s;
    }
};

/// [uvw] = u (x) v (x) w: concatenation, extended trilinearly.
inline FreeElement free_product(const FreeTernary& F, const FreeElement& u,
                                const FreeElement& v, const FreeElement& w) {
    FreeElement out;
    for (const auto& [wu, cu] : u.terms)
        for (const auto& [wv, cv] : v.terms)
            for (const auto& [ww, cw] : w.terms) {
                if (wu.size() + wv.size() + ww.size() > F.max_degree)
                    throw TruncationError(wu, wv, ww, F.max_degree);
                Word cat = wu;
                cat.insert(cat.end(), wv.begin(), wv.end());
                cat.insert(cat.end(), ww.begin(), ww.end());
                out.add(cat, cu * cv * cw);
            }
    return out;
}

/// The unique lift of a linear map phi : V -> A (columns of `phi` are the
/// images of the generators) to a ternary homomorphism T^odd V -> A,
/// evaluated by left-nested bracketing [[v1 v2 v3] v4 v5]...  Requires A
/// strongly associative, which makes every bracketing agree.
inline Vec lift_hom(const TernaryAlgebra& alg, const Mat& phi, const FreeElement& elem) {
    if (phi.rows != alg.dim) throw DimensionError("phi must map into the algebra");
    if (!check_associativity(alg, AssocKind::strong).pass)
        throw PreconditionError("lift_hom: target algebra is not strongly associative");
    Vec out(alg.field, alg.dim);
    for (const auto& [w, c] : elem.terms) {
        Vec acc = phi.col(w[0]);
        for (std::size_t p = 1; p + 1 < w.size(); p += 2)
            acc = ternary_product(alg, acc, phi.col(w[p]), phi.col(w[p + 1]));
        out += c * acc;
    }
    return out;
}

} // namespace talg

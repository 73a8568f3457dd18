#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "talg/errors.hpp"
#include "talg/rational.hpp"

namespace talg {

namespace detail {

/// Euler totient and reduction tables for one cyclotomic order, computed once
/// and cached process-wide.
struct FieldTables {
    std::uint32_t order = 1;
    std::uint32_t phi = 1;
    std::vector<BigInt> cyclo; // monic Phi_n, coefficients low -> high, degree phi
    // x^k reduced modulo Phi_n in the power basis, k = 0 .. max(order-1, 2*phi-2)
    std::vector<std::vector<Rational>> powers;
    // conjugation (zeta -> zeta^{order-1}) of each basis power x^k, k < phi
    std::vector<std::vector<Rational>> conj;
};

// (x^n - 1) / prod_{d|n, d<n} Phi_d, by exact integer polynomial division.
inline std::vector<BigInt> cyclotomic_poly(std::uint32_t n) {
    std::map<std::uint32_t, std::vector<BigInt>> memo;
    auto divide = [](std::vector<BigInt> num, const std::vector<BigInt>& den) {
        // exact division of polynomials with monic denominator
        std::vector<BigInt> q(num.size() - den.size() + 1, BigInt(0));
        for (std::size_t i = q.size(); i-- > 0;) {
            BigInt c = num[i + den.size() - 1];
            q[i] = c;
            if (c != 0)
                for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
        }
        return q;
    };
    for (std::uint32_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::vector<BigInt> p(d + 1, BigInt(0));
        p[0] = -1;
        p[d] = 1; // x^d - 1
        for (std::uint32_t e = 1; e < d; ++e)
            if (d % e == 0) p = divide(std::move(p), memo[e]);
        memo[d] = std::move(p);
    }
    return memo[n];
}

inline const FieldTables& field_tables(std::uint32_t order) {
    static std::mutex mu;
    static std::map<std::uint32_t, FieldTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    if (order == 0) throw Error("cyclotomic order must be positive");

    FieldTables t;
    t.order = order;
    t.cyclo = cyclotomic_poly(order);
    t.phi = static_cast<std::uint32_t>(t.cyclo.size() - 1);

    const std::uint32_t pmax = std::max(order - 1, 2 * t.phi - 2);
    t.powers.resize(pmax + 1);
    t.powers[0].assign(t.phi, Rational(0));
    t.powers[0][0] = Rational(1);
    for (std::uint32_t k = 1; k <= pmax; ++k) {
        std::vector<Rational> v(t.phi, Rational(0));
        const auto& prev = t.powers[k - 1];
        Rational top = prev[t.phi - 1];
        for (std::uint32_t i = 1; i < t.phi; ++i) v[i] = prev[i - 1];
        if (!top.is_zero()) // x^phi = -sum_{i<phi} cyclo_i x^i
            for (std::uint32_t i = 0; i < t.phi; ++i) v[i] -= top * Rational(t.cyclo[i]);
        t.powers[k] = std::move(v);
    }

    t.conj.resize(t.phi);
    for (std::uint32_t k = 0; k < t.phi; ++k)
        t.conj[k] = t.powers[(static_cast<std::uint64_t>(k) * (order - 1)) % order];

    return cache.emplace(order, std::move(t)).first->second;
}

} // namespace detail

/// Handle for the ambient cyclotomic field Q(zeta_n); order 1 is plain Q.
/// All scalars in one computation must share the same order.
struct ScalarField {
    std::uint32_t order = 1;

    std::uint32_t phi() const { return detail::field_tables(order).phi; }
    friend bool operator==(ScalarField a, ScalarField b) { return a.order == b.order; }
    friend bool operator!=(ScalarField a, ScalarField b) { return a.order != b.order; }
};

/// Exact element of Q(zeta_n), stored as phi(n) rational coordinates in the
/// power basis 1, zeta, ..., zeta^{phi-1}, always reduced mod Phi_n.
class CycScalar {
public:
    CycScalar() : order_(1), coeffs_(1, Rational(0)) {}

    static CycScalar zero(ScalarField f) { return CycScalar(f.order); }

    static CycScalar one(ScalarField f) { return from_rational(f, Rational(1)); }

    static CycScalar from_rational(ScalarField f, const Rational& r) {
        CycScalar s(f.order);
        s.coeffs_[0] = r;
        return s;
    }

    /// zeta^k; the exponent is reduced mod the order first.
    static CycScalar zeta_pow(ScalarField f, std::uint64_t k) {
        const auto& t = detail::field_tables(f.order);
        CycScalar s(f.order);
        s.coeffs_ = t.powers[k % f.order];
        return s;
    }

    std::uint32_t order() const { return order_; }
    ScalarField field() const { return ScalarField{order_}; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (!coeffs_[0].is_one()) return false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }
    /// The rational value of a scalar with no zeta component.
    const Rational& rational_value() const {
        if (!is_rational()) throw Error("scalar is not rational: " + to_string());
        return coeffs_[0];
    }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
        a.require_same_field(b);
        CycScalar r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) {
        a.require_same_field(b);
        CycScalar r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }
    CycScalar operator-() const {
        CycScalar r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        a.require_same_field(b);
        const std::size_t phi = a.coeffs_.size();
        CycScalar r(a.order_);
        if (a.is_zero() || b.is_zero()) return r;
        if (phi == 1) {
            r.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
            return r;
        }
        if (a.is_rational()) return scaled(b, a.coeffs_[0]);
        if (b.is_rational()) return scaled(a, b.coeffs_[0]);
        const auto& t = detail::field_tables(a.order_);
        std::vector<Rational> conv(2 * phi - 1, Rational(0));
        for (std::size_t i = 0; i < phi; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < phi; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        for (std::size_t k = 0; k < phi; ++k) r.coeffs_[k] = conv[k];
        for (std::size_t k = phi; k < conv.size(); ++k) {
            if (conv[k].is_zero()) continue;
            const auto& red = t.powers[k];
            for (std::size_t i = 0; i < phi; ++i) r.coeffs_[i] += conv[k] * red[i];
        }
        return r;
    }

    friend CycScalar operator/(const CycScalar& a, const CycScalar& b) {
        return a * b.inverse();
    }

    CycScalar& operator+=(const CycScalar& b) { return *this = *this + b; }
    CycScalar& operator-=(const CycScalar& b) { return *this = *this - b; }
    CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        a.require_same_field(b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    /// Multiplicative inverse, by exact linear solve in the power basis.
    CycScalar inverse() const {
        if (is_zero()) throw DivisionByZeroError();
        const std::size_t phi = coeffs_.size();
        if (phi == 1) {
            CycScalar r(order_);
            r.coeffs_[0] = Rational(1) / coeffs_[0];
            return r;
        }
        // columns of m: coordinates of (*this) * zeta^j
        CycScalar zj = one(field());
        std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, Rational(0)));
        for (std::size_t j = 0; j < phi; ++j) {
            CycScalar col = *this * zj;
            for (std::size_t i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
            if (j + 1 < phi) zj = zj * zeta_pow(field(), 1);
        }
        m[0][phi] = Rational(1); // rhs = e_0
        // Gauss-Jordan
        std::size_t row = 0;
        std::vector<std::size_t> pivot_col(phi, 0);
        for (std::size_t col = 0; col < phi && row < phi; ++col) {
            std::size_t p = row;
            while (p < phi && m[p][col].is_zero()) ++p;
            if (p == phi) continue;
            std::swap(m[p], m[row]);
            Rational inv = Rational(1) / m[row][col];
            for (std::size_t j = col; j <= phi; ++j) m[row][j] *= inv;
            for (std::size_t i = 0; i < phi; ++i) {
                if (i == row || m[i][col].is_zero()) continue;
                Rational f = m[i][col];
                for (std::size_t j = col; j <= phi; ++j) m[i][j] -= f * m[row][j];
            }
            pivot_col[row] = col;
            ++row;
        }
        if (row < phi) throw DivisionByZeroError(); // not invertible: only possible for 0
        CycScalar r(order_);
        for (std::size_t i = 0; i < phi; ++i) r.coeffs_[pivot_col[i]] = m[i][phi];
        return r;
    }

    /// Complex conjugation: the ring automorphism zeta -> zeta^{order-1}.
    CycScalar conjugate() const {
        const auto& t = detail::field_tables(order_);
        CycScalar r(order_);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero()) continue;
            for (std::size_t i = 0; i < coeffs_.size(); ++i)
                r.coeffs_[i] += coeffs_[k] * t.conj[k][i];
        }
        return r;
    }

    /// Canonical literal of the scalar grammar; parse_scalar is a left inverse.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c.is_zero()) continue;
            if (first) {
                out += term_string(c, k);
                first = false;
            } else {
                Rational a = c.sign() < 0 ? -c : c;
                out += c.sign() < 0 ? " - " : " + ";
                out += term_string(a, k);
            }
        }
        return out;
    }

private:
    explicit CycScalar(std::uint32_t order)
        : order_(order), coeffs_(detail::field_tables(order).phi, Rational(0)) {}

    static CycScalar scaled(const CycScalar& a, const Rational& r) {
        CycScalar out = a;
        for (auto& c : out.coeffs_) c *= r;
        return out;
    }

    static std::string term_string(const Rational& c, std::size_t k) {
        if (k == 0) return c.to_string();
        std::string z = k == 1 ? "z" : "z^" + std::to_string(k);
        if (c.is_one()) return z;
        return c.to_string() + "*" + z;
    }

    void require_same_field(const CycScalar& b) const {
        if (order_ != b.order_)
            throw FieldMismatchError("field order mismatch: " + std::to_string(order_) +
                                     " vs " + std::to_string(b.order_));
    }

    std::uint32_t order_;
    std::vector<Rational> coeffs_;
};

/// Parses a literal of the grammar
///   expr := term (("+"|"-") term)* ; term := rat | rat "*" pow | pow ;
///   pow := "z" ["^" uint] ; rat := ["-"] uint ["/" uint]
/// where z denotes zeta_n for the field's order. Whitespace is insignificant;
/// exponents are reduced mod the order.
inline CycScalar parse_scalar(const std::string& text, ScalarField field) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto parse_uint = [&] {
        skip_ws();
        std::size_t start = pos;
        BigInt v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        if (pos == start) throw ParseError("expected an unsigned integer", pos);
        return v;
    };
    auto parse_pow = [&] {
        // caller has consumed 'z'
        skip_ws();
        std::uint64_t k = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            BigInt e = parse_uint();
            k = static_cast<std::uint64_t>(e % field.order);
        }
        return CycScalar::zeta_pow(field, k);
    };
    auto parse_term = [&] {
        skip_ws();
        if (pos < text.size() && text[pos] == 'z') {
            ++pos;
            return parse_pow();
        }
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        BigInt num = parse_uint();
        BigInt den = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den = parse_uint();
            if (den == 0) throw ParseError("zero denominator", pos);
        }
        Rational r(neg ? -num : num, den);
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != 'z')
                throw ParseError("expected 'z' after '*'", pos);
            ++pos;
            CycScalar p = parse_pow();
            return CycScalar::from_rational(field, r) * p;
        }
        return CycScalar::from_rational(field, r);
    };

    CycScalar acc = parse_term();
    skip_ws();
    while (pos < text.size()) {
        char op = text[pos];
        if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos);
        ++pos;
        CycScalar t = parse_term();
        acc = op == '+' ? acc + t : acc - t;
        skip_ws();
    }
    return acc;
}

} // namespace talg

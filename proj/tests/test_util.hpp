#pragma once

#include <random>

#include "talg/cyclotomic.hpp"
#include "talg/linalg.hpp"

namespace talg::testutil {

/// Deterministic generator of small exact values for property-style tests.
class Rng {
public:
    explicit Rng(unsigned seed = 20240117) : gen_(seed) {}

    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(gen_);
    }

    Rational rational() {
        return Rational(BigInt(integer(-5, 5)), BigInt(integer(1, 4)));
    }

    CycScalar scalar(ScalarField f) {
        CycScalar s = CycScalar::zero(f);
        for (std::uint32_t k = 0; k < f.phi(); ++k)
            s += CycScalar::from_rational(f, rational()) * CycScalar::zeta_pow(f, k);
        return s;
    }

    CycScalar nonzero_scalar(ScalarField f) {
        for (;;) {
            CycScalar s = scalar(f);
            if (!s.is_zero()) return s;
        }
    }

    Vec vec(ScalarField f, std::size_t dim) {
        Vec v(f, dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = scalar(f);
        return v;
    }

    Mat mat(ScalarField f, std::size_t rows, std::size_t cols) {
        Mat m(f, rows, cols);
        for (auto& e : m.entries) e = scalar(f);
        return m;
    }

private:
    std::mt19937 gen_;
};

} // namespace talg::testutil

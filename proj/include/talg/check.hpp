#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "talg/linalg.hpp"

namespace talg {

/// First failing instance of an identity scan: the identity's name, the basis
/// tuple it failed on, and the exact residual (lhs - rhs).
struct Counterexample {
    std::string identity;
    std::vector<std::size_t> tuple;
    Vec residual;
};

struct CheckResult {
    bool pass = true;
    std::optional<Counterexample> counterexample;
    std::size_t checks = 0; // identity instances evaluated

    static CheckResult failure(std::string identity, std::vector<std::size_t> tuple,
                               Vec residual, std::size_t checks) {
        CheckResult r;
        r.pass = false;
        r.counterexample = Counterexample{std::move(identity), std::move(tuple), std::move(residual)};
        r.checks = checks;
        return r;
    }
};

} // namespace talg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace repdecomp {

struct PropertyCheck {
    std::string name;
    bool ok = false;
    std::string detail;  // filled on failure
};

struct PropertyReport {
    std::uint64_t seed = 0;
    std::vector<PropertyCheck> checks;
    bool all_ok() const;
};

/// Randomized cross-checks of the exact machinery: Freudenthal totals
/// against the Weyl dimension formula, the degree-3 power-sum identity,
/// Weyl invariance of generated characters, Gaussian palindromicity and the
/// bounded-partition generating function, and the orthogonality probe
/// trivial_mult(a (x) a*) = 1 for irreducibles. Deterministic for a fixed
/// seed.
PropertyReport run_property_suite(std::uint64_t seed);

}  // namespace repdecomp

#pragma once

#include "spalg/super_polynomial.hpp"

#include <cstdint>
#include <optional>

namespace spalg {

// splitmix64. The algorithm (constants and draw order) is part of the
// external contract: identical (spec, seed, index) triples must generate
// identical polynomials on every platform, forever. See docs/formats.md.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, n); n must be positive. Plain modulo reduction,
    // fixed by the contract.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

inline SplitMix64 case_rng(std::uint64_t seed, std::uint64_t case_index) {
    return SplitMix64(seed ^ (0x9E3779B97F4A7C15ull * (case_index + 1)));
}

struct RandomTermSpec {
    std::size_t max_even_degree = 3;  // per-monomial total even degree bound
    std::size_t max_odd_factors = 3;  // per-monomial odd factor bound
    std::size_t max_terms = 5;
    std::uint64_t coeff_num_bound = 6; // numerators in [-bound, bound] \ {0}
    std::uint64_t coeff_den_bound = 4; // denominators in [1, bound]
    std::optional<Parity> parity;      // nullopt = Any
};

// Pure function of (table, spec, seed, index). When the parity is
// constrained the result is homogeneous of that parity and never zero
// (bounded resampling; RetryExhaustedError on a degenerate spec).
SuperPolynomial generate_random_poly(const TablePtr& table, const RandomTermSpec& spec,
                                     std::uint64_t seed, std::uint64_t index);

} // namespace spalg

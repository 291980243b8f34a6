#pragma once

#include "spalg/parity.hpp"

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace spalg {

// Canonical basis element: even exponent vector plus a strictly increasing
// sequence of odd-variable indices. An odd index appearing twice is
// structurally impossible (theta^2 = 0 lives in the product rule, not here).
struct Monomial {
    std::vector<std::uint32_t> even_exponents;
    std::vector<std::uint32_t> odd_factors; // strictly increasing

    std::size_t even_degree() const {
        return std::accumulate(even_exponents.begin(), even_exponents.end(), std::size_t{0});
    }

    std::size_t total_degree() const { return even_degree() + odd_factors.size(); }

    Parity parity() const { return parity_of_count(odd_factors.size()); }

    bool is_constant() const {
        return odd_factors.empty() && even_degree() == 0;
    }

    bool operator==(const Monomial& other) const {
        return even_exponents == other.even_exponents && odd_factors == other.odd_factors;
    }
};

// Graded-lexicographic order: lower total degree first; within a degree,
// higher power of the earliest declared variable first, then earlier odd
// factors first. Doubles as the display order of the canonical formatter.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::size_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.even_exponents.size(); ++i) {
            if (a.even_exponents[i] != b.even_exponents[i])
                return a.even_exponents[i] > b.even_exponents[i];
        }
        std::size_t k = std::min(a.odd_factors.size(), b.odd_factors.size());
        for (std::size_t i = 0; i < k; ++i) {
            if (a.odd_factors[i] != b.odd_factors[i])
                return a.odd_factors[i] < b.odd_factors[i];
        }
        return a.odd_factors.size() > b.odd_factors.size();
    }
};

struct SignedMonomial {
    int sign; // +1 or -1
    Monomial monomial;
};

// Supercommutative product of two basis monomials. Even exponents add; odd
// factor lists merge into increasing order with sign (-1)^{#transpositions}.
// Returns nullopt when an odd index repeats (Grassmann nilpotency).
inline std::optional<SignedMonomial> normalize_product(const Monomial& a, const Monomial& b) {
    SignedMonomial out;
    out.sign = 1;
    out.monomial.even_exponents.resize(a.even_exponents.size());
    for (std::size_t i = 0; i < a.even_exponents.size(); ++i)
        out.monomial.even_exponents[i] = a.even_exponents[i] + b.even_exponents[i];

    auto& merged = out.monomial.odd_factors;
    merged.reserve(a.odd_factors.size() + b.odd_factors.size());
    std::size_t i = 0, j = 0;
    // Merging counts, for every element of b, how many elements of a it must
    // jump over; each jump is one transposition.
    while (i < a.odd_factors.size() && j < b.odd_factors.size()) {
        if (a.odd_factors[i] == b.odd_factors[j]) return std::nullopt;
        if (a.odd_factors[i] < b.odd_factors[j]) {
            merged.push_back(a.odd_factors[i++]);
        } else {
            if ((a.odd_factors.size() - i) % 2 != 0) out.sign = -out.sign;
            merged.push_back(b.odd_factors[j++]);
        }
    }
    while (i < a.odd_factors.size()) merged.push_back(a.odd_factors[i++]);
    while (j < b.odd_factors.size()) merged.push_back(b.odd_factors[j++]);
    return out;
}

} // namespace spalg

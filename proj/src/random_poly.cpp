#include "spalg/random_poly.hpp"

#include <algorithm>
#include <vector>

namespace spalg {

namespace {

Monomial draw_monomial(SplitMix64& rng, const VariableTable& table, const RandomTermSpec& spec) {
    Monomial m;
    m.even_exponents.assign(table.even_count(), 0);
    if (table.even_count() > 0 && spec.max_even_degree > 0) {
        std::uint64_t degree = rng.below(spec.max_even_degree + 1);
        for (std::uint64_t d = 0; d < degree; ++d)
            m.even_exponents[rng.below(table.even_count())] += 1;
    }

    const std::size_t n = table.odd_count();
    const std::size_t cap = std::min(spec.max_odd_factors, n);
    // Admissible odd-factor counts in [0, cap], filtered by the parity
    // constraint. Choosing the count first keeps the draw rejection-free.
    std::vector<std::size_t> counts;
    for (std::size_t k = 0; k <= cap; ++k) {
        if (spec.parity && parity_of_count(k) != *spec.parity) continue;
        counts.push_back(k);
    }
    if (counts.empty()) throw RetryExhaustedError();
    std::size_t k = counts[rng.below(counts.size())];
    // Partial Fisher-Yates over the odd indices.
    std::vector<std::uint32_t> pool(n);
    for (std::size_t a = 0; a < n; ++a) pool[a] = static_cast<std::uint32_t>(a);
    for (std::size_t i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + rng.below(n - i)]);
    m.odd_factors.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(m.odd_factors.begin(), m.odd_factors.end());
    return m;
}

Rational draw_coefficient(SplitMix64& rng, const RandomTermSpec& spec) {
    long long num = static_cast<long long>(1 + rng.below(spec.coeff_num_bound));
    if (rng.below(2) == 1) num = -num;
    long long den = static_cast<long long>(1 + rng.below(spec.coeff_den_bound));
    return Rational(Integer(num), Integer(den));
}

} // namespace

SuperPolynomial generate_random_poly(const TablePtr& table, const RandomTermSpec& spec,
                                     std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng = case_rng(seed, index);
    if (spec.max_terms == 0) throw RetryExhaustedError();
    for (int attempt = 0; attempt < 64; ++attempt) {
        SuperPolynomial out(table);
        std::uint64_t terms = 1 + rng.below(spec.max_terms);
        for (std::uint64_t t = 0; t < terms; ++t) {
            Monomial m = draw_monomial(rng, *table, spec);
            out.add_term(std::move(m), draw_coefficient(rng, spec));
        }
        if (!out.is_zero() || !spec.parity) return out;
    }
    throw RetryExhaustedError();
}

} // namespace spalg

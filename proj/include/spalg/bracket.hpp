#pragma once

#include "spalg/super_polynomial.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace spalg {

// Generator-level data of the canonical Poisson superbracket:
// {q_i, p_j} = delta_ij, {theta_a, theta_b} = g_ab, everything else 0.
// The odd metric must be symmetric; it may be degenerate (invertibility is a
// constraint-matrix concern, not a bracket one).
struct BracketStructure {
    TablePtr table;
    std::vector<std::pair<std::size_t, std::size_t>> symplectic_pairs; // (q-index, p-index)
    std::vector<std::vector<Rational>> odd_metric;                     // n x n, symmetric

    BracketStructure(TablePtr t, std::vector<std::vector<Rational>> metric)
        : table(std::move(t)), odd_metric(std::move(metric)) {
        const std::size_t n = table->odd_count();
        if (odd_metric.empty()) odd_metric.assign(n, std::vector<Rational>(n, Rational(0)));
        if (odd_metric.size() != n)
            throw Error("odd metric size does not match the odd variable count");
        for (std::size_t a = 0; a < n; ++a) {
            if (odd_metric[a].size() != n)
                throw Error("odd metric is not square");
            for (std::size_t b = 0; b < a; ++b)
                if (odd_metric[a][b] != odd_metric[b][a])
                    throw Error("odd metric must be symmetric");
        }
        for (std::size_t i = 0; i < table->pair_count(); ++i)
            symplectic_pairs.emplace_back(2 * i, 2 * i + 1);
    }

    static BracketStructure identity_metric(TablePtr t) {
        std::size_t n = t->odd_count();
        std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t a = 0; a < n; ++a) g[a][a] = Rational(1);
        return BracketStructure(std::move(t), std::move(g));
    }
};

// Any bracket-like bilinear map; used to run the same law checkers against
// the canonical, Dirac, corrected-Dirac and D1 brackets.
using BracketFn = std::function<SuperPolynomial(const SuperPolynomial&, const SuperPolynomial&)>;

// Canonical Poisson superbracket,
//   {f,g} = sum_i (d_{q_i}f d_{p_i}g - d_{p_i}f d_{q_i}g)
//         + s(f) * sum_{ab} g_ab (d_{theta_a}f)(d_{theta_b}g),
// with s(f) = -(-1)^{parity(f)}. That sign is the unique choice under which
// the generator normalization and the graded skew/Leibniz/Jacobi laws hold
// simultaneously; the randomized axiom suite is the arbiter. Nonhomogeneous
// inputs extend bilinearly over homogeneous components.
SuperPolynomial poisson_superbracket(const SuperPolynomial& f, const SuperPolynomial& g,
                                     const BracketStructure& B);

// true iff {f,g} = -(-1)^{parity(f) parity(g)} {g,f} exactly. Requires
// homogeneous inputs.
bool check_super_skew(const SuperPolynomial& f, const SuperPolynomial& g,
                      const BracketStructure& B);

// Graded Leibniz law in the form used throughout the proofs,
//   {f, g h} = {f,g} h + (-1)^{parity(f) parity(g)} g {f,h},
// for homogeneous f, g and arbitrary h. The first-argument variant follows
// from this plus skew symmetry (with sign (-1)^{parity(g) parity(h)}).
bool check_leibniz(const SuperPolynomial& f, const SuperPolynomial& g,
                   const SuperPolynomial& h, const BracketStructure& B);

// Graded Jacobi residual for homogeneous arguments:
//   (-1)^{pf ph}{f,{g,h}} + (-1)^{pf pg}{g,{h,f}} + (-1)^{pg ph}{h,{f,g}}.
SuperPolynomial jacobi_cyclic_sum(const SuperPolynomial& f, const SuperPolynomial& g,
                                  const SuperPolynomial& h, const BracketFn& bracket);

bool check_super_jacobi(const SuperPolynomial& f, const SuperPolynomial& g,
                        const SuperPolynomial& h, const BracketStructure& B);

// Jacobi for arbitrary (possibly nonhomogeneous) inputs: each argument is
// split into homogeneous components and the graded cyclic sum is accumulated
// over all component triples.
SuperPolynomial jacobi_general_sum(const SuperPolynomial& f, const SuperPolynomial& g,
                                   const SuperPolynomial& h, const BracketFn& bracket);

bool check_super_jacobi_general(const SuperPolynomial& f, const SuperPolynomial& g,
                                const SuperPolynomial& h, const BracketStructure& B);

} // namespace spalg

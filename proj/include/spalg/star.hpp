#pragma once

#include "spalg/bracket.hpp"
#include "spalg/series.hpp"

#include <vector>

namespace spalg {

// Truncated Moyal-Clifford star product over a bracket structure. The k-th
// bidifferential operator is the k-fold contraction with half the canonical
// bivector (symplectic even part, metric odd part), carrying the exact
// combinatorial weight 1/(2^k k!); D_0 is the plain supercommutative product.
struct StarProduct {
    BracketStructure bracket;
    std::size_t order;

    StarProduct(BracketStructure B, std::size_t K) : bracket(std::move(B)), order(K) {}
};

// D_0(f,g) .. D_maxk(f,g).
std::vector<SuperPolynomial> star_bidiff(const SuperPolynomial& f, const SuperPolynomial& g,
                                         const StarProduct& sp, std::size_t maxk);

// f * g = sum_k D_k(f,g) hbar^k, truncated at sp.order.
FormalSeries star_multiply(const SuperPolynomial& f, const SuperPolynomial& g,
                           const StarProduct& sp);

// Cauchy-product extension to series with equal truncation orders.
FormalSeries star_multiply_series(const FormalSeries& F, const FormalSeries& G,
                                  const StarProduct& sp);

// hbar^1 coefficient of f * g. Requires sp.order >= 1.
SuperPolynomial extract_D1(const SuperPolynomial& f, const SuperPolynomial& g,
                           const StarProduct& sp);

// f D1(g,h) - D1(fg,h) + D1(f,gh) - D1(f,g)h == 0, any inputs.
bool check_hochschild(const SuperPolynomial& f, const SuperPolynomial& g,
                      const SuperPolynomial& h, const StarProduct& sp);

// Graded antisymmetrization of D1 for homogeneous arguments: the hbar^1
// coefficient of the star supercommutator.
SuperPolynomial d1_superbracket(const SuperPolynomial& f, const SuperPolynomial& g,
                                const StarProduct& sp);

// Bilinear extension over homogeneous components.
SuperPolynomial d1_superbracket_general(const SuperPolynomial& f, const SuperPolynomial& g,
                                        const StarProduct& sp);

// f * g - (-1)^{parity(f) parity(g)} g * f, all orders. Homogeneous inputs.
FormalSeries star_supercommutator(const SuperPolynomial& f, const SuperPolynomial& g,
                                  const StarProduct& sp);

// (f*g)*h == f*(g*h) coefficientwise through sp.order. Truncation is
// order-compatible: every coefficient of order <= K in the triple product is
// determined by order <= K data.
bool check_star_associativity(const SuperPolynomial& f, const SuperPolynomial& g,
                              const SuperPolynomial& h, const StarProduct& sp);

// Conjunction for homogeneous f, g, h: the D1 superbracket is graded
// skew-symmetric, satisfies the graded Leibniz rule in its second argument,
// satisfies the graded Jacobi identity, and agrees with poisson_superbracket
// for the matching bracket structure.
bool check_theorem3(const SuperPolynomial& f, const SuperPolynomial& g,
                    const SuperPolynomial& h, const StarProduct& sp,
                    const BracketStructure& B);

} // namespace spalg

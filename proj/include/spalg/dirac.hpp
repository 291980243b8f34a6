#pragma once

#include "spalg/bracket.hpp"

#include <optional>
#include <vector>

namespace spalg {

// Ordered list of second-class constraint candidates. Every constraint must
// be nonzero and homogeneous.
struct ConstraintSet {
    std::vector<SuperPolynomial> constraints;
    std::vector<Parity> parities;

    explicit ConstraintSet(std::vector<SuperPolynomial> phis) : constraints(std::move(phis)) {
        parities.reserve(constraints.size());
        for (std::size_t i = 0; i < constraints.size(); ++i) {
            const auto& phi = constraints[i];
            if (phi.is_zero()) throw Error("constraint " + std::to_string(i) + " is zero");
            if (!phi.is_homogeneous())
                throw NonhomogeneousError("constraint " + std::to_string(i));
            parities.push_back(phi.parity());
        }
    }

    std::size_t size() const { return constraints.size(); }
};

// Square matrix over the Grassmann-even subring: every entry is an even
// (or zero) superpolynomial. The body is the matrix of scalar parts.
struct EvenMatrix {
    std::vector<std::vector<SuperPolynomial>> entries;

    explicit EvenMatrix(std::vector<std::vector<SuperPolynomial>> e) : entries(std::move(e)) {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].size() != entries.size()) throw Error("even matrix is not square");
            for (std::size_t j = 0; j < entries[i].size(); ++j) {
                auto p = entries[i][j].try_parity();
                if (!p || (*p == Parity::Odd && !entries[i][j].is_zero()))
                    throw OddEntryError(i, j);
            }
        }
    }

    std::size_t size() const { return entries.size(); }

    std::vector<std::vector<Rational>> body() const {
        std::vector<std::vector<Rational>> b(size(), std::vector<Rational>(size()));
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) b[i][j] = entries[i][j].body();
        return b;
    }

    EvenMatrix multiply(const EvenMatrix& other) const;
    bool is_identity() const;
};

// Exact Gauss-Jordan inverse; nullopt when singular.
std::optional<std::vector<std::vector<Rational>>>
rational_matrix_inverse(const std::vector<std::vector<Rational>>& m);

// C with C_{ab} = {phi_a, phi_b}. Throws OddEntryError if some entry has odd
// parity and SingularBodyError if the scalar part is not invertible (the set
// is then not second class).
EvenMatrix constraint_matrix(const ConstraintSet& cs, const BracketStructure& B);

// Exact inverse over the even subring: split M = B + S with rational body B
// and nilpotent soul S, then N = (sum_{k<=n} (-B^{-1}S)^k) B^{-1} where n is
// the odd variable count. Requires every soul term to carry at least one odd
// factor (otherwise it is not nilpotent and the series would not terminate);
// the result is verified against M*N = N*M = I before being returned.
EvenMatrix invert_even_matrix(const EvenMatrix& M);

// Precomputed Dirac data: constraints, their bracket matrix and its exact
// inverse. Construction validates C * Cinv = Cinv * C = I. Immutable after
// construction; all bracket operations are pure.
struct DiracContext {
    ConstraintSet constraint_set;
    BracketStructure bracket;
    EvenMatrix C;
    EvenMatrix Cinv;

    DiracContext(ConstraintSet cs, BracketStructure B);

    const TablePtr& table() const { return bracket.table; }
};

enum class DiracBranch { Corrected, Plain };

// Which branch the case split selects for a homogeneous pair: the corrected
// formula for equal parities, the plain bracket otherwise.
inline DiracBranch dirac_branch(Parity pf, Parity pg) {
    return pf == pg ? DiracBranch::Corrected : DiracBranch::Plain;
}

// Correction term sum_{ab} {f, phi_a} Cinv_{ab} {phi_b, g}.
SuperPolynomial dirac_correction(const SuperPolynomial& f, const SuperPolynomial& g,
                                 const DiracContext& ctx);

// Dirac superbracket with the parity case split: for homogeneous arguments
// of equal parity D(f,g) = {f,g} - {f,phi_a} Cinv_{ab} {phi_b,g}; for mixed
// parities the plain bracket. Nonhomogeneous inputs extend bilinearly.
SuperPolynomial dirac_superbracket(const SuperPolynomial& f, const SuperPolynomial& g,
                                   const DiracContext& ctx);

// The corrected formula applied to every pair, without the case split. This
// is the bracket governed by the parity indicator condition below; it is also
// the regime in which the Dirac bracket's derivation and Jacobi laws hold
// exactly (see tests for counterexamples with the case split).
SuperPolynomial dirac_superbracket_corrected(const SuperPolynomial& f, const SuperPolynomial& g,
                                             const DiracContext& ctx);

// true iff dirac_superbracket(phi, g) == 0 for every constraint phi whose
// parity matches g. Mixed-parity pairs fall under the plain branch and are
// deliberately out of scope here. g must be homogeneous and at least one
// constraint must match its parity.
bool check_constraint_casimir(const DiracContext& ctx, const SuperPolynomial& g);

// Parity of  pf*pa + pb*pg + pf*pb + pa*pg.
Parity xi_indicator(Parity pf, Parity pg, Parity pa, Parity pb);

// Conjunction of: the indicator is Even for every constraint pair, and the
// corrected (single-branch) bracket is graded skew-symmetric on (f, g).
bool check_theorem2(const SuperPolynomial& f, const SuperPolynomial& g, const DiracContext& ctx);

// Normal form of f modulo solvable constraints: each constraint must contain
// a distinguished variable appearing as a bare linear term and nowhere else
// in that constraint; the variable is substituted by the solved expression,
// iterated to a fixed point. Distinguished variables are matched one-to-one
// across constraints. Throws UnsolvableConstraintError when no assignment
// exists.
SuperPolynomial reduce_mod_constraints(const SuperPolynomial& f, const DiracContext& ctx);

} // namespace spalg

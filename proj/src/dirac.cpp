#include "spalg/dirac.hpp"

#include <algorithm>

namespace spalg {

EvenMatrix EvenMatrix::multiply(const EvenMatrix& other) const {
    const std::size_t n = size();
    std::vector<std::vector<SuperPolynomial>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<SuperPolynomial> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            SuperPolynomial acc(entries[i][j].table());
            for (std::size_t k = 0; k < n; ++k) acc += entries[i][k] * other.entries[k][j];
            row.push_back(std::move(acc));
        }
        out.push_back(std::move(row));
    }
    return EvenMatrix(std::move(out));
}

bool EvenMatrix::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) {
            const auto& e = entries[i][j];
            if (i == j) {
                if (e != SuperPolynomial::one(e.table())) return false;
            } else if (!e.is_zero()) {
                return false;
            }
        }
    return true;
}

std::optional<std::vector<std::vector<Rational>>>
rational_matrix_inverse(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(m);
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational factor = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

EvenMatrix constraint_matrix(const ConstraintSet& cs, const BracketStructure& B) {
    const std::size_t n = cs.size();
    std::vector<std::vector<SuperPolynomial>> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<SuperPolynomial> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(poisson_superbracket(cs.constraints[i], cs.constraints[j], B));
        entries.push_back(std::move(row));
    }
    EvenMatrix C(std::move(entries));
    if (!rational_matrix_inverse(C.body())) throw SingularBodyError();
    return C;
}

EvenMatrix invert_even_matrix(const EvenMatrix& M) {
    const std::size_t n = M.size();
    if (n == 0) throw Error("cannot invert an empty matrix");
    const TablePtr table = M.entries[0][0].table();

    auto body_inv = rational_matrix_inverse(M.body());
    if (!body_inv) throw SingularBodyError();

    // Soul entries must be nilpotent for the series to terminate.
    std::vector<std::vector<SuperPolynomial>> soul(n, std::vector<SuperPolynomial>(n, SuperPolynomial(table)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SuperPolynomial s = M.entries[i][j] -
                                SuperPolynomial::constant(table, M.entries[i][j].body());
            for (const auto& [mono, coeff] : s.terms())
                if (mono.odd_factors.empty()) throw NonNilpotentSoulError(i, j);
            soul[i][j] = std::move(s);
        }

    // X = -Binv * S, as a polynomial matrix.
    std::vector<std::vector<SuperPolynomial>> X(n, std::vector<SuperPolynomial>(n, SuperPolynomial(table)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SuperPolynomial acc(table);
            for (std::size_t k = 0; k < n; ++k) acc += soul[k][j] * -(*body_inv)[i][k];
            X[i][j] = std::move(acc);
        }

    // acc = sum_{k=0..odd_count} X^k. Any soul monomial carries an odd
    // factor, so X^{odd_count+1} = 0.
    auto ident = [&]() {
        std::vector<std::vector<SuperPolynomial>> I(n, std::vector<SuperPolynomial>(n, SuperPolynomial(table)));
        for (std::size_t i = 0; i < n; ++i) I[i][i] = SuperPolynomial::one(table);
        return I;
    };
    std::vector<std::vector<SuperPolynomial>> acc = ident();
    std::vector<std::vector<SuperPolynomial>> power = ident();
    for (std::size_t step = 0; step < table->odd_count(); ++step) {
        std::vector<std::vector<SuperPolynomial>> next(n, std::vector<SuperPolynomial>(n, SuperPolynomial(table)));
        bool all_zero = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                SuperPolynomial s(table);
                for (std::size_t k = 0; k < n; ++k) s += power[i][k] * X[k][j];
                if (!s.is_zero()) all_zero = false;
                next[i][j] = std::move(s);
            }
        power = std::move(next);
        if (all_zero) break;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) acc[i][j] += power[i][j];
    }

    std::vector<std::vector<SuperPolynomial>> result(n, std::vector<SuperPolynomial>(n, SuperPolynomial(table)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SuperPolynomial s(table);
            for (std::size_t k = 0; k < n; ++k) s += acc[i][k] * (*body_inv)[k][j];
            result[i][j] = std::move(s);
        }

    EvenMatrix N(std::move(result));
    if (!M.multiply(N).is_identity() || !N.multiply(M).is_identity())
        throw Error("even matrix inverse verification failed");
    return N;
}

DiracContext::DiracContext(ConstraintSet cs, BracketStructure B)
    : constraint_set(std::move(cs)),
      bracket(std::move(B)),
      C(constraint_matrix(constraint_set, bracket)),
      Cinv(invert_even_matrix(C)) {}

SuperPolynomial dirac_correction(const SuperPolynomial& f, const SuperPolynomial& g,
                                 const DiracContext& ctx) {
    const std::size_t n = ctx.constraint_set.size();
    SuperPolynomial out(f.table());
    for (std::size_t a = 0; a < n; ++a) {
        SuperPolynomial fa = poisson_superbracket(f, ctx.constraint_set.constraints[a], ctx.bracket);
        if (fa.is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (ctx.Cinv.entries[a][b].is_zero()) continue;
            SuperPolynomial gb =
                poisson_superbracket(ctx.constraint_set.constraints[b], g, ctx.bracket);
            if (gb.is_zero()) continue;
            out += fa * ctx.Cinv.entries[a][b] * gb;
        }
    }
    return out;
}

namespace {

SuperPolynomial dirac_homogeneous(const SuperPolynomial& f, Parity pf, const SuperPolynomial& g,
                                  Parity pg, const DiracContext& ctx, bool case_split) {
    SuperPolynomial base = poisson_superbracket(f, g, ctx.bracket);
    if (case_split && dirac_branch(pf, pg) == DiracBranch::Plain) return base;
    return base - dirac_correction(f, g, ctx);
}

SuperPolynomial dirac_bilinear(const SuperPolynomial& f, const SuperPolynomial& g,
                               const DiracContext& ctx, bool case_split) {
    require_same_table(*f.table(), *ctx.table());
    require_same_table(*g.table(), *ctx.table());
    auto [fe, fo] = f.homogeneous_components();
    auto [ge, go] = g.homogeneous_components();
    const SuperPolynomial* fc[2] = {&fe, &fo};
    const SuperPolynomial* gc[2] = {&ge, &go};
    SuperPolynomial out(f.table());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (fc[i]->is_zero() || gc[j]->is_zero()) continue;
            out += dirac_homogeneous(*fc[i], Parity(i), *gc[j], Parity(j), ctx, case_split);
        }
    return out;
}

} // namespace

SuperPolynomial dirac_superbracket(const SuperPolynomial& f, const SuperPolynomial& g,
                                   const DiracContext& ctx) {
    return dirac_bilinear(f, g, ctx, /*case_split=*/true);
}

SuperPolynomial dirac_superbracket_corrected(const SuperPolynomial& f, const SuperPolynomial& g,
                                             const DiracContext& ctx) {
    return dirac_bilinear(f, g, ctx, /*case_split=*/false);
}

bool check_constraint_casimir(const DiracContext& ctx, const SuperPolynomial& g) {
    if (!g.is_homogeneous()) throw NonhomogeneousError("check_constraint_casimir: g");
    Parity pg = g.parity();
    bool matched = false;
    for (std::size_t i = 0; i < ctx.constraint_set.size(); ++i) {
        if (ctx.constraint_set.parities[i] != pg) continue;
        matched = true;
        if (!dirac_superbracket(ctx.constraint_set.constraints[i], g, ctx).is_zero())
            return false;
    }
    if (!matched)
        throw Error("check_constraint_casimir: no constraint matches the parity of g");
    return true;
}

Parity xi_indicator(Parity pf, Parity pg, Parity pa, Parity pb) {
    auto mul = [](Parity x, Parity y) {
        return (x == Parity::Odd && y == Parity::Odd) ? 1u : 0u;
    };
    unsigned total = mul(pf, pa) + mul(pb, pg) + mul(pf, pb) + mul(pa, pg);
    return parity_of_count(total);
}

bool check_theorem2(const SuperPolynomial& f, const SuperPolynomial& g, const DiracContext& ctx) {
    if (!f.is_homogeneous() || !g.is_homogeneous()) throw NonhomogeneousError("check_theorem2");
    Parity pf = f.parity(), pg = g.parity();
    for (Parity pa : ctx.constraint_set.parities)
        for (Parity pb : ctx.constraint_set.parities)
            if (xi_indicator(pf, pg, pa, pb) != Parity::Even) return false;
    SuperPolynomial lhs = dirac_superbracket_corrected(f, g, ctx);
    SuperPolynomial rhs = dirac_superbracket_corrected(g, f, ctx);
    if (koszul_sign(pf, pg) > 0) return (lhs + rhs).is_zero();
    return (lhs - rhs).is_zero();
}

namespace {

struct Substitution {
    VarRef var;
    SuperPolynomial replacement;
};

// Distinguished-variable candidates for one constraint: variables occurring
// as a bare linear monomial and in no other term.
std::vector<VarRef> solvable_candidates(const SuperPolynomial& phi) {
    std::vector<VarRef> out;
    for (const auto& [m, c] : phi.terms()) {
        VarRef ref{};
        if (m.odd_factors.empty() && m.even_degree() == 1) {
            std::size_t idx = 0;
            while (m.even_exponents[idx] == 0) ++idx;
            ref = {VarKind::Even, idx};
        } else if (m.odd_factors.size() == 1 && m.even_degree() == 0) {
            ref = {VarKind::Odd, m.odd_factors[0]};
        } else {
            continue;
        }
        bool elsewhere = false;
        for (const auto& [m2, c2] : phi.terms()) {
            if (m2 == m) continue;
            if (ref.kind == VarKind::Even ? m2.even_exponents[ref.index] != 0
                                          : std::find(m2.odd_factors.begin(), m2.odd_factors.end(),
                                                      ref.index) != m2.odd_factors.end()) {
                elsewhere = true;
                break;
            }
        }
        if (!elsewhere) out.push_back(ref);
    }
    return out;
}

bool contains_var(const SuperPolynomial& f, VarRef ref) {
    for (const auto& [m, c] : f.terms()) {
        if (ref.kind == VarKind::Even) {
            if (m.even_exponents[ref.index] != 0) return true;
        } else if (std::find(m.odd_factors.begin(), m.odd_factors.end(), ref.index) !=
                   m.odd_factors.end()) {
            return true;
        }
    }
    return false;
}

SuperPolynomial substitute(const SuperPolynomial& f, const Substitution& sub) {
    const TablePtr& table = f.table();
    SuperPolynomial out(table);
    if (sub.var.kind == VarKind::Even) {
        for (const auto& [m, c] : f.terms()) {
            std::uint32_t e = m.even_exponents[sub.var.index];
            if (e == 0) {
                out.add_term(m, c);
                continue;
            }
            Monomial rest = m;
            rest.even_exponents[sub.var.index] = 0;
            out += SuperPolynomial::from_monomial(table, std::move(rest), c) *
                   sub.replacement.pow(e);
        }
    } else {
        // A monomial with theta_a at position k factors as theta_a * d_a(m),
        // so substituting theta_a -> s maps m to s * d_a(m).
        for (const auto& [m, c] : f.terms()) {
            if (std::find(m.odd_factors.begin(), m.odd_factors.end(), sub.var.index) ==
                m.odd_factors.end())
                out.add_term(m, c);
        }
        SuperPolynomial carrier = f.derivative_odd(sub.var.index);
        out += sub.replacement * carrier;
    }
    return out;
}

// One-to-one assignment of distinguished variables to constraints
// (augmenting-path matching; constraint sets are small).
bool assign(std::size_t i, const std::vector<std::vector<std::size_t>>& options,
            std::vector<std::ptrdiff_t>& owner_of_option, std::vector<bool>& visited) {
    for (std::size_t opt : options[i]) {
        if (visited[opt]) continue;
        visited[opt] = true;
        if (owner_of_option[opt] < 0 ||
            assign(static_cast<std::size_t>(owner_of_option[opt]), options, owner_of_option,
                   visited)) {
            owner_of_option[opt] = static_cast<std::ptrdiff_t>(i);
            return true;
        }
    }
    return false;
}

} // namespace

SuperPolynomial reduce_mod_constraints(const SuperPolynomial& f, const DiracContext& ctx) {
    require_same_table(*f.table(), *ctx.table());
    const auto& phis = ctx.constraint_set.constraints;
    const TablePtr& table = f.table();
    const std::size_t var_total = table->even_count() + table->odd_count();
    auto flat = [&](VarRef r) {
        return r.kind == VarKind::Even ? r.index : table->even_count() + r.index;
    };

    std::vector<std::vector<std::size_t>> options(phis.size());
    std::vector<std::vector<VarRef>> refs(phis.size());
    for (std::size_t i = 0; i < phis.size(); ++i) {
        refs[i] = solvable_candidates(phis[i]);
        if (refs[i].empty()) throw UnsolvableConstraintError(i);
        for (VarRef r : refs[i]) options[i].push_back(flat(r));
    }
    std::vector<std::ptrdiff_t> owner(var_total, -1);
    for (std::size_t i = 0; i < phis.size(); ++i) {
        std::vector<bool> visited(var_total, false);
        if (!assign(i, options, owner, visited)) throw UnsolvableConstraintError(i);
    }

    std::vector<Substitution> subs;
    subs.reserve(phis.size());
    for (std::size_t v = 0; v < var_total; ++v) {
        if (owner[v] < 0) continue;
        std::size_t i = static_cast<std::size_t>(owner[v]);
        VarRef ref = v < table->even_count()
                         ? VarRef{VarKind::Even, v}
                         : VarRef{VarKind::Odd, v - table->even_count()};
        // phi = c*v + rest, v absent from rest: solve v = -rest/c.
        Monomial bare;
        bare.even_exponents.assign(table->even_count(), 0);
        if (ref.kind == VarKind::Even)
            bare.even_exponents[ref.index] = 1;
        else
            bare.odd_factors.push_back(static_cast<std::uint32_t>(ref.index));
        Rational c = phis[i].coefficient(bare);
        SuperPolynomial rest = phis[i] - SuperPolynomial::from_monomial(table, bare, c);
        subs.push_back({ref, rest * (Rational(-1) / c)});
    }

    SuperPolynomial out = f;
    const std::size_t max_passes = 4 * subs.size() + 8;
    for (std::size_t pass = 0; pass < max_passes; ++pass) {
        bool touched = false;
        for (const auto& sub : subs) {
            if (!contains_var(out, sub.var)) continue;
            out = substitute(out, sub);
            touched = true;
        }
        if (!touched) return out;
    }
    throw Error("constraint reduction did not reach a fixed point");
}

} // namespace spalg

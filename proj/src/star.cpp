#include "spalg/star.hpp"

namespace spalg {

namespace {

// One tensor-product summand u (x) v. The left factor stays parity
// homogeneous so the odd contraction can carry its Koszul sign; that sign,
// (-1)^{parity(u)+1}, is the right-derivative action on the left slot and is
// what makes the exponential associative and D1 match the bracket.
struct TensorTerm {
    SuperPolynomial left;
    SuperPolynomial right;
    Parity left_parity;
};

std::vector<TensorTerm> apply_half_bivector(const std::vector<TensorTerm>& terms,
                                            const BracketStructure& B) {
    std::vector<TensorTerm> next;
    const Rational half(1, 2);
    const std::size_t n = B.table->odd_count();
    for (const auto& t : terms) {
        for (const auto& [qi, pi] : B.symplectic_pairs) {
            SuperPolynomial lq = t.left.derivative_even(qi);
            if (!lq.is_zero()) {
                SuperPolynomial rp = t.right.derivative_even(pi);
                if (!rp.is_zero())
                    next.push_back({lq * half, std::move(rp), t.left_parity});
            }
            SuperPolynomial lp = t.left.derivative_even(pi);
            if (!lp.is_zero()) {
                SuperPolynomial rq = t.right.derivative_even(qi);
                if (!rq.is_zero())
                    next.push_back({lp * -half, std::move(rq), t.left_parity});
            }
        }
        const Rational koszul = t.left_parity == Parity::Odd ? half : -half;
        for (std::size_t a = 0; a < n; ++a) {
            SuperPolynomial la = t.left.derivative_odd(a);
            if (la.is_zero()) continue;
            for (std::size_t b = 0; b < n; ++b) {
                const Rational& gab = B.odd_metric[a][b];
                if (gab == 0) continue;
                SuperPolynomial rb = t.right.derivative_odd(b);
                if (rb.is_zero()) continue;
                next.push_back({la * (koszul * gab), std::move(rb),
                                t.left_parity + Parity::Odd});
            }
        }
    }
    return next;
}

} // namespace

std::vector<SuperPolynomial> star_bidiff(const SuperPolynomial& f, const SuperPolynomial& g,
                                         const StarProduct& sp, std::size_t maxk) {
    require_same_table(*f.table(), *sp.bracket.table);
    require_same_table(*g.table(), *sp.bracket.table);
    std::vector<TensorTerm> terms;
    auto [fe, fo] = f.homogeneous_components();
    if (!fe.is_zero()) terms.push_back({fe, g, Parity::Even});
    if (!fo.is_zero()) terms.push_back({fo, g, Parity::Odd});

    std::vector<SuperPolynomial> out;
    out.reserve(maxk + 1);
    Rational factorial(1);
    for (std::size_t k = 0; k <= maxk; ++k) {
        if (k > 0) {
            factorial *= Rational(static_cast<long long>(k));
            terms = apply_half_bivector(terms, sp.bracket);
        }
        SuperPolynomial dk(f.table());
        for (const auto& t : terms) dk += t.left * t.right;
        out.push_back(dk * (Rational(1) / factorial));
        if (terms.empty()) {
            while (out.size() <= maxk) out.push_back(SuperPolynomial(f.table()));
            break;
        }
    }
    return out;
}

FormalSeries star_multiply(const SuperPolynomial& f, const SuperPolynomial& g,
                           const StarProduct& sp) {
    FormalSeries out(f.table(), sp.order);
    auto dks = star_bidiff(f, g, sp, sp.order);
    for (std::size_t k = 0; k <= sp.order; ++k) out.set_coeff(k, std::move(dks[k]));
    return out;
}

FormalSeries star_multiply_series(const FormalSeries& F, const FormalSeries& G,
                                  const StarProduct& sp) {
    if (F.order() != G.order()) throw OrderMismatchError(F.order(), G.order());
    if (F.order() != sp.order) throw OrderMismatchError(F.order(), sp.order);
    FormalSeries out(F.table(), sp.order);
    for (std::size_t k = 0; k <= sp.order; ++k) {
        if (F.coeff(k).is_zero()) continue;
        for (std::size_t l = 0; k + l <= sp.order; ++l) {
            if (G.coeff(l).is_zero()) continue;
            auto dks = star_bidiff(F.coeff(k), G.coeff(l), sp, sp.order - k - l);
            for (std::size_t j = 0; j < dks.size(); ++j)
                out.add_to_coeff(k + l + j, dks[j]);
        }
    }
    return out;
}

SuperPolynomial extract_D1(const SuperPolynomial& f, const SuperPolynomial& g,
                           const StarProduct& sp) {
    if (sp.order < 1)
        throw TruncationOrderError("extract_D1 requires truncation order >= 1");
    return star_bidiff(f, g, sp, 1)[1];
}

bool check_hochschild(const SuperPolynomial& f, const SuperPolynomial& g,
                      const SuperPolynomial& h, const StarProduct& sp) {
    StarProduct sp1(sp.bracket, std::max<std::size_t>(sp.order, 1));
    SuperPolynomial lhs = f * extract_D1(g, h, sp1) - extract_D1(f * g, h, sp1) +
                          extract_D1(f, g * h, sp1) - extract_D1(f, g, sp1) * h;
    return lhs.is_zero();
}

SuperPolynomial d1_superbracket(const SuperPolynomial& f, const SuperPolynomial& g,
                                const StarProduct& sp) {
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw NonhomogeneousError("d1_superbracket");
    int sign = koszul_sign(f.parity(), g.parity());
    return extract_D1(f, g, sp) - Rational(sign) * extract_D1(g, f, sp);
}

SuperPolynomial d1_superbracket_general(const SuperPolynomial& f, const SuperPolynomial& g,
                                        const StarProduct& sp) {
    auto [fe, fo] = f.homogeneous_components();
    auto [ge, go] = g.homogeneous_components();
    const SuperPolynomial* fc[2] = {&fe, &fo};
    const SuperPolynomial* gc[2] = {&ge, &go};
    SuperPolynomial out(f.table());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (fc[i]->is_zero() || gc[j]->is_zero()) continue;
            out += d1_superbracket(*fc[i], *gc[j], sp);
        }
    return out;
}

FormalSeries star_supercommutator(const SuperPolynomial& f, const SuperPolynomial& g,
                                  const StarProduct& sp) {
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw NonhomogeneousError("star_supercommutator");
    int sign = koszul_sign(f.parity(), g.parity());
    FormalSeries fg = star_multiply(f, g, sp);
    FormalSeries gf = star_multiply(g, f, sp);
    return sign > 0 ? fg - gf : fg + gf;
}

bool check_star_associativity(const SuperPolynomial& f, const SuperPolynomial& g,
                              const SuperPolynomial& h, const StarProduct& sp) {
    FormalSeries lhs = star_multiply_series(star_multiply(f, g, sp),
                                            FormalSeries::embed(h, sp.order), sp);
    FormalSeries rhs = star_multiply_series(FormalSeries::embed(f, sp.order),
                                            star_multiply(g, h, sp), sp);
    return lhs == rhs;
}

bool check_theorem3(const SuperPolynomial& f, const SuperPolynomial& g,
                    const SuperPolynomial& h, const StarProduct& sp,
                    const BracketStructure& B) {
    if (!f.is_homogeneous() || !g.is_homogeneous() || !h.is_homogeneous())
        throw NonhomogeneousError("check_theorem3");
    StarProduct sp1(sp.bracket, std::max<std::size_t>(sp.order, 1));
    Parity pf = f.parity(), pg = g.parity();

    // Graded skew-symmetry.
    SuperPolynomial bfg = d1_superbracket(f, g, sp1);
    SuperPolynomial bgf = d1_superbracket(g, f, sp1);
    bool skew = koszul_sign(pf, pg) > 0 ? (bfg + bgf).is_zero() : (bfg - bgf).is_zero();
    if (!skew) return false;

    // Graded Leibniz in the second argument.
    SuperPolynomial lhs = d1_superbracket_general(f, g * h, sp1);
    SuperPolynomial rhs = bfg * h +
                          Rational(koszul_sign(pf, pg)) * (g * d1_superbracket(f, h, sp1));
    if (!(lhs - rhs).is_zero()) return false;

    // Graded Jacobi.
    BracketFn fn = [&sp1](const SuperPolynomial& a, const SuperPolynomial& b) {
        return d1_superbracket_general(a, b, sp1);
    };
    if (!jacobi_cyclic_sum(f, g, h, fn).is_zero()) return false;

    // The D1 superbracket reproduces the canonical bracket.
    return (bfg - poisson_superbracket(f, g, B)).is_zero();
}

} // namespace spalg

#include "spalg/bracket.hpp"

namespace spalg {

namespace {

// Bracket of a homogeneous f against arbitrary g.
SuperPolynomial bracket_homogeneous(const SuperPolynomial& f, Parity pf,
                                    const SuperPolynomial& g, const BracketStructure& B) {
    SuperPolynomial out(f.table());
    for (const auto& [qi, pi] : B.symplectic_pairs) {
        out += f.derivative_even(qi) * g.derivative_even(pi);
        out -= f.derivative_even(pi) * g.derivative_even(qi);
    }
    const std::size_t n = f.table()->odd_count();
    const bool negate = (pf == Parity::Even); // s(f) = -(-1)^{parity(f)}
    for (std::size_t a = 0; a < n; ++a) {
        SuperPolynomial da = f.derivative_odd(a);
        if (da.is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
            const Rational& gab = B.odd_metric[a][b];
            if (gab == 0) continue;
            SuperPolynomial term = da * g.derivative_odd(b) * gab;
            if (negate)
                out -= term;
            else
                out += term;
        }
    }
    return out;
}

} // namespace

SuperPolynomial poisson_superbracket(const SuperPolynomial& f, const SuperPolynomial& g,
                                     const BracketStructure& B) {
    require_same_table(*f.table(), *B.table);
    require_same_table(*g.table(), *B.table);
    if (auto pf = f.try_parity())
        return bracket_homogeneous(f, *pf, g, B);
    auto [fe, fo] = f.homogeneous_components();
    return bracket_homogeneous(fe, Parity::Even, g, B) +
           bracket_homogeneous(fo, Parity::Odd, g, B);
}

bool check_super_skew(const SuperPolynomial& f, const SuperPolynomial& g,
                      const BracketStructure& B) {
    Parity pf = f.parity(), pg = g.parity();
    SuperPolynomial lhs = poisson_superbracket(f, g, B);
    SuperPolynomial rhs = poisson_superbracket(g, f, B);
    if (koszul_sign(pf, pg) > 0) return (lhs + rhs).is_zero();
    return (lhs - rhs).is_zero();
}

bool check_leibniz(const SuperPolynomial& f, const SuperPolynomial& g,
                   const SuperPolynomial& h, const BracketStructure& B) {
    if (!f.is_homogeneous()) throw NonhomogeneousError("check_leibniz: f");
    if (!g.is_homogeneous()) throw NonhomogeneousError("check_leibniz: g");
    int sign = koszul_sign(f.parity(), g.parity());
    SuperPolynomial lhs = poisson_superbracket(f, g * h, B);
    SuperPolynomial rhs = poisson_superbracket(f, g, B) * h +
                          Rational(sign) * (g * poisson_superbracket(f, h, B));
    return (lhs - rhs).is_zero();
}

SuperPolynomial jacobi_cyclic_sum(const SuperPolynomial& f, const SuperPolynomial& g,
                                  const SuperPolynomial& h, const BracketFn& bracket) {
    Parity pf = f.parity(), pg = g.parity(), ph = h.parity();
    SuperPolynomial out = Rational(koszul_sign(pf, ph)) * bracket(f, bracket(g, h));
    out += Rational(koszul_sign(pf, pg)) * bracket(g, bracket(h, f));
    out += Rational(koszul_sign(pg, ph)) * bracket(h, bracket(f, g));
    return out;
}

bool check_super_jacobi(const SuperPolynomial& f, const SuperPolynomial& g,
                        const SuperPolynomial& h, const BracketStructure& B) {
    if (!f.is_homogeneous() || !g.is_homogeneous() || !h.is_homogeneous())
        throw NonhomogeneousError("check_super_jacobi");
    BracketFn fn = [&B](const SuperPolynomial& a, const SuperPolynomial& b) {
        return poisson_superbracket(a, b, B);
    };
    return jacobi_cyclic_sum(f, g, h, fn).is_zero();
}

SuperPolynomial jacobi_general_sum(const SuperPolynomial& f, const SuperPolynomial& g,
                                   const SuperPolynomial& h, const BracketFn& bracket) {
    SuperPolynomial out(f.table());
    auto [fe, fo] = f.homogeneous_components();
    auto [ge, go] = g.homogeneous_components();
    auto [he, ho] = h.homogeneous_components();
    const SuperPolynomial* fc[2] = {&fe, &fo};
    const SuperPolynomial* gc[2] = {&ge, &go};
    const SuperPolynomial* hc[2] = {&he, &ho};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (fc[i]->is_zero() || gc[j]->is_zero() || hc[k]->is_zero()) continue;
                out += jacobi_cyclic_sum(*fc[i], *gc[j], *hc[k], bracket);
            }
    return out;
}

bool check_super_jacobi_general(const SuperPolynomial& f, const SuperPolynomial& g,
                                const SuperPolynomial& h, const BracketStructure& B) {
    BracketFn fn = [&B](const SuperPolynomial& a, const SuperPolynomial& b) {
        return poisson_superbracket(a, b, B);
    };
    return jacobi_general_sum(f, g, h, fn).is_zero();
}

} // namespace spalg

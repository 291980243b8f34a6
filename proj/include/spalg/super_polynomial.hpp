#pragma once

#include "spalg/errors.hpp"
#include "spalg/monomial.hpp"
#include "spalg/parity.hpp"
#include "spalg/rational.hpp"
#include "spalg/variable_table.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace spalg {

// Canonical-form element of the free supercommutative algebra over exact
// rationals. The term map never stores a zero coefficient, so equality of
// values is equality of maps. Immutable in spirit: every operation returns a
// fresh value and the type is safe to share across threads.
class SuperPolynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit SuperPolynomial(TablePtr table) : table_(std::move(table)) {}

    static SuperPolynomial zero(TablePtr table) { return SuperPolynomial(std::move(table)); }

    static SuperPolynomial constant(TablePtr table, Rational value) {
        SuperPolynomial p(std::move(table));
        p.add_term(p.constant_monomial(), std::move(value));
        return p;
    }

    static SuperPolynomial one(TablePtr table) { return constant(std::move(table), Rational(1)); }

    static SuperPolynomial variable(TablePtr table, const std::string& name) {
        VarRef ref = table->require(name);
        SuperPolynomial p(std::move(table));
        Monomial m = p.constant_monomial();
        if (ref.kind == VarKind::Even)
            m.even_exponents[ref.index] = 1;
        else
            m.odd_factors.push_back(static_cast<std::uint32_t>(ref.index));
        p.add_term(std::move(m), Rational(1));
        return p;
    }

    static SuperPolynomial from_monomial(TablePtr table, Monomial m, Rational coeff) {
        SuperPolynomial p(std::move(table));
        p.add_term(std::move(m), std::move(coeff));
        return p;
    }

    const TablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const SuperPolynomial& other) const {
        return table_->same_as(*other.table_) && terms_ == other.terms_;
    }
    bool operator!=(const SuperPolynomial& other) const { return !(*this == other); }

    // Common parity of all monomials. Zero counts as Even by convention (it
    // lies in both graded components; a fixed answer avoids case splits).
    Parity parity() const {
        auto p = try_parity();
        if (!p) throw NonhomogeneousError("parity_of");
        return *p;
    }

    std::optional<Parity> try_parity() const {
        if (terms_.empty()) return Parity::Even;
        Parity p = terms_.begin()->first.parity();
        for (const auto& [m, c] : terms_)
            if (m.parity() != p) return std::nullopt;
        return p;
    }

    bool is_homogeneous() const { return try_parity().has_value(); }

    // f = even + odd, splitting on the odd-factor count of each monomial.
    std::pair<SuperPolynomial, SuperPolynomial> homogeneous_components() const {
        SuperPolynomial even(table_), odd(table_);
        for (const auto& [m, c] : terms_)
            (m.parity() == Parity::Even ? even : odd).terms_.emplace(m, c);
        return {even, odd};
    }

    SuperPolynomial component(Parity p) const {
        SuperPolynomial out(table_);
        for (const auto& [m, c] : terms_)
            if (m.parity() == p) out.terms_.emplace(m, c);
        return out;
    }

    // Coefficient of the empty monomial: the scalar body of the element.
    Rational body() const {
        auto it = terms_.find(constant_monomial());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    SuperPolynomial operator-() const {
        SuperPolynomial out(table_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    SuperPolynomial& operator+=(const SuperPolynomial& other) {
        require_same_table(*table_, *other.table_);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    SuperPolynomial& operator-=(const SuperPolynomial& other) {
        require_same_table(*table_, *other.table_);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend SuperPolynomial operator+(SuperPolynomial lhs, const SuperPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend SuperPolynomial operator-(SuperPolynomial lhs, const SuperPolynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }

    // Bilinear extension of the signed monomial product; the result is
    // canonical by construction.
    friend SuperPolynomial operator*(const SuperPolynomial& lhs, const SuperPolynomial& rhs) {
        require_same_table(*lhs.table_, *rhs.table_);
        SuperPolynomial out(lhs.table_);
        for (const auto& [ma, ca] : lhs.terms_) {
            for (const auto& [mb, cb] : rhs.terms_) {
                auto prod = normalize_product(ma, mb);
                if (!prod) continue;
                Rational c = ca * cb;
                if (prod->sign < 0) c = -c;
                out.add_term(std::move(prod->monomial), std::move(c));
            }
        }
        return out;
    }

    friend SuperPolynomial operator*(const SuperPolynomial& lhs, const Rational& s) {
        SuperPolynomial out(lhs.table_);
        if (s == 0) return out;
        for (const auto& [m, c] : lhs.terms_) out.terms_.emplace(m, c * s);
        return out;
    }

    friend SuperPolynomial operator*(const Rational& s, const SuperPolynomial& rhs) {
        return rhs * s;
    }

    SuperPolynomial pow(std::size_t n) const {
        SuperPolynomial acc = one(table_);
        SuperPolynomial base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    // Graded left derivative. Even variables differentiate as usual; for an
    // odd variable, a monomial carrying it at 0-based position k among its
    // odd factors maps to (-1)^k times the monomial with it removed.
    SuperPolynomial left_derivative(const std::string& name) const {
        VarRef ref = table_->require(name);
        return ref.kind == VarKind::Even ? derivative_even(ref.index) : derivative_odd(ref.index);
    }

    SuperPolynomial derivative_even(std::size_t index) const {
        SuperPolynomial out(table_);
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.even_exponents[index];
            if (e == 0) continue;
            Monomial d = m;
            d.even_exponents[index] = e - 1;
            out.add_term(std::move(d), c * Rational(e));
        }
        return out;
    }

    SuperPolynomial derivative_odd(std::size_t index) const {
        SuperPolynomial out(table_);
        for (const auto& [m, c] : terms_) {
            std::size_t pos = 0;
            while (pos < m.odd_factors.size() && m.odd_factors[pos] != index) ++pos;
            if (pos == m.odd_factors.size()) continue;
            Monomial d = m;
            d.odd_factors.erase(d.odd_factors.begin() + static_cast<std::ptrdiff_t>(pos));
            out.add_term(std::move(d), (pos % 2 == 0) ? c : -c);
        }
        return out;
    }

    Monomial constant_monomial() const {
        Monomial m;
        m.even_exponents.assign(table_->even_count(), 0);
        return m;
    }

    void add_term(Monomial m, Rational c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    TablePtr table_;
    TermMap terms_;
};

} // namespace spalg

#pragma once

#include "spalg/super_polynomial.hpp"

#include <vector>

namespace spalg {

// hbar-truncated formal power series with superpolynomial coefficients.
// A series of order K stores exactly K+1 coefficients; arithmetic between
// series demands equal truncation orders rather than re-truncating silently.
class FormalSeries {
public:
    FormalSeries(TablePtr table, std::size_t order)
        : table_(std::move(table)), coeffs_(order + 1, SuperPolynomial(table_)) {}

    static FormalSeries embed(const SuperPolynomial& constant_term, std::size_t order) {
        FormalSeries s(constant_term.table(), order);
        s.coeffs_[0] = constant_term;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const TablePtr& table() const { return table_; }

    const SuperPolynomial& coeff(std::size_t k) const { return coeffs_.at(k); }

    void set_coeff(std::size_t k, SuperPolynomial value) { coeffs_.at(k) = std::move(value); }

    void add_to_coeff(std::size_t k, const SuperPolynomial& value) {
        if (k < coeffs_.size()) coeffs_[k] += value;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const FormalSeries& other) const {
        return order() == other.order() && coeffs_ == other.coeffs_;
    }
    bool operator!=(const FormalSeries& other) const { return !(*this == other); }

    FormalSeries& operator+=(const FormalSeries& other) {
        require_compatible(other);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
        return *this;
    }

    FormalSeries& operator-=(const FormalSeries& other) {
        require_compatible(other);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
        return *this;
    }

    friend FormalSeries operator+(FormalSeries lhs, const FormalSeries& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend FormalSeries operator-(FormalSeries lhs, const FormalSeries& rhs) {
        lhs -= rhs;
        return lhs;
    }

    friend FormalSeries operator*(const FormalSeries& lhs, const Rational& s) {
        FormalSeries out(lhs.table_, lhs.order());
        for (std::size_t k = 0; k < lhs.coeffs_.size(); ++k)
            out.coeffs_[k] = lhs.coeffs_[k] * s;
        return out;
    }

    // Multiplication by hbar^j, truncated.
    FormalSeries shifted(std::size_t j) const {
        FormalSeries out(table_, order());
        for (std::size_t k = 0; j + k <= order(); ++k) out.coeffs_[j + k] = coeffs_[k];
        return out;
    }

private:
    void require_compatible(const FormalSeries& other) const {
        if (order() != other.order()) throw OrderMismatchError(order(), other.order());
        require_same_table(*table_, *other.table_);
    }

    TablePtr table_;
    std::vector<SuperPolynomial> coeffs_;
};

} // namespace spalg

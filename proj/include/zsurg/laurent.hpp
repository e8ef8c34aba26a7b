#pragma once

#include <string>
#include <vector>

#include "zsurg/bigint.hpp"

namespace zsurg {

/// Integer Laurent polynomial in t. coefficient(i) is the coefficient of
/// t^(min_exponent()+i). Stored trimmed: no zero leading/trailing terms.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(int min_exponent, std::vector<BigInt> coefficients);
    static LaurentPolynomial constant(BigInt c);
    static LaurentPolynomial monomial(BigInt c, int exponent);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int min_exponent() const noexcept { return min_; }
    int max_exponent() const noexcept { return min_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    BigInt coefficient(int exponent) const;

    BigInt evaluate(const BigInt& t) const;  // t must be +-1 when exponents are negative
    BigInt at_one() const;
    BigInt at_minus_one() const;

    LaurentPolynomial shifted(int k) const;  // multiply by t^k
    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    /// Representative up to units +-t^k: exponents centred on 0 (lowest
    /// exponent -span/2, rounded down) and positive value at t=1, or a
    /// positive top coefficient when the value at t=1 is 0.
    LaurentPolynomial normalized() const;
    bool is_palindromic() const;

    std::string to_string() const;
    bool operator==(const LaurentPolynomial&) const = default;
    auto operator<=>(const LaurentPolynomial& o) const
    {
        if (auto c = min_ <=> o.min_; c != 0)
            return c;
        if (auto c = coeffs_.size() <=> o.coeffs_.size(); c != 0)
            return c;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] < o.coeffs_[i])
                return std::strong_ordering::less;
            if (o.coeffs_[i] < coeffs_[i])
                return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    void trim();
    int min_ = 0;
    std::vector<BigInt> coeffs_;
};

/// Determinant of a square matrix of Laurent polynomials (fraction-free
/// elimination over Z[t] after clearing negative exponents row by row).
LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> m);

}  // namespace zsurg

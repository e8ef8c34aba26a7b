#include "zsurg/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace zsurg {

LaurentPolynomial::LaurentPolynomial(int min_exponent, std::vector<BigInt> coefficients)
    : min_(min_exponent), coeffs_(std::move(coefficients))
{
    trim();
}

LaurentPolynomial LaurentPolynomial::constant(BigInt c) { return LaurentPolynomial(0, {std::move(c)}); }

LaurentPolynomial LaurentPolynomial::monomial(BigInt c, int exponent)
{
    return LaurentPolynomial(exponent, {std::move(c)});
}

void LaurentPolynomial::trim()
{
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0)
        ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0)
        --last;
    coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead),
                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    min_ += static_cast<int>(lead);
}

BigInt LaurentPolynomial::coefficient(int exponent) const
{
    const int i = exponent - min_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[i];
}

BigInt LaurentPolynomial::evaluate(const BigInt& t) const
{
    if (min_ < 0 && t != 1 && t != -1)
        throw std::domain_error("negative exponents evaluated off the units");
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    // acc = sum c_i t^i; multiply by t^min (t = +-1 when min < 0)
    const int shift = min_ < 0 ? -min_ : min_;
    const bool odd_shift = shift % 2 != 0;
    if (min_ < 0)
        return (odd_shift && t == -1) ? BigInt(-acc) : acc;
    BigInt p = 1;
    for (int i = 0; i < min_; ++i)
        p *= t;
    return acc * p;
}

BigInt LaurentPolynomial::at_one() const { return evaluate(1); }
BigInt LaurentPolynomial::at_minus_one() const { return evaluate(-1); }

LaurentPolynomial LaurentPolynomial::shifted(int k) const
{
    LaurentPolynomial r = *this;
    if (!r.is_zero())
        r.min_ += k;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    LaurentPolynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    const int lo = std::min(min_, o.min_);
    const int hi = std::max(max_exponent(), o.max_exponent());
    std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i + static_cast<std::size_t>(min_ - lo)] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        out[i + static_cast<std::size_t>(o.min_ - lo)] += o.coeffs_[i];
    min_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentPolynomial(a.min_ + b.min_, std::move(out));
}

LaurentPolynomial LaurentPolynomial::normalized() const
{
    if (is_zero())
        return {};
    const int span = static_cast<int>(coeffs_.size()) - 1;
    LaurentPolynomial r(-(span / 2), coeffs_);
    const BigInt one = r.at_one();
    if (one < 0 || (one == 0 && r.coeffs_.back() < 0))
        r = -r;
    return r;
}

bool LaurentPolynomial::is_palindromic() const
{
    if (is_zero())
        return true;
    if (min_ != -max_exponent())
        return false;
    for (std::size_t i = 0, j = coeffs_.size() - 1; i < j; ++i, --j)
        if (coeffs_[i] != coeffs_[j])
            return false;
    return true;
}

std::string LaurentPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0)
            continue;
        const int e = min_ + static_cast<int>(i);
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0 || mag != 1)
            os << mag;
        if (e != 0) {
            if (mag != 1)
                os << "*";
            os << "t";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

namespace {

using Poly = std::vector<BigInt>;  // coefficient of t^i at index i, trimmed

void trim_poly(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim_poly(out);
    return out;
}

Poly sub(Poly a, const Poly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim_poly(a);
    return a;
}

// Exact division in Z[t]; throws if the remainder is nonzero.
Poly exact_div(Poly num, const Poly& den)
{
    if (den.empty())
        throw std::domain_error("polynomial division by zero");
    if (num.empty())
        return {};
    if (num.size() < den.size())
        throw std::logic_error("inexact polynomial division");
    Poly q(num.size() - den.size() + 1);
    const BigInt& lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        const BigInt& top = num[k + den.size() - 1];
        if (top == 0)
            continue;
        if (top % lead != 0)
            throw std::logic_error("inexact polynomial division");
        q[k] = top / lead;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[k + j] -= q[k] * den[j];
    }
    trim_poly(num);
    if (!num.empty())
        throw std::logic_error("inexact polynomial division");
    trim_poly(q);
    return q;
}

}  // namespace

LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return LaurentPolynomial::constant(1);
    int shift_total = 0;
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
        int lo = 0;
        bool any = false;
        for (const auto& e : m[i])
            if (!e.is_zero()) {
                lo = any ? std::min(lo, e.min_exponent()) : e.min_exponent();
                any = true;
            }
        if (!any)
            return {};
        shift_total += lo;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = m[i][j];
            if (e.is_zero())
                continue;
            Poly p(static_cast<std::size_t>(e.max_exponent() - lo + 1));
            for (std::size_t k = 0; k < e.coefficients().size(); ++k)
                p[k + static_cast<std::size_t>(e.min_exponent() - lo)] = e.coefficients()[k];
            a[i][j] = std::move(p);
        }
    }

    int sign = 1;
    Poly prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].empty()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].empty())
                ++r;
            if (r == n)
                return {};
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j])), prev);
        prev = a[k][k];
    }
    Poly det = a[n - 1][n - 1];
    LaurentPolynomial out(-shift_total, std::vector<BigInt>(det.begin(), det.end()));
    // rows were multiplied by t^(-lo); undo
    return sign < 0 ? -out : out;
}

}  // namespace zsurg

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace merocoef {

using Rational = mpq_class;

// Truncated Laurent series sum_{e=min..order} a_e q^e with exact rational
// coefficients. Coefficients above `order` are unknown, not zero.
class LaurentSeries {
public:
    LaurentSeries();
    LaurentSeries(int min_exponent, std::vector<Rational> coeffs);

    static LaurentSeries zero(int order);
    static LaurentSeries constant(const Rational& c, int order);
    static LaurentSeries monomial(const Rational& c, int exponent, int order);

    int min_exponent() const { return min_exp_; }
    int order() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Coefficient of q^e; zero below min_exponent, throws above order.
    Rational coeff(int e) const;

    // First exponent with a nonzero coefficient, or order()+1 if none.
    int valuation() const;
    bool is_zero() const { return valuation() > order(); }

    LaurentSeries truncated(int new_order) const;
    // Drops leading zero coefficients (raises min_exponent, keeps order).
    LaurentSeries normalized() const;

    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    LaurentSeries& operator*=(const LaurentSeries& o);
    LaurentSeries& operator*=(const Rational& s);

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(LaurentSeries a, const LaurentSeries& b) { return a *= b; }
    friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
    friend LaurentSeries operator*(const Rational& s, LaurentSeries a) { return a *= s; }

    // Equal as truncated series: same order and same coefficients up to it.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

    bool integral() const;
    std::string to_string() const;

private:
    int min_exp_;
    std::vector<Rational> coeffs_;
};

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries invert(const LaurentSeries& f);
LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries power(const LaurentSeries& f, int e);  // negative e inverts
// q d/dq
LaurentSeries derive(const LaurentSeries& f);

}  // namespace merocoef

#include "merocoef/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "merocoef/errors.hpp"

namespace merocoef {

LaurentSeries::LaurentSeries() : min_exp_(0) {}

LaurentSeries::LaurentSeries(int min_exponent, std::vector<Rational> coeffs)
    : min_exp_(min_exponent), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
}

LaurentSeries LaurentSeries::zero(int order) {
    if (order < 0) return LaurentSeries(0, {});
    return LaurentSeries(0, std::vector<Rational>(order + 1));
}

LaurentSeries LaurentSeries::constant(const Rational& c, int order) {
    auto s = zero(order);
    if (order >= 0) s.coeffs_[0] = c;
    return s;
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int order) {
    if (order < exponent) return LaurentSeries(exponent, {});
    std::vector<Rational> v(order - exponent + 1);
    v[0] = c;
    return LaurentSeries(exponent, std::move(v));
}

Rational LaurentSeries::coeff(int e) const {
    if (e > order())
        throw PrecisionError("coefficient q^" + std::to_string(e) + " beyond truncation order " +
                             std::to_string(order()));
    if (e < min_exp_) return 0;
    return coeffs_[e - min_exp_];
}

int LaurentSeries::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return min_exp_ + static_cast<int>(i);
    return order() + 1;
}

LaurentSeries LaurentSeries::truncated(int new_order) const {
    if (new_order > order())
        throw PrecisionError("cannot extend a series from order " + std::to_string(order()) + " to " +
                             std::to_string(new_order));
    int len = std::max(0, new_order - min_exp_ + 1);
    return LaurentSeries(min_exp_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + len));
}

LaurentSeries LaurentSeries::normalized() const {
    int v = valuation();
    if (v <= min_exp_) return *this;
    int drop = v - min_exp_;
    return LaurentSeries(v, std::vector<Rational>(coeffs_.begin() + drop, coeffs_.end()));
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    int lo = std::min(min_exp_, o.min_exp_);
    int hi = std::min(order(), o.order());
    std::vector<Rational> v(std::max(0, hi - lo + 1));
    for (int e = lo; e <= hi; ++e) v[e - lo] = coeff(e) + o.coeff(e);
    *this = LaurentSeries(lo, std::move(v));
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) {
    *this = mul(*this, o);
    return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.order() != b.order()) return false;
    int lo = std::min(a.min_exponent(), b.min_exponent());
    for (int e = lo; e <= a.order(); ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

bool LaurentSeries::integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i].get_str() << "*q^" << (min_exp_ + static_cast<int>(i));
    }
    if (first) os << "0";
    os << " + O(q^" << (order() + 1) << ")";
    return os.str();
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    int va = a.valuation(), vb = b.valuation();
    // a is only known through a.order(); a term of b at exponent >= vb
    // shifts that uncertainty up by vb, and symmetrically.
    int order = std::min(a.order() + vb, b.order() + va);
    int lo = a.min_exponent() + b.min_exponent();
    std::vector<Rational> v(std::max(0, order - lo + 1));
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (sgn(ca[i]) == 0) continue;
        int ei = a.min_exponent() + static_cast<int>(i);
        for (std::size_t j = 0; j < cb.size(); ++j) {
            int e = ei + b.min_exponent() + static_cast<int>(j);
            if (e > order) break;
            v[e - lo] += ca[i] * cb[j];
        }
    }
    return LaurentSeries(lo, std::move(v));
}

LaurentSeries invert(const LaurentSeries& f) {
    LaurentSeries g = f.normalized();
    if (g.is_zero()) throw InvalidArgument("cannot invert a series with zero leading coefficient");
    int v = g.min_exponent();
    const auto& a = g.coefficients();
    int len = static_cast<int>(a.size());
    // f = q^v * u with u known to len terms; 1/u likewise.
    std::vector<Rational> b(len);
    Rational inv0 = 1 / a[0];
    b[0] = inv0;
    for (int n = 1; n < len; ++n) {
        Rational s = 0;
        for (int k = 1; k <= n; ++k) s += a[k] * b[n - k];
        b[n] = -s * inv0;
    }
    return LaurentSeries(-v, std::move(b));
}

LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, invert(b)); }

LaurentSeries power(const LaurentSeries& f, int e) {
    if (e < 0) return power(invert(f), -e);
    LaurentSeries base = f.normalized();
    LaurentSeries acc = LaurentSeries::constant(1, base.order() - base.min_exponent());
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

LaurentSeries derive(const LaurentSeries& f) {
    std::vector<Rational> v = f.coefficients();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= f.min_exponent() + static_cast<int>(i);
    return LaurentSeries(f.min_exponent(), std::move(v));
}

}  // namespace merocoef

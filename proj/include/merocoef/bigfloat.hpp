#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace merocoef {

using Prec = mpfr_prec_t;

// MPFR value owning its precision. Binary operations produce results at the
// larger of the operand precisions, rounded to nearest.
class BigReal {
public:
    explicit BigReal(Prec prec = 64);
    BigReal(long v, Prec prec);
    BigReal(const mpq_class& v, Prec prec);
    BigReal(const mpz_class& v, Prec prec);
    static BigReal from_string(const std::string& s, Prec prec);
    static BigReal from_double(double v, Prec prec);

    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    Prec precision() const { return mpfr_get_prec(v_); }
    // Same value rounded to a new precision.
    BigReal with_precision(Prec p) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator*=(long s);
    BigReal& operator/=(long s);
    BigReal operator-() const;

    friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
    friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
    friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
    friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
    friend BigReal operator*(BigReal a, long s) { return a *= s; }
    friend BigReal operator*(long s, BigReal a) { return a *= s; }
    friend BigReal operator/(BigReal a, long s) { return a /= s; }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_); }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_finite() const { return mpfr_number_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // log2|x|, -inf for zero; cheap magnitude for error bookkeeping.
    double log2_abs() const;

    // Scientific decimal with `digits` significant digits; 0 means all the
    // digits the precision supports.
    std::string to_string(int digits = 0) const;
    // Nearest integer, exact.
    mpz_class round_to_integer() const;

private:
    mpfr_t v_;
};

BigReal pi(Prec prec);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal abs(const BigReal& x);
BigReal pow(const BigReal& x, long e);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal max(const BigReal& a, const BigReal& b);
// 2^e at the given precision
BigReal exp2i(long e, Prec prec);
int decimal_digits_for(Prec prec);

class BigComplex {
public:
    explicit BigComplex(Prec prec = 64) : re_(prec), im_(prec) {}
    BigComplex(BigReal re, BigReal im);
    explicit BigComplex(const BigReal& re);
    static BigComplex from_rationals(const mpq_class& re, const mpq_class& im, Prec prec);
    static BigComplex i(Prec prec);
    static BigComplex polar(const BigReal& r, const BigReal& theta);
    // e^{i theta}
    static BigComplex unit(const BigReal& theta);

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    BigReal& re() { return re_; }
    BigReal& im() { return im_; }
    Prec precision() const;
    BigComplex with_precision(Prec p) const;

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    BigComplex& operator*=(const BigReal& s);
    BigComplex& operator/=(const BigReal& s);
    BigComplex& operator*=(long s);
    BigComplex operator-() const { return BigComplex(-re_, -im_); }

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator*(BigComplex a, const BigReal& s) { return a *= s; }
    friend BigComplex operator*(const BigReal& s, BigComplex a) { return a *= s; }
    friend BigComplex operator/(BigComplex a, const BigReal& s) { return a /= s; }
    friend BigComplex operator*(BigComplex a, long s) { return a *= s; }
    friend BigComplex operator*(long s, BigComplex a) { return a *= s; }

    BigComplex conj() const { return BigComplex(re_, -im_); }
    BigReal norm() const;  // |z|^2
    BigReal abs() const;
    BigReal arg() const;
    // i*z
    BigComplex times_i() const { return BigComplex(-im_, re_); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    std::string to_string(int digits = 0) const;

private:
    BigReal re_, im_;
};

BigComplex exp(const BigComplex& z);
BigComplex pow(const BigComplex& z, long e);
BigComplex sqr(const BigComplex& z);
BigReal abs(const BigComplex& z);

}  // namespace merocoef

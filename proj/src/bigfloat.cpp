#include "merocoef/bigfloat.hpp"

#include <algorithm>
#include <cmath>

#include "merocoef/errors.hpp"

namespace merocoef {

namespace {

constexpr mpfr_rnd_t R = MPFR_RNDN;

void raise_to(mpfr_ptr v, Prec p) {
    if (mpfr_get_prec(v) < p) mpfr_prec_round(v, p, R);
}

}  // namespace

BigReal::BigReal(Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long v, Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, R);
}

BigReal::BigReal(const mpq_class& v, Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, v.get_mpq_t(), R);
}

BigReal::BigReal(const mpz_class& v, Prec prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, v.get_mpz_t(), R);
}

BigReal BigReal::from_string(const std::string& s, Prec prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, R) != 0) {
        // mpfr_set_str returns nonzero only on a parse failure
        throw InvalidArgument("not a decimal number: '" + s + "'");
    }
    return r;
}

BigReal BigReal::from_double(double v, Prec prec) {
    BigReal r(prec);
    mpfr_set_d(r.v_, v, R);
    return r;
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, R);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, R);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::with_precision(Prec p) const {
    BigReal r(p);
    mpfr_set(r.v_, v_, R);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
    raise_to(v_, o.precision());
    mpfr_add(v_, v_, o.v_, R);
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    raise_to(v_, o.precision());
    mpfr_sub(v_, v_, o.v_, R);
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
    raise_to(v_, o.precision());
    mpfr_mul(v_, v_, o.v_, R);
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
    raise_to(v_, o.precision());
    mpfr_div(v_, v_, o.v_, R);
    return *this;
}

BigReal& BigReal::operator*=(long s) {
    mpfr_mul_si(v_, v_, s, R);
    return *this;
}

BigReal& BigReal::operator/=(long s) {
    mpfr_div_si(v_, v_, s, R);
    return *this;
}

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.v_, v_, R);
    return r;
}

double BigReal::log2_abs() const {
    if (mpfr_zero_p(v_)) return -INFINITY;
    long e;
    double m = mpfr_get_d_2exp(&e, v_, R);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

std::string BigReal::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    if (digits <= 0) digits = decimal_digits_for(precision());
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, R);
    std::string s(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (s[0] == '-') {
        sign = "-";
        s.erase(0, 1);
    }
    // strip trailing zeros of the mantissa, keep at least one digit
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    std::string out = sign + s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

mpz_class BigReal::round_to_integer() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, R);
    return z;
}

BigReal pi(Prec prec) {
    BigReal r(prec);
    mpfr_const_pi(r.raw(), R);
    return r;
}

#define MEROCOEF_UNARY(fname, mfun)                 \
    BigReal fname(const BigReal& x) {               \
        BigReal r(x.precision());                   \
        mfun(r.raw(), x.raw(), R);                  \
        return r;                                   \
    }

MEROCOEF_UNARY(sqrt, mpfr_sqrt)
MEROCOEF_UNARY(exp, mpfr_exp)
MEROCOEF_UNARY(log, mpfr_log)
MEROCOEF_UNARY(cos, mpfr_cos)
MEROCOEF_UNARY(sin, mpfr_sin)
MEROCOEF_UNARY(atan, mpfr_atan)
MEROCOEF_UNARY(abs, mpfr_abs)

#undef MEROCOEF_UNARY

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(std::max(x.precision(), y.precision()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), R);
    return r;
}

BigReal pow(const BigReal& x, long e) {
    BigReal r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), e, R);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
    BigReal r(std::max(x.precision(), y.precision()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), R);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) {
    Prec p = std::max(a.precision(), b.precision());
    return (a < b ? b : a).with_precision(p);
}

BigReal exp2i(long e, Prec prec) {
    BigReal r(prec);
    mpfr_set_ui_2exp(r.raw(), 1, e, R);
    return r;
}

int decimal_digits_for(Prec prec) { return static_cast<int>(std::floor(static_cast<double>(prec) * 0.30102999566398120)); }

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
    Prec p = precision();
    if (re_.precision() < p) re_ = re_.with_precision(p);
    if (im_.precision() < p) im_ = im_.with_precision(p);
}

BigComplex::BigComplex(const BigReal& re) : re_(re), im_(re.precision()) {}

BigComplex BigComplex::from_rationals(const mpq_class& re, const mpq_class& im, Prec prec) {
    return BigComplex(BigReal(re, prec), BigReal(im, prec));
}

BigComplex BigComplex::i(Prec prec) { return BigComplex(BigReal(0L, prec), BigReal(1L, prec)); }

BigComplex BigComplex::polar(const BigReal& r, const BigReal& theta) {
    BigComplex u = unit(theta);
    return u * r;
}

BigComplex BigComplex::unit(const BigReal& theta) {
    BigReal s(theta.precision()), c(theta.precision());
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), R);
    return BigComplex(std::move(c), std::move(s));
}

Prec BigComplex::precision() const { return std::max(re_.precision(), im_.precision()); }

BigComplex BigComplex::with_precision(Prec p) const {
    return BigComplex(re_.with_precision(p), im_.with_precision(p));
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigReal re = re_ * o.re_ - im_ * o.im_;
    BigReal im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigReal den = o.norm();
    BigReal re = (re_ * o.re_ + im_ * o.im_) / den;
    BigReal im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& s) {
    re_ *= s;
    im_ *= s;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& s) {
    re_ /= s;
    im_ /= s;
    return *this;
}

BigComplex& BigComplex::operator*=(long s) {
    re_ *= s;
    im_ *= s;
    return *this;
}

BigReal BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigReal BigComplex::abs() const {
    BigReal r(precision());
    mpfr_hypot(r.raw(), re_.raw(), im_.raw(), R);
    return r;
}

BigReal BigComplex::arg() const { return atan2(im_, re_); }

std::string BigComplex::to_string(int digits) const {
    return re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") + merocoef::abs(im_).to_string(digits) + "i";
}

BigComplex exp(const BigComplex& z) {
    BigComplex u = BigComplex::unit(z.im());
    return u * exp(z.re());
}

BigComplex sqr(const BigComplex& z) { return z * z; }

BigComplex pow(const BigComplex& z, long e) {
    if (e < 0) {
        BigComplex one(BigReal(1L, z.precision()));
        return one / pow(z, -e);
    }
    BigComplex acc(BigReal(1L, z.precision()));
    BigComplex base = z;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

BigReal abs(const BigComplex& z) { return z.abs(); }

}  // namespace merocoef

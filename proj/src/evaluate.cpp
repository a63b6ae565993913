#include "merocoef/evaluate.hpp"

#include <algorithm>
#include <cmath>

#include "merocoef/errors.hpp"
#include "merocoef/forms.hpp"

namespace merocoef {

namespace {

constexpr int kGuardBits = 32;

// 125 significant digits; checked against the q-series route in the tests.
const char* kGamma1_4 =
    "3.6256099082219083119306851558676720029951676828800654674333779995699192435387291216183601367233843003614717513924207199658915";
const char* kGamma1_3 =
    "2.6789385347077476336556929409746776441286893779573011009504283275904176101677438195409828890411887894191590492000722633357191";
const char* kGamma2_3 =
    "1.3541179394264004169452880281545137855193272660567936983940224679637829654017425416758341479529729111064348236100330588541423";
constexpr int kGammaDigits = 120;

double log2_abs_rational(const Rational& a) {
    if (sgn(a) == 0) return -INFINITY;
    return BigReal(a, 64).log2_abs();
}

}  // namespace

BigComplex q_of(const BigComplex& tau) {
    Prec p = tau.precision();
    BigReal two_pi = pi(p) * 2L;
    // e^{2 pi i tau} = e^{-2 pi y} e^{2 pi i x}
    BigReal mod = exp(-(two_pi * tau.im()));
    return BigComplex::polar(mod, two_pi * tau.re());
}

int required_order(const BigComplex& tau, Prec prec) {
    double y = tau.im().to_double();
    if (!(y > 0)) throw DomainError("Im(tau) must be positive");
    double per_term = 2 * M_PI * y / M_LN2;  // bits gained per power of q
    return static_cast<int>(std::ceil((static_cast<double>(prec) + 16) / per_term));
}

PointEvaluation eval_at(const LaurentSeries& s, const BigComplex& tau, Prec prec, std::string form) {
    if (tau.im().sign() <= 0) throw DomainError("Im(tau) must be positive");
    Prec wp = prec + kGuardBits;
    BigComplex t = tau.with_precision(std::max(wp, tau.precision()));
    BigComplex q = q_of(t);

    const auto& a = s.coefficients();
    BigComplex acc(wp);
    for (std::size_t i = a.size(); i-- > 0;) {
        acc *= q;
        acc.re() += BigReal(a[i], wp);
    }
    if (s.min_exponent() != 0) acc *= pow(q, s.min_exponent());

    // Tail estimate from the size and growth of the last coefficients.
    double log_tail = -INFINITY;
    const int len = static_cast<int>(a.size());
    const int K = std::min(8, len);
    double top = -INFINITY, prev = -INFINITY;
    for (int i = len - K; i < len; ++i) top = std::max(top, log2_abs_rational(a[i]));
    for (int i = std::max(0, len - 2 * K); i < len - K; ++i) prev = std::max(prev, log2_abs_rational(a[i]));
    if (std::isfinite(top)) {
        double g = std::isfinite(prev) ? std::max(0.0, (top - prev) / K) : 0.0;
        double logq = q.abs().log2_abs();
        double ratio = g + logq;
        if (ratio >= -1e-3) {
            log_tail = INFINITY;
        } else {
            log_tail = top + g + (s.order() + 1) * logq + std::log2(4.0 / (1.0 - std::exp2(ratio)));
        }
    }

    PointEvaluation pe{tau, std::move(form), acc, BigReal(wp), s.order()};
    if (std::isinf(log_tail) && log_tail > 0)
        throw PrecisionError("q-series diverges or order " + std::to_string(s.order()) + " is far too low at this tau");
    if (std::isfinite(log_tail)) {
        pe.tail_bound = exp2i(0, wp);
        mpfr_set_d(pe.tail_bound.raw(), std::exp2(log_tail - std::floor(log_tail)), MPFR_RNDU);
        mpfr_mul_2si(pe.tail_bound.raw(), pe.tail_bound.raw(), static_cast<long>(std::floor(log_tail)), MPFR_RNDU);
        double scale = std::max(0.0, acc.abs().log2_abs());
        if (log_tail > scale - static_cast<double>(prec))
            throw PrecisionError("truncation order " + std::to_string(s.order()) +
                                 " insufficient for " + std::to_string(prec) + " bits");
    }
    return pe;
}

BigComplex eval_derivative_at(const LaurentSeries& s, int r, const BigComplex& tau, Prec prec) {
    if (r < 0) throw InvalidArgument("derivative order must be >= 0");
    LaurentSeries d = s;
    for (int i = 0; i < r; ++i) d = derive(d);
    BigComplex v = eval_at(d, tau, prec).value;
    if (r == 0) return v;
    Prec p = v.precision();
    BigComplex two_pi_i(BigReal(p), pi(p) * 2L);
    return v * pow(two_pi_i, r);
}

PointEvaluation eval_form(const std::function<LaurentSeries(int)>& build, const BigComplex& tau, Prec prec, int r,
                          std::string form) {
    int order = required_order(tau, prec) + 8;
    for (int attempt = 0;; ++attempt) {
        try {
            LaurentSeries s = build(order);
            if (r == 0) return eval_at(s, tau, prec, form);
            // tail of the differentiated series governs accuracy
            LaurentSeries d = s;
            for (int i = 0; i < r; ++i) d = derive(d);
            PointEvaluation pe = eval_at(d, tau, prec, form);
            Prec p = pe.value.precision();
            BigComplex two_pi_i(BigReal(p), pi(p) * 2L);
            BigComplex f = pow(two_pi_i, r);
            pe.value *= f;
            pe.tail_bound *= f.abs();
            return pe;
        } catch (const PrecisionError&) {
            if (attempt >= 5) throw;
            order *= 2;
        }
    }
}

Prec special_value_max_precision() {
    return static_cast<Prec>(std::floor(kGammaDigits * 3.321928094887362)) - 8;
}

BigReal special_value(SpecialConstant c, Prec prec) {
    if (prec > special_value_max_precision())
        throw PrecisionError("stored Gamma constants support at most " +
                             std::to_string(special_value_max_precision()) + " bits");
    Prec wp = prec + 16;
    BigReal p = pi(wp);
    BigReal out(wp);
    if (c == SpecialConstant::E4_at_i) {
        BigReal g = BigReal::from_string(kGamma1_4, wp);
        out = pow(g, 8) * 3L / pow(p * 2L, 6);
    } else {
        BigReal g13 = BigReal::from_string(kGamma1_3, wp);
        BigReal g23 = BigReal::from_string(kGamma2_3, wp);
        BigReal omega6 = pow(g13 / g23, 9) / pow(p * 6L, 3);
        out = sqrt(BigReal(3L, wp)) * omega6 * 24L;
    }
    return out.with_precision(prec);
}

BigComplex point_i(Prec prec) { return BigComplex(BigReal(0L, prec), BigReal(1L, prec)); }

BigComplex point_rho(Prec prec) {
    return BigComplex(BigReal(mpq_class(1, 2), prec), sqrt(BigReal(3L, prec)) / 2L);
}

BigReal special_value_qseries(SpecialConstant c, Prec prec) {
    if (c == SpecialConstant::E4_at_i)
        return eval_form([](int n) { return eisenstein(4, n); }, point_i(prec + 16), prec, 0, "E4").value.re();
    return eval_form([](int n) { return eisenstein(6, n); }, point_rho(prec + 16), prec, 0, "E6").value.re();
}

BigReal special_constant(SpecialConstant c, Prec prec) {
    if (prec <= special_value_max_precision()) return special_value(c, prec);
    return special_value_qseries(c, prec);
}

BigComplex e2hat_at(const BigComplex& tau, Prec prec) {
    PointEvaluation e2 = eval_form([](int n) { return eisenstein(2, n); }, tau, prec, 0, "E2");
    Prec p = e2.value.precision();
    BigReal corr = BigReal(3L, p) / (pi(p) * tau.im().with_precision(p));
    BigComplex v = e2.value;
    v.re() -= corr;
    return v;
}

}  // namespace merocoef

#include "merocoef/pole_family.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "merocoef/errors.hpp"
#include "merocoef/evaluate.hpp"
#include "merocoef/forms.hpp"

namespace merocoef {

namespace {

struct PairTerm {
    BigReal lam;
    std::int64_t c, d;
};

Prec pole_working_precision(const BigComplex& reduced, long n, Prec prec) {
    double bits = 2 * M_PI * reduced.im().to_double() * static_cast<double>(n) / M_LN2;
    return prec + 32 + static_cast<Prec>(std::ceil(bits));
}

// Coprime (c, d) with |c tau + d|^2 <= cutoff, sorted by that value then (c, d).
std::vector<PairTerm> lattice_pairs(const BigComplex& tau, std::int64_t cutoff, Prec p) {
    const double x = tau.re().to_double(), y = tau.im().to_double();
    const BigReal L(cutoff, p);
    std::vector<PairTerm> out;
    std::int64_t cmax = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(cutoff)) / y)) + 1;
    for (std::int64_t c = -cmax; c <= cmax; ++c) {
        double rem = static_cast<double>(cutoff) - static_cast<double>(c * c) * y * y;
        if (rem < -1) continue;
        double r = std::sqrt(std::max(0.0, rem));
        std::int64_t d_lo = static_cast<std::int64_t>(std::floor(-c * x - r)) - 1;
        std::int64_t d_hi = static_cast<std::int64_t>(std::ceil(-c * x + r)) + 1;
        for (std::int64_t d = d_lo; d <= d_hi; ++d) {
            if (ext_gcd(c, d).g != 1) continue;
            BigReal re = tau.re() * c + BigReal(d, p);
            BigReal im = tau.im() * c;
            BigReal lam = re * re + im * im;
            if (lam > L) continue;
            out.push_back({std::move(lam), c, d});
        }
    }
    std::sort(out.begin(), out.end(), [](const PairTerm& u, const PairTerm& v) {
        if (u.lam < v.lam) return true;
        if (v.lam < u.lam) return false;
        return std::tie(u.c, u.d) < std::tie(v.c, v.d);
    });
    return out;
}

// Complex power series helpers for the oracle (index = exponent - offset).
using CSeries = std::vector<BigComplex>;

CSeries cmul(const CSeries& a, const CSeries& b, std::size_t len, Prec p) {
    CSeries out(len, BigComplex(p));
    for (std::size_t i = 0; i < std::min(len, a.size()); ++i)
        for (std::size_t j = 0; j + i < len && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

CSeries cinv(const CSeries& a, std::size_t len, Prec p) {
    CSeries b(len, BigComplex(p));
    BigComplex one(BigReal(1L, p));
    BigComplex inv0 = one / a[0];
    b[0] = inv0;
    for (std::size_t n = 1; n < len; ++n) {
        BigComplex s(p);
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) s += a[k] * b[n - k];
        b[n] = -(s * inv0);
    }
    return b;
}

BigReal pair_envelope(const BigReal& density, long s, std::int64_t from, Prec p) {
    BigReal L(from, p), half(mpq_class(1, 2), p);
    BigReal t1 = density * pow(L, 1 - s) / (s - 1);
    BigReal t2 = BigReal(4L, p) * pow(L, half - BigReal(s, p)) / (BigReal(s, p) - half);
    BigReal t3 = pow(L, -s) / s;
    return (t1 + t2 + t3) * s;
}

}  // namespace

BigComplex reduce_to_fundamental_domain(const BigComplex& tau) {
    if (tau.im().sign() <= 0) throw DomainError("tau0 must lie in the upper half-plane");
    Prec p = tau.precision();
    BigComplex t = tau;
    BigReal one(1L, p);
    for (int it = 0; it < 10000; ++it) {
        mpz_class shift = t.re().round_to_integer();
        t.re() -= BigReal(shift, p);
        BigReal n2 = t.norm();
        if (n2 >= one) return t;
        // -1/t = -conj(t)/|t|^2
        t = BigComplex(-t.re() / n2, t.im() / n2);
    }
    throw DomainError("reduction to the fundamental domain did not terminate");
}

PoleFamilySetup pole_family_setup(const BigComplex& tau0, Prec prec) {
    Prec wp = prec + 32;
    PoleFamilySetup s{tau0, reduce_to_fundamental_domain(tau0.with_precision(std::max(wp, tau0.precision()))),
                      BigComplex(wp), BigComplex(wp), BigComplex(wp)};
    BigComplex i = point_i(wp), rho = point_rho(wp);
    BigComplex rho1 = rho - BigComplex(BigReal(1L, wp));
    for (const auto& e : {i, rho, rho1}) {
        if ((s.reduced - e).abs().to_double() < kEllipticProximity)
            throw DomainError("tau0 is equivalent to an elliptic point (i or rho); j'(tau0) vanishes there");
    }
    const BigComplex& t = s.reduced;
    auto E4 = [](int n) { return eisenstein(4, n); };
    auto D = [](int n) { return delta_and_j(n).first; };
    auto J = [](int n) { return delta_and_j(n).second; };
    BigComplex e4 = eval_form(E4, t, wp, 0).value;
    BigComplex e4p = eval_form(E4, t, wp, 1).value;
    BigComplex dl = eval_form(D, t, wp, 0).value;
    BigComplex dlp = eval_form(D, t, wp, 1).value;
    s.j0 = eval_form(J, t, wp, 0).value;
    BigComplex jp = eval_form(J, t, wp, 1).value;
    BigComplex jpp = eval_form(J, t, wp, 2).value;
    if (jp.abs().log2_abs() < -static_cast<double>(prec) / 2)
        throw DomainError("j'(tau0) is numerically zero");
    BigComplex jp2 = jp * jp;
    s.lambda_m2 = e4 / (dl * jp2);
    s.lambda_m1 = -(e4 / dl) * jpp / (jp2 * jp) + (dl * e4p - e4 * dlp) / (dl * dl * jp2);
    return s;
}

std::vector<CoefficientValue> pole_family_coefficients(const BigComplex& tau0, long n_from, long n_to,
                                                       std::int64_t cutoff, Prec prec) {
    if (n_from < 0 || n_to < n_from) throw InvalidArgument("invalid n range");
    if (cutoff < 1) throw InvalidArgument("cutoff must be >= 1");
    BigComplex reduced = reduce_to_fundamental_domain(tau0.with_precision(std::max<Prec>(prec + 32, tau0.precision())));
    const Prec wp = pole_working_precision(reduced, n_to, prec);
    PoleFamilySetup su = pole_family_setup(tau0.with_precision(std::max(wp, tau0.precision())), wp - 32);
    const BigComplex& t = su.reduced;
    const BigReal v0 = t.im();
    const BigReal PI = pi(wp);
    const BigComplex I = BigComplex::i(wp);
    const BigComplex w = I * (v0 * 2L);
    // F = 2 pi i sum_n sum_{(c,d)=1} [ (i l2/2)(5|c tau+d|^2/v0 + 2 pi n) B12 + (5 l2/w - l1/2) B10 ] q^n
    const BigComplex alpha = I * su.lambda_m2 / BigReal(2L, wp);
    const BigComplex beta = su.lambda_m2 * 5L / w - su.lambda_m1 / BigReal(2L, wp);

    const long nn = n_to - n_from + 1;
    std::vector<BigComplex> acc(nn, BigComplex(wp + 16));
    for (const auto& pt : lattice_pairs(t, cutoff, wp)) {
        auto [a, b] = bezout(pt.c, pt.d);
        BigComplex g = t * pt.c + BigComplex(BigReal(pt.d, wp));
        BigComplex Mt = (t * a + BigComplex(BigReal(b, wp))) / g;
        BigComplex g10 = pow(g, -10);
        BigComplex g12 = g10 / (g * g);
        // e^{-2 pi i M tau}
        BigComplex u = exp(-(Mt * (PI * 2L)).times_i());
        BigComplex un = pow(u, n_from);
        for (long n = n_from; n <= n_to; ++n) {
            if (n > n_from) un *= u;
            BigComplex inner = alpha * (pt.lam * 5L / v0 + PI * 2L * n) * g12 + beta * g10;
            acc[n - n_from] += inner * un;
        }
    }
    const BigComplex two_pi_i = I * (PI * 2L);
    const BigReal density = BigReal(6L, wp) / (PI * v0);
    std::vector<CoefficientValue> out;
    for (long n = n_from; n <= n_to; ++n) {
        CoefficientValue cv;
        cv.n = n;
        cv.cutoff = cutoff;
        cv.precision_bits = wp;
        cv.value = (two_pi_i * acc[n - n_from]).with_precision(wp);
        BigReal growth = exp(PI * 2L * v0 * n / cutoff);
        BigReal t5 = pair_envelope(density, 5, cutoff, wp);
        BigReal t6 = pair_envelope(density, 6, cutoff, wp);
        cv.tail_estimate = PI * 2L * growth *
                           (alpha.abs() * (t5 * 5L / v0 + PI * 2L * n * t6) + beta.abs() * t5);
        out.push_back(std::move(cv));
    }
    return out;
}

CoefficientValue pole_family_coefficient(const BigComplex& tau0, long n, std::int64_t cutoff, Prec prec) {
    return pole_family_coefficients(tau0, n, n, cutoff, prec).front();
}

std::vector<BigComplex> pole_family_oracle(const BigComplex& tau0, int order, Prec prec) {
    if (order < 0) throw InvalidArgument("order must be >= 0");
    PoleFamilySetup su = pole_family_setup(tau0, prec);
    const Prec wp = su.j0.precision();
    const int work = order + 3;
    auto [delta, j] = delta_and_j(work);
    LaurentSeries e4 = eisenstein(4, work);
    LaurentSeries e4c = power(e4, 3);
    LaurentSeries e4cj = mul(e4c, j);  // min exponent -1

    // Delta (j - j0)^2 = E4^3 j - 2 j0 E4^3 + j0^2 Delta, indexed from q^-1
    const std::size_t len = static_cast<std::size_t>(order) + 2;
    CSeries den(len, BigComplex(wp));
    BigComplex two_j0 = su.j0 * 2L, j0sq = su.j0 * su.j0;
    for (std::size_t i = 0; i < len; ++i) {
        int e = static_cast<int>(i) - 1;
        BigComplex v(BigReal(e4cj.coeff(e), wp));
        v -= two_j0 * BigReal(e4c.coeff(e), wp);
        v += j0sq * BigReal(delta.coeff(e), wp);
        den[i] = v;
    }
    CSeries num(len, BigComplex(wp));
    for (std::size_t i = 0; i < len; ++i) num[i] = BigComplex(BigReal(e4.coeff(static_cast<int>(i)), wp));
    // F = q * num / (q den); (q den) starts at q^0
    CSeries f = cmul(num, cinv(den, len, wp), len, wp);
    std::vector<BigComplex> out(order + 1, BigComplex(wp));
    for (int n = 1; n <= order; ++n) out[n] = f[n - 1];
    return out;
}

}  // namespace merocoef

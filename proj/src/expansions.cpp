#include "merocoef/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "merocoef/errors.hpp"
#include "merocoef/evaluate.hpp"
#include "merocoef/parallel.hpp"

namespace merocoef {

namespace {

constexpr std::size_t kChunks = 64;

BigReal im_part(FieldTag f, Prec p) {
    if (f.kind == Field::Gaussian) return BigReal(1L, p);
    return sqrt(BigReal(3L, p)) / 2L;
}

double im_part_d(FieldTag f) { return f.kind == Field::Gaussian ? 1.0 : std::sqrt(3.0) / 2.0; }

// 2 * (ac|z|^2 + bd + z1(ad + bc)), an integer for both base points.
__int128 twice_re_numerator(FieldTag f, std::int64_t c, std::int64_t d, std::int64_t a, std::int64_t b) {
    __int128 ac = static_cast<__int128>(a) * c, bd = static_cast<__int128>(b) * d;
    if (f.kind == Field::Gaussian) return 2 * (ac + bd);
    return 2 * ac + 2 * bd + static_cast<__int128>(a) * d + static_cast<__int128>(b) * c;
}

// P in [0, 2N) with e(-n x/N) = e^{i pi P/N}.
std::int64_t phase_numerator(__int128 x2, long n, std::int64_t norm) {
    __int128 m = 2 * static_cast<__int128>(norm);
    __int128 p = (-(static_cast<__int128>(n) * x2)) % m;
    if (p < 0) p += m;
    return static_cast<std::int64_t>(p);
}

BigReal arg_of(FieldTag f, std::int64_t c, std::int64_t d, Prec p) {
    if (f.kind == Field::Gaussian) return atan2(BigReal(c, p), BigReal(d, p));
    // c rho + d = (d + c/2) + i c sqrt3/2; scale by 2
    return atan2(sqrt(BigReal(3L, p)) * c, BigReal(2 * d + c, p));
}

void check_bezout(std::int64_t c, std::int64_t d, std::int64_t a, std::int64_t b) {
    if (static_cast<__int128>(a) * d - static_cast<__int128>(b) * c != 1)
        throw InvalidArgument("invalid Bezout pair: a*d - b*c != 1");
}

struct Key {
    int k, l;
    friend bool operator<(const Key& x, const Key& y) { return x.k != y.k ? x.k < y.k : x.l < y.l; }
};

// sum over ideals of A_k(b, n) e^{2 pi n Im/N} N^{l - k/2} for each key and n.
struct SumTable {
    std::vector<Key> keys;
    long n_from = 0, n_to = 0;
    std::vector<std::vector<BigComplex>> val;  // [key][n - n_from]

    const BigComplex& at(Key key, long n) const {
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (keys[i].k == key.k && keys[i].l == key.l) return val[i][n - n_from];
        throw Error("internal: missing sum key");
    }
};

SumTable ideal_sums(FieldTag field, const std::vector<Key>& keys, long n_from, long n_to, std::int64_t cutoff, Prec wp,
                    const SumOptions& opts) {
    const std::size_t nk = keys.size();
    const long nn = n_to - n_from + 1;
    std::vector<int> ks;
    for (const auto& key : keys)
        if (std::find(ks.begin(), ks.end(), key.k) == ks.end()) ks.push_back(key.k);
    std::vector<int> exps;  // k/2 - l per key
    for (const auto& key : keys) exps.push_back(key.k / 2 - key.l);

    const Prec ap = wp + 16;  // accumulator precision
    const std::int64_t hp_limit = std::min(cutoff, std::max<std::int64_t>(1, opts.highprec_norm_limit));

    // high-precision head
    auto ideals = enumerate_primitive_ideals(field, hp_limit);
    std::vector<std::vector<std::vector<BigComplex>>> part(
        kChunks, std::vector<std::vector<BigComplex>>(nk, std::vector<BigComplex>(nn, BigComplex(ap))));
    const BigReal pi_w = pi(wp);
    const BigReal two_pi_im = pi_w * 2L * im_part(field, wp);

    run_chunks(kChunks, opts.threads, [&](std::size_t ch) {
        std::size_t lo = ideals.size() * ch / kChunks, hi = ideals.size() * (ch + 1) / kChunks;
        auto& acc = part[ch];
        for (std::size_t idx = lo; idx < hi; ++idx) {
            PrimitiveIdeal id = ideals[idx];
            if (opts.bezout_shift) {
                std::int64_t t = opts.bezout_shift(id);
                id.a += t * id.c;
                id.b += t * id.d;
            }
            const __int128 x2 = twice_re_numerator(field, id.c, id.d, id.a, id.b);
            const BigReal theta = arg_of(field, id.c, id.d, wp);
            std::map<int, BigReal> inv_pow;
            for (int s : exps)
                if (!inv_pow.count(s)) inv_pow.emplace(s, BigReal(1L, wp) / pow(BigReal(id.norm, wp), static_cast<long>(s)));
            const BigReal g = exp(two_pi_im / id.norm);
            BigReal e = pow(g, n_from);
            for (long n = n_from; n <= n_to; ++n) {
                if (n > n_from) e *= g;
                const std::int64_t P = phase_numerator(x2, n, id.norm);
                const BigReal base = pi_w * P / id.norm;
                for (int k : ks) {
                    BigComplex u = BigComplex::unit(base - theta * k);
                    u *= e;
                    for (std::size_t ki = 0; ki < nk; ++ki) {
                        if (keys[ki].k != k) continue;
                        acc[ki][n - n_from] += u * inv_pow.at(exps[ki]);
                    }
                }
            }
        }
    });

    // double-precision tail, chunked by c
    std::vector<std::vector<std::vector<long double>>> tail_re(
        kChunks, std::vector<std::vector<long double>>(nk, std::vector<long double>(nn, 0.0L)));
    auto tail_im = tail_re;
    if (cutoff > hp_limit) {
        const double im = im_part_d(field);
        const double z1 = field.kind == Field::Gaussian ? 0.0 : 0.5;
        std::int64_t cmax = 0;
        while (field.norm(cmax + 1, 1) <= cutoff) ++cmax;
        run_chunks(kChunks, opts.threads, [&](std::size_t ch) {
            std::int64_t c_lo = (cmax + 1) * static_cast<std::int64_t>(ch) / static_cast<std::int64_t>(kChunks);
            std::int64_t c_hi = (cmax + 1) * static_cast<std::int64_t>(ch + 1) / static_cast<std::int64_t>(kChunks);
            auto& tr = tail_re[ch];
            auto& ti = tail_im[ch];
            for (std::int64_t c = c_lo; c < c_hi; ++c) {
                for (std::int64_t d = 1;; ++d) {
                    std::int64_t N = field.norm(c, d);
                    if (N > cutoff) break;
                    if (N <= hp_limit) continue;
                    ExtGcd eg = ext_gcd(d, c);
                    if (eg.g != 1) continue;
                    std::int64_t a = eg.x, b = -eg.y;
                    if (opts.bezout_shift) {
                        PrimitiveIdeal id{field, c, d, N, a, b};
                        std::int64_t t = opts.bezout_shift(id);
                        a += t * c;
                        b += t * d;
                    }
                    const __int128 x2 = twice_re_numerator(field, c, d, a, b);
                    const double theta = std::atan2(c * im, d + c * z1);
                    const double g = std::exp(2 * M_PI * im / static_cast<double>(N));
                    double e = std::pow(g, static_cast<double>(n_from));
                    for (long n = n_from; n <= n_to; ++n) {
                        if (n > n_from) e *= g;
                        const std::int64_t P = phase_numerator(x2, n, N);
                        const double base = M_PI * static_cast<double>(P) / static_cast<double>(N);
                        for (std::size_t ki = 0; ki < nk; ++ki) {
                            const double ang = base - keys[ki].k * theta;
                            const double w = e * std::pow(static_cast<double>(N), -static_cast<double>(exps[ki]));
                            tr[ki][n - n_from] += w * std::cos(ang);
                            ti[ki][n - n_from] += w * std::sin(ang);
                        }
                    }
                }
            }
        });
    }

    SumTable out;
    out.keys = keys;
    out.n_from = n_from;
    out.n_to = n_to;
    out.val.assign(nk, std::vector<BigComplex>(nn, BigComplex(ap)));
    for (std::size_t ki = 0; ki < nk; ++ki) {
        for (long j = 0; j < nn; ++j) {
            BigComplex s(ap);
            for (std::size_t ch = 0; ch < kChunks; ++ch) s += part[ch][ki][j];
            long double tre = 0, tim = 0;
            for (std::size_t ch = 0; ch < kChunks; ++ch) {
                tre += tail_re[ch][ki][j];
                tim += tail_im[ch][ki][j];
            }
            BigReal r(ap), i(ap);
            mpfr_set_ld(r.raw(), tre, MPFR_RNDN);
            mpfr_set_ld(i.raw(), tim, MPFR_RNDN);
            s.re() += r;
            s.im() += i;
            out.val[ki][j] = s.with_precision(wp);
        }
    }
    return out;
}

void check_term(FieldTag field, int k, int l, int r) {
    if (k % (2 * field.omega()) != 0)
        throw InvalidArgument("weight " + std::to_string(k) + " is not a multiple of " +
                              std::to_string(2 * field.omega()) + " for base point " + field.name());
    if (l < 0 || r < 0) throw InvalidArgument("l and r must be >= 0");
    if (k < 4 + 2 * l) throw DomainError("k >= 4 + 2l required for convergence");
}

BigReal envelope_density(FieldTag f, Prec p) {
    // canonical coprime pairs of norm <= x grow like rho_F x
    if (f.kind == Field::Gaussian) return BigReal(3L, p) / (pi(p) * 2L);
    return BigReal(2L, p) / (pi(p) * sqrt(BigReal(3L, p)));
}

BigReal envelope_sum(FieldTag field, long s, std::int64_t from, Prec p) {
    // s * integral_from^inf (rho x + 2 sqrt x + 1) x^{-s-1} dx
    BigReal L(from, p);
    BigReal half(mpq_class(1, 2), p);
    BigReal t1 = envelope_density(field, p) * pow(L, 1 - s) / (s - 1);
    BigReal t2 = BigReal(2L, p) * pow(L, half - BigReal(s, p)) / (BigReal(s, p) - half);
    BigReal t3 = pow(L, -s) / s;
    return (t1 + t2 + t3) * s;
}

}  // namespace

BigComplex A_value(FieldTag field, std::int64_t c, std::int64_t d, std::int64_t a, std::int64_t b, long n, int m,
                   Prec prec) {
    check_bezout(c, d, a, b);
    if (n < 0) throw InvalidArgument("n must be >= 0");
    if (m % 2 != 0) throw InvalidArgument("m must be even");
    std::int64_t N = field.norm(c, d);
    std::int64_t P = phase_numerator(twice_re_numerator(field, c, d, a, b), n, N);
    Prec wp = prec + 16;
    BigReal ang = pi(wp) * P / N - arg_of(field, c, d, wp) * m;
    return BigComplex::unit(ang).with_precision(prec);
}

BigReal C_value(const PrimitiveIdeal& ideal, long n, int k, Prec prec) {
    if (k % (2 * ideal.field.omega()) != 0)
        throw InvalidArgument("weight " + std::to_string(k) + " not admissible for base point " + ideal.field.name());
    return A_value(ideal.field, ideal.c, ideal.d, ideal.a, ideal.b, n, k, prec).re();
}

BigReal C_cosine_formula(FieldTag field, std::int64_t c, std::int64_t d, std::int64_t a, std::int64_t b, long n,
                         int k, Prec prec) {
    check_bezout(c, d, a, b);
    Prec wp = prec + 16;
    BigReal p = pi(wp);
    std::int64_t N = field.norm(c, d);
    if (field.kind == Field::Gaussian) {
        if (k % 4 != 0) throw InvalidArgument("weight must be a multiple of 4");
        if (d == 0) throw DomainError("arctan(c/d) undefined for d = 0");
        BigReal ang = p * 2L * BigReal(mpz_class(mpz_class(static_cast<long>(n)) * static_cast<long>(a * c + b * d)), wp) / N +
                      atan(BigReal(c, wp) / BigReal(d, wp)) * k;
        return cos(ang).with_precision(prec);
    }
    if (k % 6 != 0) throw InvalidArgument("weight must be a multiple of 6");
    // rho^2 = rho - 1, so c rho + d = c rho^2 + (c + d)
    std::int64_t c2 = c, d2 = c + d, a2 = a, b2 = a + b;
    if (2 * d2 - c2 == 0) throw DomainError("arctan(c sqrt3/(2d - c)) undefined for 2d = c");
    long m = k / 6;
    mpz_class lin = mpz_class(static_cast<long>(a2 * d2 + b2 * c2 - 2 * a2 * c2 - 2 * b2 * d2));
    BigReal ang = p * BigReal(mpz_class(lin * n), wp) / N + p * n -
                  atan(sqrt(BigReal(3L, wp)) * c2 / BigReal(2 * d2 - c2, wp)) * (6 * m);
    BigReal v = cos(ang);
    if (n % 2) v = -v;
    return v.with_precision(prec);
}

Prec working_precision(FieldTag field, long n, Prec target) {
    double bits = 2 * M_PI * im_part_d(field) * static_cast<double>(n) / M_LN2;
    return target + 32 + static_cast<Prec>(std::ceil(bits));
}

BigReal tail_estimate(FieldTag field, int k, int l, int r, long n, std::int64_t cutoff, Prec prec) {
    long s = k / 2 - l;
    if (k % 2 != 0 || s < 2) throw DomainError("tail estimate needs k/2 - l >= 2");
    if (cutoff < 1) throw InvalidArgument("cutoff must be >= 1");
    if (n < 0 || r < 0) throw InvalidArgument("n and r must be >= 0");
    Prec p = std::max<Prec>(prec, 64);
    if (r > 0 && n == 0) return BigReal(p);
    BigReal growth = exp(pi(p) * 2L * im_part(field, p) * n / cutoff);
    BigReal nr = pow(BigReal(n, p), r);
    return growth * nr * envelope_sum(field, s, cutoff, p);
}

CoefficientValue F_coefficient(FieldTag field, int k, int l, int r, long n, std::int64_t cutoff, Prec prec,
                               const SumOptions& opts) {
    check_term(field, k, l, r);
    if (cutoff < 1) throw InvalidArgument("cutoff must be >= 1");
    if (n < 0) throw InvalidArgument("n must be >= 0");
    Prec wp = working_precision(field, n, prec);
    SumTable t = ideal_sums(field, {{k, l}}, n, n, cutoff, wp, opts);
    CoefficientValue cv;
    cv.n = n;
    cv.cutoff = cutoff;
    cv.precision_bits = wp;
    cv.value = t.val[0][0] * pow(BigReal(n, wp), r);
    cv.tail_estimate = tail_estimate(field, k, l, r, n, cutoff, wp);
    if (cutoff > opts.highprec_norm_limit) {
        // rounding of the double-precision terms
        cv.tail_estimate += envelope_sum(field, k / 2 - l, std::max<std::int64_t>(1, opts.highprec_norm_limit), wp) *
                            exp(pi(wp) * 2L * im_part(field, wp) * n / std::max<std::int64_t>(1, opts.highprec_norm_limit)) *
                            pow(BigReal(n, wp), r) * exp2i(-48, wp);
    }
    if (opts.tolerance > 0 && cv.tail_estimate > BigReal::from_double(opts.tolerance, 64) * cv.value.abs())
        cv.warnings.push_back("cutoff " + std::to_string(cutoff) + " may be too small for tolerance");
    return cv;
}

ExpansionRecipe recipe_for(Target t, Prec prec) {
    const Prec p = prec;
    const BigReal PI = pi(p);
    const BigReal S3 = sqrt(BigReal(3L, p));
    ExpansionRecipe rec;
    rec.target = t;
    rec.name = target_name(t);
    auto R = [&](const BigReal& x) { return BigComplex(x); };
    auto add = [&](int k, int l, int r, const BigReal& s) { rec.terms.push_back({k, l, r, R(s)}); };

    bool at_rho = t == Target::InvE4 || t == Target::E2OverE4 || t == Target::InvE4Sq || t == Target::E6_E4Sq ||
                  t == Target::InvE4Cube || t == Target::E6_E4Cube;
    rec.field = at_rho ? FieldTag::eisenstein() : FieldTag::gaussian();
    if (at_rho) {
        const BigReal E6 = special_constant(SpecialConstant::E6_at_rho, p);
        switch (t) {
            case Target::InvE4: add(6, 0, 0, BigReal(3L, p) / E6); break;
            case Target::E2OverE4: add(6, 1, 0, S3 * 6L / (PI * E6)); break;
            case Target::InvE4Sq:
                add(12, 1, 0, S3 * 15L / (PI * E6 * E6));
                add(12, 0, 1, BigReal(9L, p) / (E6 * E6));
                break;
            case Target::E6_E4Sq:
                add(6, 1, 0, S3 * 6L / (PI * E6));
                add(6, 0, 1, BigReal(9L, p) / E6);
                break;
            case Target::InvE4Cube: {
                BigReal E6c = pow(E6, 3);
                add(18, 2, 0, BigReal(945L, p) / (PI * PI * 4L * E6c));
                add(18, 1, 1, S3 * 135L / (PI * 2L * E6c));
                add(18, 0, 2, BigReal(27L, p) / (E6c * 2L));
                break;
            }
            case Target::E6_E4Cube: {
                BigReal E6s = E6 * E6;
                add(12, 2, 0, BigReal(81L, p) / (PI * PI * E6s));
                add(12, 1, 1, S3 * 81L / (PI * 2L * E6s));
                add(12, 0, 2, BigReal(27L, p) / (E6s * 2L));
                break;
            }
            default: break;
        }
        return rec;
    }
    const BigReal E4 = special_constant(SpecialConstant::E4_at_i, p);
    const BigReal E4s = E4 * E4;
    switch (t) {
        case Target::InvE6: add(8, 0, 0, BigReal(2L, p) / E4s); break;
        case Target::E4OverE6: add(4, 0, 0, BigReal(2L, p) / E4); break;
        case Target::E2OverE6: add(8, 1, 0, BigReal(6L, p) / (PI * E4s)); break;
        case Target::E2Sq_E6: add(8, 2, 0, BigReal(18L, p) / (PI * PI * E4s)); break;
        case Target::InvE6Sq:
            add(16, 1, 0, BigReal(14L, p) / (PI * E4s * E4s));
            add(16, 0, 1, BigReal(4L, p) / (E4s * E4s));
            break;
        case Target::E4_E6Sq:
            add(12, 1, 0, BigReal(10L, p) / (PI * E4s * E4));
            add(12, 0, 1, BigReal(4L, p) / (E4s * E4));
            break;
        case Target::E4Sq_E6Sq:
            add(8, 1, 0, BigReal(6L, p) / (PI * E4s));
            add(8, 0, 1, BigReal(4L, p) / E4s);
            break;
        case Target::E2E4Sq_E6Sq:
            add(8, 2, 0, BigReal(15L, p) / (PI * PI * E4s));
            add(8, 1, 1, BigReal(12L, p) / (PI * E4s));
            add(4, 0, 0, BigReal(1L, p) / (E4 * 3L));
            break;
        default: throw InvalidArgument("no recipe for target " + rec.name);
    }
    return rec;
}

std::vector<CoefficientValue> formula_coefficients(Target t, long n_from, long n_to, std::int64_t cutoff, Prec prec,
                                                   const SumOptions& opts) {
    if (n_from < 0 || n_to < n_from) throw InvalidArgument("invalid n range");
    if (cutoff < 1) throw InvalidArgument("cutoff must be >= 1");
    FieldTag field = recipe_for(t, 64).field;
    Prec wp = working_precision(field, n_to, prec);
    ExpansionRecipe rec = recipe_for(t, wp);
    std::vector<Key> keys;
    for (const auto& term : rec.terms) {
        check_term(field, term.k, term.l, term.r);
        Key key{term.k, term.l};
        bool seen = false;
        for (const auto& k2 : keys) seen = seen || (k2.k == key.k && k2.l == key.l);
        if (!seen) keys.push_back(key);
    }
    SumTable table = ideal_sums(field, keys, n_from, n_to, cutoff, wp, opts);
    std::vector<CoefficientValue> out;
    for (long n = n_from; n <= n_to; ++n) {
        CoefficientValue cv;
        cv.n = n;
        cv.cutoff = cutoff;
        cv.precision_bits = wp;
        cv.value = BigComplex(wp);
        cv.tail_estimate = BigReal(wp);
        for (const auto& term : rec.terms) {
            if (term.r > 0 && n == 0) continue;
            BigComplex v = table.at({term.k, term.l}, n) * pow(BigReal(n, wp), term.r);
            cv.value += term.scalar * v;
            BigReal te = tail_estimate(field, term.k, term.l, term.r, n, cutoff, wp);
            if (cutoff > opts.highprec_norm_limit) {
                std::int64_t h = std::max<std::int64_t>(1, opts.highprec_norm_limit);
                te += envelope_sum(field, term.k / 2 - term.l, h, wp) *
                      exp(pi(wp) * 2L * im_part(field, wp) * n / h) * pow(BigReal(n, wp), term.r) * exp2i(-48, wp);
            }
            cv.tail_estimate += term.scalar.abs() * te;
        }
        if (opts.tolerance > 0 && cv.tail_estimate > BigReal::from_double(opts.tolerance, 64) * cv.value.abs())
            cv.warnings.push_back("cutoff " + std::to_string(cutoff) + " may be too small for tolerance");
        out.push_back(std::move(cv));
    }
    return out;
}

CoefficientValue formula_coefficient(Target t, long n, std::int64_t cutoff, Prec prec, const SumOptions& opts) {
    return formula_coefficients(t, n, n, cutoff, prec, opts).front();
}

CoefficientValue beta_via_h(long n, std::int64_t cutoff, Prec prec, std::function<int(long)> h21) {
    if (n < 0) throw InvalidArgument("n must be >= 0");
    FieldTag field = FieldTag::eisenstein();
    Prec wp = working_precision(field, n, prec);
    BigReal PI = pi(wp), S3 = sqrt(BigReal(3L, wp));
    BigReal sum(wp);
    for (const auto& id : enumerate_primitive_ideals(field, cutoff)) {
        BigReal h(wp);
        if (id.norm == 1) {
            h = BigReal(1L, wp);
        } else if (id.norm == 3) {
            h = BigReal(static_cast<long>(h21 ? h21(n) : -1), wp);
        } else {
            // one representative per conjugate pair; the pair contributes 2 cos
            PrimitiveIdeal cj = conjugate_ideal(id);
            if (std::make_pair(cj.c, cj.d) < std::make_pair(id.c, id.d)) continue;
            std::int64_t c2 = id.c, d2 = id.c + id.d, a2 = id.a, b2 = id.a + id.b;
            std::int64_t lam = id.norm;
            mpz_class lin(static_cast<long>(a2 * d2 + b2 * c2 - 2 * a2 * c2 - 2 * b2 * d2 + lam));
            BigReal ang = PI * BigReal(mpz_class(lin * n), wp) / lam - atan(S3 * c2 / BigReal(2 * d2 - c2, wp)) * 6L;
            h = cos(ang) * 2L;
        }
        sum += h / pow(BigReal(id.norm, wp), 3) * exp(PI * S3 * n / id.norm);
    }
    BigReal E6 = special_constant(SpecialConstant::E6_at_rho, wp);
    BigReal beta = BigReal(3L, wp) / E6 * sum;
    if (n % 2) beta = -beta;
    CoefficientValue cv;
    cv.n = n;
    cv.cutoff = cutoff;
    cv.precision_bits = wp;
    cv.value = BigComplex(beta);
    cv.tail_estimate = BigReal(3L, wp) / E6 * tail_estimate(field, 6, 0, 0, n, cutoff, wp);
    return cv;
}

}  // namespace merocoef

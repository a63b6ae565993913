#include "merocoef/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "merocoef/errors.hpp"
#include "merocoef/evaluate.hpp"
#include "merocoef/forms.hpp"
#include "merocoef/ideals.hpp"
#include "merocoef/parallel.hpp"
#include "merocoef/pole_family.hpp"

namespace merocoef {

namespace {

constexpr Prec kGuard = 16;

// coprime (c, d) with max(|c|, |d|) == s
std::vector<std::pair<std::int64_t, std::int64_t>> shell_pairs(std::int64_t s) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    auto push = [&](std::int64_t c, std::int64_t d) {
        if (ext_gcd(c, d).g == 1) out.emplace_back(c, d);
    };
    for (std::int64_t d = -s; d <= s; ++d) {
        push(s, d);
        push(-s, d);
    }
    for (std::int64_t c = -s + 1; c <= s - 1; ++c) {
        push(c, s);
        push(c, -s);
    }
    return out;
}

void check_params(int m, int l, int r) {
    if (m % 2 != 0) throw InvalidArgument("weight m must be even");
    if (l < 0) throw InvalidArgument("l must be >= 0");
    if (r < 0 || r > 2) throw InvalidArgument("r must be 0, 1 or 2");
    if (m < 4 + 2 * l) throw DomainError("m >= 4 + 2l required for convergence");
}

void check_cfg(const LatticeSumConfig& cfg) {
    if (cfg.box_bound < 2) throw InvalidArgument("box_bound must be >= 2");
    if (cfg.convergence_threshold < 0) throw InvalidArgument("convergence threshold must be >= 0");
}

// One shell of the direct sum (without the overall 2 pi i).
BigComplex direct_shell(std::int64_t s, int m, int l, int r, const BigComplex& zz, const BigComplex& z, Prec wp,
                        const BigReal& min_den) {
    const BigReal two_pi = pi(wp) * 2L;
    const BigComplex two_pi_i(BigReal(wp), two_pi);
    const BigReal y = zz.im();
    const BigComplex one(BigReal(1L, wp));
    BigComplex acc(wp);
    for (auto [c, d] : shell_pairs(s)) {
        auto [a, b] = bezout(c, d);
        BigComplex g = zz * c + BigComplex(BigReal(d, wp));
        BigComplex Mz = (zz * a + BigComplex(BigReal(b, wp))) / g;
        BigReal lam = g.norm();
        BigComplex w = z - Mz;
        BigComplex E = exp((w * two_pi).times_i());
        BigComplex den = one - E;
        if (den.abs() < min_den)
            throw DomainError("z is (numerically) on the orbit of the pole: |1 - e(z - M zz)| too small at (c,d) = (" +
                              std::to_string(c) + "," + std::to_string(d) + ")");
        BigComplex D = one / den;
        if (r == 1) D = two_pi_i * E * D * D;
        if (r == 2) D = two_pi_i * two_pi_i * E * (one + E) * D * D * D;
        BigComplex term = D / pow(g, m);
        if (l > 0) term *= pow(lam / y, l);
        acc += term;
    }
    return acc;
}

BigComplex fourier_shell(std::int64_t s, int m, int l, int r, const BigComplex& zz, const BigComplex& z, Prec wp,
                         long n_max) {
    const BigReal two_pi = pi(wp) * 2L;
    const BigReal y = zz.im(), x = zz.re();
    const BigReal zabs2 = zz.norm();
    const BigComplex q = q_of(z.with_precision(wp));
    const BigComplex one(BigReal(1L, wp));
    const BigComplex two_pi_i(BigReal(wp), two_pi);
    BigComplex acc(wp);
    for (auto [c, d] : shell_pairs(s)) {
        auto [a, b] = bezout(c, d);
        BigComplex g = zz * c + BigComplex(BigReal(d, wp));
        BigReal lam = g.norm();
        // Re(M zz) = (ac|zz|^2 + bd + x(ad + bc)) / lam
        BigReal X = (zabs2 * (a * c) + BigReal(b * d, wp) + x * (a * d + b * c)) / lam;
        // e^{2 pi y/lam} e(-X) q
        BigComplex u = exp(BigComplex(two_pi * y / lam, -(two_pi * X))) * q;
        if (u.abs() >= BigReal(1L, wp)) throw DomainError("Fourier expansion needs Im z > Im(M zz)");
        BigComplex sum(wp);
        BigComplex un = one;
        for (long n = 0; n <= n_max; ++n) {
            if (n > 0) un *= u;
            if (r == 0) {
                sum += un;
            } else if (n > 0) {
                sum += un * pow(two_pi_i * n, r);
            }
        }
        BigComplex term = sum / pow(g, m);
        if (l > 0) term *= pow(lam / y, l);
        acc += term;
    }
    return acc;
}

LatticeSum shell_sum(const std::function<BigComplex(std::int64_t)>& shell, const LatticeSumConfig& cfg, Prec wp) {
    LatticeSum out{BigComplex(wp), 0, BigReal(wp)};
    const std::int64_t B = cfg.box_bound;
    if (cfg.convergence_threshold > 0) {
        const BigReal thr = BigReal::from_double(cfg.convergence_threshold, wp);
        int quiet = 0;
        for (std::int64_t s = 1; s <= B; ++s) {
            BigComplex v = shell(s);
            out.value += v;
            out.shells = s;
            out.last_shell = v.abs();
            // two consecutive quiet shells, so one accidental cancellation does not stop us
            quiet = out.last_shell < thr ? quiet + 1 : 0;
            if (quiet >= 2 && s >= 4) break;
        }
        return out;
    }
    std::vector<BigComplex> parts(static_cast<std::size_t>(B), BigComplex(wp));
    // larger shells first so the chunks balance
    run_chunks(static_cast<std::size_t>(B), cfg.threads, [&](std::size_t i) {
        std::int64_t s = B - static_cast<std::int64_t>(i);
        parts[s - 1] = shell(s);
    });
    for (std::int64_t s = 1; s <= B; ++s) out.value += parts[s - 1];
    out.shells = B;
    out.last_shell = parts[B - 1].abs();
    return out;
}

BigReal binom(long n, long k, Prec p) {
    mpz_class v;
    mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigReal(v, p);
}

}  // namespace

LatticeSum H_direct_sum(int m, int l, int r, const BigComplex& zz, const BigComplex& z, const LatticeSumConfig& cfg) {
    check_params(m, l, r);
    check_cfg(cfg);
    if (zz.im().sign() <= 0 || z.im().sign() <= 0) throw DomainError("points must lie in the upper half-plane");
    const Prec wp = cfg.prec + kGuard;
    const BigComplex zw = zz.with_precision(wp), w = z.with_precision(wp);
    const BigReal min_den = exp2i(-static_cast<long>(cfg.prec / 2), wp);
    LatticeSum out = shell_sum([&](std::int64_t s) { return direct_shell(s, m, l, r, zw, w, wp, min_den); }, cfg, wp);
    out.value = out.value * BigComplex(BigReal(wp), pi(wp) * 2L);
    return out;
}

BigComplex H_direct(int m, int l, int r, const BigComplex& zz, const BigComplex& z, const LatticeSumConfig& cfg) {
    return H_direct_sum(m, l, r, zz, z, cfg).value.with_precision(cfg.prec);
}

BigComplex H_fourier(int m, int l, int r, const BigComplex& zz, const BigComplex& z, const LatticeSumConfig& cfg,
                     long n_max) {
    check_params(m, l, r);
    check_cfg(cfg);
    if (n_max < 0) throw InvalidArgument("n_max must be >= 0");
    const Prec wp = cfg.prec + kGuard;
    const BigComplex zw = zz.with_precision(wp), w = z.with_precision(wp);
    LatticeSumConfig c2 = cfg;
    c2.convergence_threshold = 0;
    LatticeSum s = shell_sum([&](std::int64_t sh) { return fourier_shell(sh, m, l, r, zw, w, wp, n_max); }, c2, wp);
    return (s.value * BigComplex(BigReal(wp), pi(wp) * 2L)).with_precision(cfg.prec);
}

BigComplex F_script_direct(int m, int l, int r, const BigComplex& zz, const BigComplex& z,
                           const LatticeSumConfig& cfg) {
    check_params(m, l, r);
    const Prec wp = cfg.prec + kGuard;
    BigComplex total(wp);
    const BigReal three_over_pi = BigReal(3L, wp) / pi(wp);
    BigComplex e2h = l > 0 ? e2hat_at(zz.with_precision(wp), wp) : BigComplex(wp);
    for (int j = 0; j <= l; ++j) {
        BigComplex h = H_direct(m - 2 * j, l - j, r, zz, z, cfg).with_precision(wp);
        BigComplex coef(binom(l, j, wp) * pow(three_over_pi, l - j));
        if (j > 0) coef *= pow(e2h, j);
        total += coef * h;
    }
    return total.with_precision(cfg.prec);
}

std::vector<SamplePoint> default_sample_points(Prec prec) {
    auto P = [&](long a, long b, long c, long d, long e, long f, long g, long h) {
        return SamplePoint{BigComplex::from_rationals(mpq_class(a, b), mpq_class(c, d), prec),
                           BigComplex::from_rationals(mpq_class(e, f), mpq_class(g, h), prec)};
    };
    return {
        P(1, 5, 6, 5, 1, 7, 2, 1),
        P(-1, 4, 11, 10, 2, 9, 7, 4),
        P(3, 10, 13, 10, -1, 3, 5, 2),
    };
}

namespace {

struct IdentitySpec {
    std::function<BigReal(const SamplePoint&, const LatticeSumConfig&)> residual;
};

BigComplex eval_e(int weight, const BigComplex& z, Prec p) {
    return eval_form([weight](int n) { return eisenstein(weight, n); }, z, p).value;
}

std::map<std::string, IdentitySpec> build_catalog() {
    std::map<std::string, IdentitySpec> cat;
    for (int m : {6, 8, 10, 14}) {
        cat["cor_htildegen_1_m" + std::to_string(m)] = {[m](const SamplePoint& s, const LatticeSumConfig& cfg) {
            Prec p = cfg.prec + kGuard;
            BigReal k = pi(p) / 3L;
            BigComplex lhs = H_direct(m, 1, 0, s.zz, s.z, cfg);
            BigComplex rhs = eval_e(2, s.z, p) * H_direct(m, 0, 0, s.zz, s.z, cfg) * k -
                             e2hat_at(s.zz, p) * H_direct(m - 2, 0, 0, s.zz, s.z, cfg) * k;
            return (lhs - rhs).abs();
        }};
        cat["cor_htildegen_2_m" + std::to_string(m)] = {[m](const SamplePoint& s, const LatticeSumConfig& cfg) {
            Prec p = cfg.prec + kGuard;
            BigComplex e2 = eval_e(2, s.z, p), e4 = eval_e(4, s.z, p);
            BigComplex lhs = e2 * H_direct(m, 0, 1, s.zz, s.z, cfg);
            BigComplex ramanujan = (e2 * e2 - e4) * BigComplex(BigReal(p), pi(p) / 6L);
            BigComplex rhs = H_direct(m, 1, 1, s.zz, s.z, cfg) * (BigReal(3L, p) / pi(p)) +
                             e2hat_at(s.zz, p) * H_direct(m - 2, 0, 1, s.zz, s.z, cfg) -
                             ramanujan * H_direct(m, 0, 0, s.zz, s.z, cfg);
            return (lhs - rhs).abs();
        }};
    }
    for (int m : {8, 10, 14}) {
        cat["cor_htildegen_1_sq_m" + std::to_string(m)] = {[m](const SamplePoint& s, const LatticeSumConfig& cfg) {
            Prec p = cfg.prec + kGuard;
            BigReal k = pi(p) / 3L;
            BigComplex e2 = eval_e(2, s.z, p), eh = e2hat_at(s.zz, p);
            BigComplex lhs = H_direct(m, 2, 0, s.zz, s.z, cfg);
            BigComplex rhs = e2 * e2 * H_direct(m, 0, 0, s.zz, s.z, cfg) * (k * k) -
                             eh * H_direct(m - 2, 1, 0, s.zz, s.z, cfg) * (k * 2L) -
                             eh * eh * H_direct(m - 4, 0, 0, s.zz, s.z, cfg) * (k * k);
            return (lhs - rhs).abs();
        }};
    }
    cat["residue_H6"] = {[](const SamplePoint& s, const LatticeSumConfig& cfg) {
        Prec p = cfg.prec + kGuard;
        // symmetric difference: (delta H(z+delta) - delta H(z-delta))/2 = Res + O(delta^2)
        BigReal delta = exp2i(-24, p);
        BigComplex up = s.z + BigComplex(delta), dn = s.z - BigComplex(delta);
        BigComplex res = (H_direct(6, 0, 0, up, s.z, cfg) - H_direct(6, 0, 0, dn, s.z, cfg)) * delta / BigReal(2L, p);
        return (res - BigComplex(BigReal(2L, p))).abs();
    }};
    cat["decay_H12"] = {[](const SamplePoint& s, const LatticeSumConfig& cfg) {
        BigComplex high = BigComplex::from_rationals(0, 10, cfg.prec + kGuard);
        return H_direct(12, 0, 0, high, s.z, cfg).abs();
    }};
    const int tuples[5][3] = {{10, 0, 0}, {10, 1, 0}, {12, 1, 1}, {12, 2, 0}, {14, 0, 2}};
    for (const auto& t : tuples) {
        int m = t[0], l = t[1], r = t[2];
        std::string name = "fourier_direct_m" + std::to_string(m) + "_l" + std::to_string(l) + "_r" + std::to_string(r);
        cat[name] = {[m, l, r](const SamplePoint& s, const LatticeSumConfig& cfg) {
            double ymax = reduce_to_fundamental_domain(s.zz).im().to_double();
            double gap = s.z.im().to_double() - ymax;
            if (gap <= 0) throw DomainError("Fourier comparison needs Im z above the orbit of zz");
            long n_max = static_cast<long>(std::ceil((cfg.prec + 24) * M_LN2 / (2 * M_PI * gap))) + 4;
            BigComplex direct = H_direct(m, l, r, s.zz, s.z, cfg);
            BigComplex fourier = H_fourier(m, l, r, s.zz, s.z, cfg, n_max);
            return (direct - fourier).abs();
        }};
    }
    cat["fmodular_m10_l1"] = {[](const SamplePoint& s, const LatticeSumConfig& cfg) {
        Prec p = cfg.prec + kGuard;
        BigComplex zz = s.zz.with_precision(p);
        BigComplex sz = -(BigComplex(BigReal(1L, p)) / zz);
        BigComplex lhs = F_script_direct(10, 1, 0, sz, s.z, cfg);
        BigComplex rhs = pow(zz, 10) * F_script_direct(10, 1, 0, zz, s.z, cfg);
        return (lhs - rhs).abs();
    }};
    return cat;
}

const std::map<std::string, IdentitySpec>& catalog() {
    static const auto c = build_catalog();
    return c;
}

}  // namespace

std::vector<std::string> identity_catalog() {
    std::vector<std::string> out;
    for (const auto& [name, spec] : catalog()) out.push_back(name);
    return out;
}

bool identity_known(const std::string& name) { return catalog().count(name) > 0; }

std::vector<BigReal> identity_residual(const std::string& name, const std::vector<SamplePoint>& samples,
                                       const LatticeSumConfig& cfg) {
    auto it = catalog().find(name);
    if (it == catalog().end()) throw InvalidArgument("unknown identity '" + name + "'");
    if (samples.empty()) throw InvalidArgument("empty sample list");
    std::vector<BigReal> out;
    for (const auto& s : samples) out.push_back(it->second.residual(s, cfg).with_precision(cfg.prec));
    return out;
}

}  // namespace merocoef

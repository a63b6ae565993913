#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "merocoef/bigfloat.hpp"

namespace merocoef {

struct LatticeSumConfig {
    std::int64_t box_bound = 60;  // max(|c|, |d|)
    Prec prec = 192;
    // Stop early once a full shell contributes less than this (0: never).
    double convergence_threshold = 0;
    unsigned threads = 0;
};

struct LatticeSum {
    BigComplex value;
    std::int64_t shells = 0;  // shells actually summed
    BigReal last_shell;       // |contribution| of the last shell
};

// 2 pi i sum over coprime (c, d) in the box of Im(M zz)^{-l} (c zz + d)^{-m} D_r(z - M zz),
// where D_0(w) = 1/(1 - e(w)) and D_r = d^r/dw^r D_0.
LatticeSum H_direct_sum(int m, int l, int r, const BigComplex& zz, const BigComplex& z, const LatticeSumConfig& cfg);
BigComplex H_direct(int m, int l, int r, const BigComplex& zz, const BigComplex& z, const LatticeSumConfig& cfg);

// The same coset sum expanded in q = e(z): 2 pi i sum_{n <= n_max} q^n sum_{(c,d)}
// (|c zz + d|^2/Im zz)^l (2 pi i n)^r (c zz + d)^{-m} e^{2 pi n Im(zz)/|c zz+d|^2} e(-n Re(M zz)).
// Needs Im z > Im(M zz) for every coset.
BigComplex H_fourier(int m, int l, int r, const BigComplex& zz, const BigComplex& z, const LatticeSumConfig& cfg,
                     long n_max);

// sum_j binom(l, j) (3/pi)^{l-j} E2hat(zz)^j H^{(r)}_{m-2j, l-j}(zz, z)
BigComplex F_script_direct(int m, int l, int r, const BigComplex& zz, const BigComplex& z,
                           const LatticeSumConfig& cfg);

struct SamplePoint {
    BigComplex zz, z;
};

std::vector<SamplePoint> default_sample_points(Prec prec);
std::vector<std::string> identity_catalog();
bool identity_known(const std::string& name);
// |LHS - RHS| of the named identity at each sample point.
std::vector<BigReal> identity_residual(const std::string& name, const std::vector<SamplePoint>& samples,
                                       const LatticeSumConfig& cfg);

}  // namespace merocoef

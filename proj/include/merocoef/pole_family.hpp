#pragma once

#include <cstdint>
#include <vector>

#include "merocoef/bigfloat.hpp"
#include "merocoef/expansions.hpp"

namespace merocoef {

// Data for F(z) = E4 / (Delta (j - j(tau0))^2), a form with a double pole on
// the orbit of tau0.
struct PoleFamilySetup {
    BigComplex tau0;     // as given
    BigComplex reduced;  // SL2(Z)-equivalent point in the standard fundamental domain
    BigComplex j0;
    BigComplex lambda_m2;  // E4 / (Delta j'^2)
    BigComplex lambda_m1;  // -(E4/Delta) j''/j'^3 + (Delta E4' - E4 Delta')/(Delta^2 j'^2)
};

// Distance below which a reduced point counts as elliptic.
constexpr double kEllipticProximity = 1e-6;

BigComplex reduce_to_fundamental_domain(const BigComplex& tau);

// Throws DomainError when tau0 is (numerically) equivalent to i or rho.
PoleFamilySetup pole_family_setup(const BigComplex& tau0, Prec prec);

std::vector<CoefficientValue> pole_family_coefficients(const BigComplex& tau0, long n_from, long n_to,
                                                       std::int64_t cutoff, Prec prec);
CoefficientValue pole_family_coefficient(const BigComplex& tau0, long n, std::int64_t cutoff, Prec prec);

// Coefficients n = 0..order of E4 / (Delta (j - j0)^2) by series arithmetic
// with complex floating coefficients.
std::vector<BigComplex> pole_family_oracle(const BigComplex& tau0, int order, Prec prec);

}  // namespace merocoef

#pragma once

#include <functional>
#include <string>

#include "merocoef/bigfloat.hpp"
#include "merocoef/laurent.hpp"

namespace merocoef {

struct PointEvaluation {
    BigComplex tau;
    std::string form;
    BigComplex value;
    BigReal tail_bound;  // engineering estimate of the truncation error
    int order_used = 0;
};

BigComplex q_of(const BigComplex& tau);

// Horner evaluation of a q-expansion at tau. Throws PrecisionError when the
// estimated truncation error exceeds 2^-prec relative to max(|value|, 1).
PointEvaluation eval_at(const LaurentSeries& s, const BigComplex& tau, Prec prec, std::string form = "");

// sum (2 pi i e)^r a_e q^e, i.e. the r-th derivative in tau.
BigComplex eval_derivative_at(const LaurentSeries& s, int r, const BigComplex& tau, Prec prec);

// Truncation order with |q|^order < 2^-(prec+16).
int required_order(const BigComplex& tau, Prec prec);

// Builds the series at required_order and evaluates, doubling the order while
// the tail estimate is too large (coefficient growth).
PointEvaluation eval_form(const std::function<LaurentSeries(int)>& build, const BigComplex& tau, Prec prec,
                          int r = 0, std::string form = "");

enum class SpecialConstant { E4_at_i, E6_at_rho };

// Closed forms E4(i) = 3 Gamma(1/4)^8 / (2 pi)^6 and
// E6(rho) = 24 sqrt(3) (Gamma(1/3)/Gamma(2/3))^9 / (6 pi)^3.
BigReal special_value(SpecialConstant c, Prec prec);
// Largest precision the stored Gamma constants support.
Prec special_value_max_precision();
// Same constants from the q-series; works at any precision.
BigReal special_value_qseries(SpecialConstant c, Prec prec);
// Closed form when the stored digits suffice, q-series otherwise.
BigReal special_constant(SpecialConstant c, Prec prec);

// E2(tau) - 3/(pi Im tau)
BigComplex e2hat_at(const BigComplex& tau, Prec prec);

BigComplex point_i(Prec prec);
BigComplex point_rho(Prec prec);  // e^{i pi/3}

}  // namespace merocoef

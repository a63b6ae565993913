#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "merocoef/bigfloat.hpp"
#include "merocoef/forms.hpp"
#include "merocoef/ideals.hpp"

namespace merocoef {

struct CoefficientValue {
    long n = 0;
    BigComplex value;
    std::int64_t cutoff = 0;
    BigReal tail_estimate;
    Prec precision_bits = 0;
    std::vector<std::string> warnings;
};

struct SumOptions {
    // Ideals with norm above this are summed in double precision; their terms
    // are far below the requested accuracy, so only their count matters.
    std::int64_t highprec_norm_limit = 65536;
    unsigned threads = 0;  // 0: hardware concurrency
    // Test hook: replace each Bezout pair (a, b) by (a + t c, b + t d).
    std::function<std::int64_t(const PrimitiveIdeal&)> bezout_shift;
    // When > 0, warn if tail_estimate > tolerance * |value|.
    double tolerance = 0;
};

// e(-(n/N)(ac|z|^2 + bd + z1(ad + bc)) - (m/2pi) arg(c z + d)), z the base point.
BigComplex A_value(FieldTag field, std::int64_t c, std::int64_t d, std::int64_t a, std::int64_t b, long n, int m,
                   Prec prec);
// Re(A_k) on the canonical generator; needs 2*omega | k.
BigReal C_value(const PrimitiveIdeal& ideal, long n, int k, Prec prec);
// The single-arctan cosine expressions for C, with the rho case written in the
// (c, d) -> (c, c + d) coordinates of the base point rho^2. Throws DomainError
// where the arctan argument is undefined.
BigReal C_cosine_formula(FieldTag field, std::int64_t c, std::int64_t d, std::int64_t a, std::int64_t b, long n,
                         int k, Prec prec);

// target + 32 guard bits + log2 of the coefficient size e^{2 pi n Im(base)}.
Prec working_precision(FieldTag field, long n, Prec target);

// Upper estimate for the terms with norm > cutoff dropped from F_{k,l,r}(n),
// from the envelope #{ideals of norm <= x} <= rho_F x + 2 sqrt(x) + 1.
BigReal tail_estimate(FieldTag field, int k, int l, int r, long n, std::int64_t cutoff, Prec prec);

// sum over primitive ideals with N <= cutoff of C_k(b,n) n^r e^{2 pi n Im(base)/N} / N^{k/2-l}.
// The imaginary part of `value` is the same sum taken over Im(A); it vanishes
// up to rounding because conjugate ideals pair up.
CoefficientValue F_coefficient(FieldTag field, int k, int l, int r, long n, std::int64_t cutoff, Prec prec,
                               const SumOptions& opts = {});

struct RecipeTerm {
    int k, l, r;
    BigComplex scalar;
};

struct ExpansionRecipe {
    Target target;
    std::string name;
    FieldTag field;
    std::vector<RecipeTerm> terms;  // coefficient(n) = sum scalar * F_{k,l,r}(n)
};

ExpansionRecipe recipe_for(Target t, Prec prec);

CoefficientValue formula_coefficient(Target t, long n, std::int64_t cutoff, Prec prec, const SumOptions& opts = {});
// Shares one pass over the ideals between all n.
std::vector<CoefficientValue> formula_coefficients(Target t, long n_from, long n_to, std::int64_t cutoff, Prec prec,
                                                   const SumOptions& opts = {});

// Coefficient of 1/E4 written as (-1)^n 3/E6(rho) sum h(n)/lambda^3 e^{pi n sqrt3/lambda}
// over classes of ideals up to units and conjugation. `h21` is the value used
// for the norm-3 class; the consistent value is -1.
CoefficientValue beta_via_h(long n, std::int64_t cutoff, Prec prec, std::function<int(long)> h21 = {});

}  // namespace merocoef

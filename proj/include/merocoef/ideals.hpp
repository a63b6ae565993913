#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "merocoef/laurent.hpp"

namespace merocoef {

enum class Field { Gaussian, Eisenstein };

// Base point i (Gaussian integers) or rho = e^{i pi/3} (Eisenstein integers).
struct FieldTag {
    Field kind;

    static FieldTag gaussian() { return {Field::Gaussian}; }
    static FieldTag eisenstein() { return {Field::Eisenstein}; }

    int omega() const { return kind == Field::Gaussian ? 2 : 3; }
    int units() const { return 2 * omega(); }
    // Real part of the base point: 0 or 1/2.
    Rational re_part() const { return kind == Field::Gaussian ? Rational(0) : Rational(1, 2); }
    // Imaginary part squared: 1 or 3/4.
    Rational im_part_sq() const { return kind == Field::Gaussian ? Rational(1) : Rational(3, 4); }
    std::int64_t norm(std::int64_t c, std::int64_t d) const {
        return kind == Field::Gaussian ? c * c + d * d : c * c + c * d + d * d;
    }
    // Multiply the generator c*base + d by the unit i (resp. rho).
    std::pair<std::int64_t, std::int64_t> unit_step(std::int64_t c, std::int64_t d) const {
        if (kind == Field::Gaussian) return {d, -c};
        return {c + d, -c};
    }
    std::string name() const { return kind == Field::Gaussian ? "i" : "rho"; }

    friend bool operator==(FieldTag a, FieldTag b) { return a.kind == b.kind; }
};

struct PrimitiveIdeal {
    FieldTag field;
    std::int64_t c = 0, d = 1;  // generator c*base + d
    std::int64_t norm = 1;
    std::int64_t a = 1, b = 0;  // a*d - b*c == 1

    friend bool operator==(const PrimitiveIdeal& x, const PrimitiveIdeal& y) {
        return x.field == y.field && x.c == y.c && x.d == y.d && x.a == y.a && x.b == y.b;
    }
};

// (g, x, y) with x*p + y*q = g = gcd(p, q) >= 0.
struct ExtGcd {
    std::int64_t g, x, y;
};
ExtGcd ext_gcd(std::int64_t p, std::int64_t q);

// (a, b) with a*d - b*c = 1, reduced so 0 <= a < |c| when c != 0.
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t c, std::int64_t d);

PrimitiveIdeal canonical_rep(FieldTag field, std::int64_t c, std::int64_t d);
PrimitiveIdeal conjugate_ideal(const PrimitiveIdeal& ideal);
// All 2*omega generators of the principal ideal (c*base + d).
std::vector<std::pair<std::int64_t, std::int64_t>> unit_orbit(FieldTag field, std::int64_t c, std::int64_t d);

// One ideal per unit class of coprime (c, d), sorted by norm then (c, d).
std::vector<PrimitiveIdeal> enumerate_primitive_ideals(FieldTag field, std::int64_t norm_bound);

// Calls fn(c, d, norm, a, b) for every canonical coprime pair with
// lo < norm <= hi, in a fixed order (c ascending, then d ascending).
// Used for cutoffs too large to materialize.
template <class Fn>
void for_each_canonical_pair(FieldTag field, std::int64_t lo, std::int64_t hi, Fn&& fn);

}  // namespace merocoef

#include "merocoef/ideals_impl.hpp"

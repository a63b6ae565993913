#include "merocoef/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "merocoef/errors.hpp"

namespace merocoef {

ExtGcd ext_gcd(std::int64_t p, std::int64_t q) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (q != 0) {
        std::int64_t t = p / q;
        std::tie(p, q) = std::make_pair(q, p - t * q);
        std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - t * y1);
    }
    if (p < 0) return {-p, -x0, -y0};
    return {p, x0, y0};
}

std::pair<std::int64_t, std::int64_t> bezout(std::int64_t c, std::int64_t d) {
    ExtGcd e = ext_gcd(d, c);
    if (e.g != 1)
        throw InvalidArgument("(" + std::to_string(c) + ", " + std::to_string(d) + ") is not coprime");
    std::int64_t a = e.x, b = -e.y;  // a*d - b*c = 1
    if (c != 0) {
        std::int64_t m = c < 0 ? -c : c;
        std::int64_t t = a / m;
        if (a - t * m < 0) --t;
        // shift by t*(c, d) with the sign of c folded in
        std::int64_t s = c < 0 ? -t : t;
        a -= s * c;
        b -= s * d;
    } else {
        // d = +-1
        a = d;
        b = 0;
    }
    return {a, b};
}

PrimitiveIdeal canonical_rep(FieldTag field, std::int64_t c, std::int64_t d) {
    if (ext_gcd(c, d).g != 1)
        throw InvalidArgument("(" + std::to_string(c) + ", " + std::to_string(d) + ") is not coprime");
    for (int i = 0; i < field.units(); ++i) {
        if (c >= 0 && d >= 1) break;
        std::tie(c, d) = field.unit_step(c, d);
    }
    PrimitiveIdeal r;
    r.field = field;
    r.c = c;
    r.d = d;
    r.norm = field.norm(c, d);
    std::tie(r.a, r.b) = bezout(c, d);
    return r;
}

PrimitiveIdeal conjugate_ideal(const PrimitiveIdeal& ideal) {
    // conj(c*i + d) = -c*i + d;  conj(c*rho + d) = c*(1 - rho) + d = -c*rho + (c + d)
    if (ideal.field.kind == Field::Gaussian) return canonical_rep(ideal.field, -ideal.c, ideal.d);
    return canonical_rep(ideal.field, -ideal.c, ideal.c + ideal.d);
}

std::vector<std::pair<std::int64_t, std::int64_t>> unit_orbit(FieldTag field, std::int64_t c, std::int64_t d) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (int i = 0; i < field.units(); ++i) {
        out.emplace_back(c, d);
        std::tie(c, d) = field.unit_step(c, d);
    }
    return out;
}

std::vector<PrimitiveIdeal> enumerate_primitive_ideals(FieldTag field, std::int64_t norm_bound) {
    if (norm_bound < 1) throw InvalidArgument("norm_bound must be >= 1");
    std::vector<PrimitiveIdeal> out;
    for_each_canonical_pair(field, 0, norm_bound,
                            [&](std::int64_t c, std::int64_t d, std::int64_t n, std::int64_t a, std::int64_t b) {
                                PrimitiveIdeal p;
                                p.field = field;
                                p.c = c;
                                p.d = d;
                                p.norm = n;
                                p.a = a;
                                p.b = b;
                                out.push_back(p);
                            });
    std::sort(out.begin(), out.end(), [](const PrimitiveIdeal& x, const PrimitiveIdeal& y) {
        return std::tie(x.norm, x.c, x.d) < std::tie(y.norm, y.c, y.d);
    });
    return out;
}

}  // namespace merocoef

#pragma once

// Template bodies for ideals.hpp.

namespace merocoef {

template <class Fn>
void for_each_canonical_pair(FieldTag field, std::int64_t lo, std::int64_t hi, Fn&& fn) {
    // Canonical generators (argument in [0, pi/omega)) are exactly c >= 0, d >= 1.
    for (std::int64_t c = 0; field.norm(c, 1) <= hi; ++c) {
        for (std::int64_t d = 1;; ++d) {
            std::int64_t n = field.norm(c, d);
            if (n > hi) break;
            if (n <= lo) continue;
            ExtGcd e = ext_gcd(d, c);
            if (e.g != 1) continue;
            std::int64_t a = e.x, b = -e.y;
            if (c > 0) {
                std::int64_t t = a / c;
                if (a - t * c < 0) --t;
                a -= t * c;
                b -= t * d;
            }
            fn(c, d, n, a, b);
        }
    }
}

}  // namespace merocoef

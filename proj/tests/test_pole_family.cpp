#include <doctest.h>

#include "merocoef/errors.hpp"
#include "merocoef/pole_family.hpp"
#include "merocoef/report.hpp"

using namespace merocoef;

namespace {

BigReal tiny(int exp10, Prec p) { return pow(BigReal(10L, p), -exp10); }

}  // namespace

TEST_SUITE("pole_family") {
    TEST_CASE("oracle at tau0 = 2i has integer coefficients") {
        const Prec p = 160;
        auto o = pole_family_oracle(BigComplex::from_rationals(0, 2, p), 3, p);
        const long expect[] = {0, 1, 573768, 246831148044L};
        for (int n = 0; n <= 3; ++n) {
            CAPTURE(n);
            CHECK((o[n] - BigComplex(BigReal(expect[n], p))).abs() < tiny(20, p));
        }
    }

    TEST_CASE("formula matches the oracle at 2i") {
        const Prec p = 128;
        BigComplex tau0 = BigComplex::from_rationals(0, 2, p);
        auto vals = pole_family_coefficients(tau0, 0, 4, 1500, p);
        auto o = pole_family_oracle(tau0, 4, p);
        for (const auto& cv : vals) {
            BigReal err = (cv.value - o[cv.n]).abs();
            BigReal mag = o[cv.n].abs();
            CAPTURE(cv.n);
            CHECK((mag.is_zero() ? err : err / mag) < tiny(12, p));
            CHECK(err <= cv.tail_estimate);
        }
    }

    TEST_CASE("equivalent points give the same coefficients") {
        const Prec p = 128;
        BigComplex a = BigComplex::from_rationals(mpq_class(1, 3), mpq_class(9, 5), p);
        // a + 2 is the same point of the modular curve
        BigComplex b = BigComplex::from_rationals(mpq_class(7, 3), mpq_class(9, 5), p);
        auto va = pole_family_coefficients(a, 0, 2, 800, p), vb = pole_family_coefficients(b, 0, 2, 800, p);
        for (std::size_t i = 0; i < va.size(); ++i) CHECK((va[i].value - vb[i].value).abs() < tiny(25, p));
    }

    TEST_CASE("generic point 1/2 + 3i: finite value, matches oracle") {
        const Prec p = 128;
        BigComplex tau0 = BigComplex::from_rationals(mpq_class(1, 2), 3, p);
        CoefficientValue v = pole_family_coefficient(tau0, 0, 500, p);
        CHECK(v.value.re().is_finite());
        CHECK(v.value.abs() < tiny(8, p));
        auto vals = pole_family_coefficients(tau0, 1, 3, 800, p);
        auto o = pole_family_oracle(tau0, 3, p);
        for (const auto& cv : vals) CHECK((cv.value - o[cv.n]).abs() / o[cv.n].abs() < tiny(10, p));
    }

    TEST_CASE("reduction to the fundamental domain") {
        const Prec p = 128;
        BigComplex t = BigComplex::from_rationals(mpq_class(3, 7), mpq_class(1, 10), p);
        BigComplex r = reduce_to_fundamental_domain(t);
        CHECK(r.norm() >= BigReal(1L, p) - tiny(30, p));
        CHECK(abs(r.re()) <= BigReal(mpq_class(1, 2), p));
        CHECK_THROWS_AS(reduce_to_fundamental_domain(BigComplex::from_rationals(0, -1, p)), DomainError);
    }

    TEST_CASE("refusal near elliptic points") {
        const Prec p = 128;
        CHECK_THROWS_AS(pole_family_setup(parse_point("i", p), p), DomainError);
        CHECK_THROWS_AS(pole_family_setup(parse_point("rho", p), p), DomainError);
        // i + 3 and i/1 + ... equivalent to i
        CHECK_THROWS_AS(pole_family_coefficients(parse_point("3+i", p), 0, 2, 100, p), DomainError);
        // -1/(i+1) = (-1 + i)/2 is equivalent to i + 1, hence to i
        CHECK_THROWS_AS(pole_family_coefficients(parse_point("-1/2+1/2i", p), 0, 2, 100, p), DomainError);
        CHECK_THROWS_AS(pole_family_oracle(parse_point("rho", p), 3, p), DomainError);
        CHECK_NOTHROW(pole_family_setup(parse_point("1/100+1i", p), p));
    }
}

#include <doctest.h>

#include "merocoef/errors.hpp"
#include "merocoef/evaluate.hpp"
#include "merocoef/forms.hpp"

using namespace merocoef;

namespace {

BigReal tiny(int exp10, Prec p) { return pow(BigReal(10L, p), -exp10); }

}  // namespace

TEST_SUITE("highprec_numerics") {
    TEST_CASE("decimal formatting") {
        CHECK(BigReal(0L, 64).to_string(10) == "0");
        CHECK(BigReal(mpq_class(1, 8), 64).to_string(10) == "1.25e-1");
        CHECK(BigReal(-240L, 64).to_string(10) == "-2.4e2");
        BigReal third(mpq_class(1, 3), 128);
        CHECK(third.to_string(5) == "3.3333e-1");
        CHECK(BigReal::from_string("2.5", 64) == BigReal(mpq_class(5, 2), 64));
        CHECK(BigReal(mpq_class(7, 2), 64).round_to_integer() == 4);
        CHECK(decimal_digits_for(256) >= 77);
    }

    TEST_CASE("complex arithmetic basics") {
        const Prec p = 128;
        BigComplex i = BigComplex::i(p);
        BigComplex m1 = i * i;
        CHECK(m1.re() == BigReal(-1L, p));
        CHECK(m1.im().is_zero());
        BigComplex z = BigComplex::from_rationals(mpq_class(3), mpq_class(4), p);
        CHECK(z.abs() == BigReal(5L, p));
        CHECK(z.norm() == BigReal(25L, p));
        BigComplex w = z / z;
        CHECK((w - BigComplex(BigReal(1L, p))).abs() < tiny(35, p));
        // e^{i pi} = -1
        BigComplex e = exp(BigComplex(BigReal(p), pi(p)));
        CHECK((e + BigComplex(BigReal(1L, p))).abs() < tiny(35, p));
        CHECK((pow(z, -2) * pow(z, 2) - BigComplex(BigReal(1L, p))).abs() < tiny(35, p));
    }

    TEST_CASE("j(2i) = 287496 from the q-series") {
        const Prec p = 128;
        BigComplex tau = BigComplex::from_rationals(0, 2, p);
        LaurentSeries j = delta_and_j(required_order(tau, p) + 8).second;
        PointEvaluation ev = eval_at(j, tau, p, "j");
        CHECK(ev.value.re().round_to_integer() == 287496);
        BigReal err = (ev.value - BigComplex(BigReal(287496L, p))).abs();
        CHECK(err <= max(ev.tail_bound, tiny(25, p)));
        CHECK(abs(ev.value.im()) < tiny(25, p));
    }

    TEST_CASE("j(i) = 1728 and E6(i) = 0") {
        const Prec p = 160;
        BigComplex i = point_i(p);
        auto J = [](int n) { return delta_and_j(n).second; };
        auto E6 = [](int n) { return eisenstein(6, n); };
        CHECK((eval_form(J, i, p).value - BigComplex(BigReal(1728L, p))).abs() < tiny(30, p));
        CHECK(eval_form(E6, i, p).value.abs() < tiny(40, p));
        CHECK(eval_form([](int n) { return eisenstein(4, n); }, point_rho(p), p).value.abs() < tiny(40, p));
    }

    TEST_CASE("closed-form special values agree with the q-series to 1e-40") {
        for (Prec p : {200, 256, 320}) {
            CAPTURE(p);
            for (auto c : {SpecialConstant::E4_at_i, SpecialConstant::E6_at_rho}) {
                BigReal closed = special_value(c, p), series = special_value_qseries(c, p);
                CHECK(abs(closed - series) < tiny(40, p));
            }
        }
        CHECK(abs(special_value(SpecialConstant::E4_at_i, 200) -
                  BigReal::from_string("1.4557628922687093224624220035988692874323945855282", 200)) < tiny(45, 200));
        CHECK(abs(special_value(SpecialConstant::E6_at_rho, 200) -
                  BigReal::from_string("2.8815411007909456230708348069682397134569209169267", 200)) < tiny(45, 200));
        CHECK_THROWS_AS(special_value(SpecialConstant::E4_at_i, special_value_max_precision() + 1), PrecisionError);
        // beyond the stored digits the dispatcher falls back to the series
        Prec hi = special_value_max_precision() + 40;
        CHECK(abs(special_constant(SpecialConstant::E4_at_i, hi) - special_value_qseries(SpecialConstant::E4_at_i, hi)) <
              tiny(100, hi));
    }

    TEST_CASE("E2hat vanishes at i and rho") {
        const Prec p = 200;
        CHECK(e2hat_at(point_i(p), p).abs() < tiny(30, p));
        CHECK(e2hat_at(point_rho(p), p).abs() < tiny(30, p));
        // but not at a generic point
        CHECK(e2hat_at(BigComplex::from_rationals(mpq_class(1, 5), mpq_class(6, 5), p), p).abs() > tiny(3, p));
    }

    TEST_CASE("E2hat transforms with weight 2 under S") {
        const Prec p = 160;
        BigComplex t = BigComplex::from_rationals(mpq_class(1, 7), mpq_class(9, 8), p);
        BigComplex st = -(BigComplex(BigReal(1L, p)) / t);
        BigComplex lhs = e2hat_at(st, p), rhs = e2hat_at(t, p) * t * t;
        CHECK((lhs - rhs).abs() < tiny(35, p));
    }

    TEST_CASE("precision monotonicity") {
        BigComplex tau = BigComplex::from_rationals(mpq_class(1, 3), mpq_class(5, 4), 256);
        auto E4 = [](int n) { return eisenstein(4, n); };
        PointEvaluation lo = eval_form(E4, tau, 96), hi = eval_form(E4, tau, 256);
        CHECK((lo.value - hi.value).abs() <= max(lo.tail_bound, pow(BigReal(2L, 256), -90)));
    }

    TEST_CASE("derivatives match Ramanujan's identities pointwise") {
        const Prec p = 160;
        BigComplex tau = BigComplex::from_rationals(mpq_class(-1, 4), mpq_class(11, 10), p);
        int ord = required_order(tau, p) + 4;
        LaurentSeries e2 = eisenstein(2, ord), e4 = eisenstein(4, ord), e6 = eisenstein(6, ord);
        BigComplex d4 = eval_derivative_at(e4, 1, tau, p);
        BigComplex v2 = eval_at(e2, tau, p).value, v4 = eval_at(e4, tau, p).value, v6 = eval_at(e6, tau, p).value;
        // E4' = 2 pi i (E2 E4 - E6)/3
        BigComplex rhs = (v2 * v4 - v6) * BigComplex(BigReal(p), pi(p) * 2L) / BigReal(3L, p);
        CHECK((d4 - rhs).abs() < tiny(35, p));
    }

    TEST_CASE("points outside the upper half plane are refused") {
        BigComplex bad = BigComplex::from_rationals(0, -1, 64);
        CHECK_THROWS(eval_at(eisenstein(4, 10), bad, 64));
    }
}

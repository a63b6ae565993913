#include <doctest.h>

#include "merocoef/errors.hpp"
#include "merocoef/evaluate.hpp"
#include "merocoef/poincare.hpp"

using namespace merocoef;

namespace {

BigReal tiny(int exp10, Prec p) { return pow(BigReal(10L, p), -exp10); }

LatticeSumConfig small_box(std::int64_t box = 24) {
    LatticeSumConfig c;
    c.box_bound = box;
    c.prec = 128;
    return c;
}

}  // namespace

TEST_SUITE("poincare_lattice") {
    TEST_CASE("catalog contents") {
        auto names = identity_catalog();
        CHECK(names.size() >= 19);
        CHECK(identity_known("cor_htildegen_1_m8"));
        CHECK(identity_known("cor_htildegen_2_m14"));
        CHECK(identity_known("residue_H6"));
        CHECK_FALSE(identity_known("cor_htildegen_1_m12"));
        CHECK_THROWS_AS(identity_residual("nope", default_sample_points(128), small_box()), InvalidArgument);
        CHECK_THROWS_AS(identity_residual("residue_H6", {}, small_box()), InvalidArgument);
    }

    TEST_CASE("parameter validation") {
        auto s = default_sample_points(128).front();
        CHECK_THROWS_AS(H_direct(7, 0, 0, s.zz, s.z, small_box()), InvalidArgument);
        CHECK_THROWS_AS(H_direct(6, 2, 0, s.zz, s.z, small_box()), DomainError);
        CHECK_THROWS_AS(H_direct(10, 0, 3, s.zz, s.z, small_box()), InvalidArgument);
        LatticeSumConfig bad = small_box();
        bad.box_bound = 1;
        CHECK_THROWS_AS(H_direct(10, 0, 0, s.zz, s.z, bad), InvalidArgument);
        // z on the orbit of zz
        CHECK_THROWS_AS(H_direct(10, 0, 0, s.zz, s.zz, small_box()), DomainError);
    }

    TEST_CASE("Fourier expansion agrees with the direct sum") {
        auto samples = default_sample_points(160);
        const int tuples[5][3] = {{10, 0, 0}, {10, 1, 0}, {12, 1, 1}, {12, 2, 0}, {14, 0, 2}};
        for (const auto& t : tuples) {
            auto s = samples[0];
            BigComplex d = H_direct(t[0], t[1], t[2], s.zz, s.z, small_box(16));
            BigComplex f = H_fourier(t[0], t[1], t[2], s.zz, s.z, small_box(16), 60);
            CAPTURE(t[0]);
            CHECK((d - f).abs() < tiny(25, 128));
        }
    }

    TEST_CASE("H is modular of weight m in zz") {
        const Prec p = 160;
        auto s = default_sample_points(p)[1];
        BigComplex zz = s.zz, one(BigReal(1L, p));
        // translation invariance, and S: H(-1/zz) = zz^m H(zz)
        LatticeSumConfig cfg = small_box(40);
        BigComplex h = H_direct(14, 0, 0, zz, s.z, cfg);
        BigComplex ht = H_direct(14, 0, 0, zz + one, s.z, cfg);
        CHECK((h - ht).abs() < tiny(12, 128));
        BigComplex hs = H_direct(14, 0, 0, -(one / zz), s.z, cfg);
        CHECK((hs - pow(zz, 14) * h).abs() < tiny(12, 128));
    }

    TEST_CASE("identity residuals shrink with the box") {
        auto samples = default_sample_points(160);
        std::vector<SamplePoint> one{samples[0]};
        BigReal r20 = identity_residual("cor_htildegen_1_m14", one, small_box(20))[0];
        BigReal r40 = identity_residual("cor_htildegen_1_m14", one, small_box(40))[0];
        CHECK(r40 < r20);
        CHECK(r40 < tiny(17, 128));
        CHECK(identity_residual("cor_htildegen_2_m14", one, small_box(40))[0] < tiny(18, 128));
        CHECK(identity_residual("cor_htildegen_1_sq_m14", one, small_box(40))[0] < tiny(12, 128));
    }

    TEST_CASE("residue, decay and modularity of the E2 completion") {
        std::vector<SamplePoint> one{default_sample_points(160)[0]};
        CHECK(identity_residual("residue_H6", one, small_box(30))[0] < tiny(10, 128));
        CHECK(identity_residual("decay_H12", one, small_box(20))[0] < tiny(6, 128));
        CHECK(identity_residual("fmodular_m10_l1", one, small_box(30))[0] < tiny(9, 128));
    }

    TEST_CASE("threshold mode stops early and stays close") {
        auto s = default_sample_points(128)[2];
        LatticeSumConfig full = small_box(80), early = small_box(80);
        early.convergence_threshold = 1e-30;
        LatticeSum a = H_direct_sum(14, 0, 0, s.zz, s.z, full);
        LatticeSum b = H_direct_sum(14, 0, 0, s.zz, s.z, early);
        CHECK(b.shells <= a.shells);
        CHECK((a.value - b.value).abs() < tiny(20, 128));
    }

    TEST_CASE("parallel shells are deterministic") {
        auto s = default_sample_points(128)[0];
        LatticeSumConfig a = small_box(20), b = small_box(20);
        a.threads = 1;
        b.threads = 3;
        BigComplex x = H_direct(10, 1, 1, s.zz, s.z, a), y = H_direct(10, 1, 1, s.zz, s.z, b);
        CHECK(x.re() == y.re());
        CHECK(x.im() == y.im());
    }
}

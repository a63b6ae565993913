#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "merocoef/errors.hpp"
#include "merocoef/ideals.hpp"

using namespace merocoef;

namespace {

// Roots of the minimal polynomial of the base point mod N; each root is one
// primitive ideal of norm N.
int root_count(FieldTag f, std::int64_t N) {
    int count = 0;
    for (std::int64_t t = 0; t < N; ++t) {
        std::int64_t v = f.kind == Field::Gaussian ? t * t + 1 : t * t - t + 1;
        if (v % N == 0) ++count;
    }
    return count;
}

std::vector<std::int64_t> norms(const std::vector<PrimitiveIdeal>& ids) {
    std::vector<std::int64_t> out;
    for (const auto& p : ids) out.push_back(p.norm);
    return out;
}

}  // namespace

TEST_SUITE("quadratic_ideals") {
    TEST_CASE("extended gcd and bezout") {
        auto e = ext_gcd(240, 46);
        CHECK(e.g == 2);
        CHECK(e.x * 240 + e.y * 46 == 2);
        CHECK(ext_gcd(-3, 0).g == 3);
        auto [a, b] = bezout(3, 5);
        CHECK(a * 5 - b * 3 == 1);
        CHECK(a >= 0);
        CHECK(a < 3);
        auto [a0, b0] = bezout(0, 1);
        CHECK(a0 == 1);
        CHECK(b0 == 0);
        CHECK_THROWS_AS(bezout(2, 4), InvalidArgument);
        CHECK_THROWS_AS(canonical_rep(FieldTag::gaussian(), 3, 6), InvalidArgument);
    }

    TEST_CASE("gaussian ideals of norm <= 5") {
        auto ids = enumerate_primitive_ideals(FieldTag::gaussian(), 5);
        CHECK(norms(ids) == std::vector<std::int64_t>{1, 2, 5, 5});
        CHECK(ids[0].c == 0);
        CHECK(ids[0].d == 1);
        CHECK(ids[1].c == 1);
        CHECK(ids[1].d == 1);
    }

    TEST_CASE("eisenstein ideal norms through 50") {
        auto ids = enumerate_primitive_ideals(FieldTag::eisenstein(), 50);
        std::vector<std::int64_t> expect{1, 3, 7, 7, 13, 13, 19, 19, 21, 21, 31, 31, 37, 37, 39, 39, 43, 43, 49, 49};
        CHECK(norms(ids) == expect);
    }

    TEST_CASE("enumeration agrees with a brute-force count for N <= 500") {
        for (FieldTag f : {FieldTag::gaussian(), FieldTag::eisenstein()}) {
            CAPTURE(f.name());
            std::map<std::int64_t, int> got;
            for (const auto& p : enumerate_primitive_ideals(f, 500)) {
                CHECK(p.c >= 0);
                CHECK(p.d >= 1);
                CHECK(p.a * p.d - p.b * p.c == 1);
                CHECK(f.norm(p.c, p.d) == p.norm);
                ++got[p.norm];
            }
            // all coprime lattice points, divided by the number of units
            std::map<std::int64_t, int> pts;
            for (std::int64_t c = -30; c <= 30; ++c)
                for (std::int64_t d = -30; d <= 30; ++d) {
                    std::int64_t n = f.norm(c, d);
                    if (n >= 1 && n <= 500 && ext_gcd(c, d).g == 1) ++pts[n];
                }
            for (std::int64_t N = 1; N <= 500; ++N) {
                CAPTURE(N);
                CHECK(got[N] * f.units() == pts[N]);
                CHECK(got[N] == root_count(f, N));
            }
        }
    }

    TEST_CASE("enumeration is sorted and free of duplicates") {
        for (FieldTag f : {FieldTag::gaussian(), FieldTag::eisenstein()}) {
            auto ids = enumerate_primitive_ideals(f, 2000);
            std::set<std::pair<std::int64_t, std::int64_t>> seen;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                CHECK(seen.insert({ids[i].c, ids[i].d}).second);
                if (i > 0) CHECK(std::tie(ids[i - 1].norm, ids[i - 1].c, ids[i - 1].d) <
                                 std::tie(ids[i].norm, ids[i].c, ids[i].d));
            }
        }
    }

    TEST_CASE("canonical representative is unit invariant") {
        for (FieldTag f : {FieldTag::gaussian(), FieldTag::eisenstein()}) {
            for (const auto& p : enumerate_primitive_ideals(f, 300)) {
                auto orbit = unit_orbit(f, p.c, p.d);
                CHECK(orbit.size() == static_cast<std::size_t>(f.units()));
                for (auto [c, d] : orbit) {
                    PrimitiveIdeal q = canonical_rep(f, c, d);
                    CHECK(q.c == p.c);
                    CHECK(q.d == p.d);
                }
            }
        }
    }

    TEST_CASE("conjugation is an involution preserving the norm") {
        for (FieldTag f : {FieldTag::gaussian(), FieldTag::eisenstein()}) {
            for (const auto& p : enumerate_primitive_ideals(f, 300)) {
                PrimitiveIdeal cj = conjugate_ideal(p);
                CHECK(cj.norm == p.norm);
                CHECK(conjugate_ideal(cj) == p);
            }
            // norm-1 and the ramified prime are self-conjugate
            auto ids = enumerate_primitive_ideals(f, f.kind == Field::Gaussian ? 2 : 3);
            for (const auto& p : ids) CHECK(conjugate_ideal(p) == p);
        }
    }

    TEST_CASE("property: randomized bezout pairs") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
        int checked = 0;
        while (checked < 2000) {
            std::int64_t c = dist(rng), d = dist(rng);
            if (ext_gcd(c, d).g != 1) continue;
            auto [a, b] = bezout(c, d);
            CHECK(a * d - b * c == 1);
            if (c != 0) {
                CHECK(a >= 0);
                CHECK(a < (c < 0 ? -c : c));
            }
            ++checked;
        }
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "farey/tilings.hpp"
#include "fixtures.hpp"
#include "gen.hpp"

using farey::FareyPath;
using farey::Int;
using farey::Rat;
using farey::Sign;
using farey::TamenessParams;
using farey::Tiling;

namespace {

Tiling from_rows(std::int64_t rb, std::int64_t cb,
                 std::initializer_list<std::initializer_list<long long>> rows) {
    Tiling t(rb, cb, rows.size(), rows.begin()->size());
    std::int64_t i = rb;
    for (const auto& row : rows) {
        std::int64_t j = cb;
        for (long long x : row) t.at(i, j++) = x;
        ++i;
    }
    return t;
}

struct RandomConstruction {
    Int k, l;
    FareyPath gamma, delta;
    Tiling tiling;
};

RandomConstruction random_construction(gen::Rng& rng, long long kmax = 3, long long lmax = 4,
                                       long long level_max = 4, long long dim_max = 8) {
    Int k = gen::pick_int(rng, 1, kmax);
    Int l = gen::pick_int(rng, 1, lmax);
    if (gen::pick(rng, 0, 1) == 1) l = -l;
    Int r = gen::pick_int(rng, 1, level_max);
    Int s = gen::pick_int(rng, 1, level_max);
    auto gamma = gen::random_minimal_path(rng, r, static_cast<std::size_t>(gen::pick(rng, 3, dim_max)));
    auto delta = gen::random_minimal_path(rng, s, static_cast<std::size_t>(gen::pick(rng, 3, dim_max)));
    return {k, l, gamma, delta, farey::construct_tiling(k, l, gamma, delta)};
}

}  // namespace

TEST_CASE("verify_n_tiling") {
    CHECK(farey::verify_n_tiling(fixtures::tame9()) == 9);
    auto slice = farey::cross_section(fixtures::hyper555(), 0, 0);
    CHECK(farey::verify_n_tiling(slice) == 15);
    auto ones = from_rows(0, 0, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    CHECK(farey::verify_n_tiling(ones) == 0);
    auto broken = fixtures::tame9();
    broken.at(0, 0) += 1;
    CHECK_THROWS_AS(farey::verify_n_tiling(broken), farey::validation_error);
}

TEST_CASE("tameness") {
    CHECK(farey::is_tame(fixtures::tame9()));
    auto not_tame0 = from_rows(-1, -1, {{1, 0, 1}, {0, 0, 0}, {1, 0, 1}});
    CHECK_FALSE(farey::is_tame(not_tame0));
    auto tame0 = from_rows(-1, -1, {{2, 0, -2}, {0, 0, 0}, {-2, 0, 2}});
    CHECK(farey::is_tame(tame0));
    auto z = farey::analyze_zero_tiling(tame0);
    CHECK(z.tame);
    CHECK(z.k == 2);
    CHECK(z.r == 1);
    CHECK(z.s == 1);
}

TEST_CASE("tameness parameters") {
    CHECK(farey::tameness_parameters(fixtures::tame9()) == TamenessParams{1, 3, 1, 3});
    auto sl2 = from_rows(-1, -1, {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    CHECK(farey::tameness_parameters(sl2) == TamenessParams{1, 1, 1, 1});
    auto tame0 = from_rows(-1, -1, {{2, 0, -2}, {0, 0, 0}, {-2, 0, 2}});
    CHECK(farey::tameness_parameters(tame0) == TamenessParams{2, 0, 1, 1});
}

TEST_CASE("recurrence coefficients of the 9-tiling") {
    auto rc = farey::recurrence_coefficients(fixtures::tame9());
    // Column coefficient at index -2: (67 + 29) / 144.
    CHECK(rc.col_base == -2);
    CHECK(rc.s[0] == farey::make_rat(Int(2), Int(3)));
    // By symmetry of the fixture the row coefficients match the transpose.
    CHECK(rc.r.size() == 5);
    CHECK(rc.s.size() == 5);
}

TEST_CASE("recurrence coefficients equal the path itineraries") {
    gen::Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        auto rc = random_construction(rng);
        auto coeffs = farey::recurrence_coefficients(rc.tiling);
        CHECK(coeffs.r == farey::itinerary(rc.gamma).values);
        CHECK(coeffs.s == farey::itinerary(rc.delta).values);
    }
}

TEST_CASE("construction of the 9-tiling from its path pair") {
    auto t = farey::construct_tiling(Int(1), Int(3), fixtures::path_w1(), fixtures::path_w3());
    CHECK(t == fixtures::tame9());
    CHECK(t.at(-3, -3) == 67);  // 10*4 - 3*(-3)*3
}

TEST_CASE("construction of the trivial SL2-tiling") {
    FareyPath tiny{1, -1, {{1, 0}, {0, 1}, {-1, 0}}};
    auto t = farey::construct_tiling(Int(1), Int(1), tiny, tiny);
    CHECK(t == from_rows(-1, -1, {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
}

TEST_CASE("construction rejects non-minimal paths") {
    FareyPath nonmin{2, -1, {{1, 0}, {0, 2}, {-1, 2}}};
    FareyPath fine{1, -1, {{1, 0}, {0, 1}, {-1, 0}}};
    CHECK_THROWS_AS(farey::construct_tiling(Int(1), Int(1), nonmin, fine),
                    farey::validation_error);
}

TEST_CASE("construction is constant on Gamma_0(L) orbits") {
    gen::Rng rng(32);
    for (int it = 0; it < 40; ++it) {
        auto rc = random_construction(rng);
        // Random word in the generators of Gamma_0(L); the companion acts
        // on the column path with the signed L.
        farey::Mat2 a = farey::Mat2::identity();
        for (int w = 0; w < 6; ++w) {
            switch (gen::pick(rng, 0, 2)) {
                case 0: a = a * farey::Mat2{1, rc.l, 0, 1}; break;
                case 1: a = a * farey::Mat2{1, 0, 1, 1}; break;
                default: a = a * -farey::Mat2::identity(); break;
            }
        }
        REQUIRE(a.b % rc.l == 0);
        farey::Mat2 b{a.a, a.b / rc.l, a.c * rc.l, a.d};
        auto gamma2 = farey::apply_sl2(a, rc.gamma);
        auto delta2 = farey::apply_sl2(b, rc.delta);
        CHECK(farey::construct_tiling(rc.k, rc.l, gamma2, delta2) == rc.tiling);
    }
}

TEST_CASE("decomposition of the 9-tiling") {
    auto dec = farey::decompose_tiling(fixtures::tame9());
    CHECK(dec.k == 1);
    CHECK(dec.l == 3);
    CHECK(dec.gamma.level == 1);
    CHECK(dec.delta.level == 3);
    CHECK(farey::construct_tiling(dec.k, dec.l, dec.gamma, dec.delta) == fixtures::tame9());
    // The recovered pair sits in the Gamma_0(3) orbit of the original pair:
    // canonical forms agree path-wise.
    CHECK(farey::canonicalize_minimal(dec.gamma).path ==
          farey::canonicalize_minimal(fixtures::path_w1()).path);
    CHECK(farey::canonicalize_minimal(dec.delta).path ==
          farey::canonicalize_minimal(fixtures::path_w3()).path);
}

TEST_CASE("decomposition of the trivial SL2-tiling") {
    auto sl2 = from_rows(-1, -1, {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    auto dec = farey::decompose_tiling(sl2);
    CHECK(dec.k == 1);
    CHECK(dec.l == 1);
    FareyPath tiny{1, -1, {{1, 0}, {0, 1}, {-1, 0}}};
    CHECK(farey::canonicalize_minimal(dec.gamma).path ==
          farey::canonicalize_minimal(tiny).path);
}

TEST_CASE("decompose-construct round trip on random tilings") {
    gen::Rng rng(33);
    for (int it = 0; it < 60; ++it) {
        auto rc = random_construction(rng);
        auto dec = farey::decompose_tiling(rc.tiling);
        CHECK(dec.k == rc.k);
        CHECK(dec.l == rc.l);
        CHECK(dec.gamma.level == rc.gamma.level);
        CHECK(dec.delta.level == rc.delta.level);
        CHECK(farey::construct_tiling(dec.k, dec.l, dec.gamma, dec.delta) == rc.tiling);
        CHECK(farey::canonicalize_minimal(dec.gamma).path ==
              farey::canonicalize_minimal(rc.gamma).path);
        CHECK(farey::canonicalize_minimal(dec.delta).path ==
              farey::canonicalize_minimal(rc.delta).path);
    }
}

TEST_CASE("minor constancy and the product identity") {
    auto t = fixtures::tame9();
    // Minors from two consecutive rows do not depend on the row.
    for (std::int64_t j = -3; j <= 3; ++j)
        for (std::int64_t j2 = j + 1; j2 <= 3; ++j2) {
            Int ref = t.at(-3, j) * t.at(-2, j2) - t.at(-3, j2) * t.at(-2, j);
            for (std::int64_t i = -3; i + 1 <= 3; ++i)
                CHECK(t.at(i, j) * t.at(i + 1, j2) - t.at(i, j2) * t.at(i + 1, j) == ref);
        }
    // N * D(i,i'; j,j') = D(i,i+1; j,j') * D(i,i'; j,j+1).
    auto minor = [&](std::int64_t i, std::int64_t i2, std::int64_t j, std::int64_t j2) {
        return t.at(i, j) * t.at(i2, j2) - t.at(i, j2) * t.at(i2, j);
    };
    for (std::int64_t i = -3; i <= 3; ++i)
        for (std::int64_t i2 = i + 1; i2 <= 3; ++i2)
            for (std::int64_t j = -3; j <= 3; ++j)
                for (std::int64_t j2 = j + 1; j2 <= 3; ++j2)
                    CHECK(Int(9) * minor(i, i2, j, j2) ==
                          minor(i, i + 1, j, j2) * minor(i, i2, j, j + 1));
}

TEST_CASE("product of the side parameters equals N over the minor gcd") {
    gen::Rng rng(34);
    for (int it = 0; it < 30; ++it) {
        auto rc = random_construction(rng);
        auto params = farey::tameness_parameters(rc.tiling);
        Int minor_gcd = 0;
        const Tiling& t = rc.tiling;
        for (std::int64_t i = t.row_base; i <= t.row_end(); ++i)
            for (std::int64_t i2 = i + 1; i2 <= t.row_end(); ++i2)
                for (std::int64_t j = t.col_base; j <= t.col_end(); ++j)
                    for (std::int64_t j2 = j + 1; j2 <= t.col_end(); ++j2)
                        minor_gcd = farey::gcd_int(
                            minor_gcd,
                            t.at(i, j) * t.at(i2, j2) - t.at(i, j2) * t.at(i2, j));
        CHECK(params.r * params.s * minor_gcd ==
              farey::abs_int(farey::verify_n_tiling(t)));
    }
}

TEST_CASE("positivity agrees between the entry scan and the path test") {
    auto g = fixtures::path_w1();
    auto d = fixtures::path_w3();
    CHECK(farey::classify_sign(fixtures::tame9()) == Sign::positive);
    CHECK(farey::positivity_from_paths(Int(1), Int(3), g, d) == Sign::positive);
    // Negating the column path flips every entry.
    auto dneg = d;
    for (auto& v : dneg.v) v = -v;
    CHECK(farey::positivity_from_paths(Int(1), Int(3), g, dneg) == Sign::negative);
    CHECK(farey::classify_sign(farey::construct_tiling(Int(1), Int(3), g, dneg)) ==
          Sign::negative);
    // A deliberately overlapping pair is mixed.
    CHECK(farey::positivity_from_paths(Int(1), Int(1), g, g) == Sign::mixed);
    CHECK(farey::classify_sign(farey::construct_tiling(Int(1), Int(1), g, g)) == Sign::mixed);
}

TEST_CASE("scaling between N^2-tilings and rational SL2-tilings") {
    auto rt = farey::scale_to_sl2(fixtures::tame9());
    CHECK(rt.denom == 3);
    CHECK(rt.at(-3, -3) == farey::make_rat(Int(67), Int(3)));
    CHECK(rt.at(-3, -2) == Rat(48));
    CHECK(farey::scale_from_sl2(rt) == fixtures::tame9());
    auto one = from_rows(-1, -1, {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
    CHECK(farey::scale_to_sl2(one).denom == 1);
    CHECK_THROWS_AS(farey::scale_to_sl2(farey::cross_section(fixtures::hyper555(), 0, 0)),
                    farey::validation_error);  // N = 15 is not a square
}

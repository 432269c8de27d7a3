#include <catch2/catch_amalgamated.hpp>

#include "farey/farey_graph.hpp"
#include "fixtures.hpp"
#include "gen.hpp"

using farey::ExtRat;
using farey::FareyPath;
using farey::FareyVertex;
using farey::Int;
using farey::Itinerary;
using farey::Mat2;
using farey::Rat;

namespace {

std::vector<Rat> rats(std::initializer_list<std::pair<long long, long long>> xs) {
    std::vector<Rat> out;
    for (auto [n, d] : xs) out.push_back(farey::make_rat(Int(n), Int(d)));
    return out;
}

}  // namespace

TEST_CASE("edges of the generalized Farey graphs") {
    CHECK(farey::is_edge({1, 0}, {0, 1}, Int(1)));
    CHECK(farey::is_edge({3, 4}, {6, 9}, Int(3)));
    CHECK_FALSE(farey::is_edge({1, 0}, {0, 1}, Int(2)));
}

TEST_CASE("path validation") {
    CHECK(farey::validate_path(fixtures::path_w1()).ok);
    CHECK(farey::validate_path(fixtures::path_w3()).ok);
    FareyPath bad{1, -1, {{1, 0}, {0, 1}, {1, 0}}};
    auto rep = farey::validate_path(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.index == 0);  // the pair (0, 1) fails: 0*0 - 1*1 = -1
    FareyPath shifted{1, 5, {{1, 0}, {0, 1}, {-1, 0}}};
    CHECK_FALSE(farey::validate_path(shifted).ok);  // index set misses 0 and 1
}

TEST_CASE("itineraries of the worked paths") {
    // Direct evaluation of the defining formula on the level-1 path.
    Itinerary g = farey::itinerary(fixtures::path_w1());
    CHECK(g.base == -2);
    CHECK(g.values == rats({{2, 1}, {2, 1}, {8, 1}, {2, 1}, {2, 1}}));
    Itinerary d = farey::itinerary(fixtures::path_w3());
    CHECK(d.values == rats({{2, 3}, {6, 1}, {4, 3}, {6, 1}, {2, 3}}));
    FareyPath tiny{1, -1, {{1, 0}, {0, 1}, {-1, 0}}};
    CHECK(farey::itinerary(tiny).values == rats({{0, 1}}));
}

TEST_CASE("itinerary satisfies the three-term recurrence") {
    gen::Rng rng(21);
    for (int it = 0; it < 60; ++it) {
        Int level = gen::pick_int(rng, 1, 6);
        auto p = gen::random_minimal_path(rng, level, static_cast<std::size_t>(gen::pick(rng, 3, 12)));
        Itinerary lam = farey::itinerary(p);
        for (std::int64_t i = p.first_index() + 1; i < p.last_index(); ++i) {
            const Rat& l = lam.values[static_cast<std::size_t>(i - lam.base)];
            CHECK(Rat(p.at(i - 1).a) + Rat(p.at(i + 1).a) == l * Rat(p.at(i).a));
            CHECK(Rat(p.at(i - 1).b) + Rat(p.at(i + 1).b) == l * Rat(p.at(i).b));
        }
    }
}

TEST_CASE("minimality") {
    gen::Rng rng(22);
    for (int it = 0; it < 20; ++it)
        CHECK(farey::is_minimal(gen::random_minimal_path(rng, Int(1), 6)));
    FareyPath nonmin{2, -1, {{1, 0}, {0, 2}, {-1, 2}}};
    CHECK_FALSE(farey::is_minimal(nonmin));
    CHECK(farey::is_minimal(fixtures::path_w3()));
}

TEST_CASE("reconstruction from the itinerary") {
    auto g = fixtures::path_w1();
    CHECK(farey::reconstruct_path(farey::itinerary(g), g.v[0], g.v[1]) == g);

    Itinerary threes{1, 1, rats({{3, 1}, {3, 1}, {3, 1}})};
    FareyPath fib = farey::reconstruct_path(threes, {1, 1}, {1, 2});
    CHECK(fib == FareyPath{1, 0, {{1, 1}, {1, 2}, {2, 5}, {5, 13}, {13, 34}}});

    Itinerary zero{1, 0, rats({{0, 1}})};
    CHECK(farey::reconstruct_path(zero, {1, 0}, {0, 1}) ==
          FareyPath{1, -1, {{1, 0}, {0, 1}, {-1, 0}}});

    Itinerary fractional{1, 0, rats({{1, 2}})};
    CHECK_THROWS_AS(farey::reconstruct_path(fractional, {1, 0}, {0, 1}),
                    farey::validation_error);
}

TEST_CASE("round trip: reconstruct after itinerary") {
    gen::Rng rng(23);
    for (int it = 0; it < 120; ++it) {
        Int level = gen::pick_int(rng, 1, 6);
        auto p = gen::random_minimal_path(rng, level, static_cast<std::size_t>(gen::pick(rng, 3, 12)));
        CHECK(farey::reconstruct_path(farey::itinerary(p), p.v[0], p.v[1]) == p);
    }
}

TEST_CASE("sl2 action preserves the path invariants") {
    auto g = fixtures::path_w1();
    CHECK(farey::apply_sl2(Mat2::identity(), g) == g);
    auto neg = farey::apply_sl2(-Mat2::identity(), g);
    for (std::size_t i = 0; i < g.v.size(); ++i) CHECK(neg.v[i] == -g.v[i]);
    CHECK(farey::itinerary(neg) == farey::itinerary(g));

    gen::Rng rng(24);
    for (int it = 0; it < 100; ++it) {
        Int level = gen::pick_int(rng, 1, 5);
        auto p = gen::random_minimal_path(rng, level, 6);
        Mat2 m = gen::random_sl2(rng);
        auto q = farey::apply_sl2(m, p);
        CHECK(q.level == p.level);
        CHECK(farey::itinerary(q) == farey::itinerary(p));
        CHECK(farey::is_minimal(q) == farey::is_minimal(p));
        for (std::size_t i = 0; i < p.v.size(); ++i)
            for (std::size_t j = i + 1; j < p.v.size(); ++j)
                CHECK(q.v[j].a * q.v[i].b - q.v[j].b * q.v[i].a ==
                      p.v[j].a * p.v[i].b - p.v[j].b * p.v[i].a);
    }
}

TEST_CASE("canonical form of minimal paths") {
    auto g = fixtures::path_w1();
    auto c1 = farey::canonicalize_minimal(g);
    auto c2 = farey::canonicalize_minimal(c1.path);
    CHECK(c2.path == c1.path);  // idempotent
    CHECK(farey::det2(c1.witness) == 1);
    CHECK(farey::apply_sl2(c1.witness, g) == c1.path);

    gen::Rng rng(25);
    for (int it = 0; it < 60; ++it) {
        Int level = gen::pick_int(rng, 1, 5);
        auto p = gen::random_minimal_path(rng, level, 5);
        auto q = farey::apply_sl2(gen::random_sl2(rng), p);
        CHECK(farey::canonicalize_minimal(p).path == farey::canonicalize_minimal(q).path);
    }

    FareyPath nonmin{2, -1, {{1, 0}, {0, 2}, {-1, 2}}};
    CHECK_THROWS_AS(farey::canonicalize_minimal(nonmin), farey::validation_error);
}

TEST_CASE("cyclic order on the extended reals") {
    auto e = [](long long n, long long d) { return farey::make_ext_rat(Int(n), Int(d)); };
    CHECK(farey::cyclic_clockwise(e(-1, 1), e(1, 0), e(1, 1)));
    CHECK(farey::cyclic_clockwise(e(3, 1), e(2, 1), e(1, 1)));
    CHECK_FALSE(farey::cyclic_clockwise(e(1, 1), e(2, 1), e(3, 1)));

    gen::Rng rng(26);
    auto random_point = [&rng]() {
        for (;;) {
            Int n = gen::pick_int(rng, -9, 9), d = gen::pick_int(rng, 0, 5);
            if (n != 0 || d != 0) return farey::make_ext_rat(n, d);
        }
    };
    int seen = 0;
    while (seen < 100) {
        ExtRat p = random_point();
        ExtRat q = random_point();
        ExtRat r = random_point();
        if (p == q || q == r || p == r) continue;
        ++seen;
        bool cw = farey::cyclic_clockwise(p, q, r);
        CHECK(farey::cyclic_clockwise(q, r, p) == cw);  // rotation invariant
        CHECK(farey::cyclic_clockwise(r, p, q) == cw);
        CHECK(farey::cyclic_clockwise(q, p, r) == !cw);  // swap flips
    }
}

TEST_CASE("clockwise paths and compatibility") {
    auto g = fixtures::path_w1();
    auto d3 = farey::scale_path(Int(3), fixtures::path_w3());
    CHECK(farey::is_clockwise_path(g));
    CHECK(farey::is_clockwise_path(d3));
    CHECK(farey::are_compatible(g, d3));
    CHECK_FALSE(farey::are_compatible(g, g));  // overlapping spans
}

TEST_CASE("path scaling") {
    auto d = fixtures::path_w3();
    CHECK(farey::scale_path(Int(1), d) == d);
    auto d3 = farey::scale_path(Int(3), d);
    CHECK(d3.level == 9);
    CHECK(d3.v == std::vector<FareyVertex>{
                      {9, 4}, {18, 9}, {3, 2}, {0, 3}, {-3, 2}, {-18, 9}, {-9, 4}});
    gen::Rng rng(27);
    for (int it = 0; it < 30; ++it) {
        Int level = gen::pick_int(rng, 1, 4);
        Int l = gen::pick_int(rng, 1, 5);
        auto p = gen::random_minimal_path(rng, level, 4);
        CHECK(farey::scale_path(l, p).level == l * level);
        CHECK(farey::validate_path(farey::scale_path(l, p)).ok);
    }
}

TEST_CASE("horocycles and lambda lengths") {
    auto h = farey::horocycle({1, 2});
    CHECK(h.center == farey::make_ext_rat(Int(1), Int(2)));
    CHECK(h.size == farey::make_rat(Int(1), Int(4)));
    auto top = farey::horocycle({3, 0});
    CHECK(top.center.is_infinity());
    CHECK(top.size == Rat(9));

    gen::Rng rng(28);
    for (int it = 0; it < 50; ++it) {
        FareyVertex v{gen::pick_int(rng, -9, 9), gen::pick_int(rng, -9, 9)};
        if (v.a == 0 && v.b == 0) continue;
        CHECK(farey::horocycle(v) == farey::horocycle(-v));
    }
    for (int it = 0; it < 40; ++it) {
        Int level = gen::pick_int(rng, 1, 6);
        auto p = gen::random_minimal_path(rng, level, 4);
        for (std::size_t i = 0; i + 1 < p.v.size(); ++i)
            CHECK(farey::lambda_length(p.v[i], p.v[i + 1]) == level);
    }
}

#include <doctest.h>

#include <random>

#include "csa/error.hpp"
#include "csa/factor.hpp"
#include "csa/integer.hpp"
#include "csa/local_split.hpp"
#include "csa/poly_io.hpp"
#include "oracles.hpp"

using namespace csa;

namespace {
RatPoly P(const char* s) { return parse_poly(s); }
std::vector<LocalFactor> split(const char* p, long prime) { return local_splitting(P(p), Place::finite(prime)).factors; }
using LF = std::vector<LocalFactor>;
}  // namespace

TEST_CASE("places") {
    CHECK(Place::parse("inf").is_infinite());
    CHECK(Place::parse("7").prime() == 7);
    CHECK(Place::parse("2") < Place::parse("3"));
    CHECK(Place::parse("13") < Place::infinite());
    CHECK_THROWS_AS(Place::parse("9"), Error);
    CHECK_THROWS_AS(Place::parse("x"), Error);
    try {
        Place::finite(15);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPrimePlace);
    }
}

TEST_CASE("splitting examples") {
    // t^2+1 = (t-2)(t+2) mod 5 with 5 coprime to the discriminant -4.
    CHECK(split("t^2+1", 5) == LF{{1, 1}, {1, 1}});
    // t -> t+1 gives the Eisenstein polynomial t^2+2t+2 at 2.
    CHECK(split("t^2+1", 2) == LF{{2, 1}});
    CHECK(split("t^2+1", 3) == LF{{1, 2}});
    // t -> t-1 gives t^3-3t^2+3t-3, Eisenstein at 3.
    CHECK(split("t^3-2", 3) == LF{{3, 1}});
    CHECK(split("t^3-2", 2) == LF{{3, 1}});
    CHECK(split("t^3-2", 5) == LF{{1, 1}, {1, 2}});

    auto inf = local_splitting(P("t^2+1"), Place::infinite());
    CHECK(inf.real == 0);
    CHECK(inf.complex == 1);
    auto inf3 = local_splitting(P("t^3-2"), Place::infinite());
    CHECK(inf3.real == 1);
    CHECK(inf3.complex == 1);

    CHECK(local_degrees(P("t^2+1"), Place::finite(2)) == std::vector<int>{2});
    CHECK(local_degrees(P("t^2-2"), Place::infinite()) == std::vector<int>{1, 1});
    CHECK(local_degrees(P("t^2+1"), Place::finite(3)) == std::vector<int>{2});
    CHECK(local_degrees(P("t^3-2"), Place::infinite()) == std::vector<int>{1, 2});
}

TEST_CASE("non-squarefree reductions need the polygon backend") {
    // Q(sqrt(-7)): 2 splits although t^2+7 = (t+1)^2 mod 2; the polygon has two sides.
    CHECK(split("t^2+7", 2) == LF{{1, 1}, {1, 1}});
    // Q(sqrt(-3)) = Q(zeta_3): 2 is inert; t^2+3 needs one refinement of phi.
    CHECK(split("t^2+3", 2) == LF{{1, 2}});
    CHECK(split("t^2+t+1", 2) == LF{{1, 2}});
    // Q(sqrt(3)) = Q(sqrt(12)): ramified at 2 and 3.
    CHECK(split("t^2-12", 2) == LF{{2, 1}});
    CHECK(split("t^2-12", 3) == LF{{2, 1}});
    // Q(sqrt(5)): 2 inert; t^2-5 = (t+1)^2 mod 2.
    CHECK(split("t^2-5", 2) == LF{{1, 2}});
    // Q(sqrt(17)): 2 splits.
    CHECK(split("t^2-17", 2) == LF{{1, 1}, {1, 1}});
    // Rational coefficients are scaled to a monic integral model first.
    CHECK(split("t^2 - 1/4*t + 1/4", 2) == split("t^2 - t + 4", 2));
    // Cyclotomic Q(zeta_8): 2 totally ramified.
    CHECK(split("t^4+1", 2) == LF{{4, 1}});
    // Q(zeta_5): 5 totally ramified, 2 inert.
    CHECK(split("t^4+t^3+t^2+t+1", 5) == LF{{4, 1}});
    CHECK(split("t^4+t^3+t^2+t+1", 2) == LF{{1, 4}});
    CHECK(split("t^4+t^3+t^2+t+1", 11) == LF{{1, 1}, {1, 1}, {1, 1}, {1, 1}});
}

TEST_CASE("splitting preconditions") {
    CHECK_THROWS_AS(local_splitting(P("t^2-1"), Place::finite(2)), Error);
    CHECK_THROWS_AS(local_splitting(P("2*t^2+1"), Place::finite(2)), Error);
    CHECK_THROWS_AS(local_splitting(P("t^2+1"), Place::named("v1")), Error);
}

TEST_CASE("degree conservation and backend agreement") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> deg(1, 6);
    int polygon_cases = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto f = oracle::random_irreducible(rng, deg(rng), 12);
        for (long prime : {2, 3, 5, 7, 11, 13}) {
            auto st = local_splitting(f, Place::finite(prime));
            int total = 0;
            for (const auto& lf : st.factors) total += lf.degree();
            CHECK(total == f.degree());
            if (auto kd = kummer_dedekind_splitting(f, prime)) {
                CHECK(*kd == newton_polygon_splitting(f, prime));
            } else {
                ++polygon_cases;
            }
        }
        auto [r1, r2] = archimedean_signature(f);
        CHECK(r1 + 2 * r2 == f.degree());
    }
    CHECK(polygon_cases > 0);
}

TEST_CASE("cyclotomic fields against the order of p modulo m") {
    for (int m = 3; m <= 60; ++m) {
        RatPoly phi = oracle::cyclotomic(m);
        if (phi.degree() > 16) continue;
        for (int p : {2, 3, 5, 7, 11, 13}) {
            auto want = oracle::cyclotomic_split(m, p);
            auto got = local_splitting(phi, Place::finite(p)).factors;
            INFO("m = " << m << ", p = " << p);
            REQUIRE(static_cast<int>(got.size()) == want.g);
            for (const auto& lf : got) {
                CHECK(lf.e == want.e);
                CHECK(lf.f == want.f);
            }
        }
    }
}

TEST_CASE("splitting depends only on the field") {
    // Charpolys of other generators h(theta) of the same field define the
    // same local extensions, however badly they sit at p.
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> small(-3, 3);
    int compared = 0;
    for (int trial = 0; trial < 160; ++trial) {
        const int n = 2 + trial % 5;
        RatPoly f = oracle::random_irreducible(rng, n, 10);
        std::vector<Rat> hc(n, Rat(0));
        for (auto& c : hc) c = small(rng);
        if (trial % 3 == 0) hc[1] += 4;  // pushes the generator deeper at 2
        RatPoly h(hc);
        if (h.degree() < 1) continue;
        RatPoly g = oracle::element_charpoly(f, h);
        if (!is_irreducible(g)) continue;
        ++compared;
        for (long p : {2, 3, 5, 7}) {
            INFO("f = " << format_poly(f) << ", g = " << format_poly(g) << ", p = " << p);
            CHECK(local_splitting(f, Place::finite(p)) .factors == local_splitting(g, Place::finite(p)).factors);
        }
    }
    CHECK(compared > 100);

    // theta -> p^k theta: Eisenstein-like models with long polygons.
    for (long p : {2, 3}) {
        for (const char* s : {"t^4 + 1", "t^3 - 2", "t^6 + t^3 + 1", "t^4 - 2*t^2 + 9", "t^5 - t - 1"}) {
            RatPoly f = P(s);
            for (int k = 1; k <= 3; ++k) {
                Rat s_k = 1;
                for (int i = 0; i < k; ++i) s_k *= p;
                RatPoly g = oracle::element_charpoly(f, RatPoly({Rat(0), s_k}) + RatPoly::constant(Rat(1)));
                INFO(s << " at " << p << ", k = " << k);
                CHECK(local_splitting(f, Place::finite(p)).factors == local_splitting(g, Place::finite(p)).factors);
            }
        }
    }
}

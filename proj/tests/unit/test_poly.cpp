#include <doctest.h>

#include <random>

#include "csa/error.hpp"
#include "csa/poly.hpp"
#include "csa/poly_io.hpp"

using namespace csa;

namespace {
RatPoly P(const char* s) { return parse_poly(s); }
}

TEST_CASE("rational parsing and normalization") {
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK(parse_rat(" -3 ") == Rat(-3));
    CHECK(to_string(parse_rat("-10/4")) == "-5/2");
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("x"), Error);
    CHECK(mod_one(Rat(-1, 3)) == Rat(2, 3));
    CHECK(mod_one(Rat(5, 2)) == Rat(1, 2));
}

TEST_CASE("ring operations") {
    CHECK(P("t+1") * P("t-1") == P("t^2-1"));
    auto [q, r] = divrem(P("t^2+1"), P("t"));
    CHECK(q == P("t"));
    CHECK(r == P("1"));
    CHECK(P("t^2+1") + RatPoly{} == P("t^2+1"));
    CHECK_THROWS_AS(divrem(P("t"), RatPoly{}), Error);
}

TEST_CASE("divrem reconstruction on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> c(-20, 20), deg(0, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rat> a(deg(rng) + 1), b(deg(rng) + 1);
        for (auto& x : a) x = Rat(c(rng), 1 + std::abs(c(rng)));
        for (auto& x : b) x = Rat(c(rng), 1 + std::abs(c(rng)));
        RatPoly A(a), B(b);
        if (B.is_zero()) continue;
        auto [q, r] = divrem(A, B);
        CHECK(q * B + r == A);
        CHECK(r.degree() < B.degree());
    }
}

TEST_CASE("gcd_monic") {
    CHECK(gcd_monic(P("t^2-1"), P("t^2-2*t+1")) == P("t-1"));
    CHECK(gcd_monic(P("t^2+1"), P("t^2-2")) == P("1"));
    CHECK(gcd_monic(P("2*t^2+2"), RatPoly{}) == P("t^2+1"));
    CHECK_THROWS_AS(gcd_monic(RatPoly{}, RatPoly{}), Error);
}

TEST_CASE("squarefree decomposition") {
    using V = std::vector<SquarefreePart>;
    CHECK(squarefree_decomposition(P("(t-1)^2*(t+2)")) == V{{P("t+2"), 1}, {P("t-1"), 2}});
    CHECK(squarefree_decomposition(P("t^2+1")) == V{{P("t^2+1"), 1}});
    CHECK(squarefree_decomposition(P("(t^2+1)^2*(t-3)^3")) == V{{P("t^2+1"), 2}, {P("t-3"), 3}});
    CHECK_THROWS_AS(squarefree_decomposition(P("2*t+1")), Error);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-5, 5), m(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        RatPoly f = RatPoly::constant(1);
        for (int k = 0; k < 3; ++k) f *= RatPoly({c(rng), c(rng), 1}).pow(m(rng));
        auto parts = squarefree_decomposition(f);
        RatPoly back = RatPoly::constant(1);
        for (const auto& sp : parts) {
            back *= sp.part.pow(sp.multiplicity);
            CHECK(gcd_monic(sp.part, sp.part.derivative()).is_one());
        }
        CHECK(back == f);
    }
}

TEST_CASE("Sturm real-root counts") {
    CHECK(sturm_real_roots(P("t^2+1")) == 0);
    CHECK(sturm_real_roots(P("t^2-2")) == 2);
    CHECK(sturm_real_roots(P("t^3-2")) == 1);
    CHECK(sturm_real_roots(P("(t-1)*(t-2)*(t-3)*(t^2+t+1)")) == 3);
    CHECK(sturm_real_roots(P("-t^3+t")) == 3);
    CHECK_THROWS_AS(sturm_real_roots(RatPoly{}), Error);
}

TEST_CASE("infix parsing and formatting") {
    CHECK(P("t^2 - 2*t + 1") == RatPoly({1, -2, 1}));
    CHECK(P("(t^2+1)^2*(t-2)") == P("t^5 - 2*t^4 + 2*t^3 - 4*t^2 + t - 2"));
    CHECK(P("t/2 + 1/3") == RatPoly(std::vector<Rat>{Rat(1, 3), Rat(1, 2)}));
    CHECK(P("2t") == P("2*t"));
    CHECK(from_coeff_strings({"1", "1/2", "1"}) == P("t^2 + t/2 + 1"));
    CHECK(to_coeff_strings(P("t^2 + t/2 + 1")) == std::vector<std::string>{"1", "1/2", "1"});
    for (const char* s : {"t^3 - 1/2*t + 7", "-t", "0", "t^4 + 1"}) CHECK(P(format_poly(P(s)).c_str()) == P(s));
    try {
        P("t^2 + * 3");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
    }
    CHECK_THROWS_AS(P("t/(t+1)"), Error);
}

TEST_CASE("resultant and discriminant") {
    CHECK(discriminant(parse_poly("t^2+1")) == -4);
    CHECK(discriminant(parse_poly("t^2+t+1")) == -3);
    CHECK(discriminant(parse_poly("t^3-2")) == -108);
    CHECK(discriminant(parse_poly("t^2-2*t+1")) == 0);
    CHECK(discriminant(parse_poly("3*t^2+1")) == -12);
    CHECK(resultant(parse_poly("t-2"), parse_poly("t^2+1")) == 5);
    CHECK(resultant(parse_poly("t^2+1"), parse_poly("t-2")) == 5);
    CHECK(resultant(parse_poly("t^2-1"), parse_poly("t^2-3*t+2")) == 0);
    // res(a, b) = prod over roots of a of b(root) for monic a with rational roots
    CHECK(resultant(parse_poly("(t-1)*(t-3)"), parse_poly("t^3+t+5")) == Rat(7 * 35));
}

#include <doctest.h>

#include <functional>
#include <random>

#include "csa/charpoly.hpp"
#include "csa/error.hpp"
#include "csa/poly_io.hpp"
#include "oracles.hpp"

using namespace csa;

namespace {

RatPoly P(const char* s) { return parse_poly(s); }

CsaSpec matq(long n) {
    CsaSpec s;
    s.capacity = n;
    return s;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Internal;
}

// Random monic f of exact degree `degree` built from irreducibles of degree <= 4.
RatPoly random_product(std::mt19937_64& rng, int degree) {
    RatPoly f = RatPoly::constant(1);
    int left = degree;
    while (left > 0) {
        const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(left, 4)));
        const RatPoly p = oracle::random_irreducible(rng, d, 5);
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(left / d));
        f *= p.pow(static_cast<unsigned>(k));
        left -= d * k;
    }
    return f;
}

}  // namespace

TEST_CASE("characteristic polynomial examples") {
    const auto h = quaternion_to_csa(-1, -1);
    CHECK(is_characteristic_polynomial(h, P("t^2+1")).answer);
    CHECK(is_characteristic_polynomial(h, P("(t-1)^2")).answer);
    CHECK(is_characteristic_polynomial(h, P("t^2+t+1")).answer);
    CHECK(is_characteristic_polynomial(h, P("t^2")).answer);

    auto v = is_characteristic_polynomial(h, P("(t-1)*(t-2)"));
    CHECK_FALSE(v.answer);
    REQUIRE(v.factors.size() == 2);
    for (const auto& f : v.factors) {
        CHECK_FALSE(f.cond_a);
        CHECK(f.cond_b == CondB::NotEvaluated);
        CHECK_FALSE(f.c.has_value());
    }

    v = is_characteristic_polynomial(h, P("t^2-2"));
    CHECK_FALSE(v.answer);
    REQUIRE(v.factors.size() == 1);
    CHECK(v.factors[0].cond_a);
    CHECK(v.factors[0].n == 1);
    CHECK(v.factors[0].c == 1);
    CHECK(v.factors[0].cond_b == CondB::Fail);
    CHECK(v.algebra == h);

    CHECK(kind_of([&] { is_characteristic_polynomial(h, P("t^3+1")); }) == ErrorKind::DegreeMismatch);
    CHECK(kind_of([&] { is_characteristic_polynomial(h, P("2*t^2+1")); }) == ErrorKind::NonMonic);

    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        const long n = 1 + static_cast<long>(rng() % 5);
        CHECK(is_characteristic_polynomial(matq(n), random_product(rng, static_cast<int>(n))).answer);
    }
}

TEST_CASE("certificate invariants") {
    std::mt19937_64 rng(22);
    const std::vector<CsaSpec> specs = {quaternion_to_csa(-1, -1, 2), quaternion_to_csa(-1, -3, 2),
                                        quaternion_to_csa(2, -5, 1), quaternion_to_csa(-1, -1, 3)};
    for (int i = 0; i < 120; ++i) {
        const auto& spec = specs[i % specs.size()];
        const RatPoly f = random_product(rng, static_cast<int>(spec.degree()));
        const auto v = is_characteristic_polynomial(spec, f);
        bool all = true;
        for (const auto& c : v.factors) {
            if (c.cond_a) {
                CHECK(c.a * c.deg_p == *c.n * spec.index());
                CHECK(c.cond_b != CondB::NotEvaluated);
                CHECK((c.cond_b == CondB::Pass) == ((*c.n * *c.c) % c.deg_p == 0));
            } else {
                CHECK(c.cond_b == CondB::NotEvaluated);
                CHECK((c.a * c.deg_p) % spec.index() != 0);
            }
            all = all && c.passes();
        }
        CHECK(v.answer == all);
    }
}

TEST_CASE("reduction to primary components") {
    const auto h2 = quaternion_to_csa(-1, -1, 2);
    CHECK(kind_of([&] { reduce_to_primary(h2, P("(t^2+1)^2*(t-1)^2")); }) == ErrorKind::DegreeMismatch);
    CHECK(kind_of([&] { reduce_to_primary(h2, P("(t^2+1)^2*(t-1)^4")); }) == ErrorKind::DegreeMismatch);
    auto r = reduce_to_primary(h2, P("(t^2+1)*(t-1)^2"));
    REQUIRE(r.size() == 2);
    CHECK(r[0].p == P("t-1"));
    CHECK(r[0].a == 2);
    CHECK(r[0].n == 1);
    CHECK(r[1].p == P("t^2+1"));
    CHECK(r[1].a == 1);
    CHECK(r[1].n == 1);
    CHECK(r[1].algebra.capacity == 1);
    CHECK(r[1].algebra.invariants == h2.invariants);

    r = reduce_to_primary(quaternion_to_csa(-1, -1), P("t^2+1"));
    REQUIRE(r.size() == 1);
    CHECK(r[0].n == 1);
    r = reduce_to_primary(matq(2), P("(t-1)*(t-2)"));
    REQUIRE(r.size() == 2);
    CHECK(r[0].n == 1);
    CHECK(r[1].n == 1);
    CHECK(kind_of([&] { reduce_to_primary(quaternion_to_csa(-1, -1), P("(t-1)*(t-2)")); }) ==
          ErrorKind::ReductionObstructed);

    // The full test agrees with the conjunction over primary components.
    std::mt19937_64 rng(23);
    const std::vector<CsaSpec> specs = {quaternion_to_csa(-1, -1, 2), quaternion_to_csa(-1, -3, 2),
                                        quaternion_to_csa(-1, -1, 3)};
    int reduced = 0;
    for (int i = 0; i < 150; ++i) {
        const auto& spec = specs[i % specs.size()];
        const RatPoly f = random_product(rng, static_cast<int>(spec.degree()));
        const bool whole = is_characteristic_polynomial(spec, f).answer;
        try {
            const auto parts = reduce_to_primary(spec, f);
            long total = 0;
            bool all = true;
            for (const auto& part : parts) {
                total += part.n;
                all = all && is_characteristic_polynomial(part.algebra, part.p.pow(static_cast<unsigned>(part.a))).answer;
            }
            CHECK(total == spec.capacity);
            CHECK(whole == all);
            ++reduced;
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ReductionObstructed);
            CHECK_FALSE(whole);
        }
    }
    CHECK(reduced > 20);
}

TEST_CASE("embedding") {
    const auto h = quaternion_to_csa(-1, -1);
    CHECK(embeds(P("t^2+1"), h));
    CHECK_FALSE(embeds(P("t^2-2"), h));
    CHECK(embeds(P("t-5"), h));
    CHECK(embeds(P("t-5"), matq(3)));
    CHECK_FALSE(embeds(P("t^3-2"), matq(2)));
    CHECK(embeds(P("t^3-2"), matq(3)));
    CHECK(kind_of([&] { embeds(P("t^2-1"), h); }) == ErrorKind::NotIrreducible);

    // p^a with a * deg p = deg A is a characteristic polynomial iff Q[t]/(p) embeds.
    std::mt19937_64 rng(24);
    const std::vector<CsaSpec> specs = {h, quaternion_to_csa(-1, -1, 2), quaternion_to_csa(-1, -3, 3),
                                        quaternion_to_csa(3, -7, 2)};
    for (int i = 0; i < 200; ++i) {
        const auto& spec = specs[i % specs.size()];
        std::vector<int> degrees;
        for (int d = 1; d <= spec.degree(); ++d)
            if (spec.degree() % d == 0) degrees.push_back(d);
        const int d = degrees[rng() % degrees.size()];
        const RatPoly p = oracle::random_irreducible(rng, d, 12);
        const RatPoly f = p.pow(static_cast<unsigned>(spec.degree() / d));
        CHECK(is_characteristic_polynomial(spec, f).answer == embeds(p, spec));
    }
}

TEST_CASE("quaternion local-global embedding") {
    CHECK(quaternion_local_global_embed(-1, -1, P("t^2+1")));
    CHECK_FALSE(quaternion_local_global_embed(-1, -1, P("t^2-2")));
    CHECK(kind_of([] { quaternion_local_global_embed(-1, -1, P("t^2-t")); }) == ErrorKind::NotIrreducible);
    CHECK(kind_of([] { quaternion_local_global_embed(1, 7, P("t^2+1")); }) == ErrorKind::SplitAlgebra);

    std::mt19937_64 rng(25);
    std::uniform_int_distribution<long> ab(-30, 30), co(-20, 20);
    int done = 0;
    while (done < 200) {
        const long a = ab(rng), b = ab(rng);
        if (a == 0 || b == 0) continue;
        const auto spec = quaternion_to_csa(a, b, 1);
        if (spec.invariants.empty()) continue;
        const RatPoly p({co(rng), co(rng), 1});
        if (!is_irreducible(p)) continue;
        CHECK(quaternion_local_global_embed(a, b, p) == embeds(p, spec));
        ++done;
    }
}

TEST_CASE("minimal and characteristic polynomial compatibility") {
    CHECK(minpoly_charpoly_compatible(P("t^2+1"), P("(t^2+1)^2"), 4));
    CHECK_FALSE(minpoly_charpoly_compatible(P("t-1"), P("(t-1)*(t-2)"), 2));
    CHECK_FALSE(minpoly_charpoly_compatible(P("t^2+1"), P("(t^2+1)*(t-1)"), 3));
    CHECK(minpoly_charpoly_compatible(P("(t-1)*(t-2)"), P("(t-1)^2*(t-2)"), 3));
    CHECK_FALSE(minpoly_charpoly_compatible(P("(t-1)^3"), P("(t-1)^2"), 2));
    CHECK(kind_of([] { minpoly_charpoly_compatible(P("t-1"), P("(t-1)^2"), 3); }) == ErrorKind::DegreeMismatch);
}

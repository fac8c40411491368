#include <doctest.h>

#include <functional>
#include <random>

#include "csa/brauer.hpp"
#include "csa/error.hpp"
#include "csa/poly_io.hpp"
#include "oracles.hpp"

using namespace csa;

namespace {

RatPoly P(const char* s) { return parse_poly(s); }

CsaSpec hamilton(long n = 1) {
    CsaSpec s;
    s.capacity = n;
    s.invariants = {{Place::finite(2), Rat(1, 2)}, {Place::infinite(), Rat(1, 2)}};
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

// Strips square factors of p from z, leaving valuation 0 or 1.
long reduce_mod_squares(long z, long p) {
    while (z % (p * p) == 0) z /= p * p;
    return z;
}

// (a, b)_p by brute force: a primitive solution of z^2 = a x^2 + b y^2
// modulo p^N. Inputs are integers with square factors of p removed.
int hilbert_brute(long a, long b, long p) {
    a = reduce_mod_squares(a, p);
    b = reduce_mod_squares(b, p);
    const long m = p == 2 ? 64 : p * p * p;
    auto md = [m](long v) { return ((v % m) + m) % m; };
    std::vector<bool> any_square(m, false), unit_square(m, false);
    for (long z = 0; z < m; ++z) {
        any_square[md(z * z)] = true;
        if (z % p != 0) unit_square[md(z * z)] = true;
    }
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            const long rhs = md(md(a * x % m * x) + md(b * y % m * y));
            const bool primitive = x % p != 0 || y % p != 0;
            if (primitive ? any_square[rhs] : unit_square[rhs]) return 1;
        }
    return -1;
}

}  // namespace

TEST_CASE("validate_csa") {
    auto h = validate_csa(hamilton());
    CHECK(h.index() == 2);
    CHECK(h.degree() == 2);
    CsaSpec m3;
    m3.capacity = 3;
    CHECK(validate_csa(m3).degree() == 3);

    CsaSpec odd;
    odd.invariants = {{Place::finite(3), Rat(1, 3)}, {Place::finite(5), Rat(2, 3)}};
    CHECK(validate_csa(odd).index() == 3);

    CsaSpec wrap;
    wrap.invariants = {{Place::finite(3), Rat(4, 3)}, {Place::finite(5), Rat(-1, 3)}, {Place::finite(7), Rat(1)}};
    auto w = validate_csa(wrap);
    CHECK(w.invariants.size() == 2);
    CHECK(w.invariants.at(Place::finite(3)) == Rat(1, 3));
    CHECK(w.invariants.at(Place::finite(5)) == Rat(2, 3));

    CsaSpec bad_sum;
    bad_sum.invariants = {{Place::finite(2), Rat(1, 2)}};
    CHECK(kind_of([&] { validate_csa(bad_sum); }) == ErrorKind::InvariantSumNonzero);
    CsaSpec bad_inf;
    bad_inf.invariants = {{Place::finite(3), Rat(2, 3)}, {Place::infinite(), Rat(1, 3)}};
    CHECK(kind_of([&] { validate_csa(bad_inf); }) == ErrorKind::BadArchimedeanInvariant);
    CsaSpec zero_cap;
    zero_cap.capacity = 0;
    CHECK(kind_of([&] { validate_csa(zero_cap); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { Place::finite(4); }) == ErrorKind::NonPrimePlace);
}

TEST_CASE("quaternion_to_csa examples") {
    CHECK(quaternion_to_csa(-1, -1, 1) == hamilton());
    auto split = quaternion_to_csa(1, 7, 1);
    CHECK(split.capacity == 2);
    CHECK(split.invariants.empty());
    auto q = quaternion_to_csa(-1, -3, 1);
    CHECK(q.invariants.size() == 2);
    CHECK(q.invariants.count(Place::finite(3)) == 1);
    CHECK(q.invariants.count(Place::infinite()) == 1);
    CHECK(quaternion_to_csa(2, -5, 3).capacity == 3);
    // Cancellation in ab must not hide the places of a and b.
    CHECK(quaternion_to_csa(Rat(3), Rat(1, 3), 1) == quaternion_to_csa(3, 3, 1));
}

TEST_CASE("hilbert symbol against brute-force solubility") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-40, 40);
    int checked = 0;
    while (checked < 150) {
        long a = d(rng), b = d(rng);
        if (a == 0 || b == 0) continue;
        for (long p : {2L, 3L, 5L}) CHECK(hilbert_symbol(a, b, Place::finite(p)) == hilbert_brute(a, b, p));
        CHECK(hilbert_symbol(a, b, Place::infinite()) == ((a < 0 && b < 0) ? -1 : 1));
        ++checked;
    }
    // Rational arguments only matter up to squares.
    CHECK(hilbert_symbol(Rat(-1, 4), Rat(-9, 25), Place::finite(2)) == -1);
    CHECK(hilbert_symbol(Rat(2, 3), Rat(5), Place::finite(3)) == hilbert_symbol(6, 5, Place::finite(3)));
    CHECK(kind_of([] { hilbert_symbol(1, 1, Place::named("v")); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("hilbert reciprocity") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-300, 300), den(1, 50);
    for (int i = 0; i < 300; ++i) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        if (a == 0 || b == 0) continue;
        int prod = 1;
        for (const auto& v : quaternion_candidate_places(a, b)) prod *= hilbert_symbol(a, b, v);
        CHECK(prod == 1);
        CHECK_NOTHROW(validate_csa(quaternion_to_csa(a, b, 1)));
        // Symmetry and bilinearity in the first slot.
        for (const auto& v : quaternion_candidate_places(a, b)) {
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            CHECK(hilbert_symbol(a, -a, v) == 1);
        }
    }
}

TEST_CASE("tensor invariants and capacity") {
    const auto h = hamilton();
    auto c = capacity_and_division_degree_over(h, P("t^2+1"));
    CHECK(c.capacity == 2);
    CHECK(c.division_degree == 1);
    c = capacity_and_division_degree_over(h, P("t^2-2"));
    CHECK(c.capacity == 1);
    CHECK(c.division_degree == 2);
    c = capacity_and_division_degree_over(h, P("t-1"));
    CHECK(c.capacity == 1);
    CHECK(c.division_degree == 2);
    c = capacity_and_division_degree_over(h, P("t^2+t+1"));
    CHECK(c.capacity == 2);

    auto inv = tensor_invariants(h, P("t^2-2"));
    // 2 ramifies in Q(sqrt 2): one place of degree 2, invariant 0; two real places keep 1/2.
    REQUIRE(inv.size() == 3);
    CHECK(inv[0].place == Place::finite(2));
    CHECK(inv[0].local_degree == 2);
    CHECK(inv[0].value == 0);
    CHECK(inv[1].value == Rat(1, 2));
    CHECK(inv[2].value == Rat(1, 2));

    CsaSpec m2;
    m2.capacity = 2;
    c = capacity_and_division_degree_over(m2, P("t^3-2"));
    CHECK(c.capacity == 1);
    CHECK(c.division_degree == 1);
}

TEST_CASE("hamilton capacity over quadratic fields matches the splitting of 2 and infinity") {
    // D tensor Q(sqrt m) splits iff some place over 2 and some place over
    // infinity has even local degree, i.e. iff m < 0 and m != 1 mod 8.
    const auto h = hamilton();
    for (long m = -60; m <= 60; ++m) {
        long sq = m;
        bool squarefree = m != 0 && m != 1;
        for (long q = 2; q * q <= std::abs(sq); ++q)
            if (sq % (q * q) == 0) squarefree = false;
        if (!squarefree) continue;
        const RatPoly p({-m, 0, 1});
        const long mod8 = ((m % 8) + 8) % 8;
        const long expect = (m < 0 && mod8 != 1) ? 2 : 1;
        CAPTURE(m);
        CHECK(capacity_and_division_degree_over(h, p).capacity == expect);
    }
}

TEST_CASE("capacity properties") {
    std::mt19937_64 rng(13);
    CsaSpec odd;
    odd.invariants = {{Place::finite(7), Rat(1, 3)}, {Place::finite(13), Rat(2, 3)}};
    for (int i = 0; i < 60; ++i) {
        const int deg = 1 + static_cast<int>(rng() % 4);
        const RatPoly p = oracle::random_irreducible(rng, deg, 9);
        for (const auto& spec : {hamilton(), quaternion_to_csa(-1, -3), odd}) {
            const auto c = capacity_and_division_degree_over(spec, p);
            CHECK(c.capacity * c.division_degree == spec.index());
            bool all_zero = true;
            for (const auto& t : tensor_invariants(spec, p)) all_zero = all_zero && t.value == 0;
            CHECK((c.capacity == spec.index()) == all_zero);
        }
        CsaSpec trivial;
        trivial.capacity = 3;
        const auto c = capacity_and_division_degree_over(trivial, p);
        CHECK(c.capacity == 1);
        CHECK(c.division_degree == 1);
    }
    // 7 ramifies totally in Q(7^(1/3)) and 13 is inert (7 is not a cube mod 13).
    const auto c = capacity_and_division_degree_over(odd, P("t^3-7"));
    CHECK(c.capacity == 3);
    CHECK(c.division_degree == 1);
}

TEST_CASE("splitting override and abstract bases") {
    SplittingOverride ov;
    CHECK_THROWS_AS(ov.add(P("t^2+1"), Place::finite(2), {1}), Error);
    CHECK(kind_of([&] { ov.add(P("t^2+1"), Place::finite(2), {1, 2}); }) == ErrorKind::DegreeMismatch);
    // Overrides win over the computation, even when they are false.
    ov.add(P("t^2-2"), Place::infinite(), {2});
    CHECK(capacity_and_division_degree_over(hamilton(), P("t^2-2"), &ov).capacity == 2);
    ov.add(P("t^2+1"), Place::finite(2), {1, 1});
    CHECK(capacity_and_division_degree_over(hamilton(), P("t^2+1"), &ov).capacity == 1);
    CHECK(*ov.find(P("t^2+1"), Place::finite(2)) == std::vector<int>{1, 1});

    CsaSpec abs;
    abs.abstract_base = true;
    abs.invariants = {{Place::named("v1"), Rat(1, 2)}, {Place::named("v2"), Rat(1, 2)}};
    abs = validate_csa(abs);
    CHECK(abs.index() == 2);
    CHECK(kind_of([&] { capacity_and_division_degree_over(abs, P("t^2+1")); }) == ErrorKind::MissingOverride);
    SplittingOverride aov;
    aov.add(P("t^2+1"), Place::named("v1"), {2});
    aov.add(P("t^2+1"), Place::named("v2"), {1, 1});
    CHECK(capacity_and_division_degree_over(abs, P("t^2+1"), &aov).capacity == 1);
    aov.add(P("t^2+3"), Place::named("v1"), {2});
    aov.add(P("t^2+3"), Place::named("v2"), {2});
    CHECK(capacity_and_division_degree_over(abs, P("t^2+3"), &aov).capacity == 2);
    // Linear p needs no data.
    CHECK(capacity_and_division_degree_over(abs, P("t-1")).capacity == 1);

    CsaSpec labelled;
    labelled.invariants = {{Place::named("v"), Rat(1, 2)}, {Place::infinite(), Rat(1, 2)}};
    CHECK(kind_of([&] { validate_csa(labelled); }) == ErrorKind::InvalidArgument);
}

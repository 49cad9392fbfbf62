#include <doctest.h>

#include <random>

#include "dsurf/cancellation.hpp"
#include "dsurf/random.hpp"
#include "support.hpp"

using namespace support;

namespace {

ExponentialMap theorem_map(const RingSpec& spec, TheoremCoefficients c) { return build_from_theorem(spec, c); }

Poly one(FieldSpec f) { return Poly::constant(f, 1); }

}  // namespace

TEST_CASE("build_from_theorem examples") {
    const RingSpec r = ring(2, "1");
    const ExponentialMap phi = theorem_map(r, {{1, P("1")}});
    CHECK(phi.verified());
    CHECK(phi.nontrivial());
    CHECK(phi.image(Var::z) == E(r, "z + x^2*U"));
    CHECK(phi.image(Var::y) == E(r, "y + (2*z+1)*U + x^2*U^2"));
    CHECK(phi.image(Var::x) == E(r, "x"));

    const RingSpec r2 = ring(2, "1", F(2));
    const ExponentialMap phi2 = theorem_map(r2, {{2, one(F(2))}});
    CHECK(phi2.image(Var::z) == E(r2, "z + x^2*U^2"));
    CHECK(phi2.image(Var::y) == E(r2, "y + U^2 + x^2*U^4"));

    try {
        theorem_map(r, {{3, P("1")}});
        FAIL("expected IllegalExponent");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IllegalExponent);
    }
    CHECK_THROWS_AS(theorem_map(ring(2, "1", F(3)), {{6, one(F(3))}}), Error);
    CHECK_THROWS_AS(theorem_map(ring(2, "1", F(3)), {{0, one(F(3))}}), Error);
    CHECK_THROWS_AS(theorem_map(r, {{1, P("y")}}), Error);
    CHECK(theorem_map(ring(3, "1+x", F(3)), {{1, P("x", F(3))}, {3, one(F(3))}, {9, P("1+x^2", F(3))}}).verified());
}

TEST_CASE("y image follows the closed formula") {
    std::mt19937_64 rng(2);
    for (FieldSpec f : {Q(), F(2), F(3)}) {
        const RingSpec spec = ring(3, "1 + 2*x", f);
        for (int i = 0; i < 10; ++i) {
            const Poly f1 = random_x_poly(f, rng, 2);
            TheoremCoefficients c{{1, f1}};
            if (!f.is_rational()) c.emplace_back(f.characteristic(), random_x_poly(f, rng, 2));
            const ExponentialMap phi = build_from_theorem(spec, c);
            Poly F(f);
            for (const auto& [e, fe] : c) F += fe * Poly::var(f, Var::U, e);
            const RElem z = E(spec, "z");
            const RElem Fe(spec, F, Poly(f));
            const RElem expected = E(spec, "y") + RElem::constant(spec, 2) * z * Fe +
                                   Fe.mul_monomial(Monomial::of(Var::x, 3)) * Fe + Fe.mul_poly(spec.h());
            CHECK(phi.image(Var::y) == expected);
        }
    }
}

TEST_CASE("verify_exponential negative controls") {
    const RingSpec r = ring(2, "1");
    const Report bad_rel = verify_exponential(r, {{Var::z, E(r, "z + x*U")}});
    REQUIRE(bad_rel.find("relation") != nullptr);
    CHECK_FALSE(bad_rel.find("relation")->pass);

    const Report bad_add = verify_exponential(r, {{Var::z, E(r, "z + x^2*U + x^2*U^2")}});
    CHECK(bad_add.find("relation")->pass);
    CHECK(bad_add.find("axiom_i")->pass);
    CHECK_FALSE(bad_add.find("axiom_ii")->pass);
    CHECK(bad_add.find("axiom_ii")->detail.find("on z") != std::string::npos);

    const Report bad_i = verify_exponential(r, {{Var::x, E(r, "x + U")}, {Var::y, E(r, "y")}, {Var::z, E(r, "z + 1")}});
    CHECK_FALSE(bad_i.find("axiom_i")->pass);

    const Report stray = verify_exponential(r, {{Var::z, E(r, "z + x^2*S")}});
    CHECK_FALSE(stray.passed());

    CHECK(verify_exponential(r, {}).passed());
    CHECK_FALSE(ExponentialMap::trivial(r).nontrivial());
    CHECK_THROWS_AS(ExponentialMap::from_images(r, {{Var::z, E(r, "z + x*U")}}), Error);
    CHECK_FALSE(verify_exponential(r, {{Var::U, E(r, "U")}}).passed());
}

TEST_CASE("higher derivations and degrees") {
    const RingSpec r = ring(2, "1");
    const ExponentialMap phi = theorem_map(r, {{1, P("1")}});
    CHECK(higher_derivation(phi, 1, E(r, "z")) == E(r, "x^2"));
    CHECK(higher_derivation(phi, 2, E(r, "y")) == E(r, "x^2"));
    CHECK(higher_derivation(phi, 7, E(r, "y")).is_zero());
    CHECK(*phi_degree(phi, E(r, "z")) == 1);
    CHECK(*phi_degree(phi, E(r, "y")) == 2);
    CHECK(*phi_degree(phi, E(r, "x")) == 0);
    CHECK_FALSE(phi_degree(phi, RElem(r)).has_value());

    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        const RElem a = random_element(r, rng);
        CHECK(higher_derivation(phi, 0, a) == a);
    }
}

TEST_CASE("invariance") {
    const RingSpec r = ring(2, "1+x");
    const ExponentialMap phi = theorem_map(r, {{1, P("1+x")}});
    CHECK(is_invariant(phi, E(r, "(1+x)*x^3")));
    CHECK_FALSE(is_invariant(phi, E(r, "z")));
    CHECK_FALSE(is_invariant(phi, E(r, "y")));
    CHECK_FALSE(is_invariant(phi, E(r, "y+z")));
    CHECK(is_invariant(phi, RElem(r)));
    CHECK_THROWS_AS(phi.apply(E(r, "U")), Error);
}

TEST_CASE("evaluate at one") {
    const RingSpec r = ring(2, "1");
    const Endomorphism e = evaluate_at_one(theorem_map(r, {{1, P("1")}}));
    CHECK(e.images.at(Var::x) == E(r, "x"));
    CHECK(e.images.at(Var::z) == E(r, "z + x^2"));
    CHECK(e.images.at(Var::y) == E(r, "y + 2*z + 1 + x^2"));
    const Endomorphism id = evaluate_at_one(ExponentialMap::trivial(r));
    for (Var g : {Var::x, Var::y, Var::z}) CHECK(id.images.at(g) == RElem::generator(r, g));
}

TEST_CASE("rewrite in invariants") {
    const RingSpec r = ring(2, "1");
    const ExponentialMap phi = theorem_map(r, {{1, P("1")}});
    try {
        rewrite_in_invariants(phi, E(r, "z"), E(r, "y"));
        FAIL("expected NotApplicable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotApplicable);
    }

    const CancellationWitness w = build_cancellation(Q(), 2, 3);
    const auto self = rewrite_in_invariants(w.phi, w.s, w.s);
    REQUIRE(self.size() == 2);
    CHECK(self[0].is_zero());
    CHECK(self[1] == RElem::constant(w.ambient, 1));

    const RElem z1 = w.embedding.at(Var::z);
    const auto c = rewrite_in_invariants(w.phi, w.s, z1 * w.s);
    REQUIRE(c.size() == 2);
    CHECK(c[0].is_zero());
    CHECK(c[1] == z1);

    RElem sum = RElem::constant(w.ambient, 1);
    for (unsigned l = 1; l <= 5; ++l) sum += w.s.pow(l);
    CHECK(rewrite_in_invariants(w.phi, w.s, sum).size() == 6);
    try {
        rewrite_in_invariants(w.phi, w.s, sum, 3);
        FAIL("expected StepLimit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StepLimit);
    }
}

TEST_CASE("derivation laws on samples") {
    std::mt19937_64 rng(17);
    const std::vector<ExponentialMap> maps{
        theorem_map(ring(2, "1"), {{1, P("1+x")}}),
        theorem_map(ring(3, "1+x", F(2)), {{1, one(F(2))}, {2, P("x", F(2))}}),
        theorem_map(ring(2, "2", F(3)), {{3, P("1+x", F(3))}}),
    };
    for (const ExponentialMap& phi : maps) {
        const RingSpec& spec = phi.spec();
        for (int k = 0; k < 15; ++k) {
            const RElem a = random_element(spec, rng, {2, 3, 3});
            const RElem b = random_element(spec, rng, {2, 3, 3});
            const auto d = [&](const RElem& e, unsigned i) { return higher_derivation(phi, i, e); };
            for (unsigned i = 0; i <= 6; ++i) {
                RElem sum(spec);
                for (unsigned j = 0; j <= i; ++j) sum += d(a, j) * d(b, i - j);
                CHECK(sum == d(a * b, i));
            }
            for (unsigned j = 0; j <= 4; ++j)
                for (unsigned i = 0; i + j <= 8; ++i) {
                    mpz_class c;
                    mpz_bin_uiui(c.get_mpz_t(), i + j, i);
                    CHECK(d(d(a, j), i) == d(a, i + j) * Scalar(spec.field(), c));
                }
            const auto da = phi_degree(phi, a), db = phi_degree(phi, b);
            if (da && db) CHECK(*phi_degree(phi, a * b) == *da + *db);
            if (da)
                for (unsigned i = 0; i <= *da; ++i) {
                    const auto di = phi_degree(phi, d(a, i));
                    if (di) CHECK(*di + i <= *da);
                }
        }
        CHECK(check_derivation_laws(phi, 5, 1).passed());
    }
}

TEST_CASE("minimal degree p divides every degree") {
    std::mt19937_64 rng(23);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const RingSpec spec = ring(2, "1", F(p));
        const ExponentialMap phi = theorem_map(spec, {{p, P("1+x", F(p))}});
        for (int i = 0; i < 40; ++i) {
            const RElem a = random_element(spec, rng);
            if (a.is_zero()) continue;
            CHECK(*phi_degree(phi, a) % p == 0);
        }
    }
}

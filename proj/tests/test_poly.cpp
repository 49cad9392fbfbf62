#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace support;

namespace {

Poly random_poly(FieldSpec f, std::mt19937_64& rng, int terms = 4, unsigned deg = 3) {
    std::uniform_int_distribution<long> c(-5, 5);
    std::uniform_int_distribution<unsigned> e(0, deg);
    Poly p(f);
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (Var v : {Var::x, Var::y, Var::z, Var::U}) m[v] = e(rng);
        p.add_term(m, Scalar(f, c(rng)));
    }
    return p;
}

Point random_point(FieldSpec f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-9, 9);
    Point pt;
    for (Var v : kAllVars) pt[v] = Scalar(f, d(rng));
    return pt;
}

}  // namespace

TEST_CASE("arithmetic examples") {
    CHECK((P("x+1") * P("x-1")) == P("x^2-1"));
    CHECK((P("x+1", F(2)) * P("x+1", F(2))) == P("x^2+1", F(2)));
    CHECK((P("z+x") * P("z+y")) == P("z^2 + x*z + y*z + x*y"));
    CHECK((P("x") - P("x")).is_zero());
    CHECK_THROWS_AS(P("x") + P("x", F(3)), Error);
}

TEST_CASE("monomial order and printing") {
    CHECK(to_string(P("x^2*y - z")) == "x^2*y - z");
    CHECK(to_string(P("z + y + x + T + U + S")) == "z + y + x + T + U + S");
    CHECK(to_string(P("x*y + z^2")) == "z^2 + x*y");
    CHECK(to_string(P("y*x^2")) == "x^2*y");
    CHECK(to_string(Poly(Q())) == "0");
    CHECK(to_string(P("-1 + 3/2*x")) == "3/2*x - 1");
    CHECK(to_string(P("-x - 2", F(5))) == "4*x + 3");
    CHECK(to_string(P("1")) == "1");
}

TEST_CASE("substitute") {
    CHECK(substitute(P("x^2"), {{Var::x, P("3*x")}}) == P("9*x^2"));
    CHECK(substitute(P("z^2+z"), {{Var::z, P("z+x^2*U")}}) == P("z^2 + 2*x^2*U*z + x^4*U^2 + z + x^2*U"));
    const Poly h = P("1 + x + 4*x^3");
    CHECK(substitute(h, {{Var::x, P("x")}}) == h);
    CHECK(substitute(h, {}) == h);

    std::mt19937_64 rng(3);
    for (FieldSpec f : {Q(), F(3)})
        for (int i = 0; i < 100; ++i) {
            const Poly a = random_poly(f, rng), b = random_poly(f, rng);
            const Bindings bind{{Var::x, random_poly(f, rng, 2, 2)}, {Var::z, random_poly(f, rng, 2, 1)}};
            CHECK(substitute(a * b, bind) == substitute(a, bind) * substitute(b, bind));
            CHECK(substitute(a + b, bind) == substitute(a, bind) + substitute(b, bind));
        }
}

TEST_CASE("ring axioms against point evaluation") {
    std::mt19937_64 rng(5);
    for (FieldSpec f : {Q(), F(2), F(5)})
        for (int i = 0; i < 500; ++i) {
            const Poly a = random_poly(f, rng), b = random_poly(f, rng), c = random_poly(f, rng);
            const Point pt = random_point(f, rng);
            CHECK(eval(a * b, pt) == eval(a, pt) * eval(b, pt));
            CHECK(eval(a - b, pt) == eval(a, pt) - eval(b, pt));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
        }
}

TEST_CASE("coeff_of") {
    CHECK(coeff_of(P("z + x^2*U"), Var::U, 1) == P("x^2"));
    CHECK(coeff_of(P("z + x^2*U"), Var::U, 0) == P("z"));
    CHECK(coeff_of(P("y + (2*z+1)*U + x^2*U^2"), Var::U, 2) == P("x^2"));
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const Poly p = random_poly(Q(), rng, 6);
        for (Var v : {Var::x, Var::z, Var::U}) {
            Poly back(Q());
            for (std::uint32_t k = 0; k <= p.degree(v).value_or(0); ++k)
                back += coeff_of(p, v, k) * Poly::var(Q(), v, k);
            CHECK(back == p);
        }
    }
}

TEST_CASE("weighted degree and top part") {
    const WeightVector w1{{Var::x, 0}, {Var::y, 2}, {Var::z, 1}};
    const WeightVector w2{{Var::x, -1}, {Var::y, 3}, {Var::z, 0}};
    CHECK(*weighted_degree(P("z*y"), w1) == 3);
    CHECK_FALSE(weighted_degree(Poly(Q()), w1).has_value());
    CHECK(*weighted_degree(P("x^3*y"), w2) == 0);
    CHECK(top_part(P("y+z"), w1) == P("y"));
    CHECK(top_part(P("x^2+x"), WeightVector{{Var::x, 1}}) == P("x^2"));
    CHECK_THROWS_AS(top_part(Poly(Q()), w1), Error);
    CHECK_THROWS_AS(weighted_degree(P("T"), w1), Error);

    const WeightVector wq{{Var::x, mpq_class(1, 5)}, {Var::y, 2}, {Var::z, mpq_class(-3, 2)}};
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Poly a(Q()), b(Q());
        a = random_poly(Q(), rng);
        b = random_poly(Q(), rng);
        for (auto* p : {&a, &b}) *p = substitute(*p, {{Var::U, P("1")}});
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(*weighted_degree(a * b, wq) == *weighted_degree(a, wq) + *weighted_degree(b, wq));
        CHECK(top_part(a * b, wq) == top_part(a, wq) * top_part(b, wq));
        if (!(a + b).is_zero())
            CHECK(*weighted_degree(a + b, wq) <= std::max(*weighted_degree(a, wq), *weighted_degree(b, wq)));
    }

    // f1 + z f2 in x, y: f1 has even w1-weight, z f2 odd, so the top part never mixes.
    for (int i = 0; i < 100; ++i) {
        const Poly f1 = substitute(random_poly(Q(), rng), {{Var::z, P("0")}, {Var::U, P("1")}});
        const Poly f2 = substitute(random_poly(Q(), rng), {{Var::z, P("0")}, {Var::U, P("1")}});
        const Poly a = f1 + P("z") * f2;
        if (a.is_zero()) continue;
        const Poly t = top_part(a, w1);
        CHECK((coeff_of(t, Var::z, 0).is_zero() || coeff_of(t, Var::z, 1).is_zero()));
    }
}

TEST_CASE("x_power_divide") {
    CHECK(x_power_divide(P("x^3+x^2"), 2) == P("x+1"));
    CHECK_THROWS_AS(x_power_divide(P("x+1"), 1), Error);
    // (x - c)^n scaled, c != 0, is never divisible by x^n.
    const Poly lhs = P("3*(x-2)^3");
    try {
        x_power_divide(lhs, 3);
        FAIL("expected NotDivisible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotDivisible);
        CHECK(std::string(e.what()).find("-18*x^2") != std::string::npos);
    }
    CHECK(x_power_divide(Poly(Q()), 4).is_zero());
}

#include <doctest.h>

#include <cstdlib>
#include <random>

#include "support.hpp"

using namespace support;

TEST_CASE("field specs parse and validate") {
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(FieldSpec::parse("F5").characteristic() == 5);
    CHECK(FieldSpec::parse("F101").to_string() == "F101");
    for (const char* bad : {"F4", "F1", "F0", "q", "f5", "F", "F5x", "R"})
        CHECK_THROWS_AS(FieldSpec::parse(bad), Error);
    CHECK_THROWS_AS(FieldSpec::prime(2147483659ULL), Error);
    CHECK(FieldSpec::prime(2147483647ULL).characteristic() == 2147483647u);
}

TEST_CASE("rational normalization is canonical") {
    const Scalar a(Q(), 6, 4), b(Q(), -3, -2);
    CHECK(a == b);
    CHECK(a.to_string() == "3/2");
    CHECK(Scalar(Q(), 4, -8).to_string() == "-1/2");
    CHECK_THROWS_AS(Scalar(Q(), 1, 0), Error);
    CHECK_THROWS_AS(Scalar(F(5), 1, 10), Error);
    CHECK(Scalar(F(5), 1, 2) == Scalar(F(5), 3));
    CHECK(Scalar(F(7), -1).residue() == 6u);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-50, 50);
    for (FieldSpec f : {Q(), F(2), F(3), F(5), F(7), F(101)}) {
        for (int i = 0; i < 200; ++i) {
            const Scalar a = f.is_rational() ? Scalar(f, d(rng), 1 + std::abs(d(rng))) : Scalar(f, d(rng));
            const Scalar b(f, d(rng)), c(f, d(rng));
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(f));
            if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(f));
        }
    }
    CHECK_THROWS_AS(Scalar::zero(F(3)).inv(), Error);
    CHECK_THROWS_AS(Scalar(F(3), 1) + Scalar(F(5), 1), Error);
}

TEST_CASE("binomials") {
    CHECK(binom(2, 1, F(2)).is_zero());
    CHECK(binom(45, 9, F(3)) == Scalar(F(3), 2));
    CHECK(binom(4, 2, Q()) == Scalar(Q(), 6));
    CHECK(binom(3, 5, Q()).is_zero());
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (unsigned i = 0; i <= 60; ++i)
            for (unsigned j = 0; j <= 60; ++j) {
                mpz_class c;
                mpz_bin_uiui(c.get_mpz_t(), i, j);
                CHECK(binom(i, j, F(p)) == Scalar(F(p), c));
            }
    // Lucas keeps large indices cheap: C(10^6, 5^8) mod 5 = prod of digit binomials.
    CHECK(binom(1000000, 390625, F(5)) == Scalar(F(5), 2));
}

TEST_CASE("nth roots") {
    auto roots = nth_roots(Scalar(Q(), 4), 2);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Scalar(Q(), -2));
    CHECK(roots[1] == Scalar(Q(), 2));
    CHECK(nth_roots(Scalar(Q(), 2), 2).empty());
    CHECK(nth_roots(Scalar(Q(), -8, 27), 3) == std::vector<Scalar>{Scalar(Q(), -2, 3)});
    CHECK(nth_roots(Scalar(Q(), -4), 2).empty());
    CHECK(nth_roots(Scalar(F(7), 1), 3) == std::vector<Scalar>{S(F(7), 1), S(F(7), 2), S(F(7), 4)});
    CHECK_THROWS_AS(nth_roots(Scalar::zero(Q()), 2), Error);
    CHECK_THROWS_AS(nth_roots(Scalar(F(10007), 1), 2), Error);

    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
        for (unsigned d = 1; d <= 6; ++d)
            for (std::uint32_t c = 1; c < p; ++c) {
                std::vector<Scalar> brute;
                for (std::uint32_t m = 1; m < p; ++m) {
                    std::uint64_t pw = 1;
                    for (unsigned k = 0; k < d; ++k) pw = pw * m % p;
                    if (pw == c) brute.emplace_back(F(p), static_cast<long>(m));
                }
                CHECK(nth_roots(Scalar(F(p), static_cast<long>(c)), d) == brute);
            }
}

TEST_CASE("canonical order") {
    CHECK(Scalar(Q(), -3) < Scalar(Q(), 1, 2));
    CHECK(Scalar(F(5), -1) > Scalar(F(5), 3));
}

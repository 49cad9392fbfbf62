#include <doctest.h>

#include "dsurf/sweep.hpp"
#include "support.hpp"

using namespace support;

TEST_CASE("iso sweep serial and parallel agree") {
    for (auto [f, n] : std::vector<std::pair<FieldSpec, unsigned>>{{F(2), 3}, {F(3), 2}, {F(3), 3}, {F(5), 2}}) {
        const auto corpus = reduced_specs(f, n);
        const IsoSweepResult s = iso_sweep_serial(corpus);
        CHECK(s.pairs == corpus.size() * corpus.size());
        CHECK(s.agreements == s.pairs);
        CHECK(s.witnesses_verified == s.isomorphic);
        CHECK(s.failures.empty());
        CHECK(s.isomorphic >= corpus.size());
        CHECK(iso_sweep_parallel(corpus) == s);
    }
}

TEST_CASE("cancellation sweep serial and parallel agree") {
    const auto grid = cancellation_grid({Q(), F(3)}, {{2, 3}, {3, 5}, {2, 5}});
    REQUIRE(grid.size() == 6);
    const auto s = cancellation_sweep_serial(grid);
    const auto p = cancellation_sweep_parallel(grid);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].point.field == p[i].point.field);
        CHECK(s[i].point.n1 == p[i].point.n1);
        CHECK(s[i].error == p[i].error);
        CHECK(s[i].passed() == p[i].passed());
        CHECK(s[i].report.checks.size() == p[i].report.checks.size());
        CHECK(s[i].passed() == (s[i].point.n2 != 5 || s[i].point.n1 != 2));
    }
}

#include <doctest.h>

#include <cmath>

#include "core.hpp"

using namespace lxb;

TEST_CASE("search space validates bounds") {
    CHECK_THROWS_AS(SearchSpace({0.0}, {0.0}), StructuralError);
    CHECK_THROWS_AS(SearchSpace({1.0}, {0.0}), StructuralError);
    CHECK_THROWS_AS(SearchSpace({}, {}), StructuralError);
    CHECK_THROWS_AS(SearchSpace({0.0, 0.0}, {1.0}), StructuralError);
    const SearchSpace box = SearchSpace::cube(3, -2.0, 2.0);
    CHECK(box.dim() == 3);
}

TEST_CASE("clamp_to_bounds projects onto the box") {
    const SearchSpace box = SearchSpace::cube(2, -100.0, 100.0);
    CHECK(clamp_to_bounds(std::vector{150.0, 0.0}, box) == std::vector{100.0, 0.0});
    CHECK(clamp_to_bounds(std::vector{5.0, 5.0}, box) == std::vector{5.0, 5.0});

    const SearchSpace tight = SearchSpace::cube(2, -32.0, 32.0);
    CHECK(clamp_to_bounds(std::vector{-32.1, 31.9}, tight) == std::vector{-32.0, 31.9});

    CHECK_THROWS_AS(clamp_to_bounds(std::vector{1.0}, box), StructuralError);
}

TEST_CASE("random_population fills the box reproducibly") {
    const SearchSpace unit = SearchSpace::cube(2, 0.0, 1.0);

    SUBCASE("containment and fitness unset") {
        RngStream rng(42);
        const Population pop = random_population(unit, 4, rng);
        REQUIRE(pop.size() == 4);
        for (const Candidate& c : pop) {
            CHECK_FALSE(c.evaluated());
            for (double v : c.position) {
                CHECK(v >= 0.0);
                CHECK(v < 1.0);
            }
        }
    }

    SUBCASE("identical seeds give identical populations") {
        RngStream r1(123), r2(123);
        const Population a = random_population(unit, 6, r1);
        const Population b = random_population(unit, 6, r2);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].position == b[i].position);
    }

    SUBCASE("population of one is rejected") {
        RngStream rng(1);
        CHECK_THROWS_AS(random_population(unit, 1, rng), ConfigError);
    }

    SUBCASE("coordinates follow the uniform law") {
        RngStream rng(7);
        const SearchSpace line = SearchSpace::cube(1, 0.0, 1.0);
        double sum = 0.0;
        const int n = 10000;
        const Population pop = random_population(line, n, rng);
        for (const Candidate& c : pop) sum += c.position[0];
        CHECK(std::abs(sum / n - 0.5) < 0.02);
    }
}

TEST_CASE("trace keeps the running best") {
    ConvergenceTrace trace;
    trace.update(1, 5.0);

    SUBCASE("worse fitness keeps the best") {
        trace.update(2, 7.0);
        REQUIRE(trace.size() == 2);
        CHECK(trace.points()[1].best == 5.0);
    }

    SUBCASE("improvement is recorded") {
        trace.update(2, 3.0);
        CHECK(trace.points()[1].best == 3.0);
    }

    SUBCASE("eval counts must increase") {
        CHECK_THROWS_AS(trace.update(1, 1.0), StructuralError);
        CHECK_THROWS_AS(trace.update(0, 1.0), StructuralError);
    }
}

TEST_CASE("trace starts from the first point") {
    ConvergenceTrace trace;
    trace.update(1, 9.9);
    REQUIRE(trace.size() == 1);
    CHECK(trace.points()[0].evals == 1);
    CHECK(trace.points()[0].best == 9.9);
}

TEST_CASE("trace best is non-increasing for arbitrary updates") {
    RngStream rng(99);
    ConvergenceTrace trace;
    for (int e = 1; e <= 500; ++e) trace.update(e, rng.uniform(-10.0, 10.0));
    for (std::size_t i = 1; i < trace.size(); ++i) {
        CHECK(trace.points()[i].best <= trace.points()[i - 1].best);
    }
}

TEST_CASE("rng streams are deterministic and correctly ranged") {
    RngStream a(2024), b(2024);
    for (int i = 0; i < 1000; ++i) CHECK(a.raw() == b.raw());

    RngStream r(5);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = r.uniform_open01();
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
        CHECK(std::isfinite(std::log(v)));
    }
}

TEST_CASE("unevaluated candidates have no fitness value") {
    Candidate c(std::vector<double>{1.0, 2.0});
    CHECK_FALSE(c.evaluated());
    CHECK_THROWS(c.fitness_value());
    c.fitness = 3.5;
    CHECK(c.evaluated());
    CHECK(c.fitness_value() == 3.5);
}

TEST_CASE("sort_population orders best to worst") {
    Population pop;
    for (double f : {3.0, 1.0, 2.0}) {
        Candidate c(std::vector<double>{f});
        c.fitness = f;
        pop.push_back(c);
    }
    sort_population(pop);
    CHECK(pop[0].fitness_value() == 1.0);
    CHECK(pop[2].fitness_value() == 3.0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arrmorse/linalg.hpp"

using namespace arrmorse;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-3/6") == rat(-1, 2));
    CHECK(parse_rational("0.25") == rat(1, 4));
    CHECK(parse_rational("-1.5") == rat(-3, 2));
    CHECK(parse_rational("7") == rat(7));
    CHECK_THROWS(parse_rational(""));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("rref and rank") {
    Mat m = {{rat(1), rat(2)}, {rat(2), rat(4)}, {rat(0), rat(1)}};
    CHECK(rank_of(m) == 2);
    Mat z = {{rat(0), rat(0)}};
    CHECK(rank_of(z) == 0);
}

TEST_CASE("solve_linear") {
    // x + y = 3, x - y = 1 -> (2, 1)
    auto sol = solve_linear({{rat(1), rat(1)}, {rat(1), rat(-1)}}, {rat(3), rat(1)}, 2);
    REQUIRE(sol.has_value());
    CHECK(sol->particular == Vec{rat(2), rat(1)});
    CHECK(sol->nullbasis.empty());
    // inconsistent
    auto bad = solve_linear({{rat(1), rat(0)}, {rat(1), rat(0)}}, {rat(0), rat(1)}, 2);
    CHECK(!bad.has_value());
    // underdetermined: x + y = 0 in R^2
    auto under = solve_linear({{rat(1), rat(1)}}, {rat(0)}, 2);
    REQUIRE(under.has_value());
    CHECK(under->nullbasis.size() == 1);
}

TEST_CASE("affine subspaces") {
    auto s = subspace_from_equations({{rat(1), rat(0), rat(0)}}, {rat(2)}, 3);
    REQUIRE(s.has_value());
    CHECK(s->dim() == 2);
    CHECK(s->contains({rat(2), rat(5), rat(-1)}));
    CHECK(!s->contains({rat(1), rat(0), rat(0)}));

    // Intersect the plane x=2 with the hyperplane y=3.
    auto line = intersect_hyperplane(*s, {rat(0), rat(1), rat(0)}, rat(3));
    REQUIRE(line.has_value());
    CHECK(line->dim() == 1);
    CHECK(line->contains({rat(2), rat(3), rat(7)}));

    // Parallel disjoint
    auto none = intersect_hyperplane(*s, {rat(1), rat(0), rat(0)}, rat(5));
    CHECK(!none.has_value());
    // Containing hyperplane keeps the subspace
    auto same = intersect_hyperplane(*s, {rat(1), rat(0), rat(0)}, rat(2));
    REQUIRE(same.has_value());
    CHECK(same->dim() == 2);

    auto [eqs, rhs] = subspace_equations(*line);
    CHECK(eqs.size() == 2);
    for (size_t i = 0; i < eqs.size(); ++i) CHECK(dot(eqs[i], line->point) == rhs[i]);
}

TEST_CASE("intersect two subspaces") {
    auto a = subspace_from_equations({{rat(1), rat(0)}}, {rat(0)}, 2); // x = 0
    auto b = subspace_from_equations({{rat(0), rat(1)}}, {rat(0)}, 2); // y = 0
    auto p = intersect(*a, *b);
    REQUIRE(p.has_value());
    CHECK(p->dim() == 0);
    CHECK(p->point == Vec{rat(0), rat(0)});

    auto c = subspace_from_equations({{rat(1), rat(0)}}, {rat(1)}, 2); // x = 1
    CHECK(!intersect(*a, *c).has_value());
}

TEST_CASE("simplex: basic LPs") {
    // min -x, x + y = 1, x,y >= 0 -> x = 1
    auto s = simplex_min({{rat(1), rat(1)}}, {rat(1)}, {rat(-1), rat(0)});
    REQUIRE(s.has_value());
    CHECK((*s)[0] == rat(1));
    // infeasible: x + y = -1, x,y >= 0
    CHECK(!simplex_min({{rat(1), rat(1)}}, {rat(-1)}, {rat(0), rat(0)}).has_value());
}

TEST_CASE("strict feasibility") {
    // Open triangle x > 0, y > 0, x + y < 1
    auto p = strict_feasible_point({}, {}, {{rat(1), rat(0)}, {rat(0), rat(1)}, {rat(-1), rat(-1)}},
                                   {rat(0), rat(0), rat(-1)}, 2);
    REQUIRE(p.has_value());
    CHECK((*p)[0] > 0);
    CHECK((*p)[1] > 0);
    CHECK((*p)[0] + (*p)[1] < 1);

    // Empty open set: x > 0 and x < 0
    auto empty = strict_feasible_point({}, {}, {{rat(1)}, {rat(-1)}}, {rat(0), rat(0)}, 1);
    CHECK(!empty.has_value());

    // Degenerate: x > 0 and -x > 0 shifted so only the boundary point x=0
    // satisfies the closed system.
    auto boundary = strict_feasible_point({}, {}, {{rat(1)}, {rat(-1)}}, {rat(0), rat(0)}, 1);
    CHECK(!boundary.has_value());

    // With an equality: x + y = 1, x > 0, y > 0
    auto seg = strict_feasible_point({{rat(1), rat(1)}}, {rat(1)},
                                     {{rat(1), rat(0)}, {rat(0), rat(1)}}, {rat(0), rat(0)}, 2);
    REQUIRE(seg.has_value());
    CHECK((*seg)[0] + (*seg)[1] == 1);
    CHECK((*seg)[0] > 0);

    // Unbounded open region
    auto ray = strict_feasible_point({}, {}, {{rat(1)}}, {rat(5)}, 1);
    REQUIRE(ray.has_value());
    CHECK((*ray)[0] > 5);
}

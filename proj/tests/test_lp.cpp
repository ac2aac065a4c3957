#include "doctest.h"

#include <vector>

#include "gptlab/lp.hpp"

using namespace gptlab;

namespace {

HRep<Rat> unit_square() {
    HRep<Rat> r;
    r.halfspaces.push_back({{rat(-1), rat(0)}, rat(0)});  // x >= 0
    r.halfspaces.push_back({{rat(0), rat(-1)}, rat(0)});  // y >= 0
    r.halfspaces.push_back({{rat(1), rat(0)}, rat(1)});   // x <= 1
    r.halfspaces.push_back({{rat(0), rat(1)}, rat(1)});   // y <= 1
    return r;
}

/**
 * Effect square of the classical bit in coordinates e = (a, b): the
 * convex hull of (0,0), (0,1), (1/2,1/2), (-1/2,1/2). Its facets are
 * +-a <= b and +-a <= 1-b.
 */
HRep<Rat> effect_square() {
    HRep<Rat> r;
    r.halfspaces.push_back({{rat(1), rat(-1)}, rat(0)});   // a - b <= 0
    r.halfspaces.push_back({{rat(-1), rat(-1)}, rat(0)});  // -a - b <= 0
    r.halfspaces.push_back({{rat(1), rat(1)}, rat(1)});    // a + b <= 1
    r.halfspaces.push_back({{rat(-1), rat(1)}, rat(1)});   // -a + b <= 1
    return r;
}

const std::vector<VecQ> effect_square_vertices = {
    {rat(0), rat(0)}, {rat(0), rat(1)}, {rat(1, 2), rat(1, 2)}, {rat(-1, 2), rat(1, 2)}};

}  // namespace

TEST_CASE("box optimum with deterministic tie rule") {
    auto res = lp_optimize(VecQ{rat(1), rat(0)}, unit_square(), LpSense::Max);
    CHECK(res.value == 1);
    // Tie along the right edge resolves to the lexicographically greatest
    // optimal vertex.
    CHECK(res.witness == VecQ{rat(1), rat(1)});

    auto res2 = lp_optimize(VecQ{rat(1), rat(1)}, unit_square(), LpSense::Max);
    CHECK(res2.value == 2);
    CHECK(res2.witness == VecQ{rat(1), rat(1)});

    auto res3 = lp_optimize(VecQ{rat(1), rat(1)}, unit_square(), LpSense::Min);
    CHECK(res3.value == 0);
    CHECK(res3.witness == VecQ{rat(0), rat(0)});
}

TEST_CASE("effect-square optimum matches brute-force vertex enumeration") {
    const VecQ obj{rat(1), rat(1)};
    Rat best = dot(obj, effect_square_vertices[0]);
    for (const auto& v : effect_square_vertices) {
        const Rat val = dot(obj, v);
        if (val > best) best = val;
    }
    CHECK(best == 1);  // attained by both (0,1) and (1/2,1/2)
    auto res = lp_optimize(obj, effect_square(), LpSense::Max);
    CHECK(res.value == best);
    CHECK(res.witness == VecQ{rat(1, 2), rat(1, 2)});
    CHECK(dot(obj, res.witness) == res.value);
}

TEST_CASE("unit-coordinate minimum over a normalized slab is 1") {
    // States are (x, 1); minimizing the final coordinate gives exactly 1.
    HRep<Rat> states;
    states.halfspaces.push_back({{rat(1), rat(0)}, rat(1)});
    states.halfspaces.push_back({{rat(-1), rat(0)}, rat(1)});
    states.equalities.push_back({{rat(0), rat(1)}, rat(1)});
    auto res = lp_optimize(VecQ{rat(0), rat(1)}, states, LpSense::Min);
    CHECK(res.value == 1);
    CHECK(res.witness[1] == 1);
}

TEST_CASE("infeasible and unbounded regions raise") {
    HRep<Rat> empty;
    empty.halfspaces.push_back({{rat(1)}, rat(0)});
    empty.halfspaces.push_back({{rat(-1)}, rat(-1)});  // x >= 1 and x <= 0
    CHECK_THROWS_AS(lp_optimize(VecQ{rat(1)}, empty, LpSense::Max), InfeasibleError);

    HRep<Rat> half;
    half.halfspaces.push_back({{rat(-1)}, rat(0)});  // x >= 0
    CHECK_THROWS_AS(lp_optimize(VecQ{rat(1)}, half, LpSense::Max), UnboundedError);
    // Bounded direction over the same region works.
    CHECK(lp_optimize(VecQ{rat(1)}, half, LpSense::Min).value == 0);
}

TEST_CASE("negative offsets force the auxiliary phase") {
    // x >= 2, x <= 5: initial slack basis infeasible.
    HRep<Rat> r;
    r.halfspaces.push_back({{rat(-1)}, rat(-2)});
    r.halfspaces.push_back({{rat(1)}, rat(5)});
    CHECK(lp_optimize(VecQ{rat(1)}, r, LpSense::Min).value == 2);
    CHECK(lp_optimize(VecQ{rat(1)}, r, LpSense::Max).value == 5);
}

TEST_CASE("equality constraints restrict the feasible set") {
    HRep<Rat> r = unit_square();
    r.equalities.push_back({{rat(1), rat(1)}, rat(1)});  // x + y = 1
    auto res = lp_optimize(VecQ{rat(2), rat(1)}, r, LpSense::Max);
    CHECK(res.value == 2);
    CHECK(res.witness == VecQ{rat(1), rat(0)});
}

TEST_CASE("rational data stays exact through pivoting") {
    HRep<Rat> r;
    r.halfspaces.push_back({{rat(3), rat(7)}, rat(1, 3)});
    r.halfspaces.push_back({{rat(-5), rat(2)}, rat(2, 7)});
    r.halfspaces.push_back({{rat(0), rat(-1)}, rat(1, 11)});
    r.halfspaces.push_back({{rat(-1), rat(0)}, rat(1, 13)});
    auto res = lp_optimize(VecQ{rat(1), rat(1)}, r, LpSense::Max);
    // Optimum sits on 3x + 7y = 1/3, y = -1/11: x = 32/99, value 23/99.
    CHECK(res.witness == VecQ{rat(32, 99), rat(-1, 11)});
    CHECK(res.value == rat(23, 99));
}

TEST_CASE("determinism: identical inputs give identical outputs") {
    const VecQ obj{rat(1), rat(1)};
    auto a = lp_optimize(obj, effect_square(), LpSense::Max);
    auto b = lp_optimize(obj, effect_square(), LpSense::Max);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
}

TEST_CASE("lp works over the field with sqrt 2") {
    // Segment from 0 to (1+rt2) in one variable.
    HRep<Rt2> r;
    r.halfspaces.push_back({{Rt2(-1)}, Rt2(0)});
    r.halfspaces.push_back({{Rt2(1)}, Rt2(rat(1), rat(1))});
    auto res = lp_optimize(Vec<Rt2>{Rt2(1)}, r, LpSense::Max);
    CHECK(res.value == Rt2(rat(1), rat(1)));
}

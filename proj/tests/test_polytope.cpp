#include "doctest.h"

#include <algorithm>

#include "gptlab/polytope.hpp"
#include "support/corpus.hpp"

using namespace gptlab;

namespace {

bool same_hrep(const HRep<Rat>& a, const HRep<Rat>& b) {
    if (a.halfspaces.size() != b.halfspaces.size()) return false;
    if (a.equalities.size() != b.equalities.size()) return false;
    for (std::size_t i = 0; i < a.halfspaces.size(); ++i) {
        if (a.halfspaces[i].normal != b.halfspaces[i].normal) return false;
        if (a.halfspaces[i].bound != b.halfspaces[i].bound) return false;
    }
    for (std::size_t i = 0; i < a.equalities.size(); ++i) {
        if (a.equalities[i].normal != b.equalities[i].normal) return false;
        if (a.equalities[i].value != b.equalities[i].value) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("unit square vertex enumeration") {
    HRep<Rat> r;
    r.halfspaces.push_back({{rat(-1), rat(0)}, rat(0)});
    r.halfspaces.push_back({{rat(0), rat(-1)}, rat(0)});
    r.halfspaces.push_back({{rat(1), rat(0)}, rat(1)});
    r.halfspaces.push_back({{rat(0), rat(1)}, rat(1)});
    const auto v = hrep_to_vrep(r);
    const std::vector<VecQ> want = {
        {rat(0), rat(0)}, {rat(0), rat(1)}, {rat(1), rat(0)}, {rat(1), rat(1)}};
    CHECK(v.vertices == want);
}

TEST_CASE("effect square of the classical bit from state constraints") {
    // 0 <= e.w <= 1 for w = (-1,1) and (1,1).
    HRep<Rat> r;
    for (long x : {-1L, 1L}) {
        r.halfspaces.push_back({{rat(x), rat(1)}, rat(1)});
        r.halfspaces.push_back({{rat(-x), rat(-1)}, rat(0)});
    }
    const auto v = hrep_to_vrep(r);
    const std::vector<VecQ> want = {{rat(-1, 2), rat(1, 2)},
                                    {rat(0), rat(0)},
                                    {rat(0), rat(1)},
                                    {rat(1, 2), rat(1, 2)}};
    CHECK(v.vertices == want);
}

TEST_CASE("noisy-bit dual segment") {
    // Effects p*e_+/-, u - p*e_+/- at p = 1/2; states (x, y) with y = 1.
    HRep<Rat> r;
    const std::vector<VecQ> effects = {{rat(1, 4), rat(1, 4)},
                                       {rat(-1, 4), rat(1, 4)},
                                       {rat(-1, 4), rat(3, 4)},
                                       {rat(1, 4), rat(3, 4)}};
    for (const auto& e : effects) r.halfspaces.push_back({e, rat(1)});
    r.equalities.push_back({{rat(0), rat(1)}, rat(1)});
    const auto v = hrep_to_vrep(r);
    const std::vector<VecQ> want = {{rat(-1), rat(1)}, {rat(1), rat(1)}};
    CHECK(v.vertices == want);
}

TEST_CASE("simplex facets") {
    const std::vector<VecQ> tri = {{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(0), rat(1)}};
    const auto h = vrep_to_hrep(tri);
    CHECK(h.equalities.empty());
    CHECK(h.halfspaces.size() == 3);
    for (const auto& hs : h.halfspaces)
        for (const auto& p : tri) CHECK(rat_sign(dot(hs.normal, p) - hs.bound) <= 0);
}

TEST_CASE("effect-square facets are the four slanted bounds") {
    const std::vector<VecQ> sq = {{rat(0), rat(0)},
                                  {rat(0), rat(1)},
                                  {rat(1, 2), rat(1, 2)},
                                  {rat(-1, 2), rat(1, 2)}};
    auto h = vrep_to_hrep(sq);
    REQUIRE(h.halfspaces.size() == 4);
    // Expected: a - b <= 0, -a - b <= 0, a + b <= 1, -a + b <= 1 (canonical).
    auto has = [&](long na, long nb, long bd) {
        for (const auto& hs : h.halfspaces)
            if (hs.normal == VecQ{rat(na), rat(nb)} && hs.bound == bd) return true;
        return false;
    };
    CHECK(has(1, -1, 0));
    CHECK(has(-1, -1, 0));
    CHECK(has(1, 1, 1));
    CHECK(has(-1, 1, 1));
}

TEST_CASE("single point gives equalities only") {
    const auto h = vrep_to_hrep(std::vector<VecQ>{{rat(1), rat(1)}});
    CHECK(h.halfspaces.empty());
    REQUIRE(h.equalities.size() == 2);
    CHECK(h.equalities[0].normal == VecQ{rat(0), rat(1)});
    CHECK(h.equalities[0].value == 1);
    CHECK(h.equalities[1].normal == VecQ{rat(1), rat(0)});
    CHECK(h.equalities[1].value == 1);
}

TEST_CASE("redundant generators are removed") {
    const std::vector<VecQ> pts = {{rat(0), rat(0)},
                                   {rat(1), rat(0)},
                                   {rat(0), rat(1)},
                                   {rat(1), rat(1)},
                                   {rat(1, 2), rat(1, 2)},
                                   {rat(1), rat(1)}};
    const auto p = Polytope<Rat>::from_points(pts);
    CHECK(p.vertices().size() == 4);
}

TEST_CASE("infeasible and unbounded H-regions are reported") {
    HRep<Rat> empty;
    empty.halfspaces.push_back({{rat(1), rat(0)}, rat(0)});
    empty.halfspaces.push_back({{rat(-1), rat(0)}, rat(-1)});
    CHECK_THROWS_AS(hrep_to_vrep(empty), InfeasibleError);

    HRep<Rat> open;
    open.halfspaces.push_back({{rat(1), rat(0)}, rat(1)});
    CHECK_THROWS_AS(hrep_to_vrep(open), UnboundedError);
}

TEST_CASE("round-trip exactness on 200 random polytopes") {
    corpus::Rng rng(20260821);
    for (int i = 0; i < 200; ++i) {
        const auto p = corpus::random_polytope(rng);
        const auto& v0 = p.vertices();
        const auto h0 = p.hrep();
        // H -> V -> H
        const auto v1 = Polytope<Rat>::from_hrep(h0).vertices();
        CHECK(v1 == v0);
        const auto h1 = vrep_to_hrep(v1);
        CHECK(same_hrep(h0, h1));
        // V -> H -> V again from scratch
        const auto p2 = Polytope<Rat>::from_points(v0);
        CHECK(p2.vertices() == v0);
    }
}

TEST_CASE("lp optimum equals brute-force vertex maximum on the corpus") {
    corpus::Rng rng(777);
    for (int i = 0; i < 60; ++i) {
        const auto p = corpus::random_polytope(rng);
        VecQ obj(p.ambient_dim());
        for (auto& c : obj) c = rng.rational(9, 3);
        Rat best = dot(obj, p.vertices()[0]);
        for (const auto& v : p.vertices()) best = std::max(best, dot(obj, v));
        CHECK(lp_value(obj, p.hrep(), LpSense::Max) == best);
        const auto res = lp_optimize(obj, p.hrep(), LpSense::Max);
        CHECK(res.value == best);
        // The witness is one of the polytope's vertices, attaining the value.
        CHECK(dot(obj, res.witness) == best);
        bool is_vertex = false;
        for (const auto& v : p.vertices()) is_vertex = is_vertex || v == res.witness;
        CHECK(is_vertex);
    }
}

TEST_CASE("conversions are deterministic across repeat runs") {
    corpus::Rng rng1(42), rng2(42);
    for (int i = 0; i < 20; ++i) {
        const auto a = corpus::random_polytope(rng1);
        const auto b = corpus::random_polytope(rng2);
        CHECK(a.vertices() == b.vertices());
        CHECK(same_hrep(a.hrep(), b.hrep()));
    }
}

TEST_CASE("lower-dimensional polytope embedded in 3d") {
    // Triangle in the plane z = 2.
    const std::vector<VecQ> tri = {{rat(0), rat(0), rat(2)},
                                   {rat(1), rat(0), rat(2)},
                                   {rat(0), rat(1), rat(2)}};
    const auto p = Polytope<Rat>::from_points(tri);
    CHECK(p.affine_dim() == 2);
    REQUIRE(p.hrep().equalities.size() == 1);
    CHECK(p.hrep().equalities[0].normal == VecQ{rat(0), rat(0), rat(1)});
    CHECK(p.hrep().equalities[0].value == 2);
    CHECK(p.vertices().size() == 3);
    CHECK(p.hrep().halfspaces.size() == 3);
    // Relative interior point: vertex average, still on the plane.
    const auto c = p.relative_interior_point();
    CHECK(c == VecQ{rat(1, 3), rat(1, 3), rat(2)});
    CHECK(p.contains(c));
}

TEST_CASE("polytopes over the field with sqrt 2") {
    // Segment [0, 1+rt2] x {1}: exercise Rt2 through both conversions.
    const std::vector<VecR2> pts = {{Rt2(0), Rt2(1)}, {Rt2(rat(1), rat(1)), Rt2(1)}};
    const auto p = Polytope<Rt2>::from_points(pts);
    CHECK(p.vertices().size() == 2);
    CHECK(p.hrep().equalities.size() == 1);
    CHECK(p.hrep().halfspaces.size() == 2);
    const auto back = Polytope<Rt2>::from_hrep(p.hrep());
    CHECK(back.vertices() == p.vertices());
}

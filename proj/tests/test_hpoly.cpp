#include "doctest.h"

#include "polycal/hpoly.hpp"
#include "polycal/rng.hpp"

#include "test_util.hpp"

using namespace polycal;
using testutil::rv;

namespace {

HPoly unit_box2() { return HPoly::box(rv({0, 0}), rv({1, 1})); }

HPoly segment01() {
    // {x1 = x2, 0 <= x1 <= 1}
    return HPoly(2, {LinRow{rv({1, 0}), Rat(1)}, LinRow{rv({-1, 0}), Rat(0)}},
                 {LinRow{rv({1, -1}), Rat(0)}});
}

} // namespace

TEST_CASE("is_empty spec examples") {
    CHECK(is_empty(HPoly(1, {LinRow{rv({1}), Rat(0)}, LinRow{rv({-1}), Rat(-1)}}, {})));
    CHECK_FALSE(is_empty(unit_box2()));
    CHECK(is_empty(HPoly(1, {}, {LinRow{rv({1}), Rat(0)}, LinRow{rv({1}), Rat(1)}})));
}

TEST_CASE("canonicalize promotes antiparallel pair to an equality") {
    HPoly P(1, {LinRow{rv({1}), Rat(1)}, LinRow{rv({-1}), Rat(-1)}}, {});
    CanonicalHPoly C = canonicalize(P);
    CHECK(C.poly.ineqs().empty());
    REQUIRE(C.poly.eqs().size() == 1);
    CHECK(C.poly.eqs()[0].a == rv({1}));
    CHECK(C.poly.eqs()[0].b == Rat(1));
    CHECK(C.ri_witness == rv({1}));
}

TEST_CASE("canonicalize keeps a full-dimensional box intact") {
    CanonicalHPoly C = canonicalize(unit_box2());
    CHECK(C.poly.eqs().empty());
    CHECK(C.poly.ineqs().size() == 4);
    CHECK(ri_member(C, C.ri_witness));
}

TEST_CASE("canonicalize detects a forced face") {
    HPoly P(2,
            {LinRow{rv({1, 1}), Rat(1)}, LinRow{rv({-1, 0}), Rat(0)}, LinRow{rv({0, -1}), Rat(0)},
             LinRow{rv({-1, -1}), Rat(-1)}},
            {});
    CanonicalHPoly C = canonicalize(P);
    REQUIRE(C.poly.eqs().size() == 1);
    CHECK(C.poly.eqs()[0].a == rv({1, 1}));
    CHECK(C.poly.eqs()[0].b == Rat(1));
    CHECK(set_equal(C.poly, P));
    CHECK(ri_member(C, C.ri_witness));
}

TEST_CASE("affine_hull spec examples") {
    AffineSet a1 = affine_hull(segment01());
    REQUIRE(a1.eqs.size() == 1);
    CHECK(a1.eqs[0].a == rv({1, -1}));
    CHECK(a1.eqs[0].b == Rat(0));
    CHECK(a1.directions.size() == 1);

    AffineSet a2 = affine_hull(unit_box2());
    CHECK(a2.eqs.empty());
    CHECK(a2.directions.size() == 2);

    AffineSet a3 = affine_hull(HPoly::from_point(rv({1, 2})));
    CHECK(a3.directions.empty());
    CHECK(a3.point == rv({1, 2}));

    CHECK_THROWS_AS(affine_hull(HPoly(1, {LinRow{rv({1}), Rat(-1)}, LinRow{rv({-1}), Rat(0)}}, {})),
                    EmptySetError);
}

TEST_CASE("ri_member spec examples") {
    CHECK(ri_member(unit_box2(), rv({Rat(1, 2), Rat(1, 2)})));
    CHECK_FALSE(ri_member(unit_box2(), rv({Rat(0), Rat(1, 2)})));
    CHECK(ri_member(segment01(), rv({Rat(1, 2), Rat(1, 2)})));
    CHECK_FALSE(ri_member(segment01(), rv({Rat(0), Rat(0)})));
}

TEST_CASE("ri_point spec examples") {
    CHECK(ri_member(unit_box2(), ri_point(unit_box2())));
    CHECK(ri_point(HPoly(1, {}, {LinRow{rv({1}), Rat(3)}})) == rv({3}));
    HPoly halfline(1, {LinRow{rv({-1}), Rat(0)}}, {});
    RatVec p = ri_point(halfline);
    CHECK(ri_member(halfline, p));
    CHECK(p[0] > 0);
    CHECK_THROWS_AS(ri_point(HPoly(1, {LinRow{rv({1}), Rat(0)}, LinRow{rv({-1}), Rat(-1)}}, {})),
                    EmptySetError);
}

TEST_CASE("eliminate spec examples") {
    // {(x,y) | y = x, 0 <= x <= 1} projected to x is [0,1]
    HPoly seg = segment01();
    HPoly proj = eliminate(seg, {0});
    CHECK(set_equal(proj, HPoly::interval(Rat(0), Rat(1))));

    // {x + y <= 1, -y <= 0} projected to x is x <= 1
    HPoly P(2, {LinRow{rv({1, 1}), Rat(1)}, LinRow{rv({0, -1}), Rat(0)}}, {});
    CHECK(set_equal(eliminate(P, {0}), HPoly::interval(std::nullopt, Rat(1))));

    // keep {}: a nonempty 0-dimensional residue
    HPoly res = eliminate(unit_box2(), {});
    CHECK(res.dim() == 0);
    CHECK_FALSE(is_empty(res));

    HPoly emptyres = eliminate(HPoly(1, {LinRow{rv({1}), Rat(0)}, LinRow{rv({-1}), Rat(-1)}}, {}), {});
    CHECK(is_empty(emptyres));
}

TEST_CASE("eliminate agrees with the lift LP oracle") {
    Rng rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        int dim = static_cast<int>(rng.int_in(2, 3));
        HPoly P = testutil::random_nonempty_hpoly(rng, dim, 5);
        std::vector<int> keep;
        for (int i = 0; i < dim; ++i)
            if (rng.chance(1, 2)) keep.push_back(i);
        if (keep.empty()) keep.push_back(0);
        HPoly proj = eliminate(P, keep);
        // Points in the projection lift; perturbed points outside do not.
        CanonicalHPoly C = canonicalize(proj);
        for (const auto& p : sample_points(C, 4, rng.split(trial))) {
            CHECK(testutil::lift_lp_in_projection(P, keep, p));
        }
        RatVec outside = C.ri_witness;
        // march away until membership fails (projection may be unbounded)
        for (int step = 1; step <= 8; ++step) {
            outside[0] += Rat(1 << 8);
            if (!member(proj, outside)) {
                CHECK_FALSE(testutil::lift_lp_in_projection(P, keep, outside));
                break;
            }
        }
    }
}

TEST_CASE("linear_image spec examples") {
    RatMat M(1, 2);
    M(0, 0) = 1;
    M(0, 1) = 1;
    CHECK(set_equal(linear_image(unit_box2(), M), HPoly::interval(Rat(0), Rat(2))));
    CHECK(set_equal(linear_image(unit_box2(), RatMat::identity(2)), unit_box2()));

    RatMat D(2, 2);
    D(0, 0) = 2;
    D(1, 1) = 3;
    CHECK(set_equal(linear_image(HPoly::from_point(rv({1, 2})), D), HPoly::from_point(rv({2, 6}))));
}

TEST_CASE("minkowski_sum spec examples") {
    CHECK(set_equal(minkowski_sum(HPoly::interval(Rat(0), Rat(1)), HPoly::interval(Rat(2), Rat(3))),
                    HPoly::interval(Rat(2), Rat(4))));
    HPoly P = unit_box2();
    CHECK(set_equal(minkowski_sum(P, HPoly::from_point(rv({0, 0}))), P));
    CHECK(set_equal(minkowski_sum(HPoly::from_point(rv({1, 0})), HPoly::from_point(rv({0, 1}))),
                    HPoly::from_point(rv({1, 1}))));
    CHECK_THROWS_AS(minkowski_sum(P, HPoly::interval(Rat(0), Rat(1))), DimensionMismatchError);
}

TEST_CASE("intersect, product, slice spec examples") {
    CHECK(set_equal(intersect(HPoly::interval(Rat(0), Rat(2)), HPoly::interval(Rat(1), Rat(3))),
                    HPoly::interval(Rat(1), Rat(2))));
    CHECK(set_equal(product(HPoly::interval(Rat(0), Rat(1)), HPoly::interval(Rat(0), Rat(1))),
                    unit_box2()));
    HPoly sliced = slice(unit_box2(), {0}, rv({Rat(1, 2)}));
    CHECK(set_equal(sliced, HPoly::interval(Rat(0), Rat(1))));
}

TEST_CASE("contains and set_equal spec examples") {
    CHECK(contains(HPoly::interval(Rat(0), Rat(2)), HPoly::interval(Rat(0), Rat(1))));
    CHECK_FALSE(contains(HPoly::interval(Rat(0), Rat(1)), HPoly::interval(Rat(0), Rat(2))));
    CHECK(set_equal(HPoly(1, {LinRow{rv({1}), Rat(1)}, LinRow{rv({1}), Rat(2)}}, {}),
                    HPoly::interval(std::nullopt, Rat(1))));
    // empty sets are contained in everything
    HPoly mt(1, {LinRow{rv({1}), Rat(0)}, LinRow{rv({-1}), Rat(-1)}}, {});
    CHECK(contains(HPoly::interval(Rat(5), Rat(6)), mt));
    CHECK_FALSE(contains(mt, HPoly::interval(Rat(5), Rat(6))));
    auto w = contains_witness(HPoly::interval(Rat(0), Rat(1)), HPoly::interval(Rat(0), Rat(2)));
    REQUIRE(w.has_value());
    CHECK((*w)[0] > 1);
    // witness against an unbounded Q
    auto w2 = contains_witness(HPoly::interval(Rat(0), Rat(1)), HPoly::interval(Rat(0), std::nullopt));
    REQUIRE(w2.has_value());
    CHECK((*w2)[0] > 1);
}

TEST_CASE("ri_intersect_witness spec examples") {
    auto w1 = ri_intersect_witness(HPoly::interval(Rat(0), Rat(2)), HPoly::interval(Rat(1), Rat(3)));
    REQUIRE(w1.has_value());
    CHECK((*w1)[0] > 1);
    CHECK((*w1)[0] < 2);
    CHECK_FALSE(
        ri_intersect_witness(HPoly::interval(Rat(0), Rat(1)), HPoly::interval(Rat(1), Rat(2))).has_value());
    HPoly pt = HPoly::from_point(rv({0}));
    auto w3 = ri_intersect_witness(pt, pt);
    REQUIRE(w3.has_value());
    CHECK(*w3 == rv({0}));
}

TEST_CASE("ri_segment_oracle spec examples") {
    CHECK(ri_segment_oracle(unit_box2(), rv({Rat(1, 2), Rat(1, 2)}), 6, 9));
    CHECK_FALSE(ri_segment_oracle(unit_box2(), rv({0, 0}), 6, 9));
    CHECK(ri_segment_oracle(HPoly::from_point(rv({0})), rv({0}), 6, 9));
    CHECK_THROWS_AS(ri_segment_oracle(unit_box2(), rv({5, 5}), 6, 9), PointNotInSetError);
}

TEST_CASE("canonicalize preserves the point set on random instances") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int dim = static_cast<int>(rng.int_in(1, 3));
        HPoly P = testutil::random_nonempty_hpoly(rng, dim, 6);
        CanonicalHPoly C = canonicalize(P);
        CHECK(set_equal(P, C.poly));
        CHECK(ri_member(C, C.ri_witness));
        // surviving rows all admit strict slack at the witness by definition
        for (const auto& r : C.poly.ineqs()) CHECK(dot(r.a, C.ri_witness) < r.b);
    }
}

TEST_CASE("relative interior membership properties under mixing, sums, projections") {
    Rng rng(472);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = static_cast<int>(rng.int_in(1, 3));
        HPoly P = testutil::random_nonempty_hpoly(rng, dim, 5);
        CanonicalHPoly C = canonicalize(P);
        RatVec a = C.ri_witness;

        // (b): t a + (1-t) x stays in ri for x in P, t in (0,1]
        auto pts = sample_points(C, 4, rng.split(2 * trial));
        for (const auto& x : pts) {
            for (Rat t : {Rat(1, 2), Rat(1, 3), Rat(1)}) {
                RatVec mix = t * a + (Rat(1) - t) * x;
                CHECK(ri_member(C, mix));
            }
        }

        // (f) at membership level: projections of ri points are ri points
        std::vector<int> keep;
        for (int i = 0; i < dim; ++i)
            if (rng.chance(2, 3)) keep.push_back(i);
        if (keep.empty()) keep.push_back(dim - 1);
        HPoly proj = eliminate(P, keep);
        RatVec akeep(static_cast<int>(keep.size()));
        for (size_t i = 0; i < keep.size(); ++i) akeep[static_cast<int>(i)] = a[keep[i]];
        CHECK(ri_member(proj, akeep));

        // (e) at membership level: sums of ri points are ri points of the sum
        HPoly Q = testutil::random_nonempty_hpoly(rng, dim, 4);
        CanonicalHPoly CQ = canonicalize(Q);
        CHECK(ri_member(minkowski_sum(P, Q), a + CQ.ri_witness));
    }
}

TEST_CASE("ri_segment_oracle agrees with ri_member on random instances") {
    Rng rng(888);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = static_cast<int>(rng.int_in(1, 3));
        HPoly P = testutil::random_nonempty_hpoly(rng, dim, 5);
        CanonicalHPoly C = canonicalize(P);
        auto pts = sample_points(C, 5, rng.split(trial));
        for (const auto& x : pts) {
            CHECK(ri_segment_oracle(P, x, 5, rng.split(1000 + trial)) == ri_member(C, x));
        }
    }
}

TEST_CASE("conv_hull_of_points and disjunctive_hull") {
    HPoly tri = conv_hull_of_points({rv({0, 0}), rv({1, 0}), rv({0, 1})});
    CHECK(member(tri, rv({Rat(1, 4), Rat(1, 4)})));
    CHECK_FALSE(member(tri, rv({1, 1})));
    CHECK(set_equal(conv_hull_of_points({rv({2})}), HPoly::from_point(rv({2}))));

    // conv([0,1] ∪ [3,4]) = [0,4]
    HPoly dh = disjunctive_hull({HPoly::interval(Rat(0), Rat(1)), HPoly::interval(Rat(3), Rat(4))});
    CHECK(set_equal(dh, HPoly::interval(Rat(0), Rat(4))));
    // empty parts are ignored
    HPoly mt(1, {LinRow{rv({1}), Rat(0)}, LinRow{rv({-1}), Rat(-1)}}, {});
    CHECK(set_equal(disjunctive_hull({HPoly::interval(Rat(0), Rat(1)), mt}),
                    HPoly::interval(Rat(0), Rat(1))));
}

#include "doctest.h"

#include "polycal/svmap.hpp"
#include "polycal/rng.hpp"

#include "test_util.hpp"

using namespace polycal;
using testutil::rv;

namespace {

// F(x) = [x, ∞): graph {(x,y) | x - y <= 0}
SVMap halfline_map() { return SVMap(1, 1, HPoly(2, {LinRow{rv({1, -1}), Rat(0)}}, {})); }

// F(x) = [-x, ∞)
SVMap neg_halfline_map() { return SVMap(1, 1, HPoly(2, {LinRow{rv({-1, -1}), Rat(0)}}, {})); }

SVMap epi_abs_map() { return gem({MaxAffineFn::abs1()}); }

SVMap random_svmap(Rng& rng, int n, int m) {
    return SVMap(n, m, testutil::random_nonempty_hpoly(rng, n + m, 6));
}

} // namespace

TEST_CASE("dom, rge, value, inverse spec examples") {
    SVMap F = halfline_map();
    CHECK(set_equal(dom(F), HPoly::universe(1)));
    CHECK(set_equal(rge(F), HPoly::universe(1)));
    CHECK(set_equal(value(F, rv({2})), HPoly::interval(Rat(2), std::nullopt)));

    RatMat two(1, 1);
    two(0, 0) = 2;
    SVMap G = SVMap::linear(two);
    SVMap Ginv = inverse(G);
    CHECK(set_equal(value(Ginv, rv({3})), HPoly::from_point(rv({Rat(3, 2)}))));

    SVMap H(1, 1, HPoly(2, {LinRow{rv({1, 0}), Rat(1)}, LinRow{rv({-1, 0}), Rat(0)}},
                        {LinRow{rv({0, 1}), Rat(0)}}));
    CHECK(set_equal(dom(H), HPoly::interval(Rat(0), Rat(1))));
    CHECK(is_empty(value(H, rv({2}))));

    CHECK(set_equal(dom(inverse(F)), rge(F)));
}

TEST_CASE("coderivative of a linear map is the adjoint") {
    RatMat A(2, 2);
    A(0, 0) = 1;
    A(0, 1) = 2;
    A(1, 0) = -1;
    A(1, 1) = 3;
    SVMap F = SVMap::linear(A);
    Rng rng(5);
    for (int t = 0; t < 5; ++t) {
        RatVec x = rng.vec(2, 3, 2);
        RatVec v = rng.vec(2, 3, 2);
        CoderivResult r = coderivative(F, x, matvec(A, x), v);
        RatVec atv(2);
        for (int i = 0; i < 2; ++i) {
            atv[i] = 0;
            for (int j = 0; j < 2; ++j) atv[i] += A(j, i) * v[j];
        }
        CHECK(set_equal(r.u_set, HPoly::from_point(atv)));
    }
    CHECK_THROWS_AS(coderivative(F, rv({0, 0}), rv({1, 1}), rv({0, 0})), NotInGraphError);
}

TEST_CASE("coderivative of E_abs at the kink") {
    SVMap E = epi_abs_map();
    CHECK(set_equal(coderivative(E, rv({0}), rv({0}), rv({1})).u_set, HPoly::interval(Rat(-1), Rat(1))));
    CHECK(is_empty(coderivative(E, rv({0}), rv({0}), rv({-1})).u_set));
    // alpha = 0 picks out the singular subdifferential {0}
    CHECK(set_equal(coderivative(E, rv({0}), rv({0}), rv({0})).u_set, HPoly::from_point(rv({0}))));
}

TEST_CASE("coderivative members invert the nc_oracle on the graph") {
    Rng rng(51);
    for (int trial = 0; trial < 25; ++trial) {
        SVMap F = random_svmap(rng, 1, 1);
        CanonicalHPoly C = canonicalize(F.graph());
        for (const auto& p : sample_points(C, 3, rng.split(trial))) {
            RatVec x = subvec(p, 0, 1), y = subvec(p, 1, 1);
            RatVec v = rng.vec(1, 3, 2);
            CoderivResult r = coderivative(F, x, y, v);
            for (int k = 0; k < 3; ++k) {
                RatVec u = rng.vec(1, 3, 2);
                CHECK(member(r.u_set, u) == nc_oracle(F.graph(), p, concat(u, -v)));
            }
        }
    }
}

TEST_CASE("map_sum spec examples") {
    SVMap S = map_sum(halfline_map(), neg_halfline_map());
    // (F1+F2)(x) = [|x|... actually [x,∞)+[-x,∞) = [0,∞) pointwise? No:
    // [x,∞) + [-x,∞) = [x - x, ∞) = [0, ∞). Graph: y >= 0 for every x... at
    // x the sum of minima is 0, so value(S,x) = [0,∞).
    CHECK(set_equal(value(S, rv({3})), HPoly::interval(Rat(0), std::nullopt)));
    CHECK(set_equal(dom(S), HPoly::universe(1)));

    // F2 ≡ {0}
    SVMap Z(1, 1, HPoly(2, {}, {LinRow{rv({0, 1}), Rat(0)}}));
    CHECK(set_equal(map_sum(halfline_map(), Z).graph(), halfline_map().graph()));

    RatMat A(1, 1), B(1, 1);
    A(0, 0) = 2;
    B(0, 0) = 3;
    SVMap AB = map_sum(SVMap::linear(A), SVMap::linear(B));
    CHECK(set_equal(value(AB, rv({1})), HPoly::from_point(rv({5}))));

    CHECK(set_equal(dom(S), intersect(dom(halfline_map()), dom(neg_halfline_map()))));
}

TEST_CASE("compose spec examples") {
    RatMat A(1, 1), B(1, 1);
    A(0, 0) = 2;
    B(0, 0) = 3;
    SVMap BA = compose(SVMap::linear(B), SVMap::linear(A));
    CHECK(set_equal(value(BA, rv({1})), HPoly::from_point(rv({6}))));

    SVMap idm = SVMap::linear(RatMat::identity(1));
    CHECK(set_equal(compose(idm, halfline_map()).graph(), halfline_map().graph()));

    // F(x) = [x,∞), G(y) = [y,∞): (G∘F)(x) = [x,∞)
    SVMap GF = compose(halfline_map(), halfline_map());
    CHECK(set_equal(GF.graph(), halfline_map().graph()));
}

TEST_CASE("preimage spec examples") {
    SVMap E = epi_abs_map();
    CHECK(set_equal(preimage(E, HPoly::interval(std::nullopt, Rat(1))), HPoly::interval(Rat(-1), Rat(1))));
    CHECK(set_equal(preimage(E, HPoly::universe(1)), dom(E)));
    CHECK(is_empty(preimage(E, HPoly::interval(std::nullopt, Rat(-2)))));
}

TEST_CASE("gem spec examples") {
    CHECK(set_equal(epi_abs_map().graph(), epigraph(MaxAffineFn::abs1())));

    SVMap G2 = gem({MaxAffineFn::abs1(), MaxAffineFn::abs1()});
    CHECK(G2.in_dim() == 1);
    CHECK(G2.out_dim() == 2);
    CHECK(member(G2.graph(), rv({0, 1, 2})));
    CHECK_FALSE(member(G2.graph(), rv({1, 0, 2})));

    // graph ri membership instances
    CHECK(ri_member(G2.graph(), rv({0, 1, 1})));
    CHECK_FALSE(ri_member(G2.graph(), rv({0, 0, 1})));
}

TEST_CASE("optimal_value spec examples") {
    // F(x) = [x,∞), φ(y) = max(y, 0): μ(x) = max(x, 0)
    MaxAffineFn phi(1, {AffinePiece{rv({1}), Rat(0)}, AffinePiece{rv({0}), Rat(0)}}, HPoly::universe(1));
    OptValueFn mu = optimal_value(halfline_map(), phi);
    CHECK(mu(rv({-3})) == ExtReal::finite(Rat(0)));
    CHECK(mu(rv({Rat(5, 2)})) == ExtReal::finite(Rat(5, 2)));

    // φ ≡ 0: μ = 0 on dom F, +∞ outside
    SVMap H(1, 1, HPoly(2, {LinRow{rv({1, 0}), Rat(1)}, LinRow{rv({-1, 0}), Rat(0)}},
                        {LinRow{rv({0, 1}), Rat(0)}}));
    OptValueFn mu0 = optimal_value(H, MaxAffineFn::zero_on(HPoly::universe(1)));
    CHECK(mu0(rv({Rat(1, 2)})) == ExtReal::finite(Rat(0)));
    CHECK(mu0(rv({2})) == ExtReal::infinity());

    // F(x) = R, φ(y) = y: improper
    SVMap full(1, 1, HPoly(2, {}, {}));
    MaxAffineFn lin(1, {AffinePiece{rv({1}), Rat(0)}}, HPoly::universe(1));
    CHECK_THROWS_AS(optimal_value(full, lin), ImproperValueError);
}

TEST_CASE("argmin_set spec examples") {
    MaxAffineFn phi(1, {AffinePiece{rv({1}), Rat(0)}, AffinePiece{rv({0}), Rat(0)}}, HPoly::universe(1));
    CHECK(set_equal(argmin_set(halfline_map(), phi, rv({-1})), HPoly::interval(Rat(-1), Rat(0))));
    CHECK(set_equal(argmin_set(halfline_map(), phi, rv({1})), HPoly::from_point(rv({1}))));

    MaxAffineFn c(1, {AffinePiece{rv({0}), Rat(7)}}, HPoly::universe(1));
    CHECK(set_equal(argmin_set(halfline_map(), c, rv({2})), HPoly::interval(Rat(2), std::nullopt)));
}

TEST_CASE("decomposition_set and intermediate_set spec examples") {
    // F1 = F2 = E_abs at (0, 0): the only split of 0 is (0, 0)
    SVMap E = epi_abs_map();
    CHECK(set_equal(decomposition_set(E, E, rv({0}), rv({0})), HPoly::from_point(rv({0, 0}))));

    // F1(x) = F2(x) = [x,∞) at (0, 2): {(y1, 2-y1) | 0 ≤ y1 ≤ 2}
    HPoly D = decomposition_set(halfline_map(), halfline_map(), rv({0}), rv({2}));
    CHECK(member(D, rv({1, 1})));
    CHECK(member(D, rv({0, 2})));
    CHECK_FALSE(member(D, rv({-1, 3})));
    CHECK_FALSE(member(D, rv({1, 2})));
    CHECK_THROWS_AS(decomposition_set(E, E, rv({0}), rv({-1})), NotInGraphError);

    RatMat A(1, 1), B(1, 1);
    A(0, 0) = 2;
    B(0, 0) = 3;
    CHECK(set_equal(intermediate_set(SVMap::linear(A), SVMap::linear(B), rv({1}), rv({6})),
                    HPoly::from_point(rv({2}))));
    CHECK_THROWS_AS(intermediate_set(SVMap::linear(A), SVMap::linear(B), rv({1}), rv({7})),
                    NotInGraphError);
}

TEST_CASE("coderiv_union_over spec examples") {
    SVMap E = epi_abs_map();
    // singleton v-set degenerates to the plain coderivative
    HPoly single = HPoly::from_point(rv({1}));
    CHECK(set_equal(coderiv_union_over(E, rv({0}), rv({0}), single),
                    coderivative(E, rv({0}), rv({0}), rv({1})).u_set));
    // empty v-set gives the empty union
    HPoly mt(1, {LinRow{rv({1}), Rat(0)}, LinRow{rv({-1}), Rat(-1)}}, {});
    CHECK(is_empty(coderiv_union_over(E, rv({0}), rv({0}), mt)));
    // Vset = [0,1]: union of alpha*[-1,1] = [-1,1]
    CHECK(set_equal(coderiv_union_over(E, rv({0}), rv({0}), HPoly::interval(Rat(0), Rat(1))),
                    HPoly::interval(Rat(-1), Rat(1))));
}

TEST_CASE("sum rule hand instance: F1(x)=[x,inf), F2(x)=[-x,inf) at (0,0), v=1") {
    SVMap F1 = halfline_map(), F2 = neg_halfline_map();
    SVMap S = map_sum(F1, F2);
    HPoly lhs = coderivative(S, rv({0}), rv({0}), rv({1})).u_set;
    CHECK(set_equal(lhs, HPoly::from_point(rv({0}))));
    HPoly r1 = coderivative(F1, rv({0}), rv({0}), rv({1})).u_set;
    HPoly r2 = coderivative(F2, rv({0}), rv({0}), rv({1})).u_set;
    CHECK(set_equal(r1, HPoly::from_point(rv({1}))));
    CHECK(set_equal(r2, HPoly::from_point(rv({-1}))));
    CHECK(set_equal(lhs, minkowski_sum(r1, r2)));
}

TEST_CASE("chain rule hand instance: linear maps compose through adjoints") {
    RatMat A(1, 1), B(1, 1);
    A(0, 0) = 2;
    B(0, 0) = 3;
    SVMap F = SVMap::linear(A), G = SVMap::linear(B);
    SVMap C = compose(G, F);
    for (Rat w : {Rat(1), Rat(-2), Rat(1, 3)}) {
        HPoly lhs = coderivative(C, rv({1}), rv({6}), rv({w})).u_set;
        CHECK(set_equal(lhs, HPoly::from_point(rv({6 * w}))));
        HPoly rhs = coderiv_chain_rhs(F, G, rv({1}), rv({2}), rv({6}), rv({w}));
        CHECK(set_equal(lhs, rhs));
    }
}

TEST_CASE("sublevel normal cone hand instance: f=|.|, lambda=1, xbar=1") {
    MaxAffineFn f = MaxAffineFn::abs1();
    HPoly L = sublevel_set(f, Rat(1));
    ConeGen lhs = normal_cone(L, rv({1}));
    HPoly lhsH = cone_hrep(lhs);
    CHECK(set_equal(lhsH, HPoly::interval(Rat(0), std::nullopt)));
    HPoly rhs = coderiv_union_over(gem({f}), rv({1}), rv({1}), HPoly::interval(Rat(0), std::nullopt));
    CHECK(set_equal(lhsH, rhs));
}

TEST_CASE("graph ri equals domain-and-value ri on random mappings") {
    Rng rng(301);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 2));
        int m = static_cast<int>(rng.int_in(1, 2));
        SVMap F = random_svmap(rng, n, m);
        CanonicalHPoly gC = canonicalize(F.graph());
        CanonicalHPoly dC = canonicalize(dom(F));
        auto pts = sample_points(gC, 5, rng.split(trial));
        for (auto p : sample_points(gC, 2, rng.split(7000 + trial))) {
            p[0] += Rat(1, 3); // probe around the graph as well
            pts.push_back(p);
        }
        for (const auto& p : pts) {
            RatVec x = subvec(p, 0, n), y = subvec(p, n, m);
            bool lhs = member(F.graph(), p) && ri_member(gC, p);
            bool rhs = false;
            if (ri_member(dC, x)) {
                HPoly Fx = value(F, x);
                rhs = !is_empty(Fx) && ri_member(Fx, y);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("ri graph points land in the ri of the range, random mappings") {
    Rng rng(302);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 2));
        int m = static_cast<int>(rng.int_in(1, 2));
        SVMap F = random_svmap(rng, n, m);
        CanonicalHPoly gC = canonicalize(F.graph());
        CanonicalHPoly rC = canonicalize(rge(F));
        for (const auto& p : sample_points(gC, 5, rng.split(trial))) {
            if (!ri_member(gC, p)) continue;
            CHECK(ri_member(rC, subvec(p, n, m)));
        }
    }
}

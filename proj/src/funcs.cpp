#include "polycal/funcs.hpp"

#include <cassert>

namespace polycal {

MaxAffineFn::MaxAffineFn(int n, std::vector<AffinePiece> pieces, HPoly dom)
    : n_(n), pieces_(std::move(pieces)), dom_(std::move(dom)) {
    if (pieces_.empty()) throw MalformedInstanceError("max-affine function needs a piece");
    if (dom_.dim() != n) throw DimensionMismatchError("function domain dimension");
    for (const auto& p : pieces_)
        if (p.a.dim() != n) throw DimensionMismatchError("piece dimension");
    if (is_empty(dom_)) throw EmptySetError("function domain is empty");
}

MaxAffineFn MaxAffineFn::abs1() {
    return MaxAffineFn(1, {AffinePiece{RatVec{Rat(1)}, Rat(0)}, AffinePiece{RatVec{Rat(-1)}, Rat(0)}},
                       HPoly::universe(1));
}

MaxAffineFn MaxAffineFn::zero_on(HPoly dom) {
    int n = dom.dim();
    return MaxAffineFn(n, {AffinePiece{zero_vec(n), Rat(0)}}, std::move(dom));
}

ExtReal eval(const MaxAffineFn& f, const RatVec& x) {
    if (x.dim() != f.arg_dim()) throw DimensionMismatchError("eval point");
    if (!member(f.dom(), x)) return ExtReal::infinity();
    Rat best = dot(f.pieces()[0].a, x) + f.pieces()[0].b;
    for (size_t k = 1; k < f.pieces().size(); ++k) {
        Rat v = dot(f.pieces()[k].a, x) + f.pieces()[k].b;
        if (v > best) best = v;
    }
    return ExtReal::finite(best);
}

HPoly epigraph(const MaxAffineFn& f) {
    const int n = f.arg_dim();
    std::vector<LinRow> ineqs, eqs;
    for (const auto& r : f.dom().ineqs()) ineqs.push_back(LinRow{concat(r.a, RatVec{Rat(0)}), r.b});
    for (const auto& r : f.dom().eqs()) eqs.push_back(LinRow{concat(r.a, RatVec{Rat(0)}), r.b});
    for (const auto& p : f.pieces()) ineqs.push_back(LinRow{concat(p.a, RatVec{Rat(-1)}), -p.b});
    return HPoly(n + 1, std::move(ineqs), std::move(eqs));
}

HPoly subdiff_from_epi(const HPoly& epi, const RatVec& xbar, const Rat& fxbar) {
    ConeGen nc = normal_cone(epi, concat(xbar, RatVec{fxbar}));
    HPoly H = cone_hrep(nc);
    return slice(H, {epi.dim() - 1}, RatVec{Rat(-1)});
}

HPoly subdiff(const MaxAffineFn& f, const RatVec& xbar) {
    ExtReal fx = eval(f, xbar);
    if (!fx.is_finite) throw NotInDomainError("subdiff point");
    return subdiff_from_epi(epigraph(f), xbar, fx.value);
}

ConeGen singular_subdiff(const MaxAffineFn& f, const RatVec& xbar) {
    ExtReal fx = eval(f, xbar);
    if (!fx.is_finite) throw NotInDomainError("singular_subdiff point");
    const int n = f.arg_dim();
    ConeGen nc = normal_cone(epigraph(f), concat(xbar, RatVec{fx.value}));
    std::vector<RatVec> gens, lin;
    for (const auto& g : nc.generators) {
        assert(g[n] <= 0);
        if (g[n] == 0) gens.push_back(subvec(g, 0, n));
    }
    for (const auto& l : nc.lineality) {
        assert(l[n] == 0);
        lin.push_back(subvec(l, 0, n));
    }
    return make_cone(n, std::move(gens), std::move(lin));
}

HPoly scaled_subdiff(const Rat& alpha, const MaxAffineFn& f, const RatVec& xbar) {
    if (alpha < 0) throw NegativeScalarError("scaled_subdiff needs alpha >= 0");
    if (alpha == 0) return cone_hrep(singular_subdiff(f, xbar));
    return scale(subdiff(f, xbar), alpha);
}

bool sd_oracle(const MaxAffineFn& f, const RatVec& xbar, const RatVec& v) {
    if (v.dim() != f.arg_dim()) throw DimensionMismatchError("sd_oracle vector");
    ExtReal fx = eval(f, xbar);
    if (!fx.is_finite) throw NotInDomainError("sd_oracle point");
    HPoly epi = epigraph(f);
    RatVec obj = concat(-v, RatVec{Rat(1)}); // λ - ⟨v,x⟩
    LPResult r = lp_solve(obj, epi.ineqs(), epi.eqs(), LPSense::Min);
    return r.status == LPStatus::Optimal && r.value == fx.value - dot(v, xbar);
}

HPoly sublevel_set(const MaxAffineFn& f, const Rat& lambda) {
    std::vector<LinRow> ineqs = f.dom().ineqs();
    for (const auto& p : f.pieces()) ineqs.push_back(LinRow{p.a, lambda - p.b});
    return HPoly(f.arg_dim(), std::move(ineqs), f.dom().eqs());
}

MaxAffineFn add(const MaxAffineFn& f1, const MaxAffineFn& f2) {
    if (f1.arg_dim() != f2.arg_dim()) throw DimensionMismatchError("add dimensions");
    std::vector<AffinePiece> pieces;
    for (const auto& p : f1.pieces())
        for (const auto& q : f2.pieces())
            pieces.push_back(AffinePiece{p.a + q.a, p.b + q.b});
    return MaxAffineFn(f1.arg_dim(), std::move(pieces), intersect(f1.dom(), f2.dom()));
}

HPoly subdiff_direct(const MaxAffineFn& f, const RatVec& xbar) {
    ExtReal fx = eval(f, xbar);
    if (!fx.is_finite) throw NotInDomainError("subdiff_direct point");
    std::vector<RatVec> active;
    for (const auto& p : f.pieces())
        if (dot(p.a, xbar) + p.b == fx.value) active.push_back(p.a);
    assert(!active.empty());
    HPoly hull = conv_hull_of_points(active);
    HPoly ncdom = cone_hrep(normal_cone(f.dom(), xbar));
    return minkowski_sum(hull, ncdom);
}

} // namespace polycal

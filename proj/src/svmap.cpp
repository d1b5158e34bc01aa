#include "polycal/svmap.hpp"

#include <cassert>

namespace polycal {

namespace {

std::vector<int> range_idx(int from, int count) {
    std::vector<int> idx(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) idx[static_cast<size_t>(i)] = from + i;
    return idx;
}

// Re-embed a row of an r-dim polyhedron into `total` dims at `offset`.
LinRow embed(const LinRow& r, int total, int offset) {
    RatVec a(total);
    for (int j = 0; j < r.a.dim(); ++j) a[offset + j] = r.a[j];
    return LinRow{std::move(a), r.b};
}

} // namespace

SVMap::SVMap(int n, int m, HPoly graph) : n_(n), m_(m), graph_(std::move(graph)) {
    if (n < 0 || m < 0 || graph_.dim() != n + m) throw DimensionMismatchError("svmap dimensions");
    if (is_empty(graph_)) throw EmptySetError("svmap graph is empty");
}

SVMap SVMap::linear(const RatMat& M) {
    const int m = M.rows(), n = M.cols();
    std::vector<LinRow> eqs;
    for (int i = 0; i < m; ++i) {
        RatVec a(n + m);
        for (int j = 0; j < n; ++j) a[j] = -M(i, j);
        a[n + i] = 1;
        eqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    return SVMap(n, m, HPoly(n + m, {}, std::move(eqs)));
}

HPoly dom(const SVMap& F) { return eliminate(F.graph(), range_idx(0, F.in_dim())); }

HPoly rge(const SVMap& F) { return eliminate(F.graph(), range_idx(F.in_dim(), F.out_dim())); }

HPoly value(const SVMap& F, const RatVec& xbar) {
    if (xbar.dim() != F.in_dim()) throw DimensionMismatchError("value point");
    return slice(F.graph(), range_idx(0, F.in_dim()), xbar);
}

SVMap inverse(const SVMap& F) {
    const int n = F.in_dim(), m = F.out_dim();
    auto flip = [&](const LinRow& r) {
        RatVec a(n + m);
        for (int j = 0; j < m; ++j) a[j] = r.a[n + j];
        for (int j = 0; j < n; ++j) a[m + j] = r.a[j];
        return LinRow{std::move(a), r.b};
    };
    std::vector<LinRow> ineqs, eqs;
    for (const auto& r : F.graph().ineqs()) ineqs.push_back(flip(r));
    for (const auto& r : F.graph().eqs()) eqs.push_back(flip(r));
    return SVMap(m, n, HPoly(n + m, std::move(ineqs), std::move(eqs)));
}

CoderivResult coderivative(const SVMap& F, const RatVec& xbar, const RatVec& ybar, const RatVec& v) {
    if (v.dim() != F.out_dim()) throw DimensionMismatchError("coderivative vector");
    RatVec pt = concat(xbar, ybar);
    if (pt.dim() != F.graph().dim() || !member(F.graph(), pt))
        throw NotInGraphError("coderivative base point");
    ConeGen nc = normal_cone(F.graph(), pt);
    HPoly H = cone_hrep(nc);
    HPoly u_set = slice(H, range_idx(F.in_dim(), F.out_dim()), -v);
    return CoderivResult{std::move(u_set), std::move(nc)};
}

SVMap map_sum(const SVMap& F1, const SVMap& F2) {
    if (F1.in_dim() != F2.in_dim() || F1.out_dim() != F2.out_dim())
        throw DimensionMismatchError("map_sum dimensions");
    const int n = F1.in_dim(), m = F1.out_dim();
    // Variables (x, y, y1, y2).
    const int total = n + 3 * m;
    std::vector<LinRow> ineqs, eqs;
    for (int i = 0; i < m; ++i) {
        RatVec a(total);
        a[n + i] = 1;
        a[n + m + i] = -1;
        a[n + 2 * m + i] = -1;
        eqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    auto lift = [&](const LinRow& r, int yoff) {
        RatVec a(total);
        for (int j = 0; j < n; ++j) a[j] = r.a[j];
        for (int j = 0; j < m; ++j) a[yoff + j] = r.a[n + j];
        return LinRow{std::move(a), r.b};
    };
    for (const auto& r : F1.graph().ineqs()) ineqs.push_back(lift(r, n + m));
    for (const auto& r : F1.graph().eqs()) eqs.push_back(lift(r, n + m));
    for (const auto& r : F2.graph().ineqs()) ineqs.push_back(lift(r, n + 2 * m));
    for (const auto& r : F2.graph().eqs()) eqs.push_back(lift(r, n + 2 * m));
    HPoly graph = eliminate(HPoly(total, std::move(ineqs), std::move(eqs)), range_idx(0, n + m));
    return SVMap(n, m, std::move(graph));
}

SVMap compose(const SVMap& G, const SVMap& F) {
    if (F.out_dim() != G.in_dim()) throw DimensionMismatchError("compose dimensions");
    const int n = F.in_dim(), m = F.out_dim(), q = G.out_dim();
    // Variables (x, z, y); keep (x, z).
    const int total = n + q + m;
    std::vector<LinRow> ineqs, eqs;
    auto liftF = [&](const LinRow& r) {
        RatVec a(total);
        for (int j = 0; j < n; ++j) a[j] = r.a[j];
        for (int j = 0; j < m; ++j) a[n + q + j] = r.a[n + j];
        return LinRow{std::move(a), r.b};
    };
    auto liftG = [&](const LinRow& r) {
        RatVec a(total);
        for (int j = 0; j < m; ++j) a[n + q + j] = r.a[j];
        for (int j = 0; j < q; ++j) a[n + j] = r.a[m + j];
        return LinRow{std::move(a), r.b};
    };
    for (const auto& r : F.graph().ineqs()) ineqs.push_back(liftF(r));
    for (const auto& r : F.graph().eqs()) eqs.push_back(liftF(r));
    for (const auto& r : G.graph().ineqs()) ineqs.push_back(liftG(r));
    for (const auto& r : G.graph().eqs()) eqs.push_back(liftG(r));
    HPoly graph = eliminate(HPoly(total, std::move(ineqs), std::move(eqs)), range_idx(0, n + q));
    return SVMap(n, q, std::move(graph));
}

HPoly preimage(const SVMap& F, const HPoly& theta) {
    if (theta.dim() != F.out_dim()) throw DimensionMismatchError("preimage dimensions");
    const int n = F.in_dim();
    HPoly lifted = intersect(F.graph(), product(HPoly::universe(n), theta));
    return eliminate(lifted, range_idx(0, n));
}

SVMap gem(const std::vector<MaxAffineFn>& fs) {
    if (fs.empty()) throw MalformedInstanceError("gem needs at least one function");
    const int n = fs[0].arg_dim();
    const int m = static_cast<int>(fs.size());
    for (const auto& f : fs)
        if (f.arg_dim() != n) throw DimensionMismatchError("gem input dimensions");
    const int total = n + m;
    std::vector<LinRow> ineqs, eqs;
    for (int i = 0; i < m; ++i) {
        const MaxAffineFn& f = fs[static_cast<size_t>(i)];
        for (const auto& r : f.dom().ineqs()) ineqs.push_back(embed(r, total, 0));
        for (const auto& r : f.dom().eqs()) eqs.push_back(embed(r, total, 0));
        for (const auto& p : f.pieces()) {
            RatVec a(total);
            for (int j = 0; j < n; ++j) a[j] = p.a[j];
            a[n + i] = -1;
            ineqs.push_back(LinRow{std::move(a), -p.b});
        }
    }
    return SVMap(n, m, HPoly(total, std::move(ineqs), std::move(eqs)));
}

ExtReal OptValueFn::operator()(const RatVec& xbar) const {
    if (xbar.dim() != n) throw DimensionMismatchError("optimal value point");
    // min λ s.t. (x̄, λ) ∈ epi μ
    std::vector<LinRow> ineqs, eqs;
    auto cut = [&](const LinRow& r) {
        Rat b = r.b;
        for (int j = 0; j < n; ++j) b -= r.a[j] * xbar[j];
        return LinRow{RatVec{r.a[n]}, b};
    };
    for (const auto& r : epi.ineqs()) ineqs.push_back(cut(r));
    for (const auto& r : epi.eqs()) eqs.push_back(cut(r));
    LPResult res = lp_solve(RatVec{Rat(1)}, ineqs, eqs, LPSense::Min);
    if (res.status == LPStatus::Infeasible) return ExtReal::infinity();
    assert(res.status == LPStatus::Optimal && "guarded optimal value function");
    return ExtReal::finite(res.value);
}

OptValueFn optimal_value(const SVMap& F, const MaxAffineFn& phi) {
    if (phi.arg_dim() != F.out_dim()) throw DimensionMismatchError("optimal_value dimensions");
    const int n = F.in_dim(), m = F.out_dim();

    // Properness guard: a horizontal recession direction (0, d_y) of
    // gph F ∩ (R^n × dom φ) along which every piece of φ strictly decreases
    // would make μ(x) = -∞ at every x with a nonempty slice.
    {
        std::vector<LinRow> ineqs, eqs;
        auto tail = [&](const LinRow& r) {
            RatVec a(m);
            for (int j = 0; j < m; ++j) a[j] = r.a[n + j];
            return LinRow{std::move(a), Rat(0)};
        };
        for (const auto& r : F.graph().ineqs()) ineqs.push_back(tail(r));
        for (const auto& r : F.graph().eqs()) eqs.push_back(tail(r));
        for (const auto& r : phi.dom().ineqs()) ineqs.push_back(LinRow{r.a, Rat(0)});
        for (const auto& r : phi.dom().eqs()) eqs.push_back(LinRow{r.a, Rat(0)});
        for (const auto& p : phi.pieces()) ineqs.push_back(LinRow{p.a, Rat(-1)});
        if (lp_feasible_point(m, ineqs, eqs).has_value())
            throw ImproperValueError("optimal value function takes -infinity");
    }

    // epi μ = projection of {(x, y, λ) | (x,y) ∈ gph F, y ∈ dom φ, φ-pieces ≤ λ}.
    const int total = n + m + 1;
    std::vector<LinRow> ineqs, eqs;
    for (const auto& r : F.graph().ineqs()) ineqs.push_back(embed(r, total, 0));
    for (const auto& r : F.graph().eqs()) eqs.push_back(embed(r, total, 0));
    for (const auto& r : phi.dom().ineqs()) ineqs.push_back(embed(r, total, n));
    for (const auto& r : phi.dom().eqs()) eqs.push_back(embed(r, total, n));
    for (const auto& p : phi.pieces()) {
        RatVec a(total);
        for (int j = 0; j < m; ++j) a[n + j] = p.a[j];
        a[n + m] = -1;
        ineqs.push_back(LinRow{std::move(a), -p.b});
    }
    std::vector<int> keep = range_idx(0, n);
    keep.push_back(n + m);
    return OptValueFn(n, eliminate(HPoly(total, std::move(ineqs), std::move(eqs)), keep));
}

HPoly argmin_set(const SVMap& F, const MaxAffineFn& phi, const RatVec& xbar) {
    const int m = F.out_dim();
    HPoly Fx = value(F, xbar);
    // μ(x̄) by one LP over (y, t).
    std::vector<LinRow> ineqs, eqs;
    for (const auto& r : Fx.ineqs()) ineqs.push_back(LinRow{concat(r.a, RatVec{Rat(0)}), r.b});
    for (const auto& r : Fx.eqs()) eqs.push_back(LinRow{concat(r.a, RatVec{Rat(0)}), r.b});
    for (const auto& r : phi.dom().ineqs()) ineqs.push_back(LinRow{concat(r.a, RatVec{Rat(0)}), r.b});
    for (const auto& r : phi.dom().eqs()) eqs.push_back(LinRow{concat(r.a, RatVec{Rat(0)}), r.b});
    for (const auto& p : phi.pieces()) ineqs.push_back(LinRow{concat(p.a, RatVec{Rat(-1)}), -p.b});
    RatVec obj(m + 1);
    obj[m] = 1;
    LPResult res = lp_solve(obj, ineqs, eqs, LPSense::Min);
    if (res.status == LPStatus::Infeasible) throw NotInDomainError("argmin_set point outside dom mu");
    if (res.status == LPStatus::Unbounded) throw ImproperValueError("argmin_set on improper instance");
    Rat mu = res.value;

    std::vector<LinRow> sineqs = Fx.ineqs(), seqs = Fx.eqs();
    for (const auto& r : phi.dom().ineqs()) sineqs.push_back(r);
    for (const auto& r : phi.dom().eqs()) seqs.push_back(r);
    for (const auto& p : phi.pieces()) sineqs.push_back(LinRow{p.a, mu - p.b});
    return HPoly(m, std::move(sineqs), std::move(seqs));
}

HPoly decomposition_set(const SVMap& F1, const SVMap& F2, const RatVec& xbar, const RatVec& ybar) {
    if (F1.in_dim() != F2.in_dim() || F1.out_dim() != F2.out_dim())
        throw DimensionMismatchError("decomposition_set dimensions");
    const int m = F1.out_dim();
    HPoly V1 = value(F1, xbar), V2 = value(F2, xbar);
    HPoly prod = product(V1, V2);
    std::vector<LinRow> eqs = prod.eqs();
    for (int i = 0; i < m; ++i) {
        RatVec a(2 * m);
        a[i] = 1;
        a[m + i] = 1;
        eqs.push_back(LinRow{std::move(a), ybar[i]});
    }
    HPoly S(2 * m, prod.ineqs(), std::move(eqs));
    if (is_empty(S)) throw NotInGraphError("decomposition_set: (xbar, ybar) not in gph(F1+F2)");
    return S;
}

HPoly intermediate_set(const SVMap& F, const SVMap& G, const RatVec& xbar, const RatVec& zbar) {
    if (F.out_dim() != G.in_dim()) throw DimensionMismatchError("intermediate_set dimensions");
    HPoly M = intersect(value(F, xbar), value(inverse(G), zbar));
    if (is_empty(M)) throw NotInGraphError("intermediate_set: (xbar, zbar) not in gph(G∘F)");
    return M;
}

HPoly coderiv_union_over(const SVMap& F, const RatVec& xbar, const RatVec& ybar, const HPoly& vset) {
    if (vset.dim() != F.out_dim()) throw DimensionMismatchError("coderiv_union_over vset");
    RatVec pt = concat(xbar, ybar);
    if (pt.dim() != F.graph().dim() || !member(F.graph(), pt))
        throw NotInGraphError("coderiv_union_over base point");
    const int n = F.in_dim(), m = F.out_dim();
    ConeGen nc = normal_cone(F.graph(), pt);
    HPoly H = cone_hrep(nc); // over (u, t) with t standing for -v
    std::vector<LinRow> ineqs = H.ineqs(), eqs = H.eqs();
    // v ∈ Vset with v = -t.
    for (const auto& r : vset.ineqs()) {
        RatVec a(n + m);
        for (int j = 0; j < m; ++j) a[n + j] = -r.a[j];
        ineqs.push_back(LinRow{std::move(a), r.b});
    }
    for (const auto& r : vset.eqs()) {
        RatVec a(n + m);
        for (int j = 0; j < m; ++j) a[n + j] = -r.a[j];
        eqs.push_back(LinRow{std::move(a), r.b});
    }
    return eliminate(HPoly(n + m, std::move(ineqs), std::move(eqs)), range_idx(0, n));
}

HPoly chain_rhs_from_hreps(const HPoly& HF, const HPoly& HG, int n, int m, int q, const RatVec& w) {
    // Assemble over (u, v).
    std::vector<LinRow> ineqs, eqs;
    auto liftF = [&](const LinRow& r) {
        RatVec a(n + m);
        for (int j = 0; j < n; ++j) a[j] = r.a[j];
        for (int j = 0; j < m; ++j) a[n + j] = -r.a[n + j]; // s := -v
        return LinRow{std::move(a), r.b};
    };
    auto liftG = [&](const LinRow& r) {
        RatVec a(n + m);
        Rat b = r.b;
        for (int j = 0; j < m; ++j) a[n + j] = r.a[j];
        for (int j = 0; j < q; ++j) b += r.a[m + j] * w[j]; // t := -w
        return LinRow{std::move(a), b};
    };
    for (const auto& r : HF.ineqs()) ineqs.push_back(liftF(r));
    for (const auto& r : HF.eqs()) eqs.push_back(liftF(r));
    for (const auto& r : HG.ineqs()) ineqs.push_back(liftG(r));
    for (const auto& r : HG.eqs()) eqs.push_back(liftG(r));
    return eliminate(HPoly(n + m, std::move(ineqs), std::move(eqs)), range_idx(0, n));
}

HPoly coderiv_chain_rhs(const SVMap& F, const SVMap& G, const RatVec& xbar, const RatVec& ybar,
                        const RatVec& zbar, const RatVec& w) {
    const int n = F.in_dim(), m = F.out_dim(), q = G.out_dim();
    if (w.dim() != q) throw DimensionMismatchError("chain rhs vector");
    RatVec ptF = concat(xbar, ybar);
    RatVec ptG = concat(ybar, zbar);
    if (!member(F.graph(), ptF) || !member(G.graph(), ptG))
        throw NotInGraphError("chain rhs base points");
    HPoly HF = cone_hrep(normal_cone(F.graph(), ptF)); // over (u, s), s = -v
    HPoly HG = cone_hrep(normal_cone(G.graph(), ptG)); // over (v, t), t = -w
    return chain_rhs_from_hreps(HF, HG, n, m, q, w);
}

HPoly coderiv_slice(const HPoly& nc_hrep, int n, int m, const RatVec& v) {
    if (nc_hrep.dim() != n + m || v.dim() != m) throw DimensionMismatchError("coderiv_slice");
    return slice(nc_hrep, range_idx(n, m), -v);
}

} // namespace polycal

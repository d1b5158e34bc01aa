#include "polycal/cones.hpp"

#include <algorithm>
#include <cassert>

namespace polycal {

namespace {

bool vec_less(const RatVec& x, const RatVec& y) {
    for (int i = 0; i < x.dim(); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

std::vector<RatVec> normalize_rays(int dim, std::vector<RatVec> rays, bool canonical_sign) {
    std::vector<RatVec> out;
    for (auto& r : rays) {
        if (r.dim() != dim) throw DimensionMismatchError("ray dimension");
        RatVec p = primitive(r);
        if (p.is_zero()) continue;
        if (canonical_sign) {
            for (int i = 0; i < p.dim(); ++i) {
                if (p[i] == 0) continue;
                if (p[i] < 0) p = -p;
                break;
            }
        }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), vec_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

ConeGen make_cone(int dim, std::vector<RatVec> generators, std::vector<RatVec> lineality) {
    ConeGen c;
    c.dim = dim;
    c.generators = normalize_rays(dim, std::move(generators), false);
    c.lineality = normalize_rays(dim, std::move(lineality), true);
    return c;
}

ConeGen normal_cone(const CanonicalHPoly& C, const RatVec& xbar) {
    if (!member(C.poly, xbar)) throw PointNotInSetError("normal_cone base point");
    std::vector<RatVec> gens, lin;
    for (const auto& r : C.poly.ineqs())
        if (dot(r.a, xbar) == r.b) gens.push_back(r.a);
    for (const auto& r : C.poly.eqs()) lin.push_back(r.a);
    return make_cone(C.poly.dim(), std::move(gens), std::move(lin));
}

ConeGen normal_cone(const HPoly& P, const RatVec& xbar) {
    if (xbar.dim() != P.dim()) throw DimensionMismatchError("normal_cone point");
    if (!member(P, xbar)) throw PointNotInSetError("normal_cone base point");
    return normal_cone(canonicalize(P), xbar);
}

bool cone_member(const ConeGen& C, const RatVec& v) {
    if (v.dim() != C.dim) throw DimensionMismatchError("cone_member vector");
    const int g = static_cast<int>(C.generators.size());
    const int l = static_cast<int>(C.lineality.size());
    std::vector<LinRow> ineqs, eqs;
    for (int d = 0; d < C.dim; ++d) {
        RatVec a(g + l);
        for (int i = 0; i < g; ++i) a[i] = C.generators[static_cast<size_t>(i)][d];
        for (int j = 0; j < l; ++j) a[g + j] = C.lineality[static_cast<size_t>(j)][d];
        eqs.push_back(LinRow{std::move(a), v[d]});
    }
    for (int i = 0; i < g; ++i) {
        RatVec a(g + l);
        a[i] = -1;
        ineqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    return lp_feasible_point(g + l, ineqs, eqs).has_value();
}

bool nc_oracle(const HPoly& P, const RatVec& xbar, const RatVec& v) {
    if (v.dim() != P.dim()) throw DimensionMismatchError("nc_oracle vector");
    if (!member(P, xbar)) throw PointNotInSetError("nc_oracle base point");
    LPResult r = lp_solve(v, P.ineqs(), P.eqs(), LPSense::Max);
    return r.status == LPStatus::Optimal && r.value == dot(v, xbar);
}

HPoly cone_hrep(const ConeGen& C) {
    const int n = C.dim;
    const int g = static_cast<int>(C.generators.size());
    const int l = static_cast<int>(C.lineality.size());
    std::vector<LinRow> ineqs, eqs;
    for (int d = 0; d < n; ++d) {
        RatVec a(n + g + l);
        a[d] = 1;
        for (int i = 0; i < g; ++i) a[n + i] = -C.generators[static_cast<size_t>(i)][d];
        for (int j = 0; j < l; ++j) a[n + g + j] = -C.lineality[static_cast<size_t>(j)][d];
        eqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    for (int i = 0; i < g; ++i) {
        RatVec a(n + g + l);
        a[n + i] = -1;
        ineqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    std::vector<int> keep(static_cast<size_t>(n));
    for (int d = 0; d < n; ++d) keep[static_cast<size_t>(d)] = d;
    return eliminate(HPoly(n + g + l, std::move(ineqs), std::move(eqs)), keep);
}

ConeGen cone_sum(const ConeGen& C1, const ConeGen& C2) {
    if (C1.dim != C2.dim) throw DimensionMismatchError("cone_sum dimensions");
    std::vector<RatVec> gens = C1.generators, lin = C1.lineality;
    gens.insert(gens.end(), C2.generators.begin(), C2.generators.end());
    lin.insert(lin.end(), C2.lineality.begin(), C2.lineality.end());
    return make_cone(C1.dim, std::move(gens), std::move(lin));
}

bool cone_is_subspace(const ConeGen& C) {
    for (const auto& gen : C.generators)
        if (!cone_member(C, -gen)) return false;
    return true;
}

namespace {

RatVec min_point_below(const HPoly& S, const RatVec& v, const Rat& bound) {
    // A point of S with ⟨v,·⟩ strictly below `bound` (caller guarantees one).
    std::vector<LinRow> ineqs = S.ineqs();
    ineqs.push_back(LinRow{v, bound - 1});
    auto p = lp_feasible_point(S.dim(), ineqs, S.eqs());
    assert(p.has_value());
    return *p;
}

RatVec max_point_above(const HPoly& S, const RatVec& v, const Rat& bound) {
    std::vector<LinRow> ineqs = S.ineqs();
    ineqs.push_back(LinRow{-v, -(bound + 1)});
    auto p = lp_feasible_point(S.dim(), ineqs, S.eqs());
    assert(p.has_value());
    return *p;
}

} // namespace

std::optional<SeparationCertificate> proper_separation(const HPoly& P, const HPoly& Q) {
    if (P.dim() != Q.dim()) throw DimensionMismatchError("separation dimensions");
    if (is_empty(P) || is_empty(Q)) throw EmptySetError("proper_separation of empty set");

    HPoly D = minkowski_sum(P, negate(Q));
    RatVec origin = zero_vec(D.dim());

    RatVec v;
    bool found = false;
    if (!member(D, origin)) {
        // A violated row of D separates outright.
        for (const auto& r : D.ineqs()) {
            if (r.b < 0) { v = r.a; found = true; break; }
        }
        if (!found) {
            for (const auto& r : D.eqs()) {
                if (r.b == 0) continue;
                v = r.b < 0 ? r.a : -r.a;
                found = true;
                break;
            }
        }
        assert(found);
    } else {
        // 0 ∈ D: proper separation exists iff 0 ∉ ri(D); any surviving
        // inequality row active at 0 supplies the separating normal.
        CanonicalHPoly CD = canonicalize(D);
        for (const auto& r : CD.poly.ineqs()) {
            if (r.b == 0) { v = r.a; found = true; break; }
        }
        if (!found) return std::nullopt; // 0 ∈ ri(D): relative interiors meet
    }

    SeparationCertificate cert;
    cert.v = v;
    LPResult supP = lp_solve(v, P.ineqs(), P.eqs(), LPSense::Max);
    LPResult infQ = lp_solve(v, Q.ineqs(), Q.eqs(), LPSense::Min);
    assert(supP.status == LPStatus::Optimal && infQ.status == LPStatus::Optimal);
    cert.sup_p = supP.value;
    cert.inf_q = infQ.value;
    assert(cert.sup_p <= cert.inf_q);

    LPResult infP = lp_solve(v, P.ineqs(), P.eqs(), LPSense::Min);
    LPResult supQ = lp_solve(v, Q.ineqs(), Q.eqs(), LPSense::Max);
    if (infP.status == LPStatus::Optimal && supQ.status == LPStatus::Optimal) {
        assert(infP.value < supQ.value);
        cert.strict_w1 = infP.point;
        cert.strict_w2 = supQ.point;
    } else if (infP.status != LPStatus::Optimal) {
        RatVec q = *lp_feasible_point(Q.dim(), Q.ineqs(), Q.eqs());
        cert.strict_w2 = q;
        cert.strict_w1 = min_point_below(P, v, dot(v, q));
    } else {
        RatVec p = infP.point;
        cert.strict_w1 = p;
        cert.strict_w2 = max_point_above(Q, v, dot(v, p));
    }
    assert(verify_separation(P, Q, cert));
    return cert;
}

bool verify_separation(const HPoly& P, const HPoly& Q, const SeparationCertificate& cert) {
    LPResult supP = lp_solve(cert.v, P.ineqs(), P.eqs(), LPSense::Max);
    LPResult infQ = lp_solve(cert.v, Q.ineqs(), Q.eqs(), LPSense::Min);
    if (supP.status != LPStatus::Optimal || infQ.status != LPStatus::Optimal) return false;
    if (supP.value != cert.sup_p || infQ.value != cert.inf_q) return false;
    if (!(cert.sup_p <= cert.inf_q)) return false;
    if (!member(P, cert.strict_w1) || !member(Q, cert.strict_w2)) return false;
    return dot(cert.v, cert.strict_w1) < dot(cert.v, cert.strict_w2);
}

} // namespace polycal

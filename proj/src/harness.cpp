#include "polycal/harness.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "polycal/rng.hpp"

namespace polycal {

namespace {

struct IdRow {
    TheoremId id;
    const char* name;
    bool qualified;
};

const IdRow kIdTable[] = {
    {TheoremId::RI_PROPS, "RI_PROPS", true},
    {TheoremId::SEPARATION, "SEPARATION", false},
    {TheoremId::NC_INTERSECTION, "NC_INTERSECTION", true},
    {TheoremId::ROCKAFELLAR, "ROCKAFELLAR", false},
    {TheoremId::RI_RANGE, "RI_RANGE", false},
    {TheoremId::GEM_RI, "GEM_RI", true},
    {TheoremId::EPI_RI, "EPI_RI", false},
    {TheoremId::EPI_CODERIV, "EPI_CODERIV", false},
    {TheoremId::GEM_CODERIV, "GEM_CODERIV", true},
    {TheoremId::OVF_SUBDIFF, "OVF_SUBDIFF", true},
    {TheoremId::COMPOSITE_SUBDIFF, "COMPOSITE_SUBDIFF", true},
    {TheoremId::SUM_RULE, "SUM_RULE", true},
    {TheoremId::SUBDIFF_SUM, "SUBDIFF_SUM", true},
    {TheoremId::CHAIN_RULE, "CHAIN_RULE", true},
    {TheoremId::PREIMAGE_NC, "PREIMAGE_NC", true},
    {TheoremId::SUBLEVEL_NC, "SUBLEVEL_NC", true},
};

} // namespace

std::string theorem_name(TheoremId id) {
    for (const auto& row : kIdTable)
        if (row.id == id) return row.name;
    return "UNKNOWN";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    std::string up = name;
    for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (const auto& row : kIdTable)
        if (up == row.name) return row.id;
    return std::nullopt;
}

std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> ids;
    for (const auto& row : kIdTable) ids.push_back(row.id);
    return ids;
}

bool has_qualification(TheoremId id) {
    for (const auto& row : kIdTable)
        if (row.id == id) return row.qualified;
    return false;
}

io::Json Instance::to_json() const {
    io::CheckDoc doc;
    doc.theorem = theorem_name(id);
    for (const auto& P : polys) doc.instances.push_back(io::InstanceDoc{P});
    for (const auto& f : fns) doc.instances.push_back(io::InstanceDoc{f});
    for (const auto& F : maps) doc.instances.push_back(io::InstanceDoc{F});
    doc.points = points;
    doc.params = params;
    io::InstanceDoc wrapper{std::move(doc)};
    return io::Json::parse(io::serialize_instance(wrapper));
}

std::string Instance::digest() const { return io::digest(to_json().dump()); }

namespace {

// ---------------------------------------------------------------- generators

constexpr int kMaxDim = 3;
constexpr int kMaxRows = 8;

void check_caps(Dims dims) {
    if (dims.n < 1 || dims.n > kMaxDim || dims.m < 1 || dims.m > kMaxDim)
        throw CapsExceededError("dims capped at 3");
}

// Nonempty polyhedron anchored at `anchor`. strict ⇒ every inequality has
// slack ≥ 1/2 there (so the anchor lies in the relative interior).
HPoly poly_at(Rng& rng, const RatVec& anchor, int max_rows, bool strict, bool allow_eq) {
    const int dim = anchor.dim();
    std::vector<LinRow> ineqs, eqs;
    int rows = static_cast<int>(rng.int_in(1, max_rows));
    for (int r = 0; r < rows; ++r) {
        RatVec a = rng.nonzero_vec(dim, 4, 2);
        Rat slack = strict || rng.chance(3, 4) ? rat(rng.int_in(1, 6), 2) : Rat(0);
        ineqs.push_back(LinRow{a, dot(a, anchor) + slack});
    }
    if (allow_eq && dim >= 2 && rng.chance(1, 5)) {
        RatVec c = rng.nonzero_vec(dim, 3, 2);
        eqs.push_back(LinRow{c, dot(c, anchor)});
    }
    return HPoly(dim, std::move(ineqs), std::move(eqs));
}

// Polyhedron inside {sign·x_axis ≤ sign·anchor_axis} whose relative interior
// lies strictly inside the open half-space; the anchor sits on the face.
HPoly face_poly(Rng& rng, const RatVec& anchor, int axis, int sign, int max_rows) {
    HPoly base = poly_at(rng, anchor, max_rows - 1, /*strict=*/true, /*allow_eq=*/false);
    std::vector<LinRow> ineqs = base.ineqs();
    RatVec a(anchor.dim());
    a[axis] = sign;
    ineqs.push_back(LinRow{a, Rat(sign) * anchor[axis]});
    return HPoly(anchor.dim(), std::move(ineqs), {});
}

MaxAffineFn fn_at(Rng& rng, int n, HPoly dom) {
    int k = static_cast<int>(rng.int_in(1, 3));
    std::vector<AffinePiece> pieces;
    for (int i = 0; i < k; ++i) pieces.push_back(AffinePiece{rng.vec(n, 4, 2), rng.rat(4, 2)});
    return MaxAffineFn(n, std::move(pieces), std::move(dom));
}

MaxAffineFn fn_any(Rng& rng, int n) {
    if (rng.chance(1, 2)) return fn_at(rng, n, HPoly::universe(n));
    return fn_at(rng, n, poly_at(rng, rng.vec(n, 4, 2), 4, rng.chance(1, 2), true));
}

// Real-valued convex function bounded below: pieces come in ±a pairs plus a
// random extra, so every direction increases some piece.
MaxAffineFn coercive_fn(Rng& rng, int n) {
    std::vector<AffinePiece> pieces;
    RatVec a = rng.nonzero_vec(n, 3, 2);
    Rat b = rng.rat(3, 2);
    pieces.push_back(AffinePiece{a, b});
    pieces.push_back(AffinePiece{-a, b});
    for (int j = 0; j < n; ++j) {
        pieces.push_back(AffinePiece{unit_vec(n, j), rng.rat(2, 2)});
        pieces.push_back(AffinePiece{-unit_vec(n, j), rng.rat(2, 2)});
    }
    return MaxAffineFn(n, std::move(pieces), HPoly::universe(n));
}

SVMap map_at(Rng& rng, int n, int m, const RatVec& anchor_xy, bool strict, bool allow_eq = true) {
    return SVMap(n, m, poly_at(rng, anchor_xy, 6, strict, allow_eq));
}

std::string rat_param(const Rat& r) { return rat_to_string(r); }

// ---------------------------------------------------------------- comparisons

struct SetCmp {
    bool equal = true;
    RatVec pt;
    std::string side;
};

SetCmp compare_hpoly(const HPoly& lhs, const HPoly& rhs) {
    if (auto w = contains_witness(lhs, rhs)) return {false, *w, "rhs"};
    if (auto w = contains_witness(rhs, lhs)) return {false, *w, "lhs"};
    return {};
}

HPoly maybe_corrupt(const HPoly& rhs, bool corrupt) {
    if (!corrupt) return rhs;
    return translate(rhs, unit_vec(rhs.dim(), 0));
}

Verdict base_verdict(TheoremId id, const Instance& inst, uint64_t seed) {
    Verdict v;
    v.theorem = id;
    v.instance_digest = inst.digest();
    v.seed = seed;
    return v;
}

void record_mismatch(Verdict& v, const std::string& lhs_desc, const std::string& rhs_desc,
                     const SetCmp& cmp) {
    v.outcome = Outcome::Mismatch;
    v.mismatch = MismatchInfo{lhs_desc, rhs_desc, cmp.pt, cmp.side};
}

// Falsifier hygiene: the recorded point must lie in exactly one of the two
// sets it is compared against.
bool mismatch_reverifies(const HPoly& lhs, const HPoly& rhs, const SetCmp& cmp) {
    return member(lhs, cmp.pt) != member(rhs, cmp.pt);
}

bool compare_and_record(Verdict& v, const HPoly& lhs, const HPoly& rhs, const std::string& lhs_desc,
                        const std::string& rhs_desc, bool corrupt) {
    HPoly used = maybe_corrupt(rhs, corrupt);
    SetCmp cmp = compare_hpoly(lhs, used);
    if (cmp.equal) return true;
    assert(mismatch_reverifies(lhs, used, cmp));
    record_mismatch(v, lhs_desc, rhs_desc, cmp);
    return false;
}

// Exact equality of two finitely generated cones: mutual generator
// membership plus H-rep containment both ways (two independent routes).
bool compare_cones_record(Verdict& v, const ConeGen& lhs, const ConeGen& rhs,
                          const std::string& lhs_desc, const std::string& rhs_desc) {
    auto rays_of = [](const ConeGen& c) {
        std::vector<RatVec> rays = c.generators;
        for (const auto& l : c.lineality) {
            rays.push_back(l);
            rays.push_back(-l);
        }
        return rays;
    };
    for (const auto& g : rays_of(lhs)) {
        if (!cone_member(rhs, g)) {
            record_mismatch(v, lhs_desc, rhs_desc, SetCmp{false, g, "lhs"});
            return false;
        }
    }
    for (const auto& g : rays_of(rhs)) {
        if (!cone_member(lhs, g)) {
            record_mismatch(v, lhs_desc, rhs_desc, SetCmp{false, g, "rhs"});
            return false;
        }
    }
    SetCmp cmp = compare_hpoly(cone_hrep(lhs), cone_hrep(rhs));
    if (!cmp.equal) {
        record_mismatch(v, lhs_desc, rhs_desc, cmp);
        return false;
    }
    return true;
}

// Membership-level biconditional bookkeeping: a disagreeing probe point is
// the falsifier (it satisfies exactly one of the two predicates).
void record_membership_mismatch(Verdict& v, const std::string& lhs_desc, const std::string& rhs_desc,
                                const RatVec& pt, bool lhs_holds) {
    v.outcome = Outcome::Mismatch;
    v.mismatch = MismatchInfo{lhs_desc, rhs_desc, pt, lhs_holds ? "lhs" : "rhs"};
}

// Probe points in and around a polyhedron: in-set samples first, then
// perturbed variants until `count` probes exist (degenerate sets may not
// have many distinct points of their own).
std::vector<RatVec> probes(const CanonicalHPoly& C, int count, uint64_t seed) {
    std::vector<RatVec> pts = sample_points(C, count, seed);
    if (C.poly.dim() == 0 || pts.empty()) return pts;
    Rng rng(derive_seed(seed, 0x9e));
    size_t in_count = pts.size();
    size_t want = static_cast<size_t>(count) + 3;
    for (size_t i = 0; pts.size() < want; ++i) {
        RatVec p = pts[i % in_count];
        int coord = static_cast<int>(rng.below(static_cast<uint64_t>(p.dim())));
        p[coord] += rat(rng.int_in(-3, 3) * 2 + 1, rng.int_in(2, 4));
        pts.push_back(std::move(p));
    }
    return pts;
}

// -------------------------------------------------------------- gen per id

Instance gen_two_polys(TheoremId id, Dims dims, Regime regime, Rng& rng) {
    Instance inst;
    inst.id = id;
    int dim = static_cast<int>(rng.int_in(1, dims.n));
    RatVec anchor = rng.vec(dim, 4, 2);
    if (regime == Regime::Qualified) {
        inst.polys.push_back(poly_at(rng, anchor, 5, true, true));
        inst.polys.push_back(poly_at(rng, anchor, 5, true, true));
    } else {
        int axis = static_cast<int>(rng.below(static_cast<uint64_t>(dim)));
        inst.polys.push_back(face_poly(rng, anchor, axis, +1, 5));
        inst.polys.push_back(face_poly(rng, anchor, axis, -1, 5));
    }
    return inst;
}

Instance gen_separation(Dims dims, Rng& rng, bool disjoint) {
    Instance inst;
    inst.id = TheoremId::SEPARATION;
    int dim = static_cast<int>(rng.int_in(1, dims.n));
    RatVec anchor = rng.vec(dim, 4, 2);
    if (disjoint) {
        int axis = static_cast<int>(rng.below(static_cast<uint64_t>(dim)));
        inst.polys.push_back(face_poly(rng, anchor, axis, +1, 5));
        inst.polys.push_back(face_poly(rng, anchor, axis, -1, 5));
        inst.params["kind"] = "disjoint";
    } else {
        inst.polys.push_back(poly_at(rng, anchor, 5, true, true));
        inst.polys.push_back(poly_at(rng, anchor, 5, true, true));
        inst.params["kind"] = "overlap";
    }
    return inst;
}

Instance gen_nc_intersection(Dims dims, Regime regime, Rng& rng) {
    Instance inst;
    inst.id = TheoremId::NC_INTERSECTION;
    int dim = static_cast<int>(rng.int_in(1, dims.n));
    RatVec anchor = rng.vec(dim, 4, 2);
    if (regime == Regime::Qualified) {
        int k = static_cast<int>(rng.int_in(2, 3));
        for (int i = 0; i < k; ++i) inst.polys.push_back(poly_at(rng, anchor, 4, true, true));
    } else {
        int axis = static_cast<int>(rng.below(static_cast<uint64_t>(dim)));
        inst.polys.push_back(face_poly(rng, anchor, axis, +1, 4));
        inst.polys.push_back(face_poly(rng, anchor, axis, -1, 4));
    }
    return inst;
}

Instance gen_svmap_only(TheoremId id, Dims dims, Rng& rng) {
    Instance inst;
    inst.id = id;
    int n = static_cast<int>(rng.int_in(1, dims.n));
    int m = static_cast<int>(rng.int_in(1, dims.m));
    RatVec anchor = rng.vec(n + m, 4, 2);
    inst.maps.push_back(map_at(rng, n, m, anchor, rng.chance(1, 2)));
    return inst;
}

Instance gen_gem(TheoremId id, Dims dims, Regime regime, Rng& rng) {
    Instance inst;
    inst.id = id;
    int n = static_cast<int>(rng.int_in(1, dims.n));
    int m = static_cast<int>(rng.int_in(1, std::min(dims.m, 3)));
    RatVec anchor = rng.vec(n, 4, 2);
    if (regime == Regime::Qualified) {
        for (int i = 0; i < m; ++i) {
            HPoly dom = rng.chance(1, 3) ? HPoly::universe(n) : poly_at(rng, anchor, 3, true, false);
            inst.fns.push_back(fn_at(rng, n, std::move(dom)));
        }
    } else {
        if (m < 2) m = 2;
        int axis = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        inst.fns.push_back(fn_at(rng, n, face_poly(rng, anchor, axis, +1, 3)));
        inst.fns.push_back(fn_at(rng, n, face_poly(rng, anchor, axis, -1, 3)));
        for (int i = 2; i < m; ++i) inst.fns.push_back(fn_at(rng, n, HPoly::universe(n)));
    }
    return inst;
}

Instance gen_fn_only(TheoremId id, Dims dims, Rng& rng) {
    Instance inst;
    inst.id = id;
    int n = static_cast<int>(rng.int_in(1, dims.n));
    inst.fns.push_back(fn_any(rng, n));
    return inst;
}

Instance gen_ovf(Dims dims, Regime regime, Rng& rng) {
    Instance inst;
    inst.id = TheoremId::OVF_SUBDIFF;
    int n = static_cast<int>(rng.int_in(1, dims.n));
    int m = static_cast<int>(rng.int_in(1, dims.m));
    RatVec px = rng.vec(n, 3, 2);
    RatVec py = rng.vec(m, 3, 2);
    if (regime == Regime::Qualified) {
        inst.maps.push_back(map_at(rng, n, m, concat(px, py), true));
        if (rng.chance(1, 2)) {
            // bounded domain keeps the infimum finite everywhere
            Rat r = rat(rng.int_in(2, 5), 1);
            RatVec lo(m), hi(m);
            for (int j = 0; j < m; ++j) {
                lo[j] = py[j] - r;
                hi[j] = py[j] + r;
            }
            inst.fns.push_back(fn_at(rng, m, HPoly::box(lo, hi)));
        } else {
            inst.fns.push_back(coercive_fn(rng, m));
        }
    } else {
        // graphs and φ-domains meeting only along a y-face
        int axis = static_cast<int>(rng.below(static_cast<uint64_t>(m)));
        HPoly base = poly_at(rng, concat(px, py), 5, true, false);
        std::vector<LinRow> rows = base.ineqs();
        RatVec a(n + m);
        a[n + axis] = -1;
        rows.push_back(LinRow{a, -py[axis]}); // y_axis >= py_axis on the graph
        inst.maps.push_back(SVMap(n, m, HPoly(n + m, std::move(rows), {})));
        inst.fns.push_back(fn_at(rng, m, face_poly(rng, py, axis, +1, 4)));
    }
    return inst;
}

Instance gen_composite(Dims dims, Regime regime, Rng& rng) {
    Instance inst;
    inst.id = TheoremId::COMPOSITE_SUBDIFF;
    int n = static_cast<int>(rng.int_in(1, dims.n));
    int m = static_cast<int>(rng.int_in(1, std::min(dims.m, 3)));
    if (regime == Regime::Qualified) {
        for (int i = 0; i < m; ++i) inst.fns.push_back(fn_at(rng, n, HPoly::universe(n)));
        // φ nondecreasing componentwise with full domain: gradients ≥ 0
        int k = static_cast<int>(rng.int_in(1, 3));
        std::vector<AffinePiece> pieces;
        for (int i = 0; i < k; ++i) {
            RatVec g(m);
            for (int j = 0; j < m; ++j) g[j] = rat(rng.int_in(0, 4), rng.int_in(1, 2));
            pieces.push_back(AffinePiece{std::move(g), rng.rat(3, 2)});
        }
        inst.fns.push_back(MaxAffineFn(m, std::move(pieces), HPoly::universe(m)));
    } else {
        // f1 has minimum 0 at a known point; dom φ = {y_1 ≤ 0} pins the
        // qualification shut (no λ_1 with f_1 < λ_1 < 0 exists).
        RatVec p = rng.vec(n, 2, 1);
        RatVec a = rng.nonzero_vec(n, 3, 2);
        std::vector<AffinePiece> f1{AffinePiece{a, -dot(a, p)}, AffinePiece{-a, dot(a, p)}};
        inst.fns.push_back(MaxAffineFn(n, std::move(f1), HPoly::universe(n)));
        for (int i = 1; i < m; ++i) inst.fns.push_back(fn_at(rng, n, HPoly::universe(n)));
        std::vector<LinRow> domrows{LinRow{unit_vec(m, 0), Rat(0)}};
        RatVec g(m);
        for (int j = 0; j < m; ++j) g[j] = rat(rng.int_in(0, 3), 1);
        inst.fns.push_back(MaxAffineFn(m, {AffinePiece{std::move(g), Rat(0)}},
                                       HPoly(m, std::move(domrows), {})));
        inst.points.push_back(p); // x̄ with f_1(x̄) = 0 on the φ-domain face
    }
    inst.params["m"] = std::to_string(m);
    return inst;
}

Instance gen_sum_rule(Dims dims, Regime regime, Rng& rng) {
    Instance inst;
    inst.id = TheoremId::SUM_RULE;
    int n = static_cast<int>(rng.int_in(1, dims.n));
    int m = static_cast<int>(rng.int_in(1, dims.m));
    RatVec px = rng.vec(n, 3, 2);
    if (regime == Regime::Qualified) {
        // full-dimensional graphs keep value sets (and so decomposition sets)
        // of positive dimension at relative-interior base points
        inst.maps.push_back(map_at(rng, n, m, concat(px, rng.vec(m, 3, 2)), true, false));
        inst.maps.push_back(map_at(rng, n, m, concat(px, rng.vec(m, 3, 2)), true, false));
    } else {
        int axis = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        auto graph_in_halfspace = [&](int sign) {
            HPoly base = poly_at(rng, concat(px, rng.vec(m, 3, 2)), 5, true, false);
            std::vector<LinRow> rows = base.ineqs();
            RatVec a(n + m);
            a[axis] = sign;
            rows.push_back(LinRow{a, Rat(sign) * px[axis]});
            return SVMap(n, m, HPoly(n + m, std::move(rows), {}));
        };
        inst.maps.push_back(graph_in_halfspace(+1));
        inst.maps.push_back(graph_in_halfspace(-1));
    }
    return inst;
}

Instance gen_subdiff_sum(Dims dims, Regime regime, Rng& rng) {
    Instance inst;
    inst.id = TheoremId::SUBDIFF_SUM;
    int n = static_cast<int>(rng.int_in(1, dims.n));
    RatVec p = rng.vec(n, 3, 2);
    if (regime == Regime::Qualified) {
        for (int i = 0; i < 2; ++i) {
            HPoly dom = rng.chance(1, 3) ? HPoly::universe(n) : poly_at(rng, p, 4, true, true);
            inst.fns.push_back(fn_at(rng, n, std::move(dom)));
        }
        inst.points.push_back(p);
    } else {
        int axis = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
        inst.fns.push_back(fn_at(rng, n, face_poly(rng, p, axis, +1, 4)));
        inst.fns.push_back(fn_at(rng, n, face_poly(rng, p, axis, -1, 4)));
        inst.points.push_back(p); // still in dom f1 ∩ dom f2
    }
    return inst;
}

Instance gen_chain(Dims dims, Regime regime, Rng& rng) {
    Instance inst;
    inst.id = TheoremId::CHAIN_RULE;
    int n = static_cast<int>(rng.int_in(1, dims.n));
    int m = static_cast<int>(rng.int_in(1, dims.m));
    int q = static_cast<int>(rng.int_in(1, dims.m));
    RatVec py = rng.vec(m, 3, 2);
    if (regime == Regime::Qualified) {
        inst.maps.push_back(map_at(rng, n, m, concat(rng.vec(n, 3, 2), py), true, false));
        inst.maps.push_back(map_at(rng, m, q, concat(py, rng.vec(q, 3, 2)), true, false));
    } else {
        int axis = static_cast<int>(rng.below(static_cast<uint64_t>(m)));
        // F's graph forces y_axis ≥ c, G's forces y_axis ≤ c; the ri's of
        // rge(F) and dom(G) then sit in opposite open half-spaces.
        auto bounded_graph = [&](bool is_f, int sign) {
            RatVec anchor = is_f ? concat(rng.vec(n, 3, 2), py) : concat(py, rng.vec(q, 3, 2));
            HPoly base = poly_at(rng, anchor, 5, true, false);
            std::vector<LinRow> rows = base.ineqs();
            RatVec a(anchor.dim());
            a[(is_f ? n : 0) + axis] = sign;
            rows.push_back(LinRow{a, Rat(sign) * py[axis]});
            return HPoly(anchor.dim(), std::move(rows), {});
        };
        inst.maps.push_back(SVMap(n, m, bounded_graph(true, -1)));
        inst.maps.push_back(SVMap(m, q, bounded_graph(false, +1)));
    }
    return inst;
}

Instance gen_preimage(Dims dims, Regime regime, Rng& rng) {
    Instance inst;
    inst.id = TheoremId::PREIMAGE_NC;
    int n = static_cast<int>(rng.int_in(1, dims.n));
    int m = static_cast<int>(rng.int_in(1, dims.m));
    RatVec py = rng.vec(m, 3, 2);
    if (regime == Regime::Qualified) {
        inst.maps.push_back(map_at(rng, n, m, concat(rng.vec(n, 3, 2), py), true));
        inst.polys.push_back(poly_at(rng, py, 4, true, true));
    } else {
        int axis = static_cast<int>(rng.below(static_cast<uint64_t>(m)));
        HPoly base = poly_at(rng, concat(rng.vec(n, 3, 2), py), 5, true, false);
        std::vector<LinRow> rows = base.ineqs();
        RatVec a(n + m);
        a[n + axis] = -1;
        rows.push_back(LinRow{a, -py[axis]});
        inst.maps.push_back(SVMap(n, m, HPoly(n + m, std::move(rows), {})));
        inst.polys.push_back(face_poly(rng, py, axis, +1, 4));
    }
    return inst;
}

Instance gen_sublevel(Dims dims, Regime regime, Rng& rng) {
    Instance inst;
    inst.id = TheoremId::SUBLEVEL_NC;
    int n = static_cast<int>(rng.int_in(1, dims.n));
    for (int attempt = 0; attempt < 32; ++attempt) {
        MaxAffineFn f = rng.chance(1, 2) ? coercive_fn(rng, n)
                                         : fn_at(rng, n, poly_at(rng, rng.vec(n, 3, 2), 4, true, false));
        CanonicalHPoly domC = canonicalize(f.dom());
        if (regime == Regime::Violated) {
            // λ = min f: no x̂ with f(x̂) < λ exists
            HPoly epi = epigraph(f);
            RatVec obj(n + 1);
            obj[n] = 1;
            LPResult r = lp_solve(obj, epi.ineqs(), epi.eqs(), LPSense::Min);
            if (r.status != LPStatus::Optimal) continue;
            inst.fns.push_back(f);
            inst.points.push_back(subvec(r.point, 0, n));
            inst.params["lambda"] = rat_param(r.value);
            return inst;
        }
        // pick x̄ on the boundary of a sublevel set: λ := f(x̄) for a sampled
        // x̄ that is not a minimizer over ri(dom f)
        auto pts = sample_points(domC, 6, rng.next());
        for (const auto& x : pts) {
            ExtReal fx = eval(f, x);
            if (!fx.is_finite) continue;
            // ∃ x̂ ∈ ri(dom f) with f(x̂) < λ, decided by a slack LP
            std::vector<LinRow> ineqs, eqs;
            for (const auto& r : domC.poly.ineqs())
                ineqs.push_back(LinRow{concat(r.a, RatVec{Rat(1)}), r.b});
            for (const auto& r : domC.poly.eqs())
                eqs.push_back(LinRow{concat(r.a, RatVec{Rat(0)}), r.b});
            for (const auto& p : f.pieces())
                ineqs.push_back(LinRow{concat(p.a, RatVec{Rat(1)}), fx.value - p.b});
            RatVec cap(n + 1);
            cap[n] = 1;
            ineqs.push_back(LinRow{cap, Rat(1)});
            RatVec obj(n + 1);
            obj[n] = 1;
            LPResult r = lp_solve(obj, ineqs, eqs, LPSense::Max);
            if (r.status == LPStatus::Optimal && r.value > 0) {
                inst.fns.push_back(f);
                inst.points.push_back(x);
                inst.params["lambda"] = rat_param(fx.value);
                return inst;
            }
        }
    }
    throw MalformedInstanceError("sublevel generator exhausted retries");
}

// ------------------------------------------------------------ check helpers

std::vector<RatVec> random_vectors(Rng& rng, int dim, int count) {
    std::vector<RatVec> vs;
    vs.push_back(zero_vec(dim));
    while (static_cast<int>(vs.size()) < count + 1) vs.push_back(rng.vec(dim, 3, 2));
    return vs;
}

// x̄ candidates inside a polyhedron (ri witness first, then boundary optima).
std::vector<RatVec> base_points(const HPoly& P, int count, uint64_t seed) {
    return sample_points(canonicalize(P), count, seed);
}

// ------------------------------------------------------------ per-id checks

Verdict check_rockafellar(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::ROCKAFELLAR, inst, seed);
    const SVMap& F = inst.maps[0];
    const int n = F.in_dim(), m = F.out_dim();
    CanonicalHPoly gC = canonicalize(F.graph());
    CanonicalHPoly dC = canonicalize(dom(F));
    for (const auto& p : probes(gC, params.point_samples, derive_seed(seed, 1))) {
        RatVec x = subvec(p, 0, n), y = subvec(p, n, m);
        bool lhs = member(F.graph(), p) && ri_member(gC, p);
        bool rhs = false;
        if (ri_member(dC, x)) {
            HPoly Fx = value(F, x);
            rhs = !is_empty(Fx) && ri_member(Fx, y);
        }
        if (params.corrupt) rhs = !rhs;
        if (lhs != rhs) {
            record_membership_mismatch(v, "ri(gph F) membership", "ri(dom F) and ri(F(x)) membership",
                                       p, lhs);
            return v;
        }
    }
    return v;
}

Verdict check_ri_range(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::RI_RANGE, inst, seed);
    const SVMap& F = inst.maps[0];
    CanonicalHPoly gC = canonicalize(F.graph());
    CanonicalHPoly rC = canonicalize(rge(F));
    for (const auto& p : probes(gC, params.point_samples, derive_seed(seed, 1))) {
        if (!member(F.graph(), p) || !ri_member(gC, p)) continue;
        bool rhs = ri_member(rC, subvec(p, F.in_dim(), F.out_dim()));
        if (params.corrupt) rhs = !rhs;
        if (!rhs) {
            record_membership_mismatch(v, "ri(gph F) membership", "ri(rge F) membership", p, true);
            return v;
        }
    }
    return v;
}

Verdict check_separation(const Instance& inst, uint64_t seed, const CheckParams&) {
    Verdict v = base_verdict(TheoremId::SEPARATION, inst, seed);
    const HPoly& P = inst.polys[0];
    const HPoly& Q = inst.polys[1];
    auto cert = proper_separation(P, Q);
    auto wit = ri_intersect_witness(P, Q);
    bool ok = cert.has_value() == !wit.has_value();
    if (ok && cert) ok = verify_separation(P, Q, *cert);
    if (ok && wit) ok = ri_member(P, *wit) && ri_member(Q, *wit);
    if (!ok) {
        RatVec pt = wit ? *wit : (cert ? cert->strict_w1 : zero_vec(P.dim()));
        record_membership_mismatch(v, "proper separation certificate", "ri intersection witness", pt,
                                   cert.has_value());
        return v;
    }
    v.note = inst.params.count("kind") ? inst.params.at("kind") : "";
    return v;
}

Verdict check_nc_intersection(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::NC_INTERSECTION, inst, seed);
    auto wit = ri_intersect_witness(inst.polys);
    if (!wit) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "qualification failed: no common point of the relative interiors";
        return v;
    }
    HPoly inter = inst.polys[0];
    for (size_t i = 1; i < inst.polys.size(); ++i) inter = intersect(inter, inst.polys[i]);
    CanonicalHPoly iC = canonicalize(inter);
    std::vector<CanonicalHPoly> parts;
    for (const auto& P : inst.polys) parts.push_back(canonicalize(P));
    for (const auto& x : sample_points(iC, 3, derive_seed(seed, 2))) {
        ConeGen lhs = normal_cone(iC, x);
        ConeGen rhs = normal_cone(parts[0], x);
        for (size_t i = 1; i < parts.size(); ++i) rhs = cone_sum(rhs, normal_cone(parts[i], x));
        if (params.corrupt) rhs.generators.push_back(unit_vec(rhs.dim, 0));
        if (!compare_cones_record(v, lhs, rhs, "N(x; ∩Ω_i)", "Σ N(x; Ω_i)")) return v;
    }
    return v;
}

Verdict check_gem_ri(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::GEM_RI, inst, seed);
    std::vector<HPoly> doms;
    for (const auto& f : inst.fns) doms.push_back(f.dom());
    auto wit = ri_intersect_witness(doms);
    if (!wit) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "qualification failed: the ri(dom f_i) have no common point";
        return v;
    }
    SVMap F = gem(inst.fns);
    const int n = F.in_dim(), m = F.out_dim();
    CanonicalHPoly gC = canonicalize(F.graph());
    std::vector<CanonicalHPoly> domCs;
    for (const auto& f : inst.fns) domCs.push_back(canonicalize(f.dom()));
    for (const auto& p : probes(gC, params.point_samples, derive_seed(seed, 3))) {
        RatVec x = subvec(p, 0, n);
        bool lhs = member(F.graph(), p) && ri_member(gC, p);
        bool rhs = true;
        for (int i = 0; i < m && rhs; ++i) {
            if (!ri_member(domCs[static_cast<size_t>(i)], x)) rhs = false;
            ExtReal fx = eval(inst.fns[static_cast<size_t>(i)], x);
            if (rhs && (!fx.is_finite || !(fx.value < p[n + i]))) rhs = false;
        }
        if (params.corrupt) rhs = !rhs;
        if (lhs != rhs) {
            record_membership_mismatch(v, "ri(gph GEM) membership", "∩ ri(dom f_i) and f_i(x) < λ_i",
                                       p, lhs);
            return v;
        }
    }
    return v;
}

Verdict check_epi_ri(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::EPI_RI, inst, seed);
    const MaxAffineFn& f = inst.fns[0];
    const int n = f.arg_dim();
    HPoly epi = epigraph(f);
    CanonicalHPoly epiC = canonicalize(epi);
    CanonicalHPoly domC = canonicalize(f.dom());
    for (const auto& p : probes(epiC, params.point_samples, derive_seed(seed, 4))) {
        RatVec x = subvec(p, 0, n);
        ExtReal fx = eval(f, x);
        bool lhs = member(epi, p) && ri_member(epiC, p);
        bool rhs = ri_member(domC, x) && fx.is_finite && fx.value < p[n];
        if (params.corrupt) rhs = !rhs;
        if (lhs != rhs) {
            record_membership_mismatch(v, "ri(epi f) membership", "ri(dom f) and f(x) < λ", p, lhs);
            return v;
        }
    }
    return v;
}

Verdict check_epi_coderiv(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::EPI_CODERIV, inst, seed);
    const MaxAffineFn& f = inst.fns[0];
    SVMap E = gem({f});
    for (const auto& x : base_points(f.dom(), 3, derive_seed(seed, 5))) {
        ExtReal fx = eval(f, x);
        assert(fx.is_finite);
        RatVec y{fx.value};
        RatVec pt = concat(x, y);
        ConeGen nc = normal_cone(E.graph(), pt);
        HPoly H = cone_hrep(nc);
        for (Rat alpha : {Rat(0), Rat(1, 2), Rat(1), Rat(3)}) {
            HPoly lhs = coderiv_slice(H, f.arg_dim(), 1, RatVec{alpha});
            HPoly rhs = scaled_subdiff(alpha, f, x);
            if (!compare_and_record(v, lhs, rhs, "D*E_f(x,f(x))(α)", "α ⊙ ∂f(x)", params.corrupt))
                return v;
        }
        for (Rat alpha : {Rat(-1), Rat(-1, 3)}) {
            HPoly lhs = coderiv_slice(H, f.arg_dim(), 1, RatVec{alpha});
            if (!is_empty(lhs)) {
                record_mismatch(v, "D*E_f(x,f(x))(α), α<0", "∅",
                                SetCmp{false, *lp_feasible_point(lhs.dim(), lhs.ineqs(), lhs.eqs()), "lhs"});
                return v;
            }
        }
    }
    return v;
}

Verdict check_gem_coderiv(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::GEM_CODERIV, inst, seed);
    std::vector<HPoly> doms;
    for (const auto& f : inst.fns) doms.push_back(f.dom());
    auto wit = ri_intersect_witness(doms);
    if (!wit) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "qualification failed: the ri(dom f_i) have no common point";
        return v;
    }
    SVMap F = gem(inst.fns);
    const int n = F.in_dim(), m = F.out_dim();
    HPoly interdom = doms[0];
    for (size_t i = 1; i < doms.size(); ++i) interdom = intersect(interdom, doms[i]);
    Rng arng(derive_seed(seed, 6));
    for (const auto& x : base_points(interdom, 2, derive_seed(seed, 7))) {
        RatVec y(m);
        for (int i = 0; i < m; ++i) {
            ExtReal fx = eval(inst.fns[static_cast<size_t>(i)], x);
            assert(fx.is_finite);
            y[i] = fx.value;
        }
        ConeGen nc = normal_cone(F.graph(), concat(x, y));
        HPoly H = cone_hrep(nc);
        // a few nonnegative α vectors, plus one with a negative entry
        std::vector<RatVec> alphas;
        alphas.push_back(zero_vec(m));
        {
            RatVec ones(m);
            for (int i = 0; i < m; ++i) ones[i] = 1;
            alphas.push_back(ones);
        }
        for (int k = 0; k < 2; ++k) {
            RatVec a(m);
            for (int i = 0; i < m; ++i) {
                long pick = arng.int_in(0, 3);
                a[i] = pick == 0 ? Rat(0) : (pick == 1 ? Rat(1, 2) : (pick == 2 ? Rat(1) : Rat(3)));
            }
            alphas.push_back(a);
        }
        for (const auto& alpha : alphas) {
            HPoly lhs = coderiv_slice(H, n, m, alpha);
            HPoly rhs = scaled_subdiff(alpha[0], inst.fns[0], x);
            for (int i = 1; i < m; ++i)
                rhs = minkowski_sum(rhs, scaled_subdiff(alpha[i], inst.fns[static_cast<size_t>(i)], x));
            if (!compare_and_record(v, lhs, rhs, "D*GEM(x,ȳ)(α)", "Σ α_i ⊙ ∂f_i(x)", params.corrupt))
                return v;
        }
        RatVec neg(m);
        neg[static_cast<int>(arng.below(static_cast<uint64_t>(m)))] = Rat(-1);
        HPoly lhs = coderiv_slice(H, n, m, neg);
        if (!is_empty(lhs)) {
            record_mismatch(v, "D*GEM(x,ȳ)(α), some α_i<0", "∅",
                            SetCmp{false, *lp_feasible_point(lhs.dim(), lhs.ineqs(), lhs.eqs()), "lhs"});
            return v;
        }
    }
    return v;
}

Verdict check_ovf(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::OVF_SUBDIFF, inst, seed);
    const SVMap& F = inst.maps[0];
    const MaxAffineFn& phi = inst.fns[0];
    const int n = F.in_dim();
    auto wit = ri_intersect_witness(F.graph(), product(HPoly::universe(n), phi.dom()));
    if (!wit) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "qualification failed: ri(gph F) misses ri(R^n x dom phi)";
        return v;
    }
    OptValueFn mu = optimal_value(F, phi);
    HPoly W = intersect(F.graph(), product(HPoly::universe(n), phi.dom()));
    for (const auto& w : base_points(W, 2, derive_seed(seed, 8))) {
        RatVec x = subvec(w, 0, n);
        ExtReal mux = mu(x);
        assert(mux.is_finite);
        HPoly lhs = subdiff_from_epi(mu.epi, x, mux.value);
        for (const auto& y : base_points(argmin_set(F, phi, x), 2, derive_seed(seed, 9))) {
            HPoly rhs = coderiv_union_over(F, x, y, subdiff(phi, y));
            if (!compare_and_record(v, lhs, rhs, "∂μ(x)", "∪_{v∈∂φ(ȳ)} D*F(x,ȳ)(v)", params.corrupt))
                return v;
        }
    }
    return v;
}

Verdict check_composite(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::COMPOSITE_SUBDIFF, inst, seed);
    const int m = static_cast<int>(inst.fns.size()) - 1;
    const MaxAffineFn& phi = inst.fns[static_cast<size_t>(m)];
    std::vector<MaxAffineFn> fs(inst.fns.begin(), inst.fns.end() - 1);
    const int n = fs[0].arg_dim();
    SVMap F = gem(fs);
    auto wit = ri_intersect_witness(F.graph(), product(HPoly::universe(n), phi.dom()));
    if (!wit) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "qualification failed: ri(gph GEM) misses ri(R^n x dom phi)";
        return v;
    }
    OptValueFn mu = optimal_value(F, phi);
    Rng xrng(derive_seed(seed, 10));
    for (int t = 0; t < 2; ++t) {
        RatVec x = xrng.vec(n, 3, 2);
        RatVec y(m);
        for (int i = 0; i < m; ++i) y[i] = eval(fs[static_cast<size_t>(i)], x).value;
        ExtReal g = eval(phi, y);
        ExtReal mux = mu(x);
        if (!(mux == g)) {
            record_membership_mismatch(v, "μ(x) from epi-projection", "φ(f_1(x),...,f_m(x))", x, false);
            return v;
        }
        HPoly lhs = subdiff_from_epi(mu.epi, x, mux.value);
        // RHS: disjunctive hull over active pieces γ of Σ γ_i ∂f_i(x)
        std::vector<HPoly> parts;
        for (const auto& piece : phi.pieces()) {
            if (dot(piece.a, y) + piece.b != g.value) continue;
            HPoly s = scaled_subdiff(piece.a[0], fs[0], x);
            for (int i = 1; i < m; ++i)
                s = minkowski_sum(s, scaled_subdiff(piece.a[i], fs[static_cast<size_t>(i)], x));
            parts.push_back(std::move(s));
        }
        HPoly rhs = disjunctive_hull(parts);
        if (!compare_and_record(v, lhs, rhs, "∂g(x)", "conv ∪_γ Σ γ_i ∂f_i(x)", params.corrupt))
            return v;
    }
    return v;
}

Verdict check_sum_rule(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::SUM_RULE, inst, seed);
    const SVMap& F1 = inst.maps[0];
    const SVMap& F2 = inst.maps[1];
    const int n = F1.in_dim(), m = F1.out_dim();
    auto wit = ri_intersect_witness(dom(F1), dom(F2));
    if (!wit) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "qualification failed: ri(dom F1) misses ri(dom F2)";
        return v;
    }
    SVMap S = map_sum(F1, F2);
    Rng vrng(derive_seed(seed, 11));
    HPoly interdom = intersect(dom(F1), dom(F2));
    size_t min_decomps = SIZE_MAX, vec_count = 0;
    for (const auto& x : base_points(interdom, 1, derive_seed(seed, 12))) {
        RatVec y1 = base_points(value(F1, x), 1, derive_seed(seed, 13))[0];
        RatVec y2 = base_points(value(F2, x), 1, derive_seed(seed, 14))[0];
        RatVec ybar = y1 + y2;
        HPoly HS = cone_hrep(normal_cone(S.graph(), concat(x, ybar)));
        auto decomps = base_points(decomposition_set(F1, F2, x, ybar),
                                   params.decompositions, derive_seed(seed, 15));
        std::vector<RatVec> vs = random_vectors(vrng, m, params.vectors - 1);
        min_decomps = std::min(min_decomps, decomps.size());
        vec_count = vs.size();
        for (const auto& vvec : vs) {
            HPoly lhs = coderiv_slice(HS, n, m, vvec);
            for (const auto& d : decomps) {
                RatVec d1 = subvec(d, 0, m), d2 = subvec(d, m, m);
                HPoly r1 = coderivative(F1, x, d1, vvec).u_set;
                HPoly r2 = coderivative(F2, x, d2, vvec).u_set;
                HPoly rhs = minkowski_sum(r1, r2);
                if (!compare_and_record(v, lhs, rhs, "D*(F1+F2)(x,ȳ)(v)",
                                        "D*F1(x,ȳ1)(v) + D*F2(x,ȳ2)(v)", params.corrupt))
                    return v;
            }
        }
    }
    v.note = "decomps=" + std::to_string(min_decomps) + " vectors=" + std::to_string(vec_count) +
             "; equality checked per decomposition (the intersection form follows)";
    return v;
}

Verdict check_subdiff_sum(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::SUBDIFF_SUM, inst, seed);
    const MaxAffineFn& f1 = inst.fns[0];
    const MaxAffineFn& f2 = inst.fns[1];
    auto wit = ri_intersect_witness(f1.dom(), f2.dom());
    if (!wit) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "qualification failed: ri(dom f1) misses ri(dom f2)";
        return v;
    }
    MaxAffineFn sum = add(f1, f2);
    for (const auto& x : base_points(intersect(f1.dom(), f2.dom()), 3, derive_seed(seed, 16))) {
        HPoly lhs = subdiff(sum, x);
        HPoly rhs = minkowski_sum(subdiff(f1, x), subdiff(f2, x));
        if (!compare_and_record(v, lhs, rhs, "∂(f1+f2)(x)", "∂f1(x) + ∂f2(x)", params.corrupt))
            return v;
    }
    return v;
}

Verdict check_chain(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::CHAIN_RULE, inst, seed);
    const SVMap& F = inst.maps[0];
    const SVMap& G = inst.maps[1];
    const int n = F.in_dim(), m = F.out_dim(), q = G.out_dim();
    auto wit = ri_intersect_witness(rge(F), dom(G));
    if (!wit) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "qualification failed: ri(rge F) misses ri(dom G)";
        return v;
    }
    SVMap C = compose(G, F);
    Rng wrng(derive_seed(seed, 17));
    size_t min_inter = SIZE_MAX, vec_count = 0;
    for (const auto& xz : base_points(C.graph(), 1, derive_seed(seed, 18))) {
        RatVec x = subvec(xz, 0, n), z = subvec(xz, n, q);
        HPoly HC = cone_hrep(normal_cone(C.graph(), xz));
        auto ys = base_points(intermediate_set(F, G, x, z), params.decompositions,
                              derive_seed(seed, 19));
        std::vector<RatVec> ws = random_vectors(wrng, q, params.vectors - 1);
        min_inter = std::min(min_inter, ys.size());
        vec_count = ws.size();
        for (const auto& w : ws) {
            HPoly lhs = coderiv_slice(HC, n, q, w);
            for (const auto& y : ys) {
                HPoly HF = cone_hrep(normal_cone(F.graph(), concat(x, y)));
                HPoly HG = cone_hrep(normal_cone(G.graph(), concat(y, z)));
                HPoly rhs = chain_rhs_from_hreps(HF, HG, n, m, q, w);
                if (!compare_and_record(v, lhs, rhs, "D*(G∘F)(x,z)(w)", "D*F(x,ȳ) ∘ D*G(ȳ,z)(w)",
                                        params.corrupt))
                    return v;
            }
        }
    }
    v.note = "intermediates=" + std::to_string(min_inter) + " vectors=" + std::to_string(vec_count) +
             "; equality checked per intermediate point (the intersection form follows)";
    return v;
}

Verdict check_preimage(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::PREIMAGE_NC, inst, seed);
    const SVMap& F = inst.maps[0];
    const HPoly& theta = inst.polys[0];
    auto wit = ri_intersect_witness(rge(F), theta);
    if (!wit) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "qualification failed: ri(rge F) misses ri(Theta)";
        return v;
    }
    HPoly pre = preimage(F, theta);
    CanonicalHPoly preC = canonicalize(pre);
    CanonicalHPoly thetaC = canonicalize(theta);
    for (const auto& x : sample_points(preC, 2, derive_seed(seed, 20))) {
        ConeGen lhs = normal_cone(preC, x);
        HPoly lhsH = cone_hrep(lhs);
        for (const auto& y : base_points(intersect(value(F, x), theta), 2, derive_seed(seed, 21))) {
            HPoly vset = cone_hrep(normal_cone(thetaC, y));
            HPoly rhs = coderiv_union_over(F, x, y, vset);
            if (!compare_and_record(v, lhsH, rhs, "N(x; F^{-1}(Θ))", "D*F(x,ȳ)(N(ȳ;Θ))",
                                    params.corrupt))
                return v;
            // second route: every generator of the LHS cone lies in the RHS set
            for (const auto& g : lhs.generators) {
                if (!member(rhs, g)) {
                    record_mismatch(v, "N(x; F^{-1}(Θ))", "D*F(x,ȳ)(N(ȳ;Θ))", SetCmp{false, g, "lhs"});
                    return v;
                }
            }
        }
    }
    return v;
}

Verdict check_sublevel(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::SUBLEVEL_NC, inst, seed);
    const MaxAffineFn& f = inst.fns[0];
    const RatVec& xbar = inst.points[0];
    Rat lambda = rat_from_string(inst.params.at("lambda"));
    const int n = f.arg_dim();
    ExtReal fx = eval(f, xbar);
    if (!fx.is_finite || fx.value != lambda) throw MalformedInstanceError("sublevel: f(x̄) != λ");
    // qualification: ∃ x̂ ∈ ri(dom f) with f(x̂) < λ
    CanonicalHPoly domC = canonicalize(f.dom());
    bool qual = false;
    {
        std::vector<LinRow> ineqs, eqs;
        for (const auto& r : domC.poly.ineqs()) ineqs.push_back(LinRow{concat(r.a, RatVec{Rat(1)}), r.b});
        for (const auto& r : domC.poly.eqs()) eqs.push_back(LinRow{concat(r.a, RatVec{Rat(0)}), r.b});
        for (const auto& p : f.pieces()) ineqs.push_back(LinRow{concat(p.a, RatVec{Rat(1)}), lambda - p.b});
        RatVec cap(n + 1);
        cap[n] = 1;
        ineqs.push_back(LinRow{cap, Rat(1)});
        RatVec obj(n + 1);
        obj[n] = 1;
        LPResult r = lp_solve(obj, ineqs, eqs, LPSense::Max);
        qual = r.status == LPStatus::Optimal && r.value > 0;
    }
    if (!qual) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "precondition failed: no x_hat in ri(dom f) with f(x_hat) < lambda";
        return v;
    }
    HPoly L = sublevel_set(f, lambda);
    ConeGen lhs = normal_cone(L, xbar);
    SVMap E = gem({f});
    HPoly rhs = coderiv_union_over(E, xbar, RatVec{lambda}, HPoly::interval(Rat(0), std::nullopt));
    if (!compare_and_record(v, cone_hrep(lhs), rhs, "N(x̄; L_λ)", "∪_{α≥0} α ⊙ ∂f(x̄)", params.corrupt))
        return v;
    for (const auto& g : lhs.generators) {
        if (!member(rhs, g)) {
            record_mismatch(v, "N(x̄; L_λ)", "∪_{α≥0} α ⊙ ∂f(x̄)", SetCmp{false, g, "lhs"});
            return v;
        }
    }
    return v;
}

Verdict check_ri_props(const Instance& inst, uint64_t seed, const CheckParams& params) {
    Verdict v = base_verdict(TheoremId::RI_PROPS, inst, seed);
    const HPoly& P = inst.polys[0];
    const HPoly& Q = inst.polys[1];
    auto wit = ri_intersect_witness(P, Q);
    if (!wit) {
        v.qualification = Qualification::NotSatisfied;
        v.outcome = Outcome::Skipped;
        v.note = "qualification failed: ri(P) misses ri(Q)";
        return v;
    }
    CanonicalHPoly pC = canonicalize(P);
    CanonicalHPoly qC = canonicalize(Q);
    RatVec a = pC.ri_witness;
    // (a) nonemptiness of the relative interior
    if (!ri_member(pC, a)) {
        record_membership_mismatch(v, "ri witness membership", "ri(P) nonempty", a, false);
        return v;
    }
    auto pts = sample_points(pC, params.point_samples, derive_seed(seed, 22));
    // (b) half-open segments from an ri point stay inside ri
    for (const auto& x : pts) {
        for (Rat t : {Rat(1), Rat(1, 2), Rat(1, 3)}) {
            RatVec mix = t * a + (Rat(1) - t) * x;
            bool ok = ri_member(pC, mix);
            if (params.corrupt) ok = !ok;
            if (!ok) {
                record_membership_mismatch(v, "ri([a,x) point)", "ri(P)", mix, false);
                return v;
            }
        }
    }
    // (e) Minkowski sums of ri points
    {
        RatVec s = a + qC.ri_witness;
        if (!ri_member(minkowski_sum(P, Q), s)) {
            record_membership_mismatch(v, "ri(P)+ri(Q) point", "ri(P+Q)", s, false);
            return v;
        }
    }
    // (f) linear images of ri points
    {
        Rng mrng(derive_seed(seed, 23));
        int rows = static_cast<int>(mrng.int_in(1, 2));
        RatMat M(rows, P.dim());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < P.dim(); ++j) M(i, j) = mrng.rat(2, 1);
        if (!ri_member(linear_image(P, M), matvec(M, a))) {
            record_membership_mismatch(v, "A(ri point)", "ri(A(P))", matvec(M, a), false);
            return v;
        }
    }
    // (g) intersections under the qualification, both directions
    {
        CanonicalHPoly iC = canonicalize(intersect(P, Q));
        for (const auto& x : probes(iC, params.point_samples, derive_seed(seed, 24))) {
            bool lhs = member(iC.poly, x) && ri_member(iC, x);
            bool rhs = member(P, x) && member(Q, x) && ri_member(pC, x) && ri_member(qC, x);
            if (lhs != rhs) {
                record_membership_mismatch(v, "ri(P∩Q)", "ri(P)∩ri(Q)", x, lhs);
                return v;
            }
        }
    }
    return v;
}

} // namespace

Instance gen_instance(TheoremId id, Dims dims, Regime regime, uint64_t seed) {
    check_caps(dims);
    if (regime == Regime::Violated && !has_qualification(id))
        throw MalformedInstanceError("theorem " + theorem_name(id) + " has no qualification to violate");
    Rng rng(derive_seed(seed, static_cast<uint64_t>(id) + 0x51));
    switch (id) {
        case TheoremId::RI_PROPS: return gen_two_polys(id, dims, regime, rng);
        case TheoremId::SEPARATION: return gen_separation(dims, rng, rng.chance(1, 2));
        case TheoremId::NC_INTERSECTION: return gen_nc_intersection(dims, regime, rng);
        case TheoremId::ROCKAFELLAR:
        case TheoremId::RI_RANGE: return gen_svmap_only(id, dims, rng);
        case TheoremId::GEM_RI:
        case TheoremId::GEM_CODERIV: return gen_gem(id, dims, regime, rng);
        case TheoremId::EPI_RI:
        case TheoremId::EPI_CODERIV: return gen_fn_only(id, dims, rng);
        case TheoremId::OVF_SUBDIFF: return gen_ovf(dims, regime, rng);
        case TheoremId::COMPOSITE_SUBDIFF: return gen_composite(dims, regime, rng);
        case TheoremId::SUM_RULE: return gen_sum_rule(dims, regime, rng);
        case TheoremId::SUBDIFF_SUM: return gen_subdiff_sum(dims, regime, rng);
        case TheoremId::CHAIN_RULE: return gen_chain(dims, regime, rng);
        case TheoremId::PREIMAGE_NC: return gen_preimage(dims, regime, rng);
        case TheoremId::SUBLEVEL_NC: return gen_sublevel(dims, regime, rng);
    }
    throw MalformedInstanceError("unknown theorem id");
}

Verdict check_theorem(TheoremId id, const Instance& inst, uint64_t seed, const CheckParams& params) {
    if (inst.id != id) throw MalformedInstanceError("instance does not match theorem id");
    switch (id) {
        case TheoremId::RI_PROPS: return check_ri_props(inst, seed, params);
        case TheoremId::SEPARATION: return check_separation(inst, seed, params);
        case TheoremId::NC_INTERSECTION: return check_nc_intersection(inst, seed, params);
        case TheoremId::ROCKAFELLAR: return check_rockafellar(inst, seed, params);
        case TheoremId::RI_RANGE: return check_ri_range(inst, seed, params);
        case TheoremId::GEM_RI: return check_gem_ri(inst, seed, params);
        case TheoremId::EPI_RI: return check_epi_ri(inst, seed, params);
        case TheoremId::EPI_CODERIV: return check_epi_coderiv(inst, seed, params);
        case TheoremId::GEM_CODERIV: return check_gem_coderiv(inst, seed, params);
        case TheoremId::OVF_SUBDIFF: return check_ovf(inst, seed, params);
        case TheoremId::COMPOSITE_SUBDIFF: return check_composite(inst, seed, params);
        case TheoremId::SUM_RULE: return check_sum_rule(inst, seed, params);
        case TheoremId::SUBDIFF_SUM: return check_subdiff_sum(inst, seed, params);
        case TheoremId::CHAIN_RULE: return check_chain(inst, seed, params);
        case TheoremId::PREIMAGE_NC: return check_preimage(inst, seed, params);
        case TheoremId::SUBLEVEL_NC: return check_sublevel(inst, seed, params);
    }
    throw MalformedInstanceError("unknown theorem id");
}

SuiteReport run_suite(const std::vector<TheoremId>& ids, int trials, uint64_t seed, Dims dims,
                      Regime regime, const CheckParams& params) {
    SuiteReport report;
    for (TheoremId id : ids) {
        for (int trial = 0; trial < trials; ++trial) {
            uint64_t tseed = derive_seed(seed ^ (static_cast<uint64_t>(id) * 0x2545f4914f6cdd1dULL),
                                         static_cast<uint64_t>(trial));
            Instance inst = gen_instance(id, dims, regime, tseed);
            Verdict v = check_theorem(id, inst, tseed, params);
            v.trial = trial;
            v.seed = seed;
            switch (v.outcome) {
                case Outcome::Equal: ++report.equal; break;
                case Outcome::Mismatch: ++report.mismatch; break;
                case Outcome::Skipped: ++report.skipped; break;
            }
            report.verdicts.push_back(std::move(v));
        }
    }
    return report;
}

io::Json verdict_to_json(const Verdict& v) {
    io::Json j;
    j["theorem"] = theorem_name(v.theorem);
    j["qualification"] = v.qualification == Qualification::Satisfied ? "satisfied" : "not_satisfied";
    j["outcome"] = v.outcome == Outcome::Equal ? "equal"
                   : v.outcome == Outcome::Mismatch ? "mismatch"
                                                    : "skipped";
    j["instance_digest"] = v.instance_digest;
    j["seed"] = std::to_string(v.seed);
    j["trial"] = v.trial;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.mismatch) {
        io::Json m;
        m["lhs"] = v.mismatch->lhs_desc;
        m["rhs"] = v.mismatch->rhs_desc;
        m["falsifier"] = io::vec_to_json(v.mismatch->falsifier);
        m["falsifier_side"] = v.mismatch->falsifier_side;
        j["mismatch"] = std::move(m);
    }
    return j;
}

io::Json report_to_json(const SuiteReport& report) {
    io::Json j;
    io::Json verdicts = io::Json::array();
    for (const auto& v : report.verdicts) verdicts.push_back(verdict_to_json(v));
    j["verdicts"] = std::move(verdicts);
    j["summary"] = io::Json{{"equal", report.equal}, {"mismatch", report.mismatch},
                            {"skipped", report.skipped}};
    return j;
}

} // namespace polycal

#include "polycal/hpoly.hpp"

#include <algorithm>
#include <cassert>

#include "polycal/linalg.hpp"
#include "polycal/rng.hpp"

namespace polycal {

namespace {

// Lexicographic row order; used only to fix deterministic output order.
bool row_less(const LinRow& x, const LinRow& y) {
    for (int i = 0; i < x.a.dim(); ++i) {
        if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
    }
    return x.b < y.b;
}

// Positive primitive scaling of an inequality row (direction preserved).
LinRow normalize_ineq(const LinRow& r) {
    RatVec full = concat(r.a, RatVec{r.b});
    RatVec prim = primitive(full);
    return LinRow{subvec(prim, 0, r.a.dim()), prim[r.a.dim()]};
}

// Primitive scaling of an equality row with canonical sign (first nonzero
// entry of (a, b) positive).
LinRow normalize_eq(const LinRow& r) {
    RatVec full = concat(r.a, RatVec{r.b});
    RatVec prim = primitive(full);
    for (int i = 0; i < prim.dim(); ++i) {
        if (prim[i] == 0) continue;
        if (prim[i] < 0) prim = -prim;
        break;
    }
    return LinRow{subvec(prim, 0, r.a.dim()), prim[r.a.dim()]};
}

struct RowSystem {
    int dim;
    std::vector<LinRow> ineqs;
    std::vector<LinRow> eqs;
};

// Normalizes, drops trivially-true rows, deduplicates, and keeps the
// tightest bound per direction. Returns false if a row is a plain
// contradiction (0 ≤ b with b < 0, or 0 = d with d ≠ 0).
bool tidy(RowSystem& sys) {
    std::vector<LinRow> in;
    for (const auto& r : sys.ineqs) {
        if (r.a.is_zero()) {
            if (r.b < 0) return false;
            continue;
        }
        in.push_back(normalize_ineq(r));
    }
    std::sort(in.begin(), in.end(), row_less);
    std::vector<LinRow> kept;
    for (auto& r : in) {
        if (!kept.empty() && kept.back().a == r.a) continue; // same direction: first has smaller b
        kept.push_back(std::move(r));
    }
    sys.ineqs = std::move(kept);

    std::vector<LinRow> eq;
    for (const auto& r : sys.eqs) {
        if (r.a.is_zero()) {
            if (r.b != 0) return false;
            continue;
        }
        eq.push_back(normalize_eq(r));
    }
    std::sort(eq.begin(), eq.end(), row_less);
    eq.erase(std::unique(eq.begin(), eq.end()), eq.end());
    sys.eqs = std::move(eq);
    return true;
}

HPoly empty_marker(int dim) {
    return HPoly(dim, {LinRow{zero_vec(dim), Rat(-1)}}, {});
}

// One LP per surviving row: max ⟨a_r,x⟩ over the others (capped at b_r + 1);
// the row is dropped when the optimum stays ≤ b_r. Requires a feasible system.
void prune_redundant(RowSystem& sys) {
    size_t i = 0;
    while (i < sys.ineqs.size()) {
        std::vector<LinRow> others;
        others.reserve(sys.ineqs.size());
        for (size_t j = 0; j < sys.ineqs.size(); ++j)
            if (j != i) others.push_back(sys.ineqs[j]);
        others.push_back(LinRow{sys.ineqs[i].a, sys.ineqs[i].b + 1});
        LPResult r = lp_solve(sys.ineqs[i].a, others, sys.eqs, LPSense::Max);
        assert(r.status == LPStatus::Optimal);
        if (r.status == LPStatus::Optimal && r.value <= sys.ineqs[i].b)
            sys.ineqs.erase(sys.ineqs.begin() + static_cast<long>(i));
        else
            ++i;
    }
}

bool system_feasible(const RowSystem& sys) {
    return lp_feasible_point(sys.dim, sys.ineqs, sys.eqs).has_value();
}

// Reduce the equality list to row echelon form over (a | b); assumes the
// system is consistent.
std::vector<LinRow> reduce_eqs(int dim, const std::vector<LinRow>& eqs) {
    if (eqs.empty()) return {};
    RatMat M(static_cast<int>(eqs.size()), dim + 1);
    for (int r = 0; r < M.rows(); ++r) {
        for (int j = 0; j < dim; ++j) M(r, j) = eqs[static_cast<size_t>(r)].a[j];
        M(r, dim) = eqs[static_cast<size_t>(r)].b;
    }
    std::vector<int> pivots = rref(M);
    std::vector<LinRow> out;
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
        assert(pivots[pr] < dim && "inconsistent equality system");
        LinRow row{M.row(static_cast<int>(pr)), Rat(0)};
        row.b = row.a[dim]; // last entry is the rhs
        row.a = subvec(row.a, 0, dim);
        out.push_back(normalize_eq(row));
    }
    return out;
}

// Max-min-slack point: max t s.t. rows have slack ≥ t, t ≤ 1. With no
// implicit equalities left among ineqs the optimum is strictly positive.
RatVec interior_witness(const RowSystem& sys) {
    const int n = sys.dim;
    std::vector<LinRow> ineqs;
    for (const auto& r : sys.ineqs) {
        RatVec a = concat(r.a, RatVec{Rat(1)});
        ineqs.push_back(LinRow{std::move(a), r.b});
    }
    {
        RatVec cap(n + 1);
        cap[n] = 1;
        ineqs.push_back(LinRow{std::move(cap), Rat(1)});
    }
    std::vector<LinRow> eqs;
    for (const auto& r : sys.eqs) eqs.push_back(LinRow{concat(r.a, RatVec{Rat(0)}), r.b});
    RatVec obj(n + 1);
    obj[n] = 1;
    LPResult res = lp_solve(obj, ineqs, eqs, LPSense::Max);
    assert(res.status == LPStatus::Optimal);
    assert(res.value > 0 && "system must be free of implicit equalities");
    return subvec(res.point, 0, n);
}

} // namespace

HPoly::HPoly(int dim, std::vector<LinRow> ineqs, std::vector<LinRow> eqs)
    : dim_(dim), ineqs_(std::move(ineqs)), eqs_(std::move(eqs)) {
    if (dim < 0) throw DimensionMismatchError("negative dimension");
    for (const auto& r : ineqs_)
        if (r.a.dim() != dim) throw DimensionMismatchError("inequality row length");
    for (const auto& r : eqs_)
        if (r.a.dim() != dim) throw DimensionMismatchError("equality row length");
}

HPoly HPoly::universe(int dim) { return HPoly(dim, {}, {}); }

HPoly HPoly::from_point(const RatVec& p) {
    std::vector<LinRow> eqs;
    for (int i = 0; i < p.dim(); ++i) eqs.push_back(LinRow{unit_vec(p.dim(), i), p[i]});
    return HPoly(p.dim(), {}, std::move(eqs));
}

HPoly HPoly::box(const RatVec& lo, const RatVec& hi) {
    if (lo.dim() != hi.dim()) throw DimensionMismatchError();
    std::vector<LinRow> ineqs;
    for (int i = 0; i < lo.dim(); ++i) {
        ineqs.push_back(LinRow{unit_vec(lo.dim(), i), hi[i]});
        ineqs.push_back(LinRow{-unit_vec(lo.dim(), i), -lo[i]});
    }
    return HPoly(lo.dim(), std::move(ineqs), {});
}

HPoly HPoly::interval(std::optional<Rat> lo, std::optional<Rat> hi) {
    std::vector<LinRow> ineqs;
    if (hi) ineqs.push_back(LinRow{RatVec{Rat(1)}, *hi});
    if (lo) ineqs.push_back(LinRow{RatVec{Rat(-1)}, -*lo});
    return HPoly(1, std::move(ineqs), {});
}

bool member(const HPoly& P, const RatVec& x) {
    if (x.dim() != P.dim()) throw DimensionMismatchError("point dimension");
    for (const auto& r : P.ineqs())
        if (dot(r.a, x) > r.b) return false;
    for (const auto& r : P.eqs())
        if (dot(r.a, x) != r.b) return false;
    return true;
}

bool is_empty(const HPoly& P) {
    return !lp_feasible_point(P.dim(), P.ineqs(), P.eqs()).has_value();
}

CanonicalHPoly canonicalize(const HPoly& P) {
    RowSystem sys{P.dim(), P.ineqs(), P.eqs()};
    if (!tidy(sys) || !system_feasible(sys)) throw EmptySetError("canonicalize of empty polyhedron");

    // Implicit equality: the slack b - ⟨a,x⟩ maximizes to zero, i.e. the
    // minimum of ⟨a,x⟩ over P equals b.
    std::vector<LinRow> strict, promoted;
    for (const auto& row : sys.ineqs) {
        LPResult r = lp_solve(row.a, sys.ineqs, sys.eqs, LPSense::Min);
        if (r.status == LPStatus::Optimal && r.value == row.b)
            promoted.push_back(row);
        else
            strict.push_back(row);
    }
    for (const auto& row : promoted) sys.eqs.push_back(row);
    sys.ineqs = std::move(strict);
    sys.eqs = reduce_eqs(sys.dim, sys.eqs);

    prune_redundant(sys);
    RatVec witness = interior_witness(sys);

    std::sort(sys.ineqs.begin(), sys.ineqs.end(), row_less);
    return CanonicalHPoly(HPoly(sys.dim, sys.ineqs, sys.eqs), witness);
}

AffineSet affine_hull(const CanonicalHPoly& C) {
    AffineSet aff;
    aff.eqs = C.poly.eqs();
    aff.point = C.ri_witness;
    RatMat M(static_cast<int>(aff.eqs.size()), C.poly.dim());
    for (int r = 0; r < M.rows(); ++r)
        for (int j = 0; j < C.poly.dim(); ++j) M(r, j) = aff.eqs[static_cast<size_t>(r)].a[j];
    aff.directions = nullspace_basis(M);
    return aff;
}

AffineSet affine_hull(const HPoly& P) { return affine_hull(canonicalize(P)); }

bool ri_member(const CanonicalHPoly& C, const RatVec& x) {
    if (x.dim() != C.poly.dim()) throw DimensionMismatchError("point dimension");
    for (const auto& r : C.poly.eqs())
        if (dot(r.a, x) != r.b) return false;
    for (const auto& r : C.poly.ineqs())
        if (dot(r.a, x) >= r.b) return false;
    return true;
}

bool ri_member(const HPoly& P, const RatVec& x) { return ri_member(canonicalize(P), x); }

RatVec ri_point(const HPoly& P) { return canonicalize(P).ri_witness; }

HPoly eliminate(const HPoly& P, const std::vector<int>& keep) {
    for (size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= P.dim()) throw DimensionMismatchError("keep index");
        if (i > 0 && keep[i] <= keep[i - 1]) throw DimensionMismatchError("keep must be strictly increasing");
    }
    const int kd = static_cast<int>(keep.size());
    std::vector<bool> kept(static_cast<size_t>(P.dim()), false);
    for (int k : keep) kept[static_cast<size_t>(k)] = true;

    RowSystem sys{P.dim(), P.ineqs(), P.eqs()};
    if (!tidy(sys)) return empty_marker(kd);

    for (int v = 0; v < P.dim(); ++v) {
        if (kept[static_cast<size_t>(v)]) continue;

        // Prefer Gaussian substitution when an equality mentions v.
        int pivot = -1;
        for (size_t j = 0; j < sys.eqs.size(); ++j)
            if (sys.eqs[j].a[v] != 0) { pivot = static_cast<int>(j); break; }
        if (pivot >= 0) {
            LinRow piv = sys.eqs[static_cast<size_t>(pivot)];
            sys.eqs.erase(sys.eqs.begin() + pivot);
            auto substitute = [&](LinRow& row) {
                if (row.a[v] == 0) return;
                Rat f = row.a[v] / piv.a[v];
                for (int j = 0; j < sys.dim; ++j) row.a[j] -= f * piv.a[j];
                row.b -= f * piv.b;
            };
            for (auto& row : sys.ineqs) substitute(row);
            for (auto& row : sys.eqs) substitute(row);
        } else {
            std::vector<LinRow> pos, neg, zero;
            for (auto& row : sys.ineqs) {
                if (row.a[v] > 0) pos.push_back(row);
                else if (row.a[v] < 0) neg.push_back(row);
                else zero.push_back(row);
            }
            std::vector<LinRow> next = std::move(zero);
            for (const auto& p : pos) {
                for (const auto& q : neg) {
                    Rat fp = Rat(1) / p.a[v];
                    Rat fq = Rat(-1) / q.a[v];
                    LinRow row{RatVec(sys.dim), fp * p.b + fq * q.b};
                    for (int j = 0; j < sys.dim; ++j) row.a[j] = fp * p.a[j] + fq * q.a[j];
                    assert(row.a[v] == 0);
                    next.push_back(std::move(row));
                }
            }
            sys.ineqs = std::move(next);
        }

        if (!tidy(sys)) return empty_marker(kd);
        if (!system_feasible(sys)) return empty_marker(kd);
        prune_redundant(sys);
    }

    std::vector<LinRow> ineqs, eqs;
    auto project_row = [&](const LinRow& r) {
        RatVec a(kd);
        for (int i = 0; i < kd; ++i) a[i] = r.a[keep[static_cast<size_t>(i)]];
        return LinRow{std::move(a), r.b};
    };
    for (const auto& r : sys.ineqs) ineqs.push_back(project_row(r));
    for (const auto& r : sys.eqs) eqs.push_back(project_row(r));
    std::sort(ineqs.begin(), ineqs.end(), row_less);
    std::sort(eqs.begin(), eqs.end(), row_less);
    return HPoly(kd, std::move(ineqs), std::move(eqs));
}

HPoly linear_image(const HPoly& P, const RatMat& M) {
    if (M.cols() != P.dim()) throw DimensionMismatchError("matrix columns");
    const int m = M.rows();
    const int n = P.dim();
    std::vector<LinRow> eqs, ineqs;
    for (int i = 0; i < m; ++i) {
        RatVec a(m + n);
        a[i] = 1;
        for (int j = 0; j < n; ++j) a[m + j] = -M(i, j);
        eqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    auto lift_tail = [&](const LinRow& r) {
        RatVec a(m + n);
        for (int j = 0; j < n; ++j) a[m + j] = r.a[j];
        return LinRow{std::move(a), r.b};
    };
    for (const auto& r : P.ineqs()) ineqs.push_back(lift_tail(r));
    for (const auto& r : P.eqs()) eqs.push_back(lift_tail(r));
    std::vector<int> keep(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) keep[static_cast<size_t>(i)] = i;
    return eliminate(HPoly(m + n, std::move(ineqs), std::move(eqs)), keep);
}

HPoly minkowski_sum(const HPoly& P, const HPoly& Q) {
    if (P.dim() != Q.dim()) throw DimensionMismatchError("minkowski_sum dimensions");
    const int n = P.dim();
    std::vector<LinRow> ineqs, eqs;
    for (int i = 0; i < n; ++i) {
        RatVec a(3 * n);
        a[i] = 1;
        a[n + i] = -1;
        a[2 * n + i] = -1;
        eqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    auto lift = [&](const LinRow& r, int offset) {
        RatVec a(3 * n);
        for (int j = 0; j < n; ++j) a[offset + j] = r.a[j];
        return LinRow{std::move(a), r.b};
    };
    for (const auto& r : P.ineqs()) ineqs.push_back(lift(r, n));
    for (const auto& r : P.eqs()) eqs.push_back(lift(r, n));
    for (const auto& r : Q.ineqs()) ineqs.push_back(lift(r, 2 * n));
    for (const auto& r : Q.eqs()) eqs.push_back(lift(r, 2 * n));
    std::vector<int> keep(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) keep[static_cast<size_t>(i)] = i;
    return eliminate(HPoly(3 * n, std::move(ineqs), std::move(eqs)), keep);
}

HPoly intersect(const HPoly& P, const HPoly& Q) {
    if (P.dim() != Q.dim()) throw DimensionMismatchError("intersect dimensions");
    std::vector<LinRow> ineqs = P.ineqs(), eqs = P.eqs();
    ineqs.insert(ineqs.end(), Q.ineqs().begin(), Q.ineqs().end());
    eqs.insert(eqs.end(), Q.eqs().begin(), Q.eqs().end());
    return HPoly(P.dim(), std::move(ineqs), std::move(eqs));
}

HPoly product(const HPoly& P, const HPoly& Q) {
    const int n = P.dim(), m = Q.dim();
    std::vector<LinRow> ineqs, eqs;
    auto pad = [&](const LinRow& r, int offset) {
        RatVec a(n + m);
        for (int j = 0; j < r.a.dim(); ++j) a[offset + j] = r.a[j];
        return LinRow{std::move(a), r.b};
    };
    for (const auto& r : P.ineqs()) ineqs.push_back(pad(r, 0));
    for (const auto& r : Q.ineqs()) ineqs.push_back(pad(r, n));
    for (const auto& r : P.eqs()) eqs.push_back(pad(r, 0));
    for (const auto& r : Q.eqs()) eqs.push_back(pad(r, n));
    return HPoly(n + m, std::move(ineqs), std::move(eqs));
}

HPoly slice(const HPoly& P, const std::vector<int>& coords, const RatVec& values) {
    if (static_cast<int>(coords.size()) != values.dim()) throw DimensionMismatchError("slice values");
    std::vector<bool> fixed(static_cast<size_t>(P.dim()), false);
    std::vector<Rat> fixval(static_cast<size_t>(P.dim()));
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= P.dim()) throw DimensionMismatchError("slice index");
        if (fixed[static_cast<size_t>(coords[i])]) throw DimensionMismatchError("duplicate slice index");
        fixed[static_cast<size_t>(coords[i])] = true;
        fixval[static_cast<size_t>(coords[i])] = values[static_cast<int>(i)];
    }
    const int kd = P.dim() - static_cast<int>(coords.size());
    auto cut = [&](const LinRow& r) {
        RatVec a(kd);
        Rat b = r.b;
        int t = 0;
        for (int j = 0; j < P.dim(); ++j) {
            if (fixed[static_cast<size_t>(j)])
                b -= r.a[j] * fixval[static_cast<size_t>(j)];
            else
                a[t++] = r.a[j];
        }
        return LinRow{std::move(a), b};
    };
    std::vector<LinRow> ineqs, eqs;
    for (const auto& r : P.ineqs()) ineqs.push_back(cut(r));
    for (const auto& r : P.eqs()) eqs.push_back(cut(r));
    return HPoly(kd, std::move(ineqs), std::move(eqs));
}

HPoly translate(const HPoly& P, const RatVec& t) {
    if (t.dim() != P.dim()) throw DimensionMismatchError();
    std::vector<LinRow> ineqs, eqs;
    for (const auto& r : P.ineqs()) ineqs.push_back(LinRow{r.a, r.b + dot(r.a, t)});
    for (const auto& r : P.eqs()) eqs.push_back(LinRow{r.a, r.b + dot(r.a, t)});
    return HPoly(P.dim(), std::move(ineqs), std::move(eqs));
}

HPoly scale(const HPoly& P, const Rat& s) {
    if (s == 0) throw Error("scale by zero");
    std::vector<LinRow> ineqs, eqs;
    for (const auto& r : P.ineqs()) {
        if (s > 0)
            ineqs.push_back(LinRow{r.a, s * r.b});
        else
            ineqs.push_back(LinRow{-r.a, -(s * r.b)});
    }
    for (const auto& r : P.eqs()) eqs.push_back(LinRow{r.a, s * r.b});
    return HPoly(P.dim(), std::move(ineqs), std::move(eqs));
}

HPoly negate(const HPoly& P) { return scale(P, Rat(-1)); }

namespace {

// Point of Q beyond bound `limit` in direction a (Q unbounded along a).
RatVec walk_ray(const HPoly& Q, const RatVec& a, const Rat& limit) {
    RatVec x0 = *lp_feasible_point(Q.dim(), Q.ineqs(), Q.eqs());
    LPResult r = lp_solve(a, Q.ineqs(), Q.eqs(), LPSense::Max);
    assert(r.status == LPStatus::Unbounded);
    const RatVec& ray = r.certificate;
    Rat g = dot(a, ray);
    assert(g > 0);
    Rat k = (limit - dot(a, x0)) / g + 1;
    mpz_class ki = k.get_num() / k.get_den() + 1; // integer step count past the bound
    if (ki < 1) ki = 1;
    return x0 + Rat(ki) * ray;
}

} // namespace

std::optional<RatVec> contains_witness(const HPoly& P, const HPoly& Q) {
    if (P.dim() != Q.dim()) throw DimensionMismatchError("contains dimensions");
    if (is_empty(Q)) return std::nullopt;
    for (const auto& row : P.ineqs()) {
        LPResult r = lp_solve(row.a, Q.ineqs(), Q.eqs(), LPSense::Max);
        if (r.status == LPStatus::Unbounded) return walk_ray(Q, row.a, row.b);
        assert(r.status == LPStatus::Optimal);
        if (r.value > row.b) return r.point;
    }
    for (const auto& row : P.eqs()) {
        LPResult hi = lp_solve(row.a, Q.ineqs(), Q.eqs(), LPSense::Max);
        if (hi.status == LPStatus::Unbounded) return walk_ray(Q, row.a, row.b);
        assert(hi.status == LPStatus::Optimal);
        if (hi.value > row.b) return hi.point;
        LPResult lo = lp_solve(row.a, Q.ineqs(), Q.eqs(), LPSense::Min);
        if (lo.status == LPStatus::Unbounded) return walk_ray(Q, -row.a, -row.b);
        assert(lo.status == LPStatus::Optimal);
        if (lo.value < row.b) return lo.point;
    }
    return std::nullopt;
}

bool contains(const HPoly& P, const HPoly& Q) { return !contains_witness(P, Q).has_value(); }

bool set_equal(const HPoly& P, const HPoly& Q) { return contains(P, Q) && contains(Q, P); }

std::optional<RatVec> ri_intersect_witness(const std::vector<HPoly>& polys) {
    if (polys.empty()) return std::nullopt;
    const int n = polys[0].dim();
    std::vector<LinRow> ineqs, eqs;
    for (const auto& P : polys) {
        if (P.dim() != n) throw DimensionMismatchError("witness dimensions");
        if (is_empty(P)) return std::nullopt;
        CanonicalHPoly C = canonicalize(P);
        for (const auto& r : C.poly.ineqs()) ineqs.push_back(LinRow{concat(r.a, RatVec{Rat(1)}), r.b});
        for (const auto& r : C.poly.eqs()) eqs.push_back(LinRow{concat(r.a, RatVec{Rat(0)}), r.b});
    }
    RatVec cap(n + 1);
    cap[n] = 1;
    ineqs.push_back(LinRow{std::move(cap), Rat(1)});
    RatVec obj(n + 1);
    obj[n] = 1;
    LPResult res = lp_solve(obj, ineqs, eqs, LPSense::Max);
    if (res.status != LPStatus::Optimal || res.value <= 0) return std::nullopt;
    return subvec(res.point, 0, n);
}

std::optional<RatVec> ri_intersect_witness(const HPoly& P, const HPoly& Q) {
    return ri_intersect_witness(std::vector<HPoly>{P, Q});
}

namespace {

// Extension LP for the segment characterization: is there s > 0 with
// x̄ + s(x̄ - x) ∈ P? The feasible s form an interval [0, s_max]; cap at 1.
bool extends_through(const HPoly& P, const RatVec& xbar, const RatVec& x) {
    RatVec d = xbar - x;
    std::vector<LinRow> ineqs, eqs;
    for (const auto& r : P.ineqs())
        ineqs.push_back(LinRow{RatVec{dot(r.a, d)}, r.b - dot(r.a, xbar)});
    for (const auto& r : P.eqs())
        eqs.push_back(LinRow{RatVec{dot(r.a, d)}, r.b - dot(r.a, xbar)});
    ineqs.push_back(LinRow{RatVec{Rat(1)}, Rat(1)});
    LPResult res = lp_solve(RatVec{Rat(1)}, ineqs, eqs, LPSense::Max);
    return res.status == LPStatus::Optimal && res.value > 0;
}

} // namespace

bool ri_segment_oracle(const HPoly& P, const RatVec& xbar, int samples, uint64_t seed) {
    if (!member(P, xbar)) throw PointNotInSetError("ri_segment_oracle point");
    CanonicalHPoly C = canonicalize(P);
    std::vector<RatVec> pts = sample_points(C, samples, seed);
    for (const auto& x : pts) {
        if (x == xbar) continue;
        if (!extends_through(C.poly, xbar, x)) return false;
    }
    return true;
}

HPoly recession_cone(const HPoly& P) {
    std::vector<LinRow> ineqs, eqs;
    for (const auto& r : P.ineqs()) ineqs.push_back(LinRow{r.a, Rat(0)});
    for (const auto& r : P.eqs()) eqs.push_back(LinRow{r.a, Rat(0)});
    return HPoly(P.dim(), std::move(ineqs), std::move(eqs));
}

HPoly conv_hull_of_points(const std::vector<RatVec>& pts) {
    assert(!pts.empty());
    const int d = pts[0].dim();
    const int p = static_cast<int>(pts.size());
    // Variables (x, theta); x = Σ theta_k pt_k, Σ theta = 1, theta ≥ 0.
    std::vector<LinRow> ineqs, eqs;
    for (int i = 0; i < d; ++i) {
        RatVec a(d + p);
        a[i] = 1;
        for (int k = 0; k < p; ++k) a[d + k] = -pts[static_cast<size_t>(k)][i];
        eqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    {
        RatVec a(d + p);
        for (int k = 0; k < p; ++k) a[d + k] = 1;
        eqs.push_back(LinRow{std::move(a), Rat(1)});
    }
    for (int k = 0; k < p; ++k) {
        RatVec a(d + p);
        a[d + k] = -1;
        ineqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    std::vector<int> keep(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) keep[static_cast<size_t>(i)] = i;
    return eliminate(HPoly(d + p, std::move(ineqs), std::move(eqs)), keep);
}

HPoly disjunctive_hull(const std::vector<HPoly>& parts) {
    std::vector<const HPoly*> live;
    int d = -1;
    for (const auto& P : parts) {
        if (d < 0) d = P.dim();
        if (P.dim() != d) throw DimensionMismatchError("disjunctive_hull dimensions");
        if (!is_empty(P)) live.push_back(&P);
    }
    if (d < 0) throw DimensionMismatchError("disjunctive_hull needs at least one part");
    if (live.empty()) return empty_marker(d);
    const int k = static_cast<int>(live.size());
    // Variables (x, x^1..x^k, theta): x = Σ x^i, Σ theta = 1, theta ≥ 0,
    // A_i x^i ≤ theta_i b_i, E_i x^i = theta_i f_i.
    const int total = d + k * d + k;
    auto xi = [&](int i, int j) { return d + i * d + j; };
    const int th0 = d + k * d;
    std::vector<LinRow> ineqs, eqs;
    for (int j = 0; j < d; ++j) {
        RatVec a(total);
        a[j] = 1;
        for (int i = 0; i < k; ++i) a[xi(i, j)] = -1;
        eqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    {
        RatVec a(total);
        for (int i = 0; i < k; ++i) a[th0 + i] = 1;
        eqs.push_back(LinRow{std::move(a), Rat(1)});
    }
    for (int i = 0; i < k; ++i) {
        RatVec a(total);
        a[th0 + i] = -1;
        ineqs.push_back(LinRow{std::move(a), Rat(0)});
    }
    for (int i = 0; i < k; ++i) {
        for (const auto& r : live[static_cast<size_t>(i)]->ineqs()) {
            RatVec a(total);
            for (int j = 0; j < d; ++j) a[xi(i, j)] = r.a[j];
            a[th0 + i] = -r.b;
            ineqs.push_back(LinRow{std::move(a), Rat(0)});
        }
        for (const auto& r : live[static_cast<size_t>(i)]->eqs()) {
            RatVec a(total);
            for (int j = 0; j < d; ++j) a[xi(i, j)] = r.a[j];
            a[th0 + i] = -r.b;
            eqs.push_back(LinRow{std::move(a), Rat(0)});
        }
    }
    std::vector<int> keep(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) keep[static_cast<size_t>(j)] = j;
    return eliminate(HPoly(total, std::move(ineqs), std::move(eqs)), keep);
}

std::vector<RatVec> sample_points(const CanonicalHPoly& C, int count, uint64_t seed) {
    Rng rng(seed);
    const HPoly& P = C.poly;
    std::vector<RatVec> pts{C.ri_witness};
    auto push = [&](const RatVec& p) {
        assert(member(P, p));
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    };
    int tries = 0;
    while (static_cast<int>(pts.size()) < count && tries < 4 * count + 8) {
        ++tries;
        RatVec obj = rng.nonzero_vec(P.dim(), 4, 4);
        LPResult r = lp_solve(obj, P.ineqs(), P.eqs(), LPSense::Max);
        if (r.status == LPStatus::Unbounded) {
            // Bounded fallback: clip around the witness and re-solve.
            Rat radius = Rat(2 + rng.int_in(0, 3));
            RatVec lo(P.dim()), hi(P.dim());
            for (int i = 0; i < P.dim(); ++i) {
                lo[i] = C.ri_witness[i] - radius;
                hi[i] = C.ri_witness[i] + radius;
            }
            HPoly clipped = intersect(P, HPoly::box(lo, hi));
            r = lp_solve(obj, clipped.ineqs(), clipped.eqs(), LPSense::Max);
        }
        if (r.status != LPStatus::Optimal) continue;
        push(r.point);
        if (static_cast<int>(pts.size()) < count && pts.size() >= 2) {
            // Midpoint of the witness and the newest vertex.
            push(Rat(1, 2) * (pts.front() + pts.back()));
        }
    }
    if (static_cast<int>(pts.size()) > count && count > 0) pts.resize(static_cast<size_t>(count));
    return pts;
}

} // namespace polycal

#include "polycal/lp.hpp"

#include <cassert>

namespace polycal {

namespace {

// Dense tableau for max c·z s.t. Tz = rhs, z ≥ 0, with rhs ≥ 0 maintained.
// Column layout: u (n), w (n, free-variable split x = u - w), slacks (one per
// inequality row), artificials (one per row).
struct Tableau {
    int n = 0;       // original variables
    int mi = 0;      // inequality rows
    int cols = 0;    // total columns
    int art0 = 0;    // first artificial column
    std::vector<std::vector<Rat>> T;
    std::vector<Rat> rhs;
    std::vector<int> basis;    // basic column per row
    std::vector<Rat> redcost;  // c_j - y^T A_j for the current basis
    Rat z;                     // current objective value

    int rows() const { return static_cast<int>(T.size()); }

    void pivot(int p, int q) {
        Rat pv = T[p][q];
        assert(pv != 0);
        Rat inv = Rat(1) / pv;
        for (auto& t : T[p]) t *= inv;
        rhs[p] *= inv;
        for (int i = 0; i < rows(); ++i) {
            if (i == p || T[i][q] == 0) continue;
            Rat f = T[i][q];
            for (int j = 0; j < cols; ++j)
                if (T[p][j] != 0) T[i][j] -= f * T[p][j];
            T[i][q] = 0;
            if (rhs[p] != 0) rhs[i] -= f * rhs[p];
        }
        Rat rc = redcost[q];
        if (rc != 0) {
            for (int j = 0; j < cols; ++j)
                if (T[p][j] != 0) redcost[j] -= rc * T[p][j];
            redcost[q] = 0;
            z += rc * rhs[p];
        }
        basis[p] = q;
    }

    // Reduced costs and objective value from scratch for cost vector c.
    void load_costs(const std::vector<Rat>& c) {
        redcost = c;
        z = 0;
        for (int r = 0; r < rows(); ++r) {
            Rat cb = c[basis[r]];
            if (cb == 0) continue;
            for (int j = 0; j < cols; ++j)
                if (T[r][j] != 0) redcost[j] -= cb * T[r][j];
            z += cb * rhs[r];
        }
        for (int r = 0; r < rows(); ++r) redcost[basis[r]] = 0;
    }

    // Bland: entering = lowest eligible index, leaving = lowest basic column
    // among minimum-ratio rows. Returns entering column on unboundedness.
    std::optional<int> run(bool allow_artificials) {
        for (;;) {
            int q = -1;
            int limit = allow_artificials ? cols : art0;
            for (int j = 0; j < limit; ++j) {
                if (redcost[j] > 0) { q = j; break; }
            }
            if (q < 0) return std::nullopt;
            int p = -1;
            Rat best;
            for (int r = 0; r < rows(); ++r) {
                if (T[r][q] <= 0) continue;
                Rat ratio = rhs[r] / T[r][q];
                if (p < 0 || ratio < best || (ratio == best && basis[r] < basis[p])) {
                    p = r;
                    best = ratio;
                }
            }
            if (p < 0) return q;
            pivot(p, q);
        }
    }
};

void check_dims(const RatVec& objective, const std::vector<LinRow>& ineqs,
                const std::vector<LinRow>& eqs) {
    int n = objective.dim();
    for (const auto& r : ineqs)
        if (r.a.dim() != n) throw DimensionMismatchError("lp row dimension");
    for (const auto& r : eqs)
        if (r.a.dim() != n) throw DimensionMismatchError("lp row dimension");
}

} // namespace

LPResult lp_solve(const RatVec& objective, const std::vector<LinRow>& ineqs,
                  const std::vector<LinRow>& eqs, LPSense sense) {
    check_dims(objective, ineqs, eqs);
    const int n = objective.dim();
    const int mi = static_cast<int>(ineqs.size());
    const int me = static_cast<int>(eqs.size());
    const int m = mi + me;

    Tableau tb;
    tb.n = n;
    tb.mi = mi;
    tb.art0 = 2 * n + mi;
    tb.cols = 2 * n + mi + m;
    tb.T.assign(static_cast<size_t>(m), std::vector<Rat>(static_cast<size_t>(tb.cols)));
    tb.rhs.assign(static_cast<size_t>(m), Rat(0));
    tb.basis.resize(static_cast<size_t>(m));

    std::vector<int> sign(static_cast<size_t>(m), 1);
    for (int r = 0; r < m; ++r) {
        const LinRow& row = r < mi ? ineqs[static_cast<size_t>(r)] : eqs[static_cast<size_t>(r - mi)];
        int s = row.b < 0 ? -1 : 1;
        sign[static_cast<size_t>(r)] = s;
        for (int j = 0; j < n; ++j) {
            Rat v = Rat(s) * row.a[j];
            tb.T[r][j] = v;
            tb.T[r][n + j] = -v;
        }
        if (r < mi) tb.T[r][2 * n + r] = s;
        tb.T[r][tb.art0 + r] = 1;
        tb.rhs[r] = Rat(s) * row.b;
        tb.basis[r] = tb.art0 + r;
    }

    // Phase 1: max -(sum of artificials).
    std::vector<Rat> c1(static_cast<size_t>(tb.cols), Rat(0));
    for (int r = 0; r < m; ++r) c1[static_cast<size_t>(tb.art0 + r)] = -1;
    tb.load_costs(c1);
    auto unb1 = tb.run(true);
    assert(!unb1.has_value());
    (void)unb1;

    if (tb.z < 0) {
        // Farkas multipliers from the artificial-column reduced costs:
        // redcost[a_r] = -1 - y_r, and the original-row multiplier is sign*y.
        RatVec cert(m);
        Rat viol = 0;
        for (int r = 0; r < m; ++r) {
            Rat y = -1 - tb.redcost[static_cast<size_t>(tb.art0 + r)];
            cert[r] = Rat(sign[static_cast<size_t>(r)]) * y;
            const LinRow& row = r < mi ? ineqs[static_cast<size_t>(r)] : eqs[static_cast<size_t>(r - mi)];
            viol += cert[r] * row.b;
        }
        assert(viol < 0);
        Rat scale = Rat(-1) / viol;
        for (int r = 0; r < m; ++r) cert[r] *= scale;
#ifndef NDEBUG
        for (int j = 0; j < n; ++j) {
            Rat s = 0;
            for (int r = 0; r < mi; ++r) s += cert[r] * ineqs[static_cast<size_t>(r)].a[j];
            for (int r = 0; r < me; ++r) s += cert[mi + r] * eqs[static_cast<size_t>(r)].a[j];
            assert(s == 0);
        }
        for (int r = 0; r < mi; ++r) assert(cert[r] >= 0);
#endif
        LPResult res;
        res.status = LPStatus::Infeasible;
        res.certificate = cert;
        return res;
    }

    // Pivot leftover artificials out; a row with no real-column entry is a
    // redundant constraint and is dropped.
    for (int p = tb.rows() - 1; p >= 0; --p) {
        if (tb.basis[static_cast<size_t>(p)] < tb.art0) continue;
        int q = -1;
        for (int j = 0; j < tb.art0; ++j)
            if (tb.T[p][j] != 0) { q = j; break; }
        if (q >= 0) {
            tb.pivot(p, q);
        } else {
            tb.T.erase(tb.T.begin() + p);
            tb.rhs.erase(tb.rhs.begin() + p);
            tb.basis.erase(tb.basis.begin() + p);
        }
    }

    // Phase 2 with the real objective (negated for Min).
    std::vector<Rat> c2(static_cast<size_t>(tb.cols), Rat(0));
    for (int j = 0; j < n; ++j) {
        Rat cj = sense == LPSense::Max ? objective[j] : -objective[j];
        c2[static_cast<size_t>(j)] = cj;
        c2[static_cast<size_t>(n + j)] = -cj;
    }
    tb.load_costs(c2);
    auto unb2 = tb.run(false);

    if (unb2.has_value()) {
        int q = *unb2;
        std::vector<Rat> d(static_cast<size_t>(tb.cols), Rat(0));
        d[static_cast<size_t>(q)] = 1;
        for (int r = 0; r < tb.rows(); ++r) d[static_cast<size_t>(tb.basis[static_cast<size_t>(r)])] = -tb.T[r][q];
        RatVec ray(n);
        for (int j = 0; j < n; ++j) ray[j] = d[static_cast<size_t>(j)] - d[static_cast<size_t>(n + j)];
        ray = primitive(ray);
#ifndef NDEBUG
        for (const auto& row : ineqs) assert(dot(row.a, ray) <= 0);
        for (const auto& row : eqs) assert(dot(row.a, ray) == 0);
        Rat growth = dot(objective, ray);
        assert(sense == LPSense::Max ? growth > 0 : growth < 0);
#endif
        LPResult res;
        res.status = LPStatus::Unbounded;
        res.certificate = ray;
        return res;
    }

    std::vector<Rat> val(static_cast<size_t>(tb.cols), Rat(0));
    for (int r = 0; r < tb.rows(); ++r) val[static_cast<size_t>(tb.basis[static_cast<size_t>(r)])] = tb.rhs[r];
    RatVec x(n);
    for (int j = 0; j < n; ++j) x[j] = val[static_cast<size_t>(j)] - val[static_cast<size_t>(n + j)];
#ifndef NDEBUG
    for (const auto& row : ineqs) assert(dot(row.a, x) <= row.b);
    for (const auto& row : eqs) assert(dot(row.a, x) == row.b);
#endif
    LPResult res;
    res.status = LPStatus::Optimal;
    res.point = x;
    res.value = dot(objective, x);
    return res;
}

std::optional<RatVec> lp_feasible_point(int dim, const std::vector<LinRow>& ineqs,
                                        const std::vector<LinRow>& eqs) {
    LPResult r = lp_solve(zero_vec(dim), ineqs, eqs, LPSense::Max);
    if (r.status == LPStatus::Optimal) return r.point;
    return std::nullopt;
}

} // namespace polycal

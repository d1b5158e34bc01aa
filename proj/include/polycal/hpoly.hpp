#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polycal/lp.hpp"
#include "polycal/rat.hpp"

namespace polycal {

/// Convex polyhedron {x | ⟨a_i,x⟩ ≤ b_i, ⟨c_j,x⟩ = d_j} in H-representation.
/// Immutable after construction; may represent the empty set.
class HPoly {
public:
    HPoly(int dim, std::vector<LinRow> ineqs, std::vector<LinRow> eqs);

    static HPoly universe(int dim);
    static HPoly from_point(const RatVec& p);
    /// Axis-aligned box [lo_1,hi_1] × ... (lo, hi componentwise).
    static HPoly box(const RatVec& lo, const RatVec& hi);
    /// The interval [lo, hi] in R^1; either bound may be absent.
    static HPoly interval(std::optional<Rat> lo, std::optional<Rat> hi);

    int dim() const { return dim_; }
    const std::vector<LinRow>& ineqs() const { return ineqs_; }
    const std::vector<LinRow>& eqs() const { return eqs_; }

    bool operator==(const HPoly& o) const {
        return dim_ == o.dim_ && ineqs_ == o.ineqs_ && eqs_ == o.eqs_;
    }

private:
    int dim_;
    std::vector<LinRow> ineqs_;
    std::vector<LinRow> eqs_;
};

/// Canonical form: implicit equalities promoted, redundant rows removed,
/// equality system in reduced row echelon form, rows primitive-scaled, and a
/// stored relative-interior witness. Same point set as the source polyhedron;
/// every surviving inequality admits a feasible point with strict slack.
struct CanonicalHPoly {
    HPoly poly;
    RatVec ri_witness;

    CanonicalHPoly(HPoly p, RatVec w) : poly(std::move(p)), ri_witness(std::move(w)) {}
};

/// Affine set as equalities plus an equivalent point + direction-basis form.
struct AffineSet {
    std::vector<LinRow> eqs;
    RatVec point;
    std::vector<RatVec> directions;

    int dim_of_ambient() const { return point.dim(); }
};

/// Plain membership x ∈ P (every row checked exactly).
bool member(const HPoly& P, const RatVec& x);

/// True iff no point satisfies all constraints.
bool is_empty(const HPoly& P);

/// Throws EmptySetError on empty input.
CanonicalHPoly canonicalize(const HPoly& P);

AffineSet affine_hull(const HPoly& P);
AffineSet affine_hull(const CanonicalHPoly& C);

bool ri_member(const CanonicalHPoly& C, const RatVec& x);
bool ri_member(const HPoly& P, const RatVec& x);

/// A point of the relative interior (max-min-slack LP, slack capped at 1).
RatVec ri_point(const HPoly& P);

/// Exact projection onto the kept coordinates (Fourier–Motzkin with per-step
/// redundancy removal). keep holds 0-based coordinate indices, strictly
/// increasing order of the output coordinates follows their order in keep.
HPoly eliminate(const HPoly& P, const std::vector<int>& keep);

/// {Mx | x ∈ P} via lifting and elimination.
HPoly linear_image(const HPoly& P, const RatMat& M);

HPoly minkowski_sum(const HPoly& P, const HPoly& Q);
HPoly intersect(const HPoly& P, const HPoly& Q);
HPoly product(const HPoly& P, const HPoly& Q);

/// Substitute x[coords[k]] := values[k] and drop those coordinates.
HPoly slice(const HPoly& P, const std::vector<int>& coords, const RatVec& values);

/// Translate by t: {x + t | x ∈ P}.
HPoly translate(const HPoly& P, const RatVec& t);
/// {s·x | x ∈ P} for s ≠ 0 (exact row rescaling).
HPoly scale(const HPoly& P, const Rat& s);
/// {-x | x ∈ P}.
HPoly negate(const HPoly& P);

/// Q ⊆ P, decided by one LP per row of P.
bool contains(const HPoly& P, const HPoly& Q);
/// nullopt when Q ⊆ P; otherwise a point of Q \ P.
std::optional<RatVec> contains_witness(const HPoly& P, const HPoly& Q);
bool set_equal(const HPoly& P, const HPoly& Q);

/// A common point of all the sets' relative interiors, or nullopt.
std::optional<RatVec> ri_intersect_witness(const std::vector<HPoly>& polys);
std::optional<RatVec> ri_intersect_witness(const HPoly& P, const HPoly& Q);

/// Independent relative-interior membership oracle from the segment
/// characterization: x̄ ∈ ri(P) iff every x ∈ P extends through x̄ to some
/// u ∈ P with x̄ strictly between. Samples the stored ri witness plus
/// `samples` LP vertices under seeded random objectives.
bool ri_segment_oracle(const HPoly& P, const RatVec& xbar, int samples, uint64_t seed);

/// Recession cone {d | Ad ≤ 0, Ed = 0} of a nonempty polyhedron.
HPoly recession_cone(const HPoly& P);

/// Convex hull of finitely many points, as an HPoly (lift + elimination).
HPoly conv_hull_of_points(const std::vector<RatVec>& pts);

/// Convex hull of a union of polytopes via the Balas lift. The inputs must
/// be bounded (callers guarantee this); the projection of the lift then
/// equals conv(∪ parts) exactly.
HPoly disjunctive_hull(const std::vector<HPoly>& parts);

/// Deterministic sample points in P: the ri witness, LP optima under seeded
/// rational objectives (vertex-ish boundary points), and pairwise midpoints.
std::vector<RatVec> sample_points(const CanonicalHPoly& C, int count, uint64_t seed);

} // namespace polycal

#pragma once

#include <optional>
#include <vector>

#include "polycal/hpoly.hpp"
#include "polycal/rat.hpp"

namespace polycal {

/// Finitely generated cone: cone(generators) + span(lineality). Contains 0,
/// closed and convex by construction. Generators are primitive and sorted.
struct ConeGen {
    int dim = 0;
    std::vector<RatVec> generators;
    std::vector<RatVec> lineality;
};

ConeGen make_cone(int dim, std::vector<RatVec> generators, std::vector<RatVec> lineality);

/// Exact normal cone N(x̄;P): outward normals of the active canonical
/// inequality rows plus the span of the equality normals.
/// Throws PointNotInSetError when x̄ ∉ P.
ConeGen normal_cone(const CanonicalHPoly& C, const RatVec& xbar);
ConeGen normal_cone(const HPoly& P, const RatVec& xbar);

/// One LP feasibility test: v = Σ λ_i g_i + Σ μ_j l_j with λ ≥ 0.
bool cone_member(const ConeGen& C, const RatVec& v);

/// Definition-level oracle: v ∈ N(x̄;P) iff max ⟨v,x⟩ over P is attained at
/// value ⟨v,x̄⟩ (unboundedness means no).
bool nc_oracle(const HPoly& P, const RatVec& xbar, const RatVec& v);

/// H-representation by eliminating the multipliers from the generator lift.
HPoly cone_hrep(const ConeGen& C);

ConeGen cone_sum(const ConeGen& C1, const ConeGen& C2);

/// True iff every generator has its negation in the cone.
bool cone_is_subspace(const ConeGen& C);

/// Proper separation data for an ordered pair (Ω₁, Ω₂) = (P, Q):
///   ⟨v,w₁⟩ ≤ ⟨v,w₂⟩ for all w₁ ∈ P, w₂ ∈ Q   (sup_P = sup ⟨v,·⟩ over P, ...)
///   ⟨v,ŵ₁⟩ < ⟨v,ŵ₂⟩ for the stored strict witnesses.
struct SeparationCertificate {
    RatVec v;
    Rat sup_p;
    Rat inf_q;
    RatVec strict_w1; // in P
    RatVec strict_w2; // in Q
};

/// Returns a certificate iff ri(P) ∩ ri(Q) = ∅, built from the difference
/// polyhedron P - Q; certificate invariants are re-verified by LP before
/// returning. Throws EmptySetError on empty input.
std::optional<SeparationCertificate> proper_separation(const HPoly& P, const HPoly& Q);

/// LP re-verification of both separation inequalities against (P, Q).
bool verify_separation(const HPoly& P, const HPoly& Q, const SeparationCertificate& cert);

} // namespace polycal

#pragma once

#include <vector>

#include "polycal/cones.hpp"
#include "polycal/hpoly.hpp"

namespace polycal {

/// Value of an extended-real-valued convex function: a rational or +∞.
struct ExtReal {
    bool is_finite = false;
    Rat value;

    static ExtReal finite(Rat v) { return ExtReal{true, std::move(v)}; }
    static ExtReal infinity() { return ExtReal{false, Rat(0)}; }

    bool operator==(const ExtReal& o) const {
        return is_finite == o.is_finite && (!is_finite || value == o.value);
    }
};

/// One affine piece x ↦ ⟨a,x⟩ + b.
struct AffinePiece {
    RatVec a;
    Rat b;

    bool operator==(const AffinePiece& o) const { return a == o.a && b == o.b; }
};

/// Proper polyhedral convex function: maximum of finitely many affine pieces
/// over a nonempty polyhedral domain, +∞ outside. Never takes -∞.
class MaxAffineFn {
public:
    /// Throws EmptySetError when dom is empty (the function must be proper).
    MaxAffineFn(int n, std::vector<AffinePiece> pieces, HPoly dom);

    int arg_dim() const { return n_; }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    const HPoly& dom() const { return dom_; }

    /// |·| on R^1 with full domain; handy in tests and generators.
    static MaxAffineFn abs1();
    /// Constant zero on the given domain (indicator-style encoding).
    static MaxAffineFn zero_on(HPoly dom);

private:
    int n_;
    std::vector<AffinePiece> pieces_;
    HPoly dom_;
};

ExtReal eval(const MaxAffineFn& f, const RatVec& x);

/// epi(f) = {(x,λ) | x ∈ dom f, ⟨a_k,x⟩ + b_k ≤ λ} in R^{n+1}.
HPoly epigraph(const MaxAffineFn& f);

/// ∂f(x̄) through the epigraph normal cone: {v | (v,-1) ∈ N((x̄,f(x̄)); epi f)}.
HPoly subdiff(const MaxAffineFn& f, const RatVec& xbar);

/// Same computation for any epigraph given as a plain polyhedron (used for
/// optimal value functions whose max-affine form is never recovered).
HPoly subdiff_from_epi(const HPoly& epi, const RatVec& xbar, const Rat& fxbar);

/// ∂∞f(x̄) = {v | (v,0) ∈ N((x̄,f(x̄)); epi f)}. Every generator of an
/// epigraph normal cone has last coordinate ≤ 0, so the horizontal slice is
/// generated by the generators with last coordinate exactly 0.
ConeGen singular_subdiff(const MaxAffineFn& f, const RatVec& xbar);

/// α ⊙ ∂f(x̄): α∂f(x̄) for α > 0, the singular subdifferential for α = 0.
/// Throws NegativeScalarError for α < 0.
HPoly scaled_subdiff(const Rat& alpha, const MaxAffineFn& f, const RatVec& xbar);

/// Definition-level oracle: v ∈ ∂f(x̄) iff min over epi f of λ - ⟨v,x⟩ is
/// attained with value f(x̄) - ⟨v,x̄⟩.
bool sd_oracle(const MaxAffineFn& f, const RatVec& xbar, const RatVec& v);

/// L_λ = {x | f(x) ≤ λ}.
HPoly sublevel_set(const MaxAffineFn& f, const Rat& lambda);

/// (f1 + f2) as a max-affine function: piecewise sums over the intersected
/// domain. Throws EmptySetError when the domains do not meet.
MaxAffineFn add(const MaxAffineFn& f1, const MaxAffineFn& f2);

/// Independent construction of ∂f(x̄): conv{a_k | piece k active at x̄}
/// + N(x̄; dom f), assembled with hull and Minkowski-sum machinery only.
HPoly subdiff_direct(const MaxAffineFn& f, const RatVec& xbar);

} // namespace polycal

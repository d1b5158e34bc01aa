#pragma once

#include <vector>

#include "polycal/funcs.hpp"
#include "polycal/hpoly.hpp"

namespace polycal {

/// Convex set-valued mapping F: R^n ⇉ R^m stored as its graph polyhedron in
/// R^{n+m}. The graph is the single source of truth; domain, range, and
/// values are derived views.
class SVMap {
public:
    /// Throws EmptySetError when the graph is empty.
    SVMap(int n, int m, HPoly graph);

    int in_dim() const { return n_; }
    int out_dim() const { return m_; }
    const HPoly& graph() const { return graph_; }

    /// Graph of x ↦ {Mx}.
    static SVMap linear(const RatMat& M);

private:
    int n_, m_;
    HPoly graph_;
};

HPoly dom(const SVMap& F);
HPoly rge(const SVMap& F);
/// F(x̄) as a polyhedron in R^m (may be empty).
HPoly value(const SVMap& F, const RatVec& xbar);
SVMap inverse(const SVMap& F);

/// D*F(x̄,ȳ)(v) = {u | (u,-v) ∈ N((x̄,ȳ); gph F)} plus the graph normal cone
/// the slice came from.
struct CoderivResult {
    HPoly u_set;
    ConeGen graph_normal_cone;
};

/// Throws NotInGraphError when (x̄,ȳ) ∉ gph F.
CoderivResult coderivative(const SVMap& F, const RatVec& xbar, const RatVec& ybar, const RatVec& v);

SVMap map_sum(const SVMap& F1, const SVMap& F2);
/// (G ∘ F)(x) = ∪_{y ∈ F(x)} G(y). Throws EmptySetError when the composition
/// has empty graph.
SVMap compose(const SVMap& G, const SVMap& F);

/// F⁻¹(Θ) = {x | F(x) ∩ Θ ≠ ∅}.
HPoly preimage(const SVMap& F, const HPoly& theta);

/// Generalized epigraphical mapping x ↦ Π_i [f_i(x), ∞); for one function
/// this is the epigraphical mapping E_f with gph = epi f.
SVMap gem(const std::vector<MaxAffineFn>& fs);

/// Optimal value function μ(x) = inf{φ(y) | y ∈ F(x)}, carried by its
/// epigraph polyhedron; evaluation is one LP.
struct OptValueFn {
    int n = 0;
    HPoly epi;

    OptValueFn(int n, HPoly e) : n(n), epi(std::move(e)) {}
    ExtReal operator()(const RatVec& xbar) const;
};

/// Throws ImproperValueError when μ(x) = -∞ somewhere (detected by a
/// recession-direction LP on gph F ∩ (R^n × dom φ)).
OptValueFn optimal_value(const SVMap& F, const MaxAffineFn& phi);

/// S(x̄) = {y ∈ F(x̄) | φ(y) = μ(x̄)}. Throws NotInDomainError when μ(x̄) = +∞.
HPoly argmin_set(const SVMap& F, const MaxAffineFn& phi, const RatVec& xbar);

/// S(x̄,ȳ) = {(y₁,y₂) | ȳ = y₁+y₂, y_i ∈ F_i(x̄)}. Throws NotInGraphError when empty.
HPoly decomposition_set(const SVMap& F1, const SVMap& F2, const RatVec& xbar, const RatVec& ybar);

/// M(x̄,z̄) = F(x̄) ∩ G⁻¹(z̄). Throws NotInGraphError when empty.
HPoly intermediate_set(const SVMap& F, const SVMap& G, const RatVec& xbar, const RatVec& zbar);

/// ∪_{v ∈ Vset} D*F(x̄,ȳ)(v) as one projection of the graph normal cone's
/// H-rep intersected with -v ∈ -Vset.
HPoly coderiv_union_over(const SVMap& F, const RatVec& xbar, const RatVec& ybar, const HPoly& vset);

/// {u | ∃v: v ∈ D*G(ȳ,z̄)(w), u ∈ D*F(x̄,ȳ)(v)} via one elimination over the
/// two graph normal cones (the chain-rule right-hand side).
HPoly coderiv_chain_rhs(const SVMap& F, const SVMap& G, const RatVec& xbar, const RatVec& ybar,
                        const RatVec& zbar, const RatVec& w);

/// Slice of a precomputed graph-normal-cone H-rep at the last m coordinates
/// fixed to -v (lets callers reuse one cone_hrep across many v).
HPoly coderiv_slice(const HPoly& nc_hrep, int n, int m, const RatVec& v);

/// Chain-rule right-hand side from precomputed normal-cone H-reps of the two
/// graphs (HF over (u, -v), HG over (v, -w)).
HPoly chain_rhs_from_hreps(const HPoly& HF, const HPoly& HG, int n, int m, int q, const RatVec& w);

} // namespace polycal

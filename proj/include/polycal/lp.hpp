#pragma once

#include <optional>
#include <vector>

#include "polycal/rat.hpp"

namespace polycal {

/// One constraint row. Means ⟨a,x⟩ ≤ b when held in an inequality list and
/// ⟨a,x⟩ = b when held in an equality list.
struct LinRow {
    RatVec a;
    Rat b;

    bool operator==(const LinRow& o) const { return a == o.a && b == o.b; }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };
enum class LPSense { Max, Min };

/// Exact LP outcome. Invariants (all re-checkable by substitution):
///  - Optimal: point satisfies every row exactly, value = objective·point.
///  - Infeasible: certificate holds one multiplier per row (inequalities
///    first, then equalities, in input order); multipliers are ≥ 0 on
///    inequality rows, the combined left side is the zero vector, and the
///    combined right side is exactly -1.
///  - Unbounded: certificate is a primitive improving ray d (A d ≤ 0 on
///    inequality rows, E d = 0 on equality rows, objective·d > 0 for Max,
///    < 0 for Min).
struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    RatVec point;
    Rat value;
    RatVec certificate;
};

/// Two-phase primal simplex over exact rationals with Bland's pivot rule.
/// Deterministic: identical inputs give identical outputs bit-for-bit.
LPResult lp_solve(const RatVec& objective,
                  const std::vector<LinRow>& ineqs,
                  const std::vector<LinRow>& eqs,
                  LPSense sense);

/// Feasibility probe: a point satisfying all rows, or nullopt.
std::optional<RatVec> lp_feasible_point(int dim,
                                        const std::vector<LinRow>& ineqs,
                                        const std::vector<LinRow>& eqs);

} // namespace polycal

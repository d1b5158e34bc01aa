#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycal/json_io.hpp"
#include "polycal/svmap.hpp"

namespace polycal {

/// One row per calculus rule verified by the engine.
enum class TheoremId {
    RI_PROPS,          // algebra of relative interiors at membership level
    SEPARATION,        // proper separation iff disjoint relative interiors
    NC_INTERSECTION,   // normal cone of an intersection is the sum of cones
    ROCKAFELLAR,       // ri of a graph via ri of domain and values
    RI_RANGE,          // ri graph points project into the ri of the range
    GEM_RI,            // ri of a generalized epigraphical graph
    EPI_RI,            // ri of an epigraph
    EPI_CODERIV,       // coderivative of an epigraphical mapping
    GEM_CODERIV,       // coderivative of a generalized epigraphical mapping
    OVF_SUBDIFF,       // subdifferential of an optimal value function
    COMPOSITE_SUBDIFF, // subdifferential of a nondecreasing composition
    SUM_RULE,          // coderivative sum rule under a domain qualification
    SUBDIFF_SUM,       // subdifferential sum rule
    CHAIN_RULE,        // coderivative chain rule under a range qualification
    PREIMAGE_NC,       // normal cone of a preimage
    SUBLEVEL_NC,       // normal cone of a sublevel set
};

std::string theorem_name(TheoremId id);
/// Case-insensitive lookup.
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorems();
/// Whether the rule carries a qualification hypothesis (and so can be
/// generated in a deliberately violated regime).
bool has_qualification(TheoremId id);

enum class Regime { Qualified, Violated };

/// Generation caps. Hard limits: n, m ≤ 3, rows ≤ 8, |numerators| and
/// denominators ≤ 8.
struct Dims {
    int n = 2;
    int m = 2;
};

enum class Qualification { Satisfied, NotSatisfied };
enum class Outcome { Equal, Mismatch, Skipped };

struct MismatchInfo {
    std::string lhs_desc;
    std::string rhs_desc;
    RatVec falsifier;  // a rational point lying in exactly one side
    std::string falsifier_side;
};

struct Verdict {
    TheoremId theorem;
    Qualification qualification = Qualification::Satisfied;
    Outcome outcome = Outcome::Equal;
    std::optional<MismatchInfo> mismatch;
    std::string instance_digest;
    uint64_t seed = 0;
    int trial = 0;
    std::string note;
};

/// One theorem instance: which payloads are populated depends on the id.
struct Instance {
    TheoremId id;
    std::vector<HPoly> polys;
    std::vector<MaxAffineFn> fns; // for OVF/COMPOSITE the outer φ is last
    std::vector<SVMap> maps;
    std::vector<RatVec> points;
    std::map<std::string, std::string> params;

    io::Json to_json() const;
    std::string digest() const;
};

struct CheckParams {
    int point_samples = 6; // probe points per membership-level check
    int decompositions = 3;
    int vectors = 3;
    bool corrupt = false; // self-test hook: perturbs one RHS to force a Mismatch
};

/// Deterministic generator: (id, dims, regime, seed) fully determines the
/// instance. Throws CapsExceededError when dims exceed the hard caps.
Instance gen_instance(TheoremId id, Dims dims, Regime regime, uint64_t seed);

/// Runs the id's check procedure. Qualification is always evaluated from the
/// instance itself; when it fails the verdict is Skipped, never Mismatch.
Verdict check_theorem(TheoremId id, const Instance& inst, uint64_t seed, const CheckParams& params);

struct SuiteReport {
    std::vector<Verdict> verdicts;
    int equal = 0;
    int mismatch = 0;
    int skipped = 0;
};

/// trials instances per id, seeds split from the master seed; verdict order
/// follows (id, trial).
SuiteReport run_suite(const std::vector<TheoremId>& ids, int trials, uint64_t seed, Dims dims,
                      Regime regime, const CheckParams& params);

io::Json verdict_to_json(const Verdict& v);
io::Json report_to_json(const SuiteReport& report);

} // namespace polycal

// Acceptance suite: one line per criterion, zero tolerance everywhere.
// Exit status is the number of failed criteria.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "polycal/cli.hpp"
#include "polycal/harness.hpp"
#include "polycal/rng.hpp"

using namespace polycal;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& desc, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", num, desc.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool all_equal(const SuiteReport& r, int expected) {
    return r.equal == expected && r.mismatch == 0 && r.skipped == 0;
}

std::string summary(const SuiteReport& r) {
    std::ostringstream ss;
    ss << "equal=" << r.equal << " mismatch=" << r.mismatch << " skipped=" << r.skipped;
    return ss.str();
}

constexpr uint64_t kSeed = 20240915;

HPoly random_poly(Rng& rng, int dim, int max_rows) {
    RatVec anchor = rng.vec(dim, 4, 2);
    std::vector<LinRow> ineqs;
    int rows = static_cast<int>(rng.int_in(1, max_rows));
    for (int r = 0; r < rows; ++r) {
        RatVec a = rng.nonzero_vec(dim, 4, 2);
        Rat slack = rng.chance(1, 4) ? Rat(0) : rat(rng.int_in(1, 4), 2);
        ineqs.push_back(LinRow{a, dot(a, anchor) + slack});
    }
    return HPoly(dim, std::move(ineqs), {});
}

struct CliRun {
    int code;
    std::string out;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return CliRun{code, out.str()};
}

} // namespace

int main() {
    Dims dims{3, 3};

    { // 1. Rockafellar's theorem, 200 mappings, ≥ 20 points each, both directions
        CheckParams p;
        p.point_samples = 20;
        SuiteReport r = run_suite({TheoremId::ROCKAFELLAR}, 200, kSeed, dims, Regime::Qualified, p);
        criterion(1, "ROCKAFELLAR: 200 mappings x 20+ sampled points, exact biconditional",
                  all_equal(r, 200), summary(r));
    }

    { // 2. ri of ranges
        CheckParams p;
        p.point_samples = 8;
        SuiteReport r = run_suite({TheoremId::RI_RANGE}, 200, kSeed + 1, dims, Regime::Qualified, p);
        criterion(2, "RI_RANGE: 200 trials, implication exact", all_equal(r, 200), summary(r));
    }

    { // 3. separation biconditional on both instance families
        CheckParams p;
        SuiteReport r = run_suite({TheoremId::SEPARATION}, 220, kSeed + 2, dims, Regime::Qualified, p);
        int disjoint = 0, overlap = 0;
        for (const auto& v : r.verdicts) {
            if (v.note == "disjoint") ++disjoint;
            if (v.note == "overlap") ++overlap;
        }
        std::ostringstream detail;
        detail << summary(r) << " disjoint=" << disjoint << " overlap=" << overlap;
        criterion(3, "SEPARATION: 100+ disjoint-ri pairs certified, 100+ overlapping pairs None",
                  all_equal(r, 220) && disjoint >= 100 && overlap >= 100, detail.str());
    }

    { // 4. normal cone intersection rule
        CheckParams p;
        SuiteReport r = run_suite({TheoremId::NC_INTERSECTION}, 100, kSeed + 3, dims,
                                  Regime::Qualified, p);
        criterion(4, "NC_INTERSECTION: 100 qualified pairs/triples, exact cone equality",
                  all_equal(r, 100), summary(r));
    }

    { // 5. epigraphical coderivatives across the alpha grid
        CheckParams p;
        SuiteReport r = run_suite({TheoremId::EPI_CODERIV}, 100, kSeed + 4, dims, Regime::Qualified, p);
        criterion(5, "EPI_CODERIV: 100 functions x alpha in {0,1/2,1,3,-1,-1/3}, exact",
                  all_equal(r, 100), summary(r));
    }

    { // 6. generalized epigraphical mappings: ri and coderivatives, m in {1,2,3}
        CheckParams p;
        p.point_samples = 8;
        SuiteReport r1 = run_suite({TheoremId::GEM_RI}, 100, kSeed + 5, dims, Regime::Qualified, p);
        SuiteReport r2 = run_suite({TheoremId::GEM_CODERIV}, 100, kSeed + 6, dims, Regime::Qualified, p);
        bool m1 = false, m2 = false, m3 = false;
        for (int trial = 0; trial < 100; ++trial) {
            uint64_t tseed = derive_seed((kSeed + 5) ^ (static_cast<uint64_t>(TheoremId::GEM_RI) *
                                                        0x2545f4914f6cdd1dULL),
                                         static_cast<uint64_t>(trial));
            Instance inst = gen_instance(TheoremId::GEM_RI, dims, Regime::Qualified, tseed);
            if (inst.fns.size() == 1) m1 = true;
            if (inst.fns.size() == 2) m2 = true;
            if (inst.fns.size() == 3) m3 = true;
        }
        std::ostringstream detail;
        detail << "GEM_RI " << summary(r1) << "; GEM_CODERIV " << summary(r2) << "; m coverage "
               << m1 << m2 << m3;
        criterion(6, "GEM_RI + GEM_CODERIV: 100 trials each, m in {1,2,3}, exact",
                  all_equal(r1, 100) && all_equal(r2, 100) && m1 && m2 && m3, detail.str());
    }

    { // 7. coderivative sum rule and subdifferential sum rule
        CheckParams p;
        SuiteReport r1 = run_suite({TheoremId::SUM_RULE}, 100, kSeed + 7, dims, Regime::Qualified, p);
        SuiteReport r2 = run_suite({TheoremId::SUBDIFF_SUM}, 100, kSeed + 8, dims, Regime::Qualified, p);
        size_t min_dec = SIZE_MAX, min_vec = SIZE_MAX;
        for (const auto& v : r1.verdicts) {
            size_t d = 0, w = 0;
            if (std::sscanf(v.note.c_str(), "decomps=%zu vectors=%zu", &d, &w) == 2) {
                min_dec = std::min(min_dec, d);
                min_vec = std::min(min_vec, w);
            }
        }
        std::ostringstream detail;
        detail << "SUM_RULE " << summary(r1) << " min_decomps=" << min_dec << " min_vectors="
               << min_vec << "; SUBDIFF_SUM " << summary(r2);
        criterion(7, "SUM_RULE + SUBDIFF_SUM: 100 qualified trials each, 3+ decompositions, 3+ v",
                  all_equal(r1, 100) && all_equal(r2, 100) && min_dec >= 3 && min_vec >= 3,
                  detail.str());
    }

    { // 8. coderivative chain rule
        CheckParams p;
        SuiteReport r = run_suite({TheoremId::CHAIN_RULE}, 100, kSeed + 9, dims, Regime::Qualified, p);
        size_t min_int = SIZE_MAX, min_vec = SIZE_MAX;
        for (const auto& v : r.verdicts) {
            size_t d = 0, w = 0;
            if (std::sscanf(v.note.c_str(), "intermediates=%zu vectors=%zu", &d, &w) == 2) {
                min_int = std::min(min_int, d);
                min_vec = std::min(min_vec, w);
            }
        }
        std::ostringstream detail;
        detail << summary(r) << " min_intermediates=" << min_int << " min_vectors=" << min_vec;
        criterion(8, "CHAIN_RULE: 100 qualified trials, 3+ intermediate points, 3+ w, exact",
                  all_equal(r, 100) && min_int >= 3 && min_vec >= 3, detail.str());
    }

    { // 9. optimal value functions and composite subdifferentials
        CheckParams p;
        SuiteReport r1 = run_suite({TheoremId::OVF_SUBDIFF}, 100, kSeed + 10, dims,
                                   Regime::Qualified, p);
        SuiteReport r2 = run_suite({TheoremId::COMPOSITE_SUBDIFF}, 100, kSeed + 11, dims,
                                   Regime::Qualified, p);
        std::ostringstream detail;
        detail << "OVF_SUBDIFF " << summary(r1) << "; COMPOSITE_SUBDIFF " << summary(r2);
        criterion(9, "OVF_SUBDIFF + COMPOSITE_SUBDIFF: 100 qualified trials each, Balas-hull RHS",
                  all_equal(r1, 100) && all_equal(r2, 100), detail.str());
    }

    { // 10. preimage and sublevel normal cones
        CheckParams p;
        SuiteReport r1 = run_suite({TheoremId::PREIMAGE_NC}, 100, kSeed + 12, dims,
                                   Regime::Qualified, p);
        SuiteReport r2 = run_suite({TheoremId::SUBLEVEL_NC}, 100, kSeed + 13, dims,
                                   Regime::Qualified, p);
        std::ostringstream detail;
        detail << "PREIMAGE_NC " << summary(r1) << "; SUBLEVEL_NC " << summary(r2);
        criterion(10, "PREIMAGE_NC + SUBLEVEL_NC: 100 qualified trials each, exact cone equality",
                  all_equal(r1, 100) && all_equal(r2, 100), detail.str());
    }

    { // 11. oracle concordance, 1000 queries per oracle pair
        Rng rng(kSeed + 14);
        int nc_checked = 0, nc_agree = 0;
        while (nc_checked < 1000) {
            int dim = static_cast<int>(rng.int_in(1, 3));
            HPoly P = random_poly(rng, dim, 5);
            CanonicalHPoly C = canonicalize(P);
            for (const auto& x : sample_points(C, 3, rng.next())) {
                ConeGen nc = normal_cone(C, x);
                for (int k = 0; k < 4 && nc_checked < 1000; ++k) {
                    RatVec v = rng.vec(dim, 3, 2);
                    ++nc_checked;
                    if (cone_member(nc, v) == nc_oracle(P, x, v)) ++nc_agree;
                }
            }
        }
        int sd_checked = 0, sd_agree = 0;
        while (sd_checked < 1000) {
            int n = static_cast<int>(rng.int_in(1, 2));
            std::vector<AffinePiece> pieces;
            int kp = static_cast<int>(rng.int_in(1, 3));
            for (int i = 0; i < kp; ++i) pieces.push_back(AffinePiece{rng.vec(n, 3, 2), rng.rat(3, 2)});
            HPoly domf = rng.chance(1, 2) ? HPoly::universe(n) : random_poly(rng, n, 4);
            MaxAffineFn f(n, std::move(pieces), std::move(domf));
            CanonicalHPoly domC = canonicalize(f.dom());
            for (const auto& x : sample_points(domC, 2, rng.next())) {
                HPoly sd = subdiff(f, x);
                for (int k = 0; k < 5 && sd_checked < 1000; ++k) {
                    RatVec v = rng.vec(n, 3, 2);
                    ++sd_checked;
                    if (member(sd, v) == sd_oracle(f, x, v)) ++sd_agree;
                }
            }
        }
        int ri_checked = 0, ri_agree = 0;
        int wit_checked = 0, wit_agree = 0;
        while (ri_checked < 1000) {
            int dim = static_cast<int>(rng.int_in(1, 3));
            HPoly P = random_poly(rng, dim, 5);
            CanonicalHPoly C = canonicalize(P);
            ++wit_checked;
            if (ri_member(C, C.ri_witness)) ++wit_agree; // ri_point validated by ri_member
            for (const auto& x : sample_points(C, 4, rng.next())) {
                if (ri_checked >= 1000) break;
                ++ri_checked;
                if (ri_segment_oracle(P, x, 5, rng.next()) == ri_member(C, x)) ++ri_agree;
            }
        }
        while (wit_checked < 1000) {
            int dim = static_cast<int>(rng.int_in(1, 3));
            CanonicalHPoly C = canonicalize(random_poly(rng, dim, 5));
            ++wit_checked;
            if (ri_member(C, C.ri_witness)) ++wit_agree;
        }
        // eliminate vs the one-LP lift oracle, 1000 membership queries
        int el_checked = 0, el_agree = 0;
        while (el_checked < 1000) {
            int dim = static_cast<int>(rng.int_in(2, 3));
            HPoly P = random_poly(rng, dim, 5);
            std::vector<int> keep;
            for (int i = 0; i < dim; ++i)
                if (rng.chance(1, 2)) keep.push_back(i);
            if (keep.empty()) keep.push_back(0);
            HPoly proj = eliminate(P, keep);
            CanonicalHPoly C = canonicalize(proj);
            auto lift_feasible = [&](const RatVec& p) {
                std::vector<LinRow> eqs = P.eqs();
                for (size_t i = 0; i < keep.size(); ++i)
                    eqs.push_back(LinRow{unit_vec(P.dim(), keep[i]), p[static_cast<int>(i)]});
                return lp_feasible_point(P.dim(), P.ineqs(), eqs).has_value();
            };
            for (auto p : sample_points(C, 3, rng.next())) {
                if (el_checked >= 1000) break;
                ++el_checked;
                if (lift_feasible(p) == member(proj, p)) ++el_agree;
                if (el_checked >= 1000) break;
                p[0] += rat(rng.int_in(1, 9), 1);
                ++el_checked;
                if (lift_feasible(p) == member(proj, p)) ++el_agree;
            }
        }
        std::ostringstream detail;
        detail << "normal-cone " << nc_agree << "/1000, subgradient " << sd_agree << "/1000, ri "
               << ri_agree << "/1000, ri-witness " << wit_agree << "/1000, projection " << el_agree
               << "/1000";
        criterion(11, "oracle concordance: 1000 queries per oracle pair, exact agreement",
                  nc_agree == 1000 && sd_agree == 1000 && ri_agree == 1000 && wit_agree == 1000 &&
                      el_agree == 1000,
                  detail.str());
    }

    { // 12. determinism and CLI fixtures
        CheckParams p;
        std::vector<TheoremId> ids{TheoremId::SEPARATION, TheoremId::GEM_CODERIV,
                                   TheoremId::SUBLEVEL_NC};
        SuiteReport a = run_suite(ids, 5, kSeed + 15, dims, Regime::Qualified, p);
        SuiteReport b = run_suite(ids, 5, kSeed + 15, dims, Regime::Qualified, p);
        bool suites_match = report_to_json(a).dump() == report_to_json(b).dump();

        CliRun c1 = run_cli({"check", "EPI_CODERIV", "--trials", "3", "--seed", "9"});
        CliRun c2 = run_cli({"check", "EPI_CODERIV", "--trials", "3", "--seed", "9"});
        bool cli_deterministic = c1.code == 0 && c1.out == c2.out;

        bool roundtrip = true;
        for (int s = 0; s < 50 && roundtrip; ++s) {
            const char* kind = s % 3 == 0 ? "polyhedron" : (s % 3 == 1 ? "function" : "svmap");
            CliRun g = run_cli({"gen", kind, "--seed", std::to_string(s)});
            std::string once = io::serialize_instance(io::parse_instance(g.out));
            roundtrip = g.code == 0 && once == io::serialize_instance(io::parse_instance(once));
        }

        namespace fs = std::filesystem;
        fs::path bad = fs::temp_directory_path() / "polycal_acceptance_bad.json";
        std::ofstream(bad) << "{ not json";
        CliRun parse_fail = run_cli({"ri-point", bad.string()});
        fs::remove(bad);
        CliRun forced = run_cli({"check", "SUBDIFF_SUM", "--trials", "2", "--seed", "3",
                             "--selftest-corrupt"});
        bool exit_codes = parse_fail.code == 2 && forced.code == 1;

        std::ostringstream detail;
        detail << "suites_match=" << suites_match << " cli_deterministic=" << cli_deterministic
               << " roundtrip=" << roundtrip << " exit_codes=" << exit_codes;
        criterion(12, "determinism: byte-identical reruns; CLI round-trip and exit-code fixtures",
                  suites_match && cli_deterministic && roundtrip && exit_codes, detail.str());
    }

    { // 13. qualification hygiene: violated instances are Skipped, never Mismatch
        CheckParams p;
        bool ok = true;
        std::ostringstream detail;
        for (TheoremId id : all_theorems()) {
            if (!has_qualification(id)) continue;
            SuiteReport r = run_suite({id}, 50, kSeed + 16, dims, Regime::Violated, p);
            bool this_ok = r.skipped == 50 && r.mismatch == 0 && r.equal == 0;
            if (!this_ok) {
                ok = false;
                detail << theorem_name(id) << ": " << summary(r) << "; ";
            }
        }
        criterion(13, "qualification hygiene: 50 violated instances per qualified theorem, all Skipped",
                  ok, detail.str());
    }

    std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures;
}

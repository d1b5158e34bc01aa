#include "polycal/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "polycal/harness.hpp"
#include "polycal/json_io.hpp"

namespace polycal::cli {

namespace {

using io::Json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

HPoly load_hpoly(const std::string& path) {
    io::InstanceDoc doc = io::parse_instance(read_file(path));
    if (!std::holds_alternative<HPoly>(doc.payload))
        throw MalformedInstanceError(path + ": expected an hpoly document");
    return std::get<HPoly>(doc.payload);
}

MaxAffineFn load_fn(const std::string& path) {
    io::InstanceDoc doc = io::parse_instance(read_file(path));
    if (!std::holds_alternative<MaxAffineFn>(doc.payload))
        throw MalformedInstanceError(path + ": expected a maxaffine document");
    return std::get<MaxAffineFn>(doc.payload);
}

SVMap load_svmap(const std::string& path) {
    io::InstanceDoc doc = io::parse_instance(read_file(path));
    if (!std::holds_alternative<SVMap>(doc.payload))
        throw MalformedInstanceError(path + ": expected an svmap document");
    return std::get<SVMap>(doc.payload);
}

uint64_t default_seed() {
    if (const char* env = std::getenv("POLYCAL_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw MalformedInstanceError("POLYCAL_SEED is not an unsigned integer");
        }
    }
    return 0;
}

Dims parse_dims(const std::string& s) {
    Dims d;
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos) {
            d.n = d.m = std::stoi(s);
        } else {
            d.n = std::stoi(s.substr(0, comma));
            d.m = std::stoi(s.substr(comma + 1));
        }
    } catch (...) {
        throw MalformedInstanceError("--dims expects n or n,m");
    }
    if (d.n < 1 || d.n > 3 || d.m < 1 || d.m > 3)
        throw CapsExceededError("--dims capped at 3,3");
    return d;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

Json separation_json(const HPoly& P, const HPoly& Q) {
    auto cert = proper_separation(P, Q);
    Json j;
    j["separable"] = cert.has_value();
    if (cert) {
        Json c;
        c["v"] = io::vec_to_json(cert->v);
        c["sup_p"] = io::rat_to_json(cert->sup_p);
        c["inf_q"] = io::rat_to_json(cert->inf_q);
        c["strict_w1"] = io::vec_to_json(cert->strict_w1);
        c["strict_w2"] = io::vec_to_json(cert->strict_w2);
        j["certificate"] = std::move(c);
    } else {
        j["ri_witness"] = io::vec_to_json(*ri_intersect_witness(P, Q));
    }
    return j;
}

int run_gen(const std::string& kind, uint64_t seed, Dims dims, Regime regime, std::ostream& out) {
    if (kind == "polyhedron") {
        Instance inst = gen_instance(TheoremId::RI_PROPS, dims, regime, seed);
        emit(out, Json::parse(io::serialize_instance(io::InstanceDoc{inst.polys[0]})));
    } else if (kind == "function") {
        Instance inst = gen_instance(TheoremId::EPI_RI, dims, Regime::Qualified, seed);
        emit(out, Json::parse(io::serialize_instance(io::InstanceDoc{inst.fns[0]})));
    } else if (kind == "svmap") {
        Instance inst = gen_instance(TheoremId::ROCKAFELLAR, dims, Regime::Qualified, seed);
        emit(out, Json::parse(io::serialize_instance(io::InstanceDoc{inst.maps[0]})));
    } else if (kind == "pair") {
        Instance inst = gen_instance(TheoremId::RI_PROPS, dims, regime, seed);
        emit(out, inst.to_json());
    } else if (kind == "triple") {
        Instance inst = gen_instance(TheoremId::NC_INTERSECTION, dims, regime, seed);
        emit(out, inst.to_json());
    } else {
        throw MalformedInstanceError("gen kind must be polyhedron|function|svmap|pair|triple");
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact polyhedral convex-analysis engine"};
    app.require_subcommand(1);

    std::string file1, file2, point_csv, at_csv, v_csv, theorem, kind, dims_str = "2,2",
                                                                        regime_str = "qualified";
    int trials = 10;
    std::string seed_str;
    bool selftest_corrupt = false;

    auto* ri_point_cmd = app.add_subcommand("ri-point", "relative interior point of a polyhedron");
    ri_point_cmd->add_option("FILE", file1)->required();

    auto* ri_member_cmd = app.add_subcommand("ri-member", "relative interior membership test");
    ri_member_cmd->add_option("FILE", file1)->required();
    ri_member_cmd->add_option("--point", point_csv)->required();

    auto* nc_cmd = app.add_subcommand("normal-cone", "normal cone at a point");
    nc_cmd->add_option("FILE", file1)->required();
    nc_cmd->add_option("--point", point_csv)->required();

    auto* sep_cmd = app.add_subcommand("separate", "proper separation of two polyhedra");
    sep_cmd->add_option("FILE1", file1)->required();
    sep_cmd->add_option("FILE2", file2)->required();

    auto* sd_cmd = app.add_subcommand("subdiff", "subdifferential of a max-affine function");
    sd_cmd->add_option("FILE", file1)->required();
    sd_cmd->add_option("--point", point_csv)->required();

    auto* cd_cmd = app.add_subcommand("coderiv", "coderivative of a set-valued mapping");
    cd_cmd->add_option("FILE", file1)->required();
    cd_cmd->add_option("--at", at_csv)->required();
    cd_cmd->add_option("--v", v_csv)->required();

    auto* ov_cmd = app.add_subcommand("optval", "optimal value function evaluation");
    ov_cmd->add_option("FMAP", file1)->required();
    ov_cmd->add_option("PHI", file2)->required();
    ov_cmd->add_option("--at", at_csv)->required();

    auto* check_cmd = app.add_subcommand("check", "verify a calculus theorem on random instances");
    check_cmd->add_option("THEOREM_ID", theorem)->required();
    check_cmd->add_option("--trials", trials);
    check_cmd->add_option("--seed", seed_str);
    check_cmd->add_option("--dims", dims_str);
    check_cmd->add_option("--regime", regime_str)->check(CLI::IsMember({"qualified", "violated"}));
    check_cmd->add_flag("--selftest-corrupt", selftest_corrupt)->group(""); // testing hook

    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("KIND", kind)->required();
    gen_cmd->add_option("--seed", seed_str);
    gen_cmd->add_option("--dims", dims_str);
    gen_cmd->add_option("--regime", regime_str)->check(CLI::IsMember({"qualified", "violated"}));

    std::vector<std::string> argv_like = args;
    std::reverse(argv_like.begin(), argv_like.end());
    try {
        app.parse(argv_like);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        uint64_t seed = seed_str.empty() ? default_seed() : std::stoull(seed_str);

        if (ri_point_cmd->parsed()) {
            HPoly P = load_hpoly(file1);
            emit(out, Json{{"point", io::vec_to_json(ri_point(P))}});
        } else if (ri_member_cmd->parsed()) {
            HPoly P = load_hpoly(file1);
            emit(out, Json{{"member", ri_member(P, io::vec_from_csv(point_csv))}});
        } else if (nc_cmd->parsed()) {
            HPoly P = load_hpoly(file1);
            emit(out, Json{{"cone", io::cone_to_json(normal_cone(P, io::vec_from_csv(point_csv)))}});
        } else if (sep_cmd->parsed()) {
            emit(out, separation_json(load_hpoly(file1), load_hpoly(file2)));
        } else if (sd_cmd->parsed()) {
            MaxAffineFn f = load_fn(file1);
            emit(out, Json{{"set", io::hpoly_to_json(subdiff(f, io::vec_from_csv(point_csv)))}});
        } else if (cd_cmd->parsed()) {
            SVMap F = load_svmap(file1);
            RatVec at = io::vec_from_csv(at_csv);
            if (at.dim() != F.in_dim() + F.out_dim())
                throw MalformedInstanceError("--at must have n+m coordinates");
            RatVec x = subvec(at, 0, F.in_dim());
            RatVec y = subvec(at, F.in_dim(), F.out_dim());
            CoderivResult r = coderivative(F, x, y, io::vec_from_csv(v_csv));
            emit(out, Json{{"set", io::hpoly_to_json(r.u_set)}});
        } else if (ov_cmd->parsed()) {
            SVMap F = load_svmap(file1);
            MaxAffineFn phi = load_fn(file2);
            OptValueFn mu = optimal_value(F, phi);
            ExtReal val = mu(io::vec_from_csv(at_csv));
            emit(out, Json{{"value", val.is_finite ? rat_to_string(val.value) : "inf"}});
        } else if (check_cmd->parsed()) {
            auto id = theorem_from_name(theorem);
            if (!id) throw MalformedInstanceError("unknown theorem id: " + theorem);
            Dims dims = parse_dims(dims_str);
            Regime regime = regime_str == "violated" ? Regime::Violated : Regime::Qualified;
            if (regime == Regime::Violated && !has_qualification(*id))
                throw MalformedInstanceError(theorem_name(*id) + " has no qualification to violate");
            CheckParams params;
            params.corrupt = selftest_corrupt;
            SuiteReport report = run_suite({*id}, trials, seed, dims, regime, params);
            Json j = report_to_json(report);
            j["theorem"] = theorem_name(*id);
            j["trials"] = trials;
            j["seed"] = std::to_string(seed);
            j["regime"] = regime_str;
            emit(out, j);
            return report.mismatch > 0 ? 1 : 0;
        } else if (gen_cmd->parsed()) {
            Dims dims = parse_dims(dims_str);
            Regime regime = regime_str == "violated" ? Regime::Violated : Regime::Qualified;
            return run_gen(kind, seed, dims, regime, out);
        }
        return 0;
    } catch (const ParseError& e) {
        err << "parse error at line " << e.line << ", column " << e.column << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace polycal::cli

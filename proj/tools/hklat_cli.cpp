#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hklat/io.hpp"
#include "hklat/presets.hpp"
#include "hklat/series.hpp"
#include "hklat/suite.hpp"

namespace fs = std::filesystem;
using hklat::json;
using hklat::Rat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

std::string find_data_dir(const std::string& explicit_dir, const char* argv0) {
    if (!explicit_dir.empty()) return explicit_dir;
    std::error_code ec;
    fs::path exe = fs::canonical("/proc/self/exe", ec);
    if (ec && argv0) exe = fs::absolute(argv0, ec);
    std::vector<fs::path> candidates;
    if (!ec && exe.has_parent_path()) {
        candidates.push_back(exe.parent_path() / "data");
        candidates.push_back(exe.parent_path().parent_path() / "data");
        candidates.push_back(exe.parent_path().parent_path() / "share" / "hklat" / "data");
    }
    candidates.push_back(fs::path("data"));
    for (const fs::path& c : candidates)
        if (fs::is_directory(c)) return c.string();
    throw hklat::BadInput("no data directory found; pass --data");
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw hklat::BadInput("cannot write " + out_path);
        out << text;
    }
}

hklat::MukaiSpace load_space(const std::string& lattice_path) {
    return hklat::mukai_from_json(hklat::load_json_file(lattice_path));
}

json suite_report_json(const hklat::SuiteReport& report) {
    json j;
    j["seed"] = report.seed;
    json results = json::array();
    for (const auto& r : report.results) {
        json e;
        e["name"] = r.name;
        e["instances"] = r.instances;
        e["failures"] = r.failures;
        results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    j["ok"] = report.ok;
    return j;
}

struct Options {
    std::string lattice, vector_path, hodge, out, data, preset, input, fault;
    long n = 2;
    int b2 = 23;
    int order = 8;
    uint64_t seed = 20240607;
    int instances = 100;
    int b2_max = 5;
    int n_max = 3;
    std::string c2sq, c4;
    Rat r_rank = Rat(1);
    std::string rank_str = "1", rx_str = "1";
};

int run(int argc, char** argv) {
    CLI::App app{"exact lattice and Lie-algebra calculus for hyper-Kaehler atomicity"};
    app.require_subcommand(1);
    Options opt;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", opt.out, "write JSON here instead of stdout"); };

    CLI::App* atomic = app.add_subcommand("atomic", "atomicity deciders");
    CLI::App* atomic_check = atomic->add_subcommand("check", "run the atomicity criteria");
    atomic_check->add_option("--lattice", opt.lattice, "lattice JSON file")->required();
    atomic_check->add_option("--vector", opt.vector_path, "symmetric-power vector JSON file")->required();
    atomic_check->add_option("--hodge", opt.hodge, "Hodge data JSON file (enables the obstruction route)");
    add_out(atomic_check);

    CLI::App* vtilde = app.add_subcommand("vtilde", "witness recovery");
    CLI::App* vtilde_recover = vtilde->add_subcommand("recover", "recover the extended vector line");
    vtilde_recover->add_option("--lattice", opt.lattice)->required();
    vtilde_recover->add_option("--vector", opt.vector_path)->required();
    add_out(vtilde_recover);

    CLI::App* obs = app.add_subcommand("obs", "obstruction map");
    CLI::App* obs_rank = obs->add_subcommand("rank", "rank of the degree-two contraction map");
    obs_rank->add_option("--lattice", opt.lattice)->required();
    obs_rank->add_option("--vector", opt.vector_path)->required();
    obs_rank->add_option("--hodge", opt.hodge)->required();
    add_out(obs_rank);

    CLI::App* verbitsky = app.add_subcommand("verbitsky", "Verbitsky component model");
    CLI::App* verbitsky_dims = verbitsky->add_subcommand("dims", "kernel dimension of the contraction");
    verbitsky_dims->add_option("--b2", opt.b2, "second Betti number (synthetic diagonal lattice)");
    verbitsky_dims->add_option("--n", opt.n, "symmetric degree")->required();
    verbitsky_dims->add_option("--lattice", opt.lattice, "use this lattice file instead");
    add_out(verbitsky_dims);

    CLI::App* tangent = app.add_subcommand("tangent-bundle", "tangent-bundle Mukai-vector pipeline");
    tangent->add_option("--n", opt.n, "half complex dimension")->required();
    add_out(tangent);

    CLI::App* fujiki = app.add_subcommand("fujiki", "Fujiki-constant consistency");
    CLI::App* fujiki_check = fujiki->add_subcommand("check", "check the degree-four consistency relation");
    fujiki_check->add_option("--n", opt.n, "half complex dimension");
    fujiki_check->add_option("--c2sq", opt.c2sq, "Fujiki constant of c2^2");
    fujiki_check->add_option("--c4", opt.c4, "Fujiki constant of c4");
    fujiki_check->add_option("--input", opt.input, "JSON file with {n, c2sq, c4}");
    fujiki_check->add_option("--preset", opt.preset, "named input from the data directory");
    fujiki_check->add_option("--data", opt.data, "data directory");
    add_out(fujiki_check);

    CLI::App* lagrangian = app.add_subcommand("lagrangian", "Lagrangian criterion");
    CLI::App* lagrangian_check = lagrangian->add_subcommand("check", "rank-and-membership test");
    lagrangian_check->add_option("--input", opt.input, "restriction data JSON file");
    lagrangian_check->add_option("--preset", opt.preset, "named preset");
    lagrangian_check->add_option("--data", opt.data, "data directory");
    add_out(lagrangian_check);

    CLI::App* spherical = app.add_subcommand("spherical", "spherical-object obstructions");
    CLI::App* spherical_verdict = spherical->add_subcommand("verdict", "Euler-pairing exclusion");
    spherical_verdict->add_option("--preset", opt.preset, "deformation type name")->required();
    spherical_verdict->add_option("--data", opt.data, "data directory");
    add_out(spherical_verdict);

    CLI::App* series = app.add_subcommand("series", "graded series engine");
    CLI::App* series_verify = series->add_subcommand("verify", "series identities");
    series_verify->add_option("--order", opt.order, "truncation order");
    series_verify->add_option("--seed", opt.seed, "seed for the randomized round trips");
    add_out(series_verify);

    CLI::App* suite = app.add_subcommand("suite", "randomized invariant suites");
    suite->add_option("--seed", opt.seed, "seed (printed in the report header)");
    suite->add_option("--instances", opt.instances, "instances per property");
    suite->add_option("--b2max", opt.b2_max, "largest b2");
    suite->add_option("--nmax", opt.n_max, "largest symmetric degree");
    suite->add_option("--inject-fault", opt.fault, "debug canary: 'laplacian-sign'");
    add_out(suite);

    CLI::App* presets = app.add_subcommand("presets", "shipped input data");
    CLI::App* presets_list = presets->add_subcommand("list", "enumerate presets with provenance");
    presets_list->add_option("--data", opt.data, "data directory");
    add_out(presets_list);
    CLI::App* presets_show = presets->add_subcommand("show", "show one preset");
    presets_show->add_option("name", opt.preset, "preset name")->required();
    presets_show->add_option("--data", opt.data, "data directory");
    add_out(presets_show);

    CLI::App* kcmd = app.add_subcommand("k-relation", "degree-four coefficient match");
    kcmd->add_option("--n", opt.n, "half complex dimension")->required();
    kcmd->add_option("--rx", opt.rx_str, "structure-sheaf coefficient r_X");
    add_out(kcmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    if (atomic_check->parsed()) {
        hklat::MukaiSpace space = load_space(opt.lattice);
        hklat::SymVec<Rat> x =
            hklat::symvec_from_json(hklat::load_json_file(opt.vector_path), space.dim());
        hklat::AtomicVerdict codim = hklat::is_atomic_codim(space, x);
        json j = hklat::to_json(codim);
        if (!opt.hodge.empty()) {
            hklat::HodgeData hd = hklat::hodge_from_json(space, hklat::load_json_file(opt.hodge));
            hklat::AtomicVerdict obstruction = hklat::is_atomic_obstruction(space, x, hd);
            j["obstruction"] = hklat::to_json(obstruction);
            j["agreement"] = (codim.atomic == obstruction.atomic);
            if (codim.atomic != obstruction.atomic) {
                j["internal_error"] = "criteria disagree";
                emit(j, opt.out);
                return kExitSuiteFailure;
            }
        }
        emit(j, opt.out);
        return kExitOk;
    }

    if (vtilde_recover->parsed()) {
        hklat::MukaiSpace space = load_space(opt.lattice);
        hklat::SymVec<Rat> x =
            hklat::symvec_from_json(hklat::load_json_file(opt.vector_path), space.dim());
        emit(hklat::to_json(hklat::is_atomic_codim(space, x)), opt.out);
        return kExitOk;
    }

    if (obs_rank->parsed()) {
        hklat::MukaiSpace space = load_space(opt.lattice);
        hklat::SymVec<Rat> x =
            hklat::symvec_from_json(hklat::load_json_file(opt.vector_path), space.dim());
        hklat::HodgeData hd = hklat::hodge_from_json(space, hklat::load_json_file(opt.hodge));
        hklat::AtomicVerdict verdict = hklat::is_atomic_obstruction(space, x, hd);
        json j;
        j["rank"] = verdict.obs_rank;
        j["dim_ht2"] = space.b2();
        j["atomic"] = verdict.atomic;
        emit(j, opt.out);
        return kExitOk;
    }

    if (verbitsky_dims->parsed()) {
        std::optional<hklat::QuadSpace> base;
        if (!opt.lattice.empty()) {
            base = hklat::quadspace_from_json(hklat::load_json_file(opt.lattice));
        } else {
            if (opt.b2 < 1) throw hklat::BadInput("b2 must be positive");
            hklat::Mat<Rat> g(opt.b2, opt.b2);
            g.at(0, 0) = Rat(2);
            for (int i = 1; i < opt.b2; ++i) g.at(i, i) = Rat(-2);
            base.emplace(std::move(g));
        }
        hklat::MukaiSpace space{*base};
        json j;
        j["b2"] = space.b2();
        j["n"] = opt.n;
        j["dim_sym_n"] = hklat::sym_dimension(space.dim(), static_cast<int>(opt.n));
        j["dim_sym_n_minus_2"] = hklat::sym_dimension(space.dim(), static_cast<int>(opt.n) - 2);
        j["dim_sh"] = hklat::sh_dimension(space.total(), static_cast<int>(opt.n));
        emit(j, opt.out);
        return kExitOk;
    }

    if (tangent->parsed()) {
        json j;
        j["n"] = opt.n;
        if (opt.n == 2) {
            hklat::FourfoldResult r = hklat::fourfold_contradiction();
            j["c2sq"] = r.c2sq.str();
            j["c4"] = r.c4.str();
            j["verdict"] = r.contradiction ? "not_atomic" : "not_excluded";
            j["reason"] = r.reason;
        } else {
            hklat::GradedSeries vt = hklat::tangent_mukai_degree4(Rat(opt.n));
            j["rank"] = vt.coeff({0, 0}).str();
            j["c2_coefficient"] = vt.coeff({1, 0}).str();
            j["c2sq_coefficient"] = vt.coeff({2, 0}).str();
            j["c4_coefficient"] = vt.coeff({0, 1}).str();
            j["k_over_rx"] = (hklat::k_relation(opt.n, Rat(1))).str();
            j["verdict"] = "requires_fujiki_constants";
        }
        emit(j, opt.out);
        return kExitOk;
    }

    if (fujiki_check->parsed()) {
        long n = opt.n;
        Rat c2sq, c4;
        json provenance;
        if (!opt.preset.empty()) {
            hklat::DataDir data(find_data_dir(opt.data, argv[0]));
            auto in = data.load_fujiki(opt.preset);
            n = in.n;
            c2sq = in.c2sq;
            c4 = in.c4;
            provenance = in.raw;
        } else if (!opt.input.empty()) {
            json in = hklat::load_json_file(opt.input);
            n = in.at("n").get<long>();
            c2sq = hklat::rat_from_json(in.at("c2sq"));
            c4 = hklat::rat_from_json(in.at("c4"));
            provenance = in;
        } else {
            if (opt.c2sq.empty() || opt.c4.empty())
                throw hklat::BadInput("fujiki check needs --preset, --input, or --c2sq/--c4");
            c2sq = Rat::parse(opt.c2sq);
            c4 = Rat::parse(opt.c4);
        }
        hklat::FujikiVerdict v = hklat::fujiki_consistency(n, c2sq, c4);
        json j;
        j["n"] = n;
        j["c2sq"] = c2sq.str();
        j["c4"] = c4.str();
        j["lhs"] = v.lhs.str();
        j["rhs"] = v.rhs.str();
        j["consistent"] = v.consistent;
        j["verdict"] = v.verdict;
        if (!provenance.is_null() && provenance.contains("notes")) j["notes"] = provenance["notes"];
        emit(j, opt.out);
        return kExitOk;
    }

    if (lagrangian_check->parsed()) {
        hklat::RestrictionData rd;
        json extra;
        if (!opt.preset.empty()) {
            hklat::DataDir data(find_data_dir(opt.data, argv[0]));
            auto preset = data.load_lagrangian(opt.preset);
            rd = preset.restriction;
            if (preset.diamond) {
                std::vector<long> ext = hklat::ext_dims_structure_sheaf(*preset.diamond);
                extra["ext_dims"] = ext;
            }
            if (preset.raw.contains("notes")) extra["notes"] = preset.raw["notes"];
        } else if (!opt.input.empty()) {
            rd = hklat::restriction_from_json(hklat::load_json_file(opt.input));
        } else {
            throw hklat::BadInput("lagrangian check needs --preset or --input");
        }
        json j = hklat::to_json(hklat::lagrangian_atomic(rd));
        for (auto& [k, v] : extra.items()) j[k] = v;
        emit(j, opt.out);
        return kExitOk;
    }

    if (spherical_verdict->parsed()) {
        hklat::DataDir data(find_data_dir(opt.data, argv[0]));
        hklat::SphericalVerdict v = hklat::spherical_verdict(data.load_spherical(opt.preset));
        emit(hklat::to_json(v), opt.out);
        return kExitOk;
    }

    if (series_verify->parsed()) {
        bool identity = hklat::verify_lagrangian_identity(opt.order);
        hklat::Rng rng(opt.seed);
        bool round_trips = true;
        for (int t = 0; t < 20 && round_trips; ++t) {
            hklat::GradedSeries s = hklat::GradedSeries::chern_vars(3, opt.order > 12 ? 12 : opt.order);
            s += hklat::GradedSeries::constant(s, Rat(1));
            hklat::GradedSeries noise(s.weights(), s.trunc());
            for (int v = 0; v < s.vars(); ++v) {
                std::vector<int> e(s.vars(), 0);
                e[v] = 1;
                noise.add_term(e, rng.small_rat(3));
            }
            s += noise;
            if (s.log().exp() != s) round_trips = false;
            hklat::GradedSeries root = s.sqrt();
            if (root * root != s) round_trips = false;
            if (s * s.inverse() != hklat::GradedSeries::constant(s, Rat(1))) round_trips = false;
        }
        bool unilog = hklat::UniSeries::exp_x(opt.order).log() == hklat::UniSeries::x(opt.order);
        json j;
        j["order"] = opt.order;
        j["lagrangian_identity"] = identity;
        j["exp_log_round_trips"] = round_trips;
        j["uniseries_log_exp"] = unilog;
        bool ok = identity && round_trips && unilog;
        j["ok"] = ok;
        emit(j, opt.out);
        return ok ? kExitOk : kExitSuiteFailure;
    }

    if (suite->parsed()) {
        hklat::SuiteConfig config;
        config.seed = opt.seed;
        config.instances = opt.instances;
        config.b2_max = opt.b2_max;
        config.n_max = opt.n_max;
        if (!opt.fault.empty()) {
            if (opt.fault != "laplacian-sign") throw hklat::BadInput("unknown fault: " + opt.fault);
            config.inject_laplacian_fault = true;
        }
        hklat::SuiteReport report = hklat::run_suite(config);
        emit(suite_report_json(report), opt.out);
        return report.ok ? kExitOk : kExitSuiteFailure;
    }

    if (presets_list->parsed()) {
        hklat::DataDir data(find_data_dir(opt.data, argv[0]));
        emit(data.listing(), opt.out);
        return kExitOk;
    }

    if (presets_show->parsed()) {
        hklat::DataDir data(find_data_dir(opt.data, argv[0]));
        for (const std::string& name : data.lattice_names()) {
            if (name == opt.preset) {
                json j = hklat::load_json_file(data.root() + "/lattices/" + name + ".json");
                emit(j, opt.out);
                return kExitOk;
            }
        }
        for (const std::string& name : data.lagrangian_names()) {
            if (name == opt.preset) {
                emit(hklat::load_json_file(data.root() + "/presets/" + name + ".json"), opt.out);
                return kExitOk;
            }
        }
        for (const std::string& name : data.spherical_names()) {
            if (name == opt.preset) {
                json types = hklat::load_json_file(data.root() + "/presets/deformation_types.json");
                emit(types.at(opt.preset), opt.out);
                return kExitOk;
            }
        }
        throw hklat::UnknownPreset("unknown preset: " + opt.preset);
    }

    if (kcmd->parsed()) {
        Rat rx = Rat::parse(opt.rx_str);
        Rat k = hklat::k_relation(opt.n, rx);
        json j;
        j["n"] = opt.n;
        j["r_x"] = rx.str();
        j["k"] = k.str();
        emit(j, opt.out);
        return kExitOk;
    }

    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hklat::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const hklat::UnknownPreset& e) {
        std::cerr << "unknown preset: " << e.what() << "\n";
        return kExitParse;
    } catch (const hklat::Error& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hklat/io.hpp"
#include "hklat/presets.hpp"
#include "hklat/series.hpp"
#include "hklat/suite.hpp"

namespace py = pybind11;
using hklat::json;
using hklat::Rat;

namespace {

std::string dumps(const json& j) { return j.dump(); }

json loads(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw hklat::ParseError("invalid JSON input");
    return j;
}

std::string atomic_check(const std::string& lattice_json, const std::string& vector_json,
                         const std::string& hodge_json) {
    hklat::MukaiSpace space = hklat::mukai_from_json(loads(lattice_json));
    hklat::SymVec<Rat> x = hklat::symvec_from_json(loads(vector_json), space.dim());
    hklat::AtomicVerdict codim = hklat::is_atomic_codim(space, x);
    json out = hklat::to_json(codim);
    if (!hodge_json.empty()) {
        hklat::HodgeData hd = hklat::hodge_from_json(space, loads(hodge_json));
        hklat::AtomicVerdict obstruction = hklat::is_atomic_obstruction(space, x, hd);
        out["obstruction"] = hklat::to_json(obstruction);
        out["agreement"] = (codim.atomic == obstruction.atomic);
    }
    return dumps(out);
}

long verbitsky_dim(int b2, int n) {
    hklat::Mat<Rat> g(b2, b2);
    g.at(0, 0) = Rat(2);
    for (int i = 1; i < b2; ++i) g.at(i, i) = Rat(-2);
    hklat::MukaiSpace space{hklat::QuadSpace(std::move(g))};
    return hklat::sh_dimension(space.total(), n);
}

long verbitsky_dim_lattice(const std::string& lattice_json, int n) {
    hklat::MukaiSpace space = hklat::mukai_from_json(loads(lattice_json));
    return hklat::sh_dimension(space.total(), n);
}

std::string tangent_bundle(long n) {
    json j;
    j["n"] = n;
    if (n == 2) {
        hklat::FourfoldResult r = hklat::fourfold_contradiction();
        j["c2sq"] = r.c2sq.str();
        j["c4"] = r.c4.str();
        j["verdict"] = r.contradiction ? "not_atomic" : "not_excluded";
        j["reason"] = r.reason;
    } else {
        hklat::GradedSeries vt = hklat::tangent_mukai_degree4(Rat(n));
        j["rank"] = vt.coeff({0, 0}).str();
        j["c2_coefficient"] = vt.coeff({1, 0}).str();
        j["c2sq_coefficient"] = vt.coeff({2, 0}).str();
        j["c4_coefficient"] = vt.coeff({0, 1}).str();
        j["verdict"] = "requires_fujiki_constants";
    }
    return dumps(j);
}

std::string fujiki_check(long n, const std::string& c2sq, const std::string& c4) {
    hklat::FujikiVerdict v = hklat::fujiki_consistency(n, Rat::parse(c2sq), Rat::parse(c4));
    json j;
    j["n"] = n;
    j["lhs"] = v.lhs.str();
    j["rhs"] = v.rhs.str();
    j["consistent"] = v.consistent;
    j["verdict"] = v.verdict;
    return dumps(j);
}

std::string lagrangian_check(const std::string& restriction_json) {
    hklat::RestrictionData rd = hklat::restriction_from_json(loads(restriction_json));
    return dumps(hklat::to_json(hklat::lagrangian_atomic(rd)));
}

std::vector<long> ext_dims(const std::vector<std::vector<long>>& diamond) {
    return hklat::ext_dims_structure_sheaf(hklat::HodgeDiamond(diamond));
}

std::string spherical_verdict_from_data(const std::string& data_dir, const std::string& name) {
    hklat::DataDir data(data_dir);
    return dumps(hklat::to_json(hklat::spherical_verdict(data.load_spherical(name))));
}

std::string presets_listing(const std::string& data_dir) {
    return dumps(hklat::DataDir(data_dir).listing());
}

std::string k_relation(long n, const std::string& rx) {
    return hklat::k_relation(n, Rat::parse(rx)).str();
}

std::string mukai_pairing(const std::string& lattice_json, const std::string& x_json,
                          const std::string& y_json, const std::string& epsilon) {
    hklat::MukaiSpace space = hklat::mukai_from_json(loads(lattice_json));
    hklat::SymVec<Rat> x = hklat::symvec_from_json(loads(x_json), space.dim());
    hklat::SymVec<Rat> y = hklat::symvec_from_json(loads(y_json), space.dim());
    Rat eps = Rat::parse(epsilon);
    json j;
    j["value"] = hklat::mukai_pairing(space, x, y, eps).str();
    j["epsilon"] = eps.str();
    j["normalization"] = "full permutation sum, no 1/n!";
    return dumps(j);
}

std::string run_suite(uint64_t seed, int instances) {
    hklat::SuiteConfig config;
    config.seed = seed;
    config.instances = instances;
    hklat::SuiteReport report = hklat::run_suite(config);
    json j;
    j["seed"] = report.seed;
    j["ok"] = report.ok;
    json results = json::array();
    for (const auto& r : report.results)
        results.push_back(json{{"name", r.name}, {"instances", r.instances}, {"failures", r.failures}});
    j["results"] = std::move(results);
    return dumps(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact lattice and Lie-algebra calculus for hyper-Kaehler atomicity";

    // Base first: translators run newest-first, so the subclass must come second.
    py::register_exception<hklat::Error>(m, "HklatError");
    py::register_exception<hklat::ParseError>(m, "HklatParseError");

    m.def("atomic_check", &atomic_check, py::arg("lattice_json"), py::arg("vector_json"),
          py::arg("hodge_json") = std::string(),
          "Run the atomicity criteria on JSON inputs; returns a JSON verdict.");
    m.def("verbitsky_dim", &verbitsky_dim, py::arg("b2"), py::arg("n"),
          "Kernel dimension of the contraction on Sym^n over a synthetic rank-b2 lattice.");
    m.def("verbitsky_dim_lattice", &verbitsky_dim_lattice, py::arg("lattice_json"), py::arg("n"));
    m.def("tangent_bundle", &tangent_bundle, py::arg("n"),
          "Tangent-bundle Mukai-vector pipeline; n = 2 runs the fourfold contradiction.");
    m.def("fujiki_check", &fujiki_check, py::arg("n"), py::arg("c2sq"), py::arg("c4"));
    m.def("lagrangian_check", &lagrangian_check, py::arg("restriction_json"));
    m.def("ext_dims", &ext_dims, py::arg("hodge_diamond"));
    m.def("spherical_verdict", &spherical_verdict_from_data, py::arg("data_dir"), py::arg("name"));
    m.def("presets", &presets_listing, py::arg("data_dir"));
    m.def("k_relation", &k_relation, py::arg("n"), py::arg("rx"));
    m.def("mukai_pairing", &mukai_pairing, py::arg("lattice_json"), py::arg("x_json"),
          py::arg("y_json"), py::arg("epsilon") = std::string("1"),
          "Pairing on the symmetric-power model; the epsilon convention is echoed back.");
    m.def("series_verify", &hklat::verify_lagrangian_identity, py::arg("order"));
    m.def("run_suite", &run_suite, py::arg("seed") = 20240607, py::arg("instances") = 25);
}

#include "hklat/io.hpp"

#include <fstream>

namespace hklat {

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw ParseError("expected an integer or a 'p/q' string");
}

json to_json(const Vec<Rat>& v) {
    json coords = json::array();
    for (const Rat& x : v) coords.push_back(to_json(x));
    return json{{"coords", coords}};
}

Vec<Rat> vec_from_json(const json& j) {
    const json& arr = j.is_object() ? j.at("coords") : j;
    if (!arr.is_array()) throw ParseError("expected a coordinate array");
    Vec<Rat> v;
    v.reserve(arr.size());
    for (const json& x : arr) v.push_back(rat_from_json(x));
    return v;
}

json to_json(const Mat<Rat>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<Rat> mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty matrix array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    Mat<Rat> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (static_cast<int>(row.size()) != cols) throw ParseError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(row.at(c));
    }
    return m;
}

json to_json(const QuadSpace& s) {
    json j;
    j["dim"] = s.dim();
    j["gram"] = to_json(s.gram());
    if (!s.labels().empty()) j["labels"] = s.labels();
    return j;
}

QuadSpace quadspace_from_json(const json& j) {
    Mat<Rat> gram = mat_from_json(j.at("gram"));
    if (j.contains("dim") && j.at("dim").get<int>() != gram.rows())
        throw ParseError("declared dim disagrees with the Gram matrix");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return QuadSpace(std::move(gram), std::move(labels));
}

json to_json(const MukaiSpace& s) {
    json j;
    j["mukai"] = true;
    j["base"] = to_json(s.base());
    return j;
}

MukaiSpace mukai_from_json(const json& j) {
    if (j.is_object() && j.contains("mukai") && j.at("mukai").get<bool>())
        return MukaiSpace(quadspace_from_json(j.at("base")));
    return MukaiSpace(quadspace_from_json(j));
}

json to_json(const SymVec<Rat>& x) {
    json terms = json::array();
    for (const auto& [e, c] : x.terms()) {
        json t;
        t["exp"] = e;
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    json j;
    j["n"] = x.degree();
    j["terms"] = std::move(terms);
    return j;
}

SymVec<Rat> symvec_from_json(const json& j, int dim) {
    int n = j.at("n").get<int>();
    SymVec<Rat> x(dim, n);
    for (const json& t : j.at("terms")) {
        Exp e = t.at("exp").get<Exp>();
        if (static_cast<int>(e.size()) != dim) throw ParseError("exponent length mismatch");
        int total = 0;
        for (int k : e) {
            if (k < 0) throw ParseError("negative exponent");
            total += k;
        }
        if (total != n) throw ParseError("term degree disagrees with n");
        x.add_term(e, rat_from_json(t.at("coeff")));
    }
    return x;
}

json to_json(const HodgeData& hd) {
    json e = json::array(), f = json::array();
    for (const Rat& x : hd.e()) e.push_back(to_json(x));
    for (const Rat& x : hd.f()) f.push_back(to_json(x));
    return json{{"e", e}, {"f", f}};
}

HodgeData hodge_from_json(const MukaiSpace& space, const json& j) {
    Vec<Rat> e, f;
    for (const json& x : j.at("e")) e.push_back(rat_from_json(x));
    for (const json& x : j.at("f")) f.push_back(rat_from_json(x));
    return HodgeData(space, std::move(e), std::move(f));
}

json to_json(const RestrictionData& rd) {
    json c1 = json::array();
    for (const Rat& x : rd.c1L) c1.push_back(to_json(x));
    return json{{"matrix", to_json(rd.matrix)}, {"c1L", c1}};
}

RestrictionData restriction_from_json(const json& j) {
    RestrictionData rd{mat_from_json(j.at("matrix")), {}};
    for (const json& x : j.at("c1L")) rd.c1L.push_back(rat_from_json(x));
    if (static_cast<int>(rd.c1L.size()) != rd.matrix.rows())
        throw ParseError("c1L length must equal the restriction row count");
    return rd;
}

json to_json(const AtomicVerdict& v) {
    json j;
    j["atomic"] = v.atomic;
    j["criterion"] = v.criterion;
    j["codim"] = v.criterion == "codim" ? json(v.codim) : json(nullptr);
    if (v.obs_rank >= 0) j["obs_rank"] = v.obs_rank;
    if (v.vtilde) {
        json c = json::array();
        for (const Rat& x : *v.vtilde) c.push_back(to_json(x));
        j["vtilde"] = std::move(c);
    } else {
        j["vtilde"] = nullptr;
    }
    j["notes"] = v.notes;
    return j;
}

json to_json(const AnnihilatorReport& r) {
    json j;
    j["dim_ann"] = r.dim_ann;
    j["codim"] = r.codim;
    return j;
}

json to_json(const LagrangianVerdict& v) {
    json j;
    j["atomic"] = v.atomic;
    j["restriction_rank"] = v.restriction_rank;
    j["rank_one"] = v.rank_one;
    j["c1_in_image"] = v.c1_in_image;
    return j;
}

json to_json(const ModularityVerdict& v) {
    json j;
    j["modular"] = v.modular;
    j["scalar"] = to_json(v.scalar);
    j["notes"] = v.notes;
    return j;
}

json to_json(const IsotropyVerdict& v) {
    json j;
    j["applicable"] = v.applicable;
    j["annihilated"] = v.annihilated;
    j["holds"] = v.holds;
    j["notes"] = v.notes;
    return j;
}

json to_json(const SphericalVerdict& v) {
    json j;
    j["preset"] = v.preset;
    j["excluded"] = v.excluded;
    j["verdict"] = v.verdict;
    j["explanation"] = v.explanation;
    return j;
}

json to_json(const EpwIdentityReport& r) {
    json j;
    j["well_formed"] = r.well_formed;
    j["confluent"] = r.confluent;
    j["scaling_consistent"] = r.scaling_consistent;
    j["identities"] = r.identities;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace hklat

#include "hklat/presets.hpp"

#include <algorithm>
#include <filesystem>

namespace hklat {

namespace fs = std::filesystem;

DataDir::DataDir(std::string root) : root_(std::move(root)) {
    if (!fs::is_directory(root_)) throw BadInput("data directory not found: " + root_);
}

std::string DataDir::file(const std::string& rel) const { return root_ + "/" + rel; }

namespace {
std::vector<std::string> json_stems(const std::string& dir) {
    std::vector<std::string> names;
    if (!fs::is_directory(dir)) return names;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}
}  // namespace

std::vector<std::string> DataDir::lattice_names() const { return json_stems(file("lattices")); }

QuadSpace DataDir::load_lattice(const std::string& name) const {
    std::string path = file("lattices/" + name + ".json");
    if (!fs::exists(path)) throw UnknownPreset("unknown lattice preset: " + name);
    json j = load_json_file(path);
    QuadSpace s = quadspace_from_json(j);
    if (j.contains("b2") && j.at("b2").get<int>() != s.dim())
        throw ParseError("lattice file b2 disagrees with Gram size: " + name);
    return s;
}

json DataDir::lattice_metadata(const std::string& name) const {
    std::string path = file("lattices/" + name + ".json");
    if (!fs::exists(path)) throw UnknownPreset("unknown lattice preset: " + name);
    json j = load_json_file(path);
    j.erase("gram");
    return j;
}

std::vector<std::string> DataDir::spherical_names() const {
    json j = load_json_file(file("presets/deformation_types.json"));
    std::vector<std::string> names;
    for (const auto& [key, value] : j.items()) names.push_back(key);
    std::sort(names.begin(), names.end());
    return names;
}

SphericalPreset DataDir::load_spherical(const std::string& name) const {
    json j = load_json_file(file("presets/deformation_types.json"));
    if (!j.contains(name)) throw UnknownPreset("unknown deformation type: " + name);
    const json& p = j.at(name);
    SphericalPreset preset;
    preset.name = name;
    preset.n = p.at("n").get<int>();
    preset.b2 = p.at("b2").get<int>();
    preset.generated_below_middle = p.at("generated_below_2n_minus_1").get<bool>();
    if (p.contains("citation")) preset.citation = p.at("citation").get<std::string>();
    return preset;
}

std::vector<std::string> DataDir::lagrangian_names() const {
    std::vector<std::string> names;
    for (const std::string& s : json_stems(file("presets")))
        if (s != "deformation_types") names.push_back(s);
    return names;
}

DataDir::LagrangianPreset DataDir::load_lagrangian(const std::string& name) const {
    std::string path = file("presets/" + name + ".json");
    if (!fs::exists(path)) throw UnknownPreset("unknown lagrangian preset: " + name);
    json j = load_json_file(path);
    LagrangianPreset preset{restriction_from_json(j.at("restriction")), std::nullopt, j};
    if (j.contains("hodge_diamond"))
        preset.diamond = HodgeDiamond(j.at("hodge_diamond").get<std::vector<std::vector<long>>>());
    return preset;
}

DataDir::FujikiInputs DataDir::load_fujiki(const std::string& name) const {
    std::string path = file("fujiki/" + name + ".json");
    if (!fs::exists(path)) throw UnknownPreset("unknown fujiki preset: " + name);
    json j = load_json_file(path);
    FujikiInputs inputs;
    inputs.n = j.at("n").get<long>();
    inputs.c2sq = rat_from_json(j.at("c2sq"));
    inputs.c4 = rat_from_json(j.at("c4"));
    inputs.raw = j;
    return inputs;
}

json DataDir::listing() const {
    json out;
    json lattices = json::array();
    for (const std::string& name : lattice_names()) {
        json meta = lattice_metadata(name);
        meta["name"] = name;
        lattices.push_back(std::move(meta));
    }
    out["lattices"] = std::move(lattices);
    json lag = json::array();
    for (const std::string& name : lagrangian_names()) {
        json j = load_json_file(file("presets/" + name + ".json"));
        json entry;
        entry["name"] = name;
        if (j.contains("notes")) entry["notes"] = j.at("notes");
        lag.push_back(std::move(entry));
    }
    out["lagrangian_presets"] = std::move(lag);
    json sph = json::array();
    json types = load_json_file(file("presets/deformation_types.json"));
    for (const auto& [key, value] : types.items()) {
        json entry = value;
        entry["name"] = key;
        sph.push_back(std::move(entry));
    }
    out["deformation_types"] = std::move(sph);
    return out;
}

}  // namespace hklat

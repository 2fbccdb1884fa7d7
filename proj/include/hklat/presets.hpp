#pragma once

#include <optional>

#include "hklat/io.hpp"

namespace hklat {

/// Shipped input data: Gram matrices of the standard second-cohomology
/// lattices, worked-example presets, and Fujiki-constant inputs. All values
/// live in the data directory with their provenance notes; nothing here is a
/// hard-coded truth.
class DataDir {
public:
    explicit DataDir(std::string root);

    const std::string& root() const { return root_; }

    std::vector<std::string> lattice_names() const;
    QuadSpace load_lattice(const std::string& name) const;
    json lattice_metadata(const std::string& name) const;

    std::vector<std::string> spherical_names() const;
    SphericalPreset load_spherical(const std::string& name) const;

    struct LagrangianPreset {
        RestrictionData restriction;
        std::optional<HodgeDiamond> diamond;
        json raw;
    };
    std::vector<std::string> lagrangian_names() const;
    LagrangianPreset load_lagrangian(const std::string& name) const;

    struct FujikiInputs {
        long n = 0;
        Rat c2sq;
        Rat c4;
        json raw;
    };
    FujikiInputs load_fujiki(const std::string& name) const;

    json listing() const;

private:
    std::string file(const std::string& rel) const;
    std::string root_;
};

}  // namespace hklat

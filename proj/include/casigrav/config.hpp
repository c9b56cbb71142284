#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "casigrav/experiment.hpp"
#include "casigrav/force.hpp"
#include "casigrav/modesum.hpp"

namespace casigrav {

using ordered_json = nlohmann::ordered_json;

/// Parsed and validated run configuration. Parsing rejects unknown keys
/// everywhere: a typo in a physics input must fail loudly, not default
/// silently. Serialization preserves exactly the fields that were resolved,
/// so parse -> serialize -> parse is the identity.
struct RunConfig {
    struct Cavity {
        double separation_m = 0.0;
        double refractive_index = 1.0;
        std::optional<double> area_m2;
        std::optional<double> disk_diameter_m;
        friend bool operator==(const Cavity&, const Cavity&) = default;
    };
    struct Gravity {
        std::string mode; // "uniform" | "schwarzschild"
        std::optional<double> g_m_s2;
        std::optional<double> mass_kg;
        std::optional<double> radius_m;
        friend bool operator==(const Gravity&, const Gravity&) = default;
    };
    struct Stack {
        long layers = 1;
        double layer_thickness_m = 0.0;
        friend bool operator==(const Stack&, const Stack&) = default;
    };
    struct Anchor {
        double separation_nm = 0.0;
        double eta = 0.0;
        friend bool operator==(const Anchor&, const Anchor&) = default;
    };
    struct Conductivity {
        std::optional<std::string> table_path;
        std::vector<Anchor> anchors;
        double eta_superconducting = 0.5;
        friend bool operator==(const Conductivity&, const Conductivity&) = default;
    };
    struct Detector {
        std::optional<double> threshold_n;
        std::optional<std::string> curve_path;
        double frequency_hz = 0.02; // the modulation sits at tens of mHz
        friend bool operator==(const Detector&, const Detector&) = default;
    };
    struct Numerics {
        std::vector<double> epsilon_schedule = default_epsilon_schedule;
        double fd_step_fraction = default_fd_step_fraction;
        friend bool operator==(const Numerics&, const Numerics&) = default;
    };

    Cavity cavity;
    Gravity gravity;
    std::optional<Stack> stack;
    std::optional<Conductivity> conductivity;
    std::optional<Detector> detector;
    Numerics numerics;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;

    static RunConfig from_json(const ordered_json& j);
    static RunConfig from_file(const std::string& path);
    ordered_json to_json() const;

    // Resolved domain objects. Each throws ConfigInvalid with the offending
    // field when the config lacks what the caller needs.
    CavityGeometry cavity_geometry() const;
    bool is_schwarzschild() const { return gravity.mode == "schwarzschild"; }
    SchwarzschildContext schwarzschild_context() const;
    /// Uniform g, or GM/r^2 in schwarzschild mode.
    Quantity gravity_accel() const;
    LayeredStack layered_stack() const;
    ConductivityModel conductivity_model() const;
    DetectorSensitivity detector_sensitivity() const;
    Quantity detector_frequency() const;
};

} // namespace casigrav

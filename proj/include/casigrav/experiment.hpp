#pragma once

#include <string>
#include <variant>
#include <vector>

#include "casigrav/stress_tensor.hpp"

namespace casigrav {

/// Stack of N_l identical rigid cavities sedimented into one disk-shaped
/// body. Plate area comes from the disk diameter.
class LayeredStack {
  public:
    LayeredStack(Quantity separation, double refractive_index, long layers,
                 Quantity layer_thickness, Quantity disk_diameter);

    const CavityGeometry& geometry() const { return geometry_; }
    long layers() const { return layers_; }
    Quantity layer_thickness() const { return layer_thickness_; }
    Quantity disk_diameter() const { return disk_diameter_; }
    Quantity total_thickness() const { return layer_thickness_ * static_cast<double>(layers_); }

  private:
    CavityGeometry geometry_;
    long layers_;
    Quantity layer_thickness_;
    Quantity disk_diameter_;
};

struct EtaAnchor {
    Quantity separation; // m
    double eta;          // (0, 1]
};

/// Finite-conductivity reduction factor eta as a log-log interpolated table
/// of (separation, eta) anchors, plus the superconducting-state value used
/// for modulation. Queries are allowed only within [min/2, 2*max]: the
/// model refuses to invent data far from its anchors.
class ConductivityModel {
  public:
    /// Default: the single aluminium anchor (6.5 nm -> 7e-2), eta_sc = 0.5.
    ConductivityModel();
    ConductivityModel(std::vector<EtaAnchor> table, double eta_superconducting);

    /// CSV with header `separation_nm,eta`, separations ascending.
    static ConductivityModel from_csv(const std::string& path, double eta_superconducting);

    double reduction_factor(Quantity separation) const;
    double eta_superconducting() const { return eta_superconducting_; }
    const std::vector<EtaAnchor>& table() const { return table_; }

  private:
    std::vector<EtaAnchor> table_;
    double eta_superconducting_;
};

/// Either a flat force threshold (frequency-independent) or a curve of
/// (frequency, minimum detectable force) pairs, log-log interpolated.
class DetectorSensitivity {
  public:
    struct CurvePoint {
        Quantity frequency; // Hz
        Quantity force;     // N
    };

    static DetectorSensitivity threshold(Quantity force, std::string band_label = "");
    static DetectorSensitivity curve(std::vector<CurvePoint> points);

    /// CSV with header `frequency_hz,force_n`, frequencies ascending.
    static DetectorSensitivity from_csv(const std::string& path);

    /// Default Virgo-class figure: 5e-17 N at a few tens of Hz.
    static DetectorSensitivity default_threshold();

    Quantity minimum_detectable_force(Quantity frequency) const;
    bool is_curve() const;
    const std::string& band_label() const { return band_label_; }

  private:
    DetectorSensitivity() = default;
    std::variant<Quantity, std::vector<CurvePoint>> data_;
    std::string band_label_;
};

/// Total push on the stack: F_T = eta N_l A pi^2 hbar c g / (720 (na)^3 c^2).
Quantity stack_force(const LayeredStack& stack, Quantity g, double eta);

/// Signal amplitude when eta is modulated between the normal-conductor
/// value at the stack separation and the superconducting value:
/// dF = stack_force(eta_sc) - stack_force(eta_normal).
Quantity modulation_amplitude(const LayeredStack& stack, Quantity g,
                              const ConductivityModel& model);

/// nu_min = c / (2 separation), the cavity's fundamental mode.
Quantity fundamental_frequency(Quantity separation);

/// signal / minimum detectable force at the given frequency; > 1 means
/// nominally detectable there.
double detector_margin(Quantity signal, const DetectorSensitivity& detector, Quantity frequency);

} // namespace casigrav

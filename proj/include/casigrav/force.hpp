#pragma once

#include <cstddef>
#include <functional>

#include "casigrav/stress_tensor.hpp"

namespace casigrav {

using TensorField = std::function<StressTensor(Quantity z)>;
using MetricField = std::function<Metric(Quantity z)>;

/// Default finite-difference step as a fraction of the metric scale 1/A_g.
inline constexpr double default_fd_step_fraction = 1e-4;

/// z-component of the covariant force density,
///   f_3 = -(1/sqrt(-det g)) d_mu( sqrt(-det g) T^mu_3 ) + (1/2) (d_3 g_rho_sigma) T^{rho sigma},
/// with the z-derivatives taken as central differences of width `step`.
/// Time and transverse derivatives vanish by the plate symmetry and are
/// skipped. Throws StepTooLarge when 2*A_eff*step > 0.1 with A_eff estimated
/// from the metric's own g00 variation over the stencil.
Quantity covariant_force_density(const TensorField& tensor, const MetricField& metric, Quantity z,
                                 Quantity step);

/// Closed-form force-density field of the cavity in the uniform field g:
/// f_z(z) = K * A_g / (1 + 2 A_g z), split 3/4 pressure + 1/4 energy.
struct ForceDensityField {
    std::function<Quantity(Quantity z)> density; // z -> N/m^3
    double pressure_fraction;                    // 3/4
    double energy_fraction;                      // 1/4
};

ForceDensityField closed_force_field(const CavityGeometry& geom, Quantity g);

/// Single sample of the closed form at height z.
Quantity closed_force_density(const CavityGeometry& geom, Quantity g, Quantity z);

/// Net force on the cavity, pointing along +z (opposite to g).
/// Non-isolated: both the pressure (3/4) and energy (1/4) terms act.
/// Isolated: the wall stresses cancel the pressure term, leaving the
/// energy term F = pi^2 A hbar c g / (720 (na)^3 c^2).
struct ForceResult {
    Quantity total;         // N
    Quantity pressure_term; // N
    Quantity energy_term;   // N
    bool isolated = false;

    static constexpr const char* direction = "+z (opposite to g)";
};

ForceResult integrated_force(const CavityGeometry& geom, Quantity g, bool isolated);

/// Non-isolated force by trapezoid integration of f_z over the gap instead
/// of the V*f(0) multiplication; bounds the O(A_g a) error the latter keeps.
Quantity trapezoid_force(const CavityGeometry& geom, Quantity g, std::size_t panels);

} // namespace casigrav

#pragma once

#include <array>

#include "casigrav/quantity.hpp"

namespace casigrav {

/// Parallel-plate cavity: proper separation, proper plate area, and the
/// refractive index of the gap medium (1 for vacuum). Wherever the gap is
/// filled, the optical separation n*a is what enters the formulas.
class CavityGeometry {
  public:
    CavityGeometry(Quantity separation, Quantity area, double refractive_index = 1.0);

    static CavityGeometry from_side(Quantity separation, Quantity side,
                                    double refractive_index = 1.0);
    static CavityGeometry from_disk(Quantity separation, Quantity diameter,
                                    double refractive_index = 1.0);

    Quantity separation() const { return separation_; }
    Quantity area() const { return area_; }
    double refractive_index() const { return refractive_index_; }

    /// n * a
    Quantity optical_separation() const { return separation_ * refractive_index_; }

  private:
    Quantity separation_; // m
    Quantity area_;       // m^2
    double refractive_index_;
};

/// Locally orthonormal frame of an observer held at rest against a uniform
/// gravitational acceleration g. accel_param = g/c^2; height is the
/// coordinate along the acceleration axis, measured from the world line.
class AcceleratedFrame {
  public:
    AcceleratedFrame(Quantity accel_param, Quantity height);

    static AcceleratedFrame from_gravity(Quantity g, Quantity height = si::meters(0.0));

    Quantity accel_param() const { return accel_param_; } // 1/m
    Quantity height() const { return height_; }           // m

    AcceleratedFrame at_height(Quantity z) const { return {accel_param_, z}; }

    /// 1 + 2*A_g*z; must stay positive for the metric to make sense.
    double metric_factor() const;

  private:
    Quantity accel_param_;
    Quantity height_;
};

/// Diagonal metric in signature (-,+,+,+), coordinates (x0, x, y, z) with
/// x0 = ct, so every component is dimensionless.
struct Metric {
    std::array<double, 4> diag{-1.0, 1.0, 1.0, 1.0};

    double g00() const { return diag[0]; }

    /// sqrt(-det g); throws MetricDegenerate when -det g <= 0.
    double sqrt_neg_det() const;

    static Metric minkowski() { return {}; }
};

/// Regularized vacuum stress-energy of the cavity, stored with both
/// contravariant and mixed components since the force density consumes both.
/// Diagonal by the plate symmetry; components carry J/m^3.
class StressTensor {
  public:
    /// Build from diagonal contravariant components; mixed components follow
    /// by lowering with the (diagonal) metric: T^mu_nu = g_{nu mu} T^{mu mu}.
    static StressTensor from_diagonal(const std::array<Quantity, 4>& contravariant,
                                      const Metric& metric);

    Quantity contravariant(int mu, int nu) const;
    Quantity mixed(int mu, int nu) const;

    /// g_{mu nu} T^{mu nu}
    Quantity trace(const Metric& metric) const;

  private:
    std::array<double, 4> contra_{};
    std::array<double, 4> mixed_{};
};

/// K = pi^2 hbar c / (180 (n a)^4), the energy-density scale of the cavity.
Quantity casimir_scale(const CavityGeometry& geom);

/// Flat-space tensor: K (eta^{mu nu}/4 - zhat^mu zhat^nu)
///                  = diag(-K/4, K/4, K/4, -3K/4) contravariant.
StressTensor minkowski_tensor(const CavityGeometry& geom);

/// g_00 = -(1 + 2 A_g z), spatial components flat. First order in A_g z;
/// curvature enters the line element only at second order and is omitted.
Metric frame_metric(const AcceleratedFrame& frame);

/// Tensor seen by the accelerated observer at the frame's height:
/// T^3_3 = T^{33} = -3K/4 and T^0_0 = K/4 stay constant in z, while
/// T^{00} = -(K/4)/(1 + 2 A_g z). Transverse components as in flat space.
StressTensor field_tensor(const CavityGeometry& geom, const AcceleratedFrame& frame);

} // namespace casigrav

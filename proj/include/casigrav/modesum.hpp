#pragma once

#include <span>
#include <vector>

#include "casigrav/stress_tensor.hpp"

namespace casigrav {

/// Analytic continuation of the transverse-momentum integral per mode:
/// integral d^2k/(2pi)^2 sqrt(k^2 + kappa^2) -> -kappa^3/(6 pi), in 1/m^3.
/// The caller multiplies by hbar c A / 2 and the mode degeneracy.
Quantity transverse_mode_energy(Quantity kappa);

/// One numeric regularization of the divergent sum over n^3:
/// partial sums S(eps) = sum n^3 exp(-eps n), divergent part 6/eps^4
/// subtracted, remainder extrapolated in eps^2 to eps -> 0. Converges to
/// 1/120 (the regularized value of sum n^3).
struct RegularizationRun {
    std::vector<double> cutoffs;      // descending
    std::vector<double> partials;     // raw S(eps_i)
    std::vector<double> extrapolants; // diagonal of the extrapolation tableau
    double value = 0.0;               // extrapolated regularized sum
    double error_estimate = 0.0;      // |difference of last two extrapolants|
};

inline const std::vector<double> default_epsilon_schedule{0.2, 0.1, 0.05, 0.025};

/// Brute-force S(eps) = sum_{n>=1} n^3 exp(-eps n), summed until the next
/// term drops below 1e-18 of the running total. Accumulates in long double:
/// the later subtraction of 6/eps^4 cancels ~9 digits at eps = 0.025 and
/// plain-double rounding would dominate the extrapolation error.
double cutoff_partial_sum(double eps);

/// Needs >= 3 strictly decreasing positive cutoffs; throws NonConvergent
/// when the extrapolant differences grow instead of shrinking.
RegularizationRun regularized_cubic_sum(std::span<const double> schedule);

enum class EnergyMethod { closed_form, numeric_regularized };

/// Vacuum energy of the cavity. closed_form evaluates
/// U = -pi^2 A hbar c / (720 (na)^3); numeric_regularized assembles the
/// mode sum hbar c A sum_n (-kappa_n^3/(6 pi)) with kappa_n = n pi/(na)
/// through regularized_cubic_sum. Both are negative.
Quantity casimir_energy(const CavityGeometry& geom, EnergyMethod method,
                        std::span<const double> schedule = default_epsilon_schedule);

/// Static exterior field of a spherical source: mass, observer radius, and
/// the derived horizon scale alpha = 2GM/c^2 and red-shift g00 = 1 - alpha/r.
class SchwarzschildContext {
  public:
    SchwarzschildContext(Quantity mass, Quantity radius);

    Quantity mass() const { return mass_; }
    Quantity radius() const { return radius_; }
    Quantity alpha() const { return alpha_; } // m
    double g00() const;                       // 1 - alpha/r, in (0, 1)

    /// GM/r^2, the local Newtonian acceleration.
    Quantity local_gravity() const;

  private:
    Quantity mass_;
    Quantity radius_;
    Quantity alpha_;
};

/// Every mode red-shifted by sqrt(g00) scales the regularized energy by the
/// same global factor: (U_S) = sqrt(1 - alpha/r) * U.
Quantity redshifted_energy(const CavityGeometry& geom, const SchwarzschildContext& ctx);

enum class GradientMode { analytic, finite_difference };

/// F = -d(U_S)/dr = |U| (GM/(c^2 r^2)) / sqrt(1 - alpha/r), positive
/// (outward). finite_difference evaluates the central difference with step
/// r*1e-6, rationalized so the subtraction does not cancel in doubles.
Quantity gradient_force(const CavityGeometry& geom, const SchwarzschildContext& ctx,
                        GradientMode mode);

} // namespace casigrav

#include "casigrav/force.hpp"

#include <cmath>

namespace casigrav {

Quantity covariant_force_density(const TensorField& tensor, const MetricField& metric, Quantity z,
                                 Quantity step) {
    step.value_in(dims::length);
    z.value_in(dims::length);
    if (!(step.value() > 0.0))
        throw InvalidParameter("finite-difference step must be positive");

    const Metric m_minus = metric(z - step);
    const Metric m_center = metric(z);
    const Metric m_plus = metric(z + step);

    // Finite-difference validity guard, phrased through the metric itself:
    // the g00 stencil difference equals 4*A_eff*step for the linear frame
    // metric, so 2*A_eff*step > 0.1 is |dg00| > 0.2.
    const double dg00 = m_plus.g00() - m_minus.g00();
    if (std::fabs(dg00) > 0.2)
        throw StepTooLarge("metric varies too much over the finite-difference stencil");

    const double sqrtg_minus = m_minus.sqrt_neg_det();
    const double sqrtg_center = m_center.sqrt_neg_det();
    const double sqrtg_plus = m_plus.sqrt_neg_det();

    const StressTensor t_minus = tensor(z - step);
    const StressTensor t_center = tensor(z);
    const StressTensor t_plus = tensor(z + step);

    // -(1/sqrt g) d_z ( sqrt g T^3_3 )
    const Quantity divergence_term =
        (t_plus.mixed(3, 3) * sqrtg_plus - t_minus.mixed(3, 3) * sqrtg_minus) /
        (step * (2.0 * sqrtg_center));

    // (1/2) (d_z g_rho_sigma) T^{rho sigma}, diagonal metric
    Quantity gradient_term{0.0, dims::force_density};
    for (int rho = 0; rho < 4; ++rho) {
        const Quantity dg = Quantity{m_plus.diag[rho] - m_minus.diag[rho]} / (step * 2.0);
        gradient_term = gradient_term + dg * t_center.contravariant(rho, rho) * 0.5;
    }

    return -divergence_term + gradient_term;
}

ForceDensityField closed_force_field(const CavityGeometry& geom, Quantity g) {
    g.value_in(dims::acceleration);
    const Quantity scale = casimir_scale(geom);
    const AcceleratedFrame base = AcceleratedFrame::from_gravity(g);
    return {
        [scale, base](Quantity z) {
            const double factor = base.at_height(z).metric_factor();
            return scale * base.accel_param() / factor;
        },
        0.75,
        0.25,
    };
}

Quantity closed_force_density(const CavityGeometry& geom, Quantity g, Quantity z) {
    return closed_force_field(geom, g).density(z);
}

ForceResult integrated_force(const CavityGeometry& geom, Quantity g, bool isolated) {
    g.value_in(dims::acceleration);
    if (g.value() < 0.0)
        throw InvalidParameter("gravitational acceleration must be >= 0");

    const auto& k = constants();
    const Quantity accel_param = g / (k.c * k.c);
    const Quantity scale = casimir_scale(geom);
    // Volume multiplication uses the optical separation so that the energy
    // term reduces exactly to pi^2 A hbar c g / (720 (na)^3 c^2).
    const Quantity volume = geom.optical_separation() * geom.area();

    const Quantity energy = volume * scale * accel_param * 0.25;
    const Quantity pressure = energy * 3.0;

    ForceResult result;
    result.energy_term = energy;
    result.pressure_term = pressure;
    result.isolated = isolated;
    result.total = isolated ? energy : pressure + energy;
    return result;
}

Quantity trapezoid_force(const CavityGeometry& geom, Quantity g, std::size_t panels) {
    if (panels == 0)
        throw InvalidParameter("trapezoid integration needs at least one panel");
    const ForceDensityField field = closed_force_field(geom, g);
    const Quantity width = geom.optical_separation();
    const Quantity h = width / static_cast<double>(panels);

    Quantity sum = field.density(si::meters(0.0)) / 2.0 + field.density(width) / 2.0;
    for (std::size_t i = 1; i < panels; ++i)
        sum = sum + field.density(h * static_cast<double>(i));
    return geom.area() * h * sum;
}

} // namespace casigrav

#include "casigrav/stress_tensor.hpp"

#include <cmath>
#include <numbers>

namespace casigrav {

CavityGeometry::CavityGeometry(Quantity separation, Quantity area, double refractive_index)
    : separation_(separation), area_(area), refractive_index_(refractive_index) {
    separation.value_in(dims::length);
    area.value_in(dims::area);
    if (!(separation.value() > 0.0))
        throw InvalidParameter("cavity separation must be positive");
    if (!(area.value() > 0.0))
        throw InvalidParameter("cavity area must be positive");
    if (!(refractive_index >= 1.0))
        throw InvalidParameter("refractive index must be >= 1");
}

CavityGeometry CavityGeometry::from_side(Quantity separation, Quantity side,
                                         double refractive_index) {
    return {separation, side * side, refractive_index};
}

CavityGeometry CavityGeometry::from_disk(Quantity separation, Quantity diameter,
                                         double refractive_index) {
    const Quantity radius = diameter / 2.0;
    return {separation, radius * radius * std::numbers::pi, refractive_index};
}

AcceleratedFrame::AcceleratedFrame(Quantity accel_param, Quantity height)
    : accel_param_(accel_param), height_(height) {
    accel_param.value_in(dims::inverse_length);
    height.value_in(dims::length);
    if (metric_factor() <= 0.0)
        throw MetricDegenerate("1 + 2*A_g*z must stay positive");
}

AcceleratedFrame AcceleratedFrame::from_gravity(Quantity g, Quantity height) {
    const auto& k = constants();
    return {g / (k.c * k.c), height};
}

double AcceleratedFrame::metric_factor() const {
    return 1.0 + 2.0 * (accel_param_ * height_).value_in(dims::dimensionless);
}

double Metric::sqrt_neg_det() const {
    const double neg_det = -diag[0] * diag[1] * diag[2] * diag[3];
    if (!(neg_det > 0.0))
        throw MetricDegenerate("metric determinant is not negative definite");
    return std::sqrt(neg_det);
}

StressTensor StressTensor::from_diagonal(const std::array<Quantity, 4>& contravariant,
                                         const Metric& metric) {
    StressTensor t;
    for (int mu = 0; mu < 4; ++mu) {
        t.contra_[mu] = contravariant[mu].value_in(dims::energy_density);
        t.mixed_[mu] = metric.diag[mu] * t.contra_[mu];
    }
    return t;
}

Quantity StressTensor::contravariant(int mu, int nu) const {
    return Quantity{mu == nu ? contra_[mu] : 0.0, dims::energy_density};
}

Quantity StressTensor::mixed(int mu, int nu) const {
    return Quantity{mu == nu ? mixed_[mu] : 0.0, dims::energy_density};
}

Quantity StressTensor::trace(const Metric& metric) const {
    double tr = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        tr += metric.diag[mu] * contra_[mu];
    return Quantity{tr, dims::energy_density};
}

Quantity casimir_scale(const CavityGeometry& geom) {
    const auto& k = constants();
    const Quantity a_opt = geom.optical_separation();
    return k.hbar * k.c * (std::numbers::pi * std::numbers::pi / 180.0) / pow(a_opt, 4);
}

StressTensor minkowski_tensor(const CavityGeometry& geom) {
    const Quantity scale = casimir_scale(geom);
    return StressTensor::from_diagonal(
        {-scale / 4.0, scale / 4.0, scale / 4.0, scale * (-3.0 / 4.0)}, Metric::minkowski());
}

Metric frame_metric(const AcceleratedFrame& frame) {
    const double factor = frame.metric_factor();
    if (factor <= 0.0)
        throw MetricDegenerate("1 + 2*A_g*z must stay positive");
    Metric m;
    m.diag[0] = -factor;
    return m;
}

StressTensor field_tensor(const CavityGeometry& geom, const AcceleratedFrame& frame) {
    const Metric metric = frame_metric(frame);
    const Quantity scale = casimir_scale(geom);
    const double factor = frame.metric_factor();
    // T^{00} picks up 1/(1 + 2 A_g z); the mixed T^0_0 = g_00 T^{00} = K/4
    // and T^3_3 = T^{33} = - 3K/4 are z-independent.
    return StressTensor::from_diagonal(
        {-scale / (4.0 * factor), scale / 4.0, scale / 4.0, scale * (-3.0 / 4.0)}, metric);
}

} // namespace casigrav

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "casigrav/force.hpp"
#include "casigrav/modesum.hpp"

using namespace casigrav;

namespace {

CavityGeometry paper_disk(double n = 1.0) {
    return CavityGeometry::from_disk(si::meters(5e-9), si::meters(0.35), n);
}

// engine inputs for the cavity held in the uniform field g
struct FieldSetup {
    TensorField tensor;
    MetricField metric;
    Quantity accel_param;
};

FieldSetup make_setup(const CavityGeometry& geom, Quantity g) {
    const AcceleratedFrame base = AcceleratedFrame::from_gravity(g);
    return {
        [geom, base](Quantity z) { return field_tensor(geom, base.at_height(z)); },
        [base](Quantity z) { return frame_metric(base.at_height(z)); },
        base.accel_param(),
    };
}

} // namespace

TEST_CASE("divergence of constants vanishes") {
    const CavityGeometry geom = paper_disk();
    const StressTensor flat = minkowski_tensor(geom);
    const TensorField tensor = [flat](Quantity) { return flat; };
    const MetricField metric = [](Quantity) { return Metric::minkowski(); };
    const Quantity f = covariant_force_density(tensor, metric, si::meters(0.0), si::meters(1.0));
    CHECK(f.value() == 0.0);
    CHECK(f.dim() == dims::force_density);
}

TEST_CASE("engine reproduces the closed form") {
    const CavityGeometry geom = paper_disk();
    const Quantity g = constants().g_standard;
    const FieldSetup setup = make_setup(geom, g);
    const Quantity metric_scale = 1.0 / setup.accel_param; // 1/A_g, in m
    const Quantity step = metric_scale * 1e-4;

    for (double zfrac : {0.0, 0.1, -0.1}) {
        const Quantity z = metric_scale * zfrac;
        const Quantity engine = covariant_force_density(setup.tensor, setup.metric, z, step);
        const Quantity closed = closed_force_density(geom, g, z);
        CHECK(engine.value() ==
              doctest::Approx(closed.value()).epsilon(1e-6));
    }
}

TEST_CASE("halving the step quarters the deviation") {
    const CavityGeometry geom = paper_disk();
    const Quantity g = constants().g_standard;
    const FieldSetup setup = make_setup(geom, g);
    const Quantity metric_scale = 1.0 / setup.accel_param;
    const Quantity z = si::meters(0.0);
    const double closed = closed_force_density(geom, g, z).value();

    const double err_h =
        std::fabs(covariant_force_density(setup.tensor, setup.metric, z, metric_scale * 1e-2)
                      .value() -
                  closed);
    const double err_h2 =
        std::fabs(covariant_force_density(setup.tensor, setup.metric, z, metric_scale * 5e-3)
                      .value() -
                  closed);
    CHECK(err_h / err_h2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("step guard") {
    const CavityGeometry geom = paper_disk();
    const Quantity g = constants().g_standard;
    const FieldSetup setup = make_setup(geom, g);
    const Quantity metric_scale = 1.0 / setup.accel_param;

    // 2 A_g step = 0.12 > 0.1
    CHECK_THROWS_AS(covariant_force_density(setup.tensor, setup.metric, si::meters(0.0),
                                            metric_scale * 0.06),
                    StepTooLarge);
    CHECK_NOTHROW(covariant_force_density(setup.tensor, setup.metric, si::meters(0.0),
                                          metric_scale * 0.04));
    CHECK_THROWS_AS(covariant_force_density(setup.tensor, setup.metric, si::meters(0.0),
                                            si::meters(-1.0)),
                    InvalidParameter);
}

TEST_CASE("closed force density") {
    const CavityGeometry geom = paper_disk();

    // no field, no force
    CHECK(closed_force_density(geom, si::m_per_s2(0.0), si::meters(0.0)).value() == 0.0);

    // frozen: K(5 nm) g_standard / c^2
    const Quantity at_origin =
        closed_force_density(geom, constants().g_standard, si::meters(0.0));
    CHECK(at_origin.value() == doctest::Approx(3.0263792903530022e-10).epsilon(1e-13));
    CHECK(at_origin.dim() == dims::force_density);

    // the z dependence is exactly 1/(1 + 2 A_g z)
    const AcceleratedFrame base = AcceleratedFrame::from_gravity(constants().g_standard);
    const Quantity z = 0.05 / base.accel_param();
    const Quantity at_z = closed_force_density(geom, constants().g_standard, z);
    CHECK(at_z.value() * 1.1 == doctest::Approx(at_origin.value()).epsilon(1e-12));

    const ForceDensityField field = closed_force_field(geom, constants().g_standard);
    CHECK(field.pressure_fraction == 0.75);
    CHECK(field.energy_fraction == 0.25);
    CHECK(field.pressure_fraction + field.energy_fraction == 1.0);
}

TEST_CASE("integrated force, paper single-cavity numbers") {
    const CavityGeometry geom = paper_disk();
    const Quantity g = constants().g_standard;

    const ForceResult non_isolated = integrated_force(geom, g, false);
    const ForceResult isolated = integrated_force(geom, g, true);

    // frozen from independent arithmetic
    CHECK(isolated.total.value() == doctest::Approx(3.639647627593085e-20).epsilon(1e-13));
    CHECK(non_isolated.total.value() == doctest::Approx(1.455859051037234e-19).epsilon(1e-13));

    CHECK(isolated.total.dim() == dims::force);
    CHECK(isolated.total == isolated.energy_term);
    CHECK(non_isolated.total == non_isolated.pressure_term + non_isolated.energy_term);

    // 1/4 K vs (3/4 + 1/4) K
    CHECK(isolated.total.value() / non_isolated.total.value() ==
          doctest::Approx(0.25).epsilon(1e-14));
    // pressure/energy = 3 exactly
    CHECK(non_isolated.pressure_term.value() / non_isolated.energy_term.value() == 3.0);

    CHECK(integrated_force(geom, si::m_per_s2(0.0), false).total.value() == 0.0);
    CHECK_THROWS_AS(integrated_force(geom, si::m_per_s2(-1.0), false), InvalidParameter);
}

TEST_CASE("isolated force equals |U| g / c^2") {
    for (double n : {1.0, 1.5}) {
        const CavityGeometry geom = paper_disk(n);
        const Quantity g = constants().g_standard;
        const Quantity u = casimir_energy(geom, EnergyMethod::closed_form);
        const Quantity expected = abs(u) * g / (constants().c * constants().c);
        const Quantity actual = integrated_force(geom, g, true).total;
        CHECK(actual.value() == doctest::Approx(expected.value()).epsilon(1e-14));
        CHECK(u.value() < 0.0);
    }
}

TEST_CASE("direction and scaling properties") {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> log_a(-9.0, -6.0);
    std::uniform_real_distribution<double> area(1e-4, 1.0);
    std::uniform_real_distribution<double> refr(1.0, 2.0);
    std::uniform_real_distribution<double> grav(0.1, 100.0);

    for (int i = 0; i < 100; ++i) {
        const double a = std::pow(10.0, log_a(rng));
        const double s = area(rng);
        const double n = refr(rng);
        const double g = grav(rng);
        const CavityGeometry geom{si::meters(a), si::square_meters(s), n};
        const ForceResult base = integrated_force(geom, si::m_per_s2(g), true);

        // the force opposes the gravitational acceleration
        CHECK(base.total.value() > 0.0);

        // a^-3 scaling
        const CavityGeometry half{si::meters(a / 2.0), si::square_meters(s), n};
        CHECK(integrated_force(half, si::m_per_s2(g), true).total.value() / base.total.value() ==
              doctest::Approx(8.0).epsilon(1e-12));

        // linear in area and in g
        const CavityGeometry bigger{si::meters(a), si::square_meters(2.0 * s), n};
        CHECK(integrated_force(bigger, si::m_per_s2(g), true).total.value() /
                  base.total.value() ==
              doctest::Approx(2.0).epsilon(1e-12));
        CHECK(integrated_force(geom, si::m_per_s2(3.0 * g), true).total.value() /
                  base.total.value() ==
              doctest::Approx(3.0).epsilon(1e-12));
    }
}

TEST_CASE("trapezoid integration bounds the V*f(0) approximation") {
    // artificially strong field so the O(A_g a) error is visible
    const double a_g = 0.01; // 1/m
    const double c = constants().c.value();
    const Quantity g = si::m_per_s2(a_g * c * c);
    const CavityGeometry geom{si::meters(1.0), si::square_meters(1.0)};

    const Quantity trapezoid = trapezoid_force(geom, g, 2000);
    const double k = casimir_scale(geom).value();
    const double exact = k * std::log(1.0 + 2.0 * a_g) / 2.0; // A = 1 m^2
    CHECK(trapezoid.value() == doctest::Approx(exact).epsilon(1e-6));
    CHECK(trapezoid.dim() == dims::force);

    // the point approximation overestimates by ~ A_g a
    const double point = integrated_force(geom, g, false).total.value();
    const double rel = std::fabs(trapezoid.value() / point - 1.0);
    CHECK(rel > 0.008);
    CHECK(rel < 0.012);

    CHECK_THROWS_AS(trapezoid_force(geom, g, 0), InvalidParameter);
}

TEST_CASE("dimension audit") {
    const CavityGeometry geom = paper_disk();
    const Quantity g = constants().g_standard;
    const FieldSetup setup = make_setup(geom, g);
    CHECK(covariant_force_density(setup.tensor, setup.metric, si::meters(0.0),
                                  1e-4 / setup.accel_param)
              .dim() == dims::force_density);
    CHECK(closed_force_density(geom, g, si::meters(0.0)).dim() == dims::force_density);
    CHECK(integrated_force(geom, g, false).total.dim() == dims::force);
    CHECK(integrated_force(geom, g, true).energy_term.dim() == dims::force);
    CHECK(trapezoid_force(geom, g, 10).dim() == dims::force);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "casigrav/stress_tensor.hpp"

using namespace casigrav;

namespace {
CavityGeometry unit_cavity(double a_m, double n = 1.0) {
    return {si::meters(a_m), si::square_meters(1.0), n};
}
} // namespace

TEST_CASE("casimir scale") {
    // quartic law: doubling the separation divides K by 16
    const Quantity k1 = casimir_scale(unit_cavity(1e-8));
    const Quantity k2 = casimir_scale(unit_cavity(2e-8));
    CHECK(k1.value() / k2.value() == doctest::Approx(16.0).epsilon(1e-13));

    // frozen: pi^2 hbar c / 180 at a = 1 m
    const Quantity k = casimir_scale(unit_cavity(1.0));
    CHECK(k.value() == doctest::Approx(1.7335010299303379e-27).epsilon(1e-14));
    CHECK(k.dim() == dims::energy_density);
    CHECK(k.value() > 0.0);

    // only the optical product n*a enters
    const Quantity ka = casimir_scale(unit_cavity(3e-9, 2.0));
    const Quantity kb = casimir_scale(unit_cavity(6e-9, 1.0));
    CHECK(ka.value() == doctest::Approx(kb.value()).epsilon(1e-14));
}

TEST_CASE("geometry invariants") {
    CHECK_THROWS_AS(unit_cavity(-1e-9), InvalidParameter);
    CHECK_THROWS_AS(unit_cavity(0.0), InvalidParameter);
    CHECK_THROWS_AS(unit_cavity(1e-9, 0.5), InvalidParameter);
    CHECK_THROWS_AS(CavityGeometry(si::meters(1e-9), si::square_meters(-1.0)), InvalidParameter);

    const CavityGeometry from_side = CavityGeometry::from_side(si::meters(5e-9), si::meters(0.35));
    CHECK(from_side.area().value() == doctest::Approx(0.1225).epsilon(1e-15));

    const CavityGeometry disk = CavityGeometry::from_disk(si::meters(5e-9), si::meters(0.35));
    CHECK(disk.area().value() == doctest::Approx(0.096211275016187418).epsilon(1e-15));

    CHECK(unit_cavity(5e-9, 1.5).optical_separation().value() ==
          doctest::Approx(7.5e-9).epsilon(1e-15));
}

TEST_CASE("minkowski tensor components") {
    const CavityGeometry geom = unit_cavity(5e-9);
    const double k = casimir_scale(geom).value();
    const StressTensor t = minkowski_tensor(geom);

    CHECK(t.contravariant(3, 3).value() == doctest::Approx(-0.75 * k).epsilon(1e-15));
    CHECK(t.contravariant(0, 0).value() == doctest::Approx(-0.25 * k).epsilon(1e-15));
    CHECK(t.contravariant(1, 1).value() == doctest::Approx(0.25 * k).epsilon(1e-15));
    CHECK(t.contravariant(2, 2).value() == t.contravariant(1, 1).value());

    // mixed components follow from the flat metric
    CHECK(t.mixed(0, 0).value() == doctest::Approx(0.25 * k).epsilon(1e-15));
    CHECK(t.mixed(3, 3).value() == doctest::Approx(-0.75 * k).epsilon(1e-15));

    // diagonal
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            if (mu != nu)
                CHECK(t.contravariant(mu, nu).value() == 0.0);

    // traceless: 1/4 * 4 - 1 = 0
    CHECK(std::fabs(t.trace(Metric::minkowski()).value()) <= 1e-14 * k);
}

TEST_CASE("frame metric") {
    const AcceleratedFrame at_origin = AcceleratedFrame::from_gravity(constants().g_standard);
    const Metric flat = frame_metric(at_origin);
    CHECK(flat.diag[0] == -1.0);
    CHECK(flat.diag[1] == 1.0);
    CHECK(flat.diag[2] == 1.0);
    CHECK(flat.diag[3] == 1.0);

    // frozen: 2 g / c^2 at z = 1 m
    const Metric lifted = frame_metric(at_origin.at_height(si::meters(1.0)));
    CHECK(-lifted.g00() - 1.0 == doctest::Approx(2.1822739344396434e-16).epsilon(1e-12));

    // z -> -z flips the sign of the correction
    const Metric lowered = frame_metric(at_origin.at_height(si::meters(-1.0)));
    CHECK(-lowered.g00() - 1.0 ==
          doctest::Approx(-(-lifted.g00() - 1.0)).epsilon(1e-12));

    // A_g = g/c^2 exactly
    const double c = constants().c.value();
    CHECK(at_origin.accel_param().value() == 9.80665 / (c * c));
    CHECK(at_origin.accel_param().dim() == dims::inverse_length);
}

TEST_CASE("metric degenerates at 1 + 2 A_g z <= 0") {
    const AcceleratedFrame frame(si::per_meter(1.0), si::meters(0.0));
    CHECK_THROWS_AS(frame_metric(frame.at_height(si::meters(-0.5))), MetricDegenerate);
    CHECK_THROWS_AS(frame.at_height(si::meters(-0.7)), MetricDegenerate);
    CHECK_NOTHROW(frame_metric(frame.at_height(si::meters(-0.49))));
}

TEST_CASE("field tensor in the accelerated frame") {
    const CavityGeometry geom = unit_cavity(5e-9);
    const double k = casimir_scale(geom).value();

    // A_g = 0 reduces exactly to the flat tensor
    const AcceleratedFrame no_field(si::per_meter(0.0), si::meters(0.0));
    const StressTensor flat_limit = field_tensor(geom, no_field);
    const StressTensor flat = minkowski_tensor(geom);
    for (int mu = 0; mu < 4; ++mu) {
        CHECK(flat_limit.contravariant(mu, mu).value() == flat.contravariant(mu, mu).value());
        CHECK(flat_limit.mixed(mu, mu).value() == flat.mixed(mu, mu).value());
    }

    // T^{00} (1 + 2 A_g z) is z-independent and equals -K/4
    const AcceleratedFrame frame(si::per_meter(1e-3), si::meters(0.0));
    for (double z : {0.0, 10.0, -10.0, 250.0}) {
        const AcceleratedFrame at_z = frame.at_height(si::meters(z));
        const StressTensor t = field_tensor(geom, at_z);
        const double factor = 1.0 + 2.0 * 1e-3 * z;
        CHECK(t.contravariant(0, 0).value() * factor ==
              doctest::Approx(-0.25 * k).epsilon(1e-13));
        // T^3_3 = T^{33} = -3K/4 independent of z
        CHECK(t.mixed(3, 3).value() == doctest::Approx(-0.75 * k).epsilon(1e-15));
        CHECK(t.contravariant(3, 3).value() == doctest::Approx(-0.75 * k).epsilon(1e-15));
        // mixed T^0_0 = K/4 independent of z
        CHECK(t.mixed(0, 0).value() == doctest::Approx(0.25 * k).epsilon(1e-13));
    }
}

TEST_CASE("tracelessness over random geometries") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> log_a(-9.0, -3.0);
    std::uniform_real_distribution<double> area(1e-4, 1.0);
    std::uniform_real_distribution<double> refr(1.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const CavityGeometry geom{si::meters(std::pow(10.0, log_a(rng))),
                                  si::square_meters(area(rng)), refr(rng)};
        const StressTensor t = minkowski_tensor(geom);
        const double k = casimir_scale(geom).value();
        CHECK(std::fabs(t.trace(Metric::minkowski()).value()) / k <= 1e-14);
    }
}

TEST_CASE("scale law K * a^4 constant over a in [1e-9, 1e-3]") {
    const double reference =
        casimir_scale(unit_cavity(1e-9)).value() * std::pow(1e-9, 4);
    for (double a : {2e-9, 1e-8, 3.3e-7, 1e-5, 4e-4, 1e-3}) {
        const double product = casimir_scale(unit_cavity(a)).value() * std::pow(a, 4);
        CHECK(product == doctest::Approx(reference).epsilon(1e-12));
    }
}

TEST_CASE("flat-limit continuity is linear in A_g") {
    const CavityGeometry geom = unit_cavity(5e-9);
    const double t00_flat = minkowski_tensor(geom).contravariant(0, 0).value();
    const double z = 1.0;

    // deviation from the flat component scales as A_g^1 (Richardson slope)
    std::vector<double> accel{1e-3, 1e-4, 1e-5, 1e-6};
    std::vector<double> dev;
    for (double a_g : accel) {
        const AcceleratedFrame frame(si::per_meter(a_g), si::meters(z));
        dev.push_back(
            std::fabs(field_tensor(geom, frame).contravariant(0, 0).value() - t00_flat));
    }
    for (std::size_t i = 0; i + 1 < accel.size(); ++i) {
        const double slope = std::log(dev[i] / dev[i + 1]) / std::log(accel[i] / accel[i + 1]);
        CHECK(slope == doctest::Approx(1.0).epsilon(0.01));
    }
}

TEST_CASE("dimension audit") {
    const CavityGeometry geom = unit_cavity(5e-9, 1.5);
    const AcceleratedFrame frame = AcceleratedFrame::from_gravity(constants().g_standard);
    CHECK(casimir_scale(geom).dim() == dims::energy_density);
    CHECK(minkowski_tensor(geom).contravariant(3, 3).dim() == dims::energy_density);
    CHECK(minkowski_tensor(geom).mixed(0, 0).dim() == dims::energy_density);
    CHECK(field_tensor(geom, frame).contravariant(0, 0).dim() == dims::energy_density);
    CHECK(field_tensor(geom, frame).trace(frame_metric(frame)).dim() == dims::energy_density);
}

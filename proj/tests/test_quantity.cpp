#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "casigrav/quantity.hpp"

using namespace casigrav;

TEST_CASE("multiplication adds exponents") {
    const Quantity a = si::meters(3.0) * si::meters(2.0);
    CHECK(a.value() == 6.0);
    CHECK(a.dim() == dims::area);

    const Quantity x{17.25};
    CHECK((x * Quantity{1.0}) == x);

    // hbar * c, frozen from CODATA arithmetic
    const Quantity hc = constants().hbar * constants().c;
    CHECK(hc.value() == doctest::Approx(3.1615267715595619e-26).epsilon(1e-15));
    CHECK(hc.dim() == Dimension{1, 3, -2});
    CHECK(to_string(hc.dim()) == "J m");
}

TEST_CASE("addition needs equal dimensions") {
    CHECK((si::meters(1.0) + si::meters(2.0)).value() == 3.0);
    CHECK_THROWS_AS(si::meters(1.0) + si::seconds(1.0), DimensionMismatch);

    const Quantity f = si::newtons(3.64e-20);
    CHECK((si::newtons(0.0) + f) == f);
}

TEST_CASE("integer powers and roots") {
    const Quantity v = pow(si::meters(2.0), 3);
    CHECK(v.value() == 8.0);
    CHECK(v.dim() == dims::volume);

    CHECK(sqrt(si::square_meters(4.0)) == si::meters(2.0));
    CHECK_THROWS_AS(sqrt(si::meters(1.0)), FractionalDimension);

    CHECK(pow(si::meters(2.0), -1).dim() == dims::inverse_length);
    CHECK(pow(si::meters(5.0), 0) == Quantity{1.0});
}

TEST_CASE("dimension algebra over random exponent vectors") {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> exp_dist(-4, 4);
    std::uniform_real_distribution<double> val_dist(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
        const Dimension da{exp_dist(rng), exp_dist(rng), exp_dist(rng)};
        const Dimension db{exp_dist(rng), exp_dist(rng), exp_dist(rng)};
        const Quantity a{val_dist(rng), da};
        const Quantity b{val_dist(rng), db};
        CHECK((a * b).dim() == da + db);
        CHECK((a / b).dim() == da - db);
    }
}

TEST_CASE("addition is commutative and order-stable to 1e-12") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> val_dist(1e-6, 1e6);
    std::vector<Quantity> terms;
    for (int i = 0; i < 64; ++i)
        terms.push_back(si::joules(val_dist(rng)));

    Quantity forward = si::joules(0.0);
    for (const auto& t : terms)
        forward = forward + t;

    std::sort(terms.begin(), terms.end(),
              [](const Quantity& a, const Quantity& b) { return a < b; });
    Quantity sorted = si::joules(0.0);
    for (const auto& t : terms)
        sorted = sorted + t;

    CHECK(forward.value() ==
          doctest::Approx(sorted.value()).epsilon(1e-12));
    CHECK((si::meters(1.5) + si::meters(2.5)) == (si::meters(2.5) + si::meters(1.5)));
}

TEST_CASE("constants are CODATA 2018") {
    const auto& k = constants();
    CHECK(k.hbar.value() == 1.054571817e-34);
    CHECK(k.hbar.dim() == dims::action);
    CHECK(k.c.value() == 2.99792458e8);
    CHECK(k.c.dim() == dims::speed);
    CHECK(k.G.value() == 6.67430e-11);
    CHECK(k.G.dim() == Dimension{-1, 3, -2});
    CHECK(k.g_standard.value() == 9.80665);
    CHECK(k.g_standard.dim() == dims::acceleration);
}

TEST_CASE("unit strings") {
    CHECK(to_string(dims::force) == "N");
    CHECK(to_string(dims::energy) == "J");
    CHECK(to_string(dims::frequency) == "Hz");
    CHECK(to_string(dims::energy_density) == "J/m^3");
    CHECK(to_string(dims::force_density) == "N/m^3");
    CHECK(to_string(dims::dimensionless) == "");
    CHECK(to_string(Dimension{2, -1, 3}) == "kg^2 m^-1 s^3");
}

TEST_CASE("checked extraction") {
    CHECK(si::newtons(2.0).value_in(dims::force) == 2.0);
    CHECK_THROWS_AS(si::newtons(2.0).value_in(dims::energy), DimensionMismatch);
    CHECK_THROWS_AS(si::meters(1.0) < si::seconds(1.0), DimensionMismatch);
}

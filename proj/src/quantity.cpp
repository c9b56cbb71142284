#include "casigrav/quantity.hpp"

#include <cmath>
#include <cstdio>

namespace casigrav {

namespace {

std::string base_unit_string(const Dimension& d) {
    std::string out;
    auto append = [&out](const char* sym, int exp) {
        if (exp == 0)
            return;
        if (!out.empty())
            out += ' ';
        out += sym;
        if (exp != 1)
            out += '^' + std::to_string(exp);
    };
    append("kg", d.mass);
    append("m", d.length);
    append("s", d.time);
    return out;
}

} // namespace

std::string to_string(const Dimension& d) {
    if (d.is_dimensionless())
        return "";
    // Named units kept to what the reports need.
    if (d == dims::force)
        return "N";
    if (d == dims::energy)
        return "J";
    if (d == dims::frequency)
        return "Hz";
    if (d == dims::energy_density)
        return "J/m^3";
    if (d == dims::force_density)
        return "N/m^3";
    if (d == dims::action)
        return "J s";
    if (d == Dimension{1, 3, -2})
        return "J m"; // hbar*c
    if (d == dims::length)
        return "m";
    if (d == dims::mass)
        return "kg";
    if (d == dims::time)
        return "s";
    if (d == dims::area)
        return "m^2";
    if (d == dims::volume)
        return "m^3";
    if (d == dims::inverse_length)
        return "1/m";
    if (d == dims::inverse_volume)
        return "1/m^3";
    if (d == dims::speed)
        return "m/s";
    if (d == dims::acceleration)
        return "m/s^2";
    return base_unit_string(d);
}

double Quantity::value_in(const Dimension& expected) const {
    if (dim_ != expected)
        throw DimensionMismatch("expected dimension [" + to_string(expected) + "], got [" +
                                to_string(dim_) + "]");
    return value_;
}

Quantity Quantity::operator+(const Quantity& o) const {
    if (dim_ != o.dim_)
        throw DimensionMismatch("cannot add [" + to_string(dim_) + "] and [" + to_string(o.dim_) +
                                "]");
    return Quantity{value_ + o.value_, dim_};
}

Quantity Quantity::operator-(const Quantity& o) const {
    if (dim_ != o.dim_)
        throw DimensionMismatch("cannot subtract [" + to_string(o.dim_) + "] from [" +
                                to_string(dim_) + "]");
    return Quantity{value_ - o.value_, dim_};
}

bool operator<(const Quantity& a, const Quantity& b) {
    if (a.dim_ != b.dim_)
        throw DimensionMismatch("cannot order [" + to_string(a.dim_) + "] against [" +
                                to_string(b.dim_) + "]");
    return a.value_ < b.value_;
}

Quantity pow(const Quantity& a, int k) {
    return Quantity{std::pow(a.value(), k), a.dim() * k};
}

Quantity sqrt(const Quantity& a) {
    const Dimension d = a.dim();
    if (d.mass % 2 != 0 || d.length % 2 != 0 || d.time % 2 != 0)
        throw FractionalDimension("sqrt of [" + to_string(d) +
                                  "] would need fractional exponents");
    return Quantity{std::sqrt(a.value()), {d.mass / 2, d.length / 2, d.time / 2}};
}

Quantity abs(const Quantity& a) { return Quantity{std::fabs(a.value()), a.dim()}; }

std::string to_string(const Quantity& q) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", q.value());
    std::string unit = to_string(q.dim());
    return unit.empty() ? std::string(buf) : std::string(buf) + " " + unit;
}

const PhysicalConstants& constants() {
    static const PhysicalConstants codata{
        Quantity{1.054571817e-34, dims::action},
        Quantity{2.99792458e8, dims::speed},
        Quantity{6.67430e-11, {-1, 3, -2}},
        Quantity{9.80665, dims::acceleration},
    };
    return codata;
}

} // namespace casigrav

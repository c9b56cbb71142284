#pragma once

#include <string>

#include "casigrav/errors.hpp"

namespace casigrav {

/// SI dimension as integer exponents over (mass, length, time).
/// Temperature is reserved but unused; no rational exponents exist anywhere
/// in this library, so sqrt on odd exponents is an error, not a promotion.
struct Dimension {
    int mass = 0;
    int length = 0;
    int time = 0;

    friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

    constexpr Dimension operator+(const Dimension& o) const {
        return {mass + o.mass, length + o.length, time + o.time};
    }
    constexpr Dimension operator-(const Dimension& o) const {
        return {mass - o.mass, length - o.length, time - o.time};
    }
    constexpr Dimension operator*(int k) const { return {mass * k, length * k, time * k}; }

    constexpr bool is_dimensionless() const { return mass == 0 && length == 0 && time == 0; }
};

/// Unit string for reports: named units (N, J, Hz, ...) where the dimension
/// has one, base-exponent form ("kg m^2 s^-2") otherwise. Dimensionless -> "".
std::string to_string(const Dimension& d);

namespace dims {
inline constexpr Dimension dimensionless{0, 0, 0};
inline constexpr Dimension mass{1, 0, 0};
inline constexpr Dimension length{0, 1, 0};
inline constexpr Dimension time{0, 0, 1};
inline constexpr Dimension area{0, 2, 0};
inline constexpr Dimension volume{0, 3, 0};
inline constexpr Dimension inverse_length{0, -1, 0};
inline constexpr Dimension inverse_volume{0, -3, 0};
inline constexpr Dimension speed{0, 1, -1};
inline constexpr Dimension acceleration{0, 1, -2};
inline constexpr Dimension frequency{0, 0, -1};
inline constexpr Dimension force{1, 1, -2};           // N
inline constexpr Dimension energy{1, 2, -2};          // J
inline constexpr Dimension action{1, 2, -1};          // J s
inline constexpr Dimension energy_density{1, -1, -2}; // J/m^3
inline constexpr Dimension force_density{1, -2, -2};  // N/m^3
} // namespace dims

/// A real value with an SI dimension. Arithmetic checks dimensions at
/// runtime; a DimensionMismatch anywhere means a physics bug upstream.
class Quantity {
  public:
    constexpr Quantity() = default;
    explicit constexpr Quantity(double value, Dimension dim = {}) : value_(value), dim_(dim) {}

    constexpr double value() const { return value_; }
    constexpr Dimension dim() const { return dim_; }
    constexpr bool is_dimensionless() const { return dim_.is_dimensionless(); }

    /// Checked extraction: the value, provided the dimension is `expected`.
    double value_in(const Dimension& expected) const;

    Quantity operator+(const Quantity& o) const;
    Quantity operator-(const Quantity& o) const;
    constexpr Quantity operator-() const { return Quantity{-value_, dim_}; }

    constexpr Quantity operator*(const Quantity& o) const {
        return Quantity{value_ * o.value_, dim_ + o.dim_};
    }
    constexpr Quantity operator/(const Quantity& o) const {
        return Quantity{value_ / o.value_, dim_ - o.dim_};
    }
    constexpr Quantity operator*(double s) const { return Quantity{value_ * s, dim_}; }
    constexpr Quantity operator/(double s) const { return Quantity{value_ / s, dim_}; }

    friend constexpr Quantity operator*(double s, const Quantity& q) { return q * s; }
    friend constexpr Quantity operator/(double s, const Quantity& q) {
        return Quantity{s / q.value_, Dimension{} - q.dim_};
    }

    friend constexpr bool operator==(const Quantity& a, const Quantity& b) {
        return a.value_ == b.value_ && a.dim_ == b.dim_;
    }
    // Ordering requires equal dimensions.
    friend bool operator<(const Quantity& a, const Quantity& b);
    friend bool operator>(const Quantity& a, const Quantity& b) { return b < a; }

  private:
    double value_ = 0.0;
    Dimension dim_{};
};

/// a^k for integer k (k may be negative or zero).
Quantity pow(const Quantity& a, int k);

/// Square root; requires every dimension exponent to be even.
Quantity sqrt(const Quantity& a);

Quantity abs(const Quantity& a);

std::string to_string(const Quantity& q);

// Construction helpers used throughout the library and tests.
namespace si {
inline constexpr Quantity meters(double v) { return Quantity{v, dims::length}; }
inline constexpr Quantity square_meters(double v) { return Quantity{v, dims::area}; }
inline constexpr Quantity kilograms(double v) { return Quantity{v, dims::mass}; }
inline constexpr Quantity seconds(double v) { return Quantity{v, dims::time}; }
inline constexpr Quantity hertz(double v) { return Quantity{v, dims::frequency}; }
inline constexpr Quantity newtons(double v) { return Quantity{v, dims::force}; }
inline constexpr Quantity joules(double v) { return Quantity{v, dims::energy}; }
inline constexpr Quantity m_per_s2(double v) { return Quantity{v, dims::acceleration}; }
inline constexpr Quantity per_meter(double v) { return Quantity{v, dims::inverse_length}; }
inline constexpr Quantity number(double v) { return Quantity{v, dims::dimensionless}; }
} // namespace si

/// CODATA 2018 values, fixed for reproducibility of the reported numbers.
struct PhysicalConstants {
    Quantity hbar;       // J s
    Quantity c;          // m/s
    Quantity G;          // m^3 kg^-1 s^-2
    Quantity g_standard; // m/s^2
};

const PhysicalConstants& constants();

} // namespace casigrav

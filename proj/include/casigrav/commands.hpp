#pragma once

#include <span>
#include <string>

#include "casigrav/config.hpp"
#include "casigrav/report.hpp"

namespace casigrav {

/// Non-isolated and isolated cavity forces with the 3/4 + 1/4 breakdown.
Report cmd_force(const RunConfig& cfg);

/// Mode-sum energies (closed form vs numeric regularization), the
/// extrapolation trace, and — in schwarzschild mode — the red-shifted
/// energy, the gradient force, and its deviation from the uniform-field
/// formula at g = GM/r^2.
Report cmd_modesum(const RunConfig& cfg);

/// Multi-layer feasibility: eta at the stack separation, stack forces in
/// both conductivity states, modulation amplitude, fundamental frequency,
/// and the detector margin.
Report cmd_experiment(const RunConfig& cfg);

/// One cmd_experiment row per axis value. Rows evaluate independently and
/// keep input order; each row is bit-identical to the single run.
Report cmd_sweep(const RunConfig& cfg, const std::string& axis, std::span<const double> values);

} // namespace casigrav

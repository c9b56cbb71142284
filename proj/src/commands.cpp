#include "casigrav/commands.hpp"

#include <cmath>

#include "casigrav/force.hpp"

namespace casigrav {

namespace {

constexpr const char* note_non_isolated =
    "F = (na) A K g/c^2 with K = pi^2 hbar c/(180 (na)^4); along +z, opposite to g";
constexpr const char* note_isolated =
    "F = pi^2 A hbar c g/(720 (na)^3 c^2); wall stresses cancel the pressure part";
constexpr const char* note_closed_energy = "U = -pi^2 A hbar c/(720 (na)^3)";
constexpr const char* note_numeric_energy =
    "U = hbar c A sum_n (-kappa_n^3/(6 pi)), kappa_n = n pi/(na), regularized";
constexpr const char* note_redshift = "U_S = sqrt(1 - alpha/r) U, alpha = 2GM/c^2";
constexpr const char* note_gradient = "F = -dU_S/dr = |U| GM/(c^2 r^2 sqrt(1 - alpha/r))";
constexpr const char* note_stack = "F_T = eta N_l A pi^2 hbar c g/(720 (na)^3 c^2)";

constexpr const char* caveat_frequency_band =
    "the modulated signal is expected at tens of mHz, below the tens-of-Hz band where "
    "the quoted detector threshold applies";
constexpr const char* caveat_corrections =
    "finite-temperature and surface-roughness corrections are not modeled";
constexpr const char* caveat_refractive_index =
    "the gap refractive index is a user input with no authoritative default";

void add(Report& r, std::string key, Quantity q, std::string note = "") {
    r.results.push_back({std::move(key), q.value(), to_string(q.dim()), std::move(note)});
}

void add(Report& r, std::string key, double v, std::string note = "") {
    r.results.push_back({std::move(key), v, "", std::move(note)});
}

} // namespace

Report cmd_force(const RunConfig& cfg) {
    Report r;
    r.subcommand = "force";
    r.inputs = cfg.to_json();

    const CavityGeometry geom = cfg.cavity_geometry();
    const Quantity g = cfg.gravity_accel();

    const ForceResult non_isolated = integrated_force(geom, g, false);
    const ForceResult isolated = integrated_force(geom, g, true);

    add(r, "casimir_scale", casimir_scale(geom), "K = pi^2 hbar c/(180 (na)^4)");
    add(r, "force_non_isolated", non_isolated.total, note_non_isolated);
    add(r, "pressure_term", non_isolated.pressure_term, "3K/4 part");
    add(r, "energy_term", non_isolated.energy_term, "K/4 part");
    add(r, "force_isolated", isolated.total, note_isolated);
    add(r, "pressure_fraction", 0.75);
    add(r, "energy_fraction", 0.25);
    const double ratio = g.value() > 0.0 ? isolated.total.value() / non_isolated.total.value()
                                         : 0.25;
    add(r, "isolated_to_non_isolated_ratio", ratio);
    return r;
}

Report cmd_modesum(const RunConfig& cfg) {
    Report r;
    r.subcommand = "modesum";
    r.inputs = cfg.to_json();

    const CavityGeometry geom = cfg.cavity_geometry();
    const auto& schedule = cfg.numerics.epsilon_schedule;

    const RegularizationRun run = regularized_cubic_sum(schedule);
    const Quantity closed = casimir_energy(geom, EnergyMethod::closed_form);
    const Quantity numeric = casimir_energy(geom, EnergyMethod::numeric_regularized, schedule);

    add(r, "regularized_sum", run.value, "extrapolated sum of n^3, target 1/120");
    add(r, "regularized_sum_error_estimate", run.error_estimate);
    for (std::size_t i = 0; i < run.cutoffs.size(); ++i) {
        const std::string idx = std::to_string(i);
        add(r, "epsilon_" + idx, run.cutoffs[i]);
        add(r, "partial_sum_" + idx, run.partials[i], "S(eps) = sum n^3 exp(-eps n)");
        add(r, "extrapolant_" + idx, run.extrapolants[i]);
    }
    add(r, "casimir_energy_closed", closed, note_closed_energy);
    add(r, "casimir_energy_numeric", numeric, note_numeric_energy);
    add(r, "energy_relative_difference",
        std::fabs((numeric - closed).value() / closed.value()));

    if (cfg.is_schwarzschild()) {
        const SchwarzschildContext ctx = cfg.schwarzschild_context();
        const Quantity redshifted = redshifted_energy(geom, ctx);
        const Quantity grad = gradient_force(geom, ctx, GradientMode::analytic);
        const Quantity grad_fd = gradient_force(geom, ctx, GradientMode::finite_difference);
        const Quantity uniform = integrated_force(geom, ctx.local_gravity(), true).total;

        add(r, "horizon_scale", ctx.alpha(), "alpha = 2GM/c^2");
        add(r, "redshift_factor", std::sqrt(ctx.g00()), "sqrt(1 - alpha/r)");
        add(r, "redshifted_energy", redshifted, note_redshift);
        add(r, "gradient_force", grad, note_gradient);
        add(r, "gradient_force_fd", grad_fd, "central difference, step r*1e-6");
        add(r, "local_gravity", ctx.local_gravity(), "GM/r^2");
        add(r, "uniform_formula_force", uniform, note_isolated);
        add(r, "deviation_from_uniform_formula",
            std::fabs(grad.value() / uniform.value() - 1.0), "~ alpha/(2r)");
    }
    return r;
}

namespace {

std::vector<ReportEntry> experiment_entries(const RunConfig& cfg) {
    Report scratch;
    const LayeredStack stack = cfg.layered_stack();
    const Quantity g = cfg.gravity_accel();
    const ConductivityModel model = cfg.conductivity_model();
    const DetectorSensitivity detector = cfg.detector_sensitivity();
    const Quantity frequency = cfg.detector_frequency();

    const double eta_normal = model.reduction_factor(stack.geometry().separation());
    const Quantity f_normal = stack_force(stack, g, eta_normal);
    const Quantity f_super = stack_force(stack, g, model.eta_superconducting());
    const Quantity df = modulation_amplitude(stack, g, model);
    const Quantity nu_min = fundamental_frequency(stack.geometry().separation());
    const Quantity floor = detector.minimum_detectable_force(frequency);
    const double margin = detector_margin(df, detector, frequency);

    add(scratch, "eta_normal", eta_normal, "log-log interpolated conductivity reduction");
    add(scratch, "eta_superconducting", model.eta_superconducting());
    add(scratch, "stack_force_normal", f_normal, note_stack);
    add(scratch, "stack_force_superconducting", f_super, note_stack);
    add(scratch, "modulation_amplitude", df,
        "dF = F_T(eta_sc) - F_T(eta_normal), full contrast, no waveform factor");
    add(scratch, "total_thickness", stack.total_thickness(), "N_l * layer thickness");
    add(scratch, "fundamental_frequency", nu_min, "nu_min = c/(2a)");
    add(scratch, "detector_floor", floor);
    add(scratch, "detector_margin", margin, "modulation amplitude / detectable force");
    return scratch.results;
}

} // namespace

Report cmd_experiment(const RunConfig& cfg) {
    Report r;
    r.subcommand = "experiment";
    r.inputs = cfg.to_json();
    r.results = experiment_entries(cfg);
    r.caveats = {caveat_frequency_band, caveat_corrections, caveat_refractive_index};
    return r;
}

Report cmd_sweep(const RunConfig& cfg, const std::string& axis, std::span<const double> values) {
    if (values.empty())
        throw ConfigInvalid("sweep: at least one value is required");

    auto apply = [&axis](RunConfig base, double v) {
        if (axis == "separation") {
            base.cavity.separation_m = v;
        } else if (axis == "refractive_index") {
            base.cavity.refractive_index = v;
        } else if (axis == "layers") {
            if (!base.stack)
                throw ConfigInvalid("sweep: axis 'layers' needs a 'stack' section");
            if (!(v >= 1.0) || v != std::floor(v))
                throw ConfigInvalid("sweep: 'layers' values must be positive integers");
            base.stack->layers = static_cast<long>(v);
        } else if (axis == "eta_superconducting") {
            if (!base.conductivity)
                base.conductivity = RunConfig::Conductivity{};
            base.conductivity->eta_superconducting = v;
        } else if (axis == "g") {
            if (base.gravity.mode != "uniform")
                throw ConfigInvalid("sweep: axis 'g' needs uniform gravity mode");
            base.gravity.g_m_s2 = v;
        } else {
            throw UnknownAxis("sweep: unknown axis '" + axis +
                              "' (expected separation, refractive_index, layers, "
                              "eta_superconducting, or g)");
        }
        return base;
    };

    Report r;
    r.subcommand = "sweep";
    r.sweep_axis = axis;
    r.inputs = cfg.to_json();
    for (double v : values)
        r.rows.push_back({v, experiment_entries(apply(cfg, v))});
    r.caveats = {caveat_frequency_band, caveat_corrections, caveat_refractive_index};
    return r;
}

} // namespace casigrav

#include "casigrav/config.hpp"

#include <fstream>
#include <initializer_list>

namespace casigrav {

namespace {

std::string join_path(const std::string& scope, const std::string& key) {
    return scope.empty() ? key : scope + "." + key;
}

void require_object(const ordered_json& j, const std::string& scope) {
    if (!j.is_object())
        throw ConfigInvalid("config: '" + scope + "' must be an object");
}

void reject_unknown_keys(const ordered_json& obj, const std::string& scope,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) {
                known = true;
                break;
            }
        if (!known)
            throw ConfigInvalid("config: unknown key '" + join_path(scope, key) + "'");
    }
}

double get_number(const ordered_json& obj, const std::string& scope, const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ConfigInvalid("config: missing required field '" + join_path(scope, key) + "'");
    if (!it->is_number())
        throw ConfigInvalid("config: '" + join_path(scope, key) + "' must be a number");
    return it->get<double>();
}

std::optional<double> get_optional_number(const ordered_json& obj, const std::string& scope,
                                          const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end())
        return std::nullopt;
    if (!it->is_number())
        throw ConfigInvalid("config: '" + join_path(scope, key) + "' must be a number");
    return it->get<double>();
}

std::optional<std::string> get_optional_string(const ordered_json& obj, const std::string& scope,
                                               const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end())
        return std::nullopt;
    if (!it->is_string())
        throw ConfigInvalid("config: '" + join_path(scope, key) + "' must be a string");
    return it->get<std::string>();
}

void require_positive(double v, const std::string& field) {
    if (!(v > 0.0))
        throw ConfigInvalid("config: '" + field + "' must be positive");
}

long get_integer(const ordered_json& obj, const std::string& scope, const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ConfigInvalid("config: missing required field '" + join_path(scope, key) + "'");
    if (!it->is_number_integer())
        throw ConfigInvalid("config: '" + join_path(scope, key) + "' must be an integer");
    return it->get<long>();
}

RunConfig::Cavity parse_cavity(const ordered_json& j) {
    require_object(j, "cavity");
    reject_unknown_keys(j, "cavity",
                        {"separation_m", "refractive_index", "area_m2", "disk_diameter_m"});
    RunConfig::Cavity c;
    c.separation_m = get_number(j, "cavity", "separation_m");
    require_positive(c.separation_m, "cavity.separation_m");
    c.refractive_index = get_number(j, "cavity", "refractive_index");
    if (!(c.refractive_index >= 1.0))
        throw ConfigInvalid("config: 'cavity.refractive_index' must be >= 1");
    c.area_m2 = get_optional_number(j, "cavity", "area_m2");
    c.disk_diameter_m = get_optional_number(j, "cavity", "disk_diameter_m");
    if (c.area_m2 && c.disk_diameter_m)
        throw ConfigInvalid("config: give exactly one of 'cavity.area_m2' and "
                            "'cavity.disk_diameter_m', not both");
    if (!c.area_m2 && !c.disk_diameter_m)
        throw ConfigInvalid("config: one of 'cavity.area_m2' or 'cavity.disk_diameter_m' "
                            "is required");
    if (c.area_m2)
        require_positive(*c.area_m2, "cavity.area_m2");
    if (c.disk_diameter_m)
        require_positive(*c.disk_diameter_m, "cavity.disk_diameter_m");
    return c;
}

RunConfig::Gravity parse_gravity(const ordered_json& j) {
    require_object(j, "gravity");
    reject_unknown_keys(j, "gravity", {"mode", "g_m_s2", "mass_kg", "radius_m"});
    RunConfig::Gravity g;
    const auto mode = get_optional_string(j, "gravity", "mode");
    if (!mode)
        throw ConfigInvalid("config: missing required field 'gravity.mode'");
    g.mode = *mode;
    if (g.mode == "uniform") {
        g.g_m_s2 = get_number(j, "gravity", "g_m_s2");
        if (*g.g_m_s2 < 0.0)
            throw ConfigInvalid("config: 'gravity.g_m_s2' must be >= 0");
        if (j.contains("mass_kg") || j.contains("radius_m"))
            throw ConfigInvalid("config: uniform gravity takes 'g_m_s2' only, not mass/radius");
    } else if (g.mode == "schwarzschild") {
        g.mass_kg = get_number(j, "gravity", "mass_kg");
        require_positive(*g.mass_kg, "gravity.mass_kg");
        g.radius_m = get_number(j, "gravity", "radius_m");
        require_positive(*g.radius_m, "gravity.radius_m");
        if (j.contains("g_m_s2"))
            throw ConfigInvalid("config: schwarzschild gravity takes mass/radius, not 'g_m_s2'");
    } else {
        throw ConfigInvalid("config: 'gravity.mode' must be 'uniform' or 'schwarzschild'");
    }
    return g;
}

RunConfig::Stack parse_stack(const ordered_json& j) {
    require_object(j, "stack");
    reject_unknown_keys(j, "stack", {"layers", "layer_thickness_m"});
    RunConfig::Stack s;
    s.layers = get_integer(j, "stack", "layers");
    if (s.layers < 1)
        throw ConfigInvalid("config: 'stack.layers' must be >= 1");
    s.layer_thickness_m = get_number(j, "stack", "layer_thickness_m");
    require_positive(s.layer_thickness_m, "stack.layer_thickness_m");
    return s;
}

RunConfig::Conductivity parse_conductivity(const ordered_json& j) {
    require_object(j, "conductivity");
    reject_unknown_keys(j, "conductivity", {"table_path", "anchors", "eta_superconducting"});
    RunConfig::Conductivity c;
    c.table_path = get_optional_string(j, "conductivity", "table_path");
    if (const auto it = j.find("anchors"); it != j.end()) {
        if (!it->is_array())
            throw ConfigInvalid("config: 'conductivity.anchors' must be an array");
        for (const auto& row : *it) {
            require_object(row, "conductivity.anchors[]");
            reject_unknown_keys(row, "conductivity.anchors[]", {"separation_nm", "eta"});
            RunConfig::Anchor a;
            a.separation_nm = get_number(row, "conductivity.anchors[]", "separation_nm");
            a.eta = get_number(row, "conductivity.anchors[]", "eta");
            c.anchors.push_back(a);
        }
    }
    if (c.table_path && !c.anchors.empty())
        throw ConfigInvalid("config: give 'conductivity.table_path' or inline "
                            "'conductivity.anchors', not both");
    if (const auto eta = get_optional_number(j, "conductivity", "eta_superconducting"))
        c.eta_superconducting = *eta;
    if (!(c.eta_superconducting > 0.0) || c.eta_superconducting > 1.0)
        throw ConfigInvalid("config: 'conductivity.eta_superconducting' must lie in (0, 1]");
    return c;
}

RunConfig::Detector parse_detector(const ordered_json& j) {
    require_object(j, "detector");
    reject_unknown_keys(j, "detector", {"threshold_n", "curve_path", "frequency_hz"});
    RunConfig::Detector d;
    d.threshold_n = get_optional_number(j, "detector", "threshold_n");
    d.curve_path = get_optional_string(j, "detector", "curve_path");
    if (d.threshold_n && d.curve_path)
        throw ConfigInvalid("config: give 'detector.threshold_n' or 'detector.curve_path', "
                            "not both");
    if (d.threshold_n)
        require_positive(*d.threshold_n, "detector.threshold_n");
    if (const auto f = get_optional_number(j, "detector", "frequency_hz")) {
        d.frequency_hz = *f;
        require_positive(d.frequency_hz, "detector.frequency_hz");
    }
    return d;
}

RunConfig::Numerics parse_numerics(const ordered_json& j) {
    require_object(j, "numerics");
    reject_unknown_keys(j, "numerics", {"epsilon_schedule", "fd_step_fraction"});
    RunConfig::Numerics n;
    if (const auto it = j.find("epsilon_schedule"); it != j.end()) {
        if (!it->is_array() || it->empty())
            throw ConfigInvalid("config: 'numerics.epsilon_schedule' must be a non-empty array");
        n.epsilon_schedule.clear();
        for (const auto& v : *it) {
            if (!v.is_number())
                throw ConfigInvalid("config: 'numerics.epsilon_schedule' entries must be numbers");
            n.epsilon_schedule.push_back(v.get<double>());
        }
    }
    if (const auto f = get_optional_number(j, "numerics", "fd_step_fraction")) {
        n.fd_step_fraction = *f;
        require_positive(n.fd_step_fraction, "numerics.fd_step_fraction");
    }
    return n;
}

} // namespace

RunConfig RunConfig::from_json(const ordered_json& j) {
    require_object(j, "<root>");
    reject_unknown_keys(j, "",
                        {"cavity", "gravity", "stack", "conductivity", "detector", "numerics"});
    if (!j.contains("cavity"))
        throw ConfigInvalid("config: missing required section 'cavity'");
    if (!j.contains("gravity"))
        throw ConfigInvalid("config: missing required section 'gravity'");

    RunConfig cfg;
    cfg.cavity = parse_cavity(j.at("cavity"));
    cfg.gravity = parse_gravity(j.at("gravity"));
    if (j.contains("stack"))
        cfg.stack = parse_stack(j.at("stack"));
    if (j.contains("conductivity"))
        cfg.conductivity = parse_conductivity(j.at("conductivity"));
    if (j.contains("detector"))
        cfg.detector = parse_detector(j.at("detector"));
    if (j.contains("numerics"))
        cfg.numerics = parse_numerics(j.at("numerics"));
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigInvalid("config: cannot open '" + path + "'");
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigInvalid("config: '" + path + "' is not valid JSON: " + e.what());
    }
    return from_json(j);
}

ordered_json RunConfig::to_json() const {
    ordered_json j;
    ordered_json& c = j["cavity"] = ordered_json::object();
    c["separation_m"] = cavity.separation_m;
    c["refractive_index"] = cavity.refractive_index;
    if (cavity.area_m2)
        c["area_m2"] = *cavity.area_m2;
    if (cavity.disk_diameter_m)
        c["disk_diameter_m"] = *cavity.disk_diameter_m;

    ordered_json& g = j["gravity"] = ordered_json::object();
    g["mode"] = gravity.mode;
    if (gravity.g_m_s2)
        g["g_m_s2"] = *gravity.g_m_s2;
    if (gravity.mass_kg)
        g["mass_kg"] = *gravity.mass_kg;
    if (gravity.radius_m)
        g["radius_m"] = *gravity.radius_m;

    if (stack) {
        ordered_json& s = j["stack"] = ordered_json::object();
        s["layers"] = stack->layers;
        s["layer_thickness_m"] = stack->layer_thickness_m;
    }
    if (conductivity) {
        ordered_json& s = j["conductivity"] = ordered_json::object();
        if (conductivity->table_path)
            s["table_path"] = *conductivity->table_path;
        if (!conductivity->anchors.empty()) {
            ordered_json rows = ordered_json::array();
            for (const auto& a : conductivity->anchors)
                rows.push_back({{"separation_nm", a.separation_nm}, {"eta", a.eta}});
            s["anchors"] = std::move(rows);
        }
        s["eta_superconducting"] = conductivity->eta_superconducting;
    }
    if (detector) {
        ordered_json& s = j["detector"] = ordered_json::object();
        if (detector->threshold_n)
            s["threshold_n"] = *detector->threshold_n;
        if (detector->curve_path)
            s["curve_path"] = *detector->curve_path;
        s["frequency_hz"] = detector->frequency_hz;
    }
    ordered_json& n = j["numerics"] = ordered_json::object();
    n["epsilon_schedule"] = numerics.epsilon_schedule;
    n["fd_step_fraction"] = numerics.fd_step_fraction;
    return j;
}

CavityGeometry RunConfig::cavity_geometry() const {
    const Quantity sep = si::meters(cavity.separation_m);
    if (cavity.area_m2)
        return {sep, si::square_meters(*cavity.area_m2), cavity.refractive_index};
    return CavityGeometry::from_disk(sep, si::meters(*cavity.disk_diameter_m),
                                     cavity.refractive_index);
}

SchwarzschildContext RunConfig::schwarzschild_context() const {
    if (!is_schwarzschild())
        throw ConfigInvalid("config: 'gravity.mode' must be 'schwarzschild' for this command");
    try {
        return {si::kilograms(*gravity.mass_kg), si::meters(*gravity.radius_m)};
    } catch (const InsideHorizon& e) {
        throw ConfigInvalid(std::string("config: gravity: ") + e.what());
    }
}

Quantity RunConfig::gravity_accel() const {
    if (is_schwarzschild())
        return schwarzschild_context().local_gravity();
    return si::m_per_s2(*gravity.g_m_s2);
}

LayeredStack RunConfig::layered_stack() const {
    if (!stack)
        throw ConfigInvalid("config: section 'stack' is required for this command");
    if (!cavity.disk_diameter_m)
        throw ConfigInvalid("config: 'cavity.disk_diameter_m' is required for this command");
    return {si::meters(cavity.separation_m), cavity.refractive_index, stack->layers,
            si::meters(stack->layer_thickness_m), si::meters(*cavity.disk_diameter_m)};
}

ConductivityModel RunConfig::conductivity_model() const {
    if (!conductivity)
        return {};
    if (conductivity->table_path)
        return ConductivityModel::from_csv(*conductivity->table_path,
                                           conductivity->eta_superconducting);
    if (conductivity->anchors.empty())
        return {ConductivityModel().table(), conductivity->eta_superconducting};
    std::vector<EtaAnchor> table;
    for (const auto& a : conductivity->anchors)
        table.push_back({si::meters(a.separation_nm * 1e-9), a.eta});
    return {std::move(table), conductivity->eta_superconducting};
}

DetectorSensitivity RunConfig::detector_sensitivity() const {
    if (!detector)
        return DetectorSensitivity::default_threshold();
    if (detector->curve_path)
        return DetectorSensitivity::from_csv(*detector->curve_path);
    if (detector->threshold_n)
        return DetectorSensitivity::threshold(si::newtons(*detector->threshold_n));
    return DetectorSensitivity::default_threshold();
}

Quantity RunConfig::detector_frequency() const {
    return si::hertz(detector ? detector->frequency_hz : RunConfig::Detector{}.frequency_hz);
}

} // namespace casigrav

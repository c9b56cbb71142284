#include "casigrav/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace casigrav {

namespace {

// Two-column CSV with a fixed header; blank lines ignored.
std::vector<std::pair<double, double>> read_two_column_csv(const std::string& path,
                                                           const std::string& expected_header) {
    std::ifstream in(path);
    if (!in)
        throw InvalidParameter("cannot open CSV file: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw InvalidParameter(path + ": empty file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != expected_header)
        throw InvalidParameter(path + ": expected header '" + expected_header + "', got '" + line +
                               "'");
    std::vector<std::pair<double, double>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b))
            throw InvalidParameter(path + ":" + std::to_string(lineno) + ": expected two columns");
        try {
            rows.emplace_back(std::stod(a), std::stod(b));
        } catch (const std::exception&) {
            throw InvalidParameter(path + ":" + std::to_string(lineno) + ": not a number");
        }
    }
    if (rows.empty())
        throw InvalidParameter(path + ": no data rows");
    return rows;
}

} // namespace

LayeredStack::LayeredStack(Quantity separation, double refractive_index, long layers,
                           Quantity layer_thickness, Quantity disk_diameter)
    : geometry_(CavityGeometry::from_disk(separation, disk_diameter, refractive_index)),
      layers_(layers), layer_thickness_(layer_thickness), disk_diameter_(disk_diameter) {
    layer_thickness.value_in(dims::length);
    if (layers < 1)
        throw InvalidParameter("layer count must be >= 1");
    if (!(layer_thickness.value() > 0.0))
        throw InvalidParameter("layer thickness must be positive");
}

ConductivityModel::ConductivityModel()
    : ConductivityModel({{si::meters(6.5e-9), 7e-2}}, 5e-1) {}

ConductivityModel::ConductivityModel(std::vector<EtaAnchor> table, double eta_superconducting)
    : table_(std::move(table)), eta_superconducting_(eta_superconducting) {
    if (table_.empty())
        throw InvalidParameter("conductivity table must have at least one anchor");
    for (std::size_t i = 0; i < table_.size(); ++i) {
        table_[i].separation.value_in(dims::length);
        if (!(table_[i].separation.value() > 0.0))
            throw InvalidParameter("anchor separations must be positive");
        if (!(table_[i].eta > 0.0) || table_[i].eta > 1.0)
            throw InvalidParameter("eta anchors must lie in (0, 1]");
        if (i > 0 && !(table_[i].separation.value() > table_[i - 1].separation.value()))
            throw InvalidParameter("anchor separations must be strictly increasing");
    }
    if (!(eta_superconducting_ > 0.0) || eta_superconducting_ > 1.0)
        throw InvalidParameter("eta_superconducting must lie in (0, 1]");
}

ConductivityModel ConductivityModel::from_csv(const std::string& path,
                                              double eta_superconducting) {
    std::vector<EtaAnchor> table;
    for (const auto& [sep_nm, eta] : read_two_column_csv(path, "separation_nm,eta"))
        table.push_back({si::meters(sep_nm * 1e-9), eta});
    return {std::move(table), eta_superconducting};
}

double ConductivityModel::reduction_factor(Quantity separation) const {
    const double a = separation.value_in(dims::length);
    const double lo = table_.front().separation.value();
    const double hi = table_.back().separation.value();
    if (a < 0.5 * lo || a > 2.0 * hi)
        throw OutOfRange("separation " + std::to_string(a) +
                         " m is outside the conductivity table's trusted range [" +
                         std::to_string(0.5 * lo) + ", " + std::to_string(2.0 * hi) + "] m");
    if (table_.size() == 1)
        return table_.front().eta;

    // Pick the bracketing segment; queries beyond the ends (within the
    // bounded range checked above) extend the nearest segment's slope.
    std::size_t i = 0;
    while (i + 2 < table_.size() && a > table_[i + 1].separation.value())
        ++i;
    const double x0 = std::log(table_[i].separation.value());
    const double x1 = std::log(table_[i + 1].separation.value());
    const double y0 = std::log(table_[i].eta);
    const double y1 = std::log(table_[i + 1].eta);
    const double t = (std::log(a) - x0) / (x1 - x0);
    const double eta = std::exp(y0 + t * (y1 - y0));
    return std::min(eta, 1.0);
}

DetectorSensitivity DetectorSensitivity::threshold(Quantity force, std::string band_label) {
    force.value_in(dims::force);
    if (!(force.value() > 0.0))
        throw InvalidParameter("detector threshold must be positive");
    DetectorSensitivity d;
    d.data_ = force;
    d.band_label_ = std::move(band_label);
    return d;
}

DetectorSensitivity DetectorSensitivity::curve(std::vector<CurvePoint> points) {
    if (points.empty())
        throw InvalidParameter("detector curve must have at least one point");
    for (std::size_t i = 0; i < points.size(); ++i) {
        points[i].frequency.value_in(dims::frequency);
        if (!(points[i].force.value_in(dims::force) > 0.0))
            throw InvalidParameter("detectable forces must be positive");
        if (i > 0 && !(points[i].frequency.value() > points[i - 1].frequency.value()))
            throw InvalidParameter("curve frequencies must be strictly increasing");
    }
    DetectorSensitivity d;
    d.data_ = std::move(points);
    return d;
}

DetectorSensitivity DetectorSensitivity::from_csv(const std::string& path) {
    std::vector<CurvePoint> points;
    for (const auto& [freq, force] : read_two_column_csv(path, "frequency_hz,force_n"))
        points.push_back({si::hertz(freq), si::newtons(force)});
    return curve(std::move(points));
}

DetectorSensitivity DetectorSensitivity::default_threshold() {
    return threshold(si::newtons(5e-17), "few tens of Hz");
}

bool DetectorSensitivity::is_curve() const {
    return std::holds_alternative<std::vector<CurvePoint>>(data_);
}

Quantity DetectorSensitivity::minimum_detectable_force(Quantity frequency) const {
    if (!is_curve())
        return std::get<Quantity>(data_); // flat threshold ignores frequency
    const auto& points = std::get<std::vector<CurvePoint>>(data_);
    const double f = frequency.value_in(dims::frequency);
    if (f < points.front().frequency.value() || f > points.back().frequency.value())
        throw FrequencyOutOfCurve("frequency " + std::to_string(f) +
                                  " Hz is outside the detector curve [" +
                                  std::to_string(points.front().frequency.value()) + ", " +
                                  std::to_string(points.back().frequency.value()) + "] Hz");
    if (points.size() == 1)
        return points.front().force;
    std::size_t i = 0;
    while (i + 2 < points.size() && f > points[i + 1].frequency.value())
        ++i;
    const double x0 = std::log(points[i].frequency.value());
    const double x1 = std::log(points[i + 1].frequency.value());
    const double y0 = std::log(points[i].force.value());
    const double y1 = std::log(points[i + 1].force.value());
    const double t = (std::log(f) - x0) / (x1 - x0);
    return si::newtons(std::exp(y0 + t * (y1 - y0)));
}

Quantity stack_force(const LayeredStack& stack, Quantity g, double eta) {
    g.value_in(dims::acceleration);
    if (!(eta > 0.0) || eta > 1.0)
        throw InvalidParameter("eta must lie in (0, 1]");
    const auto& k = constants();
    const CavityGeometry& geom = stack.geometry();
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return eta * static_cast<double>(stack.layers()) * geom.area() * (pi2 / 720.0) * k.hbar *
           k.c / pow(geom.optical_separation(), 3) * g / (k.c * k.c);
}

Quantity modulation_amplitude(const LayeredStack& stack, Quantity g,
                              const ConductivityModel& model) {
    const double eta_normal = model.reduction_factor(stack.geometry().separation());
    return stack_force(stack, g, model.eta_superconducting()) -
           stack_force(stack, g, eta_normal);
}

Quantity fundamental_frequency(Quantity separation) {
    if (!(separation.value_in(dims::length) > 0.0))
        throw InvalidParameter("separation must be positive");
    return constants().c / (2.0 * separation);
}

double detector_margin(Quantity signal, const DetectorSensitivity& detector, Quantity frequency) {
    signal.value_in(dims::force);
    const Quantity floor = detector.minimum_detectable_force(frequency);
    return (signal / floor).value_in(dims::dimensionless);
}

} // namespace casigrav

#include "rcskit/types.hpp"
#include "rcskit/units.hpp"

#include <cmath>
#include <numbers>

namespace rcskit {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace

double Frequency::wavelength_m() const {
    return kSpeedOfLight / (ghz * 1e9);
}

std::vector<std::string> Frequency::validate() const {
    std::vector<std::string> v;
    if (!(ghz > 0.0) || !std::isfinite(ghz))
        v.push_back("frequency must be a positive finite GHz value, got " + fmt(ghz));
    return v;
}

const char* to_string(SweepKind kind) {
    switch (kind) {
        case SweepKind::Reference: return "reference";
        case SweepKind::Target: return "target";
        case SweepKind::Calibration: return "calibration";
    }
    return "?";
}

std::vector<std::string> CirRecord::validate() const {
    std::vector<std::string> v = freq.validate();
    if (taps.empty())
        v.push_back("CIR record has empty taps");
    if (kind == SweepKind::Target && target_id.empty())
        v.push_back("target-kind record is missing a target label");
    if (snapshot_index < 0)
        v.push_back("snapshot index must be non-negative, got " + std::to_string(snapshot_index));
    return v;
}

std::vector<std::string> PowerValue::validate() const {
    std::vector<std::string> v;
    if (!(value >= 0.0) || !std::isfinite(value))
        v.push_back("power must be non-negative and finite, got " + fmt(value));
    return v;
}

std::vector<std::string> RcsSampleSet::validate() const {
    std::vector<std::string> v;
    if (target_id.empty())
        v.push_back("sample set has no target label");
    auto fv = freq.validate();
    v.insert(v.end(), fv.begin(), fv.end());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i] > 0.0) || !std::isfinite(samples[i])) {
            v.push_back("RCS sample " + std::to_string(i) + " must be positive, got " +
                        fmt(samples[i]));
        }
    }
    if (discarded_count < 0)
        v.push_back("discarded_count must be non-negative");
    return v;
}

std::vector<std::string> LognormalFit::validate() const {
    std::vector<std::string> v;
    if (!std::isfinite(mu))
        v.push_back("mu must be finite");
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        v.push_back("sigma must be non-negative, got " + fmt(sigma));
    if (n < 1)
        v.push_back("sample count must be >= 1, got " + std::to_string(n));
    if (!(ks >= 0.0 && ks <= 1.0))
        v.push_back("KS statistic must lie in [0,1], got " + fmt(ks));
    if (!(mse >= 0.0) || !std::isfinite(mse))
        v.push_back("CDF MSE must be non-negative, got " + fmt(mse));
    return v;
}

std::vector<std::string> validate_b1(const B1Spec& spec) {
    std::vector<std::string> v;
    if (const auto* c = std::get_if<B1Constant>(&spec)) {
        if (!std::isfinite(c->db))
            v.push_back("constant B1 gain must be finite");
    } else if (const auto* a = std::get_if<B1Analytic>(&spec)) {
        if (!(a->exponent >= 0.0) || !std::isfinite(a->exponent))
            v.push_back("analytic B1 exponent must be non-negative, got " + fmt(a->exponent));
        if (!std::isfinite(a->boresight_deg))
            v.push_back("analytic B1 boresight must be finite");
        if (!std::isfinite(a->floor_db))
            v.push_back("analytic B1 floor must be finite");
    } else if (const auto* t = std::get_if<B1Table>(&spec)) {
        if (t->angles_deg.size() != t->gains_db.size())
            v.push_back("B1 table angle/gain lengths differ (" +
                        std::to_string(t->angles_deg.size()) + " vs " +
                        std::to_string(t->gains_db.size()) + ")");
        if (t->angles_deg.size() < 2)
            v.push_back("B1 table needs at least two grid points");
        for (std::size_t i = 1; i < t->angles_deg.size(); ++i) {
            if (!(t->angles_deg[i] > t->angles_deg[i - 1])) {
                v.push_back("B1 table grid must be strictly increasing at index " +
                            std::to_string(i));
            }
        }
        for (double g : t->gains_db) {
            if (!std::isfinite(g)) {
                v.push_back("B1 table gains must be finite");
                break;
            }
        }
        if (t->wrap360 && !t->angles_deg.empty() &&
            (t->angles_deg.front() < 0.0 || t->angles_deg.back() >= 360.0))
            v.push_back("wrapping B1 table grid must lie within [0, 360)");
    }
    return v;
}

bool b1_is_constant(const B1Spec& spec) {
    return std::holds_alternative<B1Constant>(spec);
}

std::vector<std::string> RcsTriple::validate() const {
    std::vector<std::string> v = validate_b1(b1);
    if (!std::isfinite(a_dbsm))
        v.push_back("A must be finite");
    if (!std::isfinite(b2_db))
        v.push_back("B2 must be finite");
    if (!(cap_k > 0.0) || !std::isfinite(cap_k))
        v.push_back("cap factor k must be positive, got " + fmt(cap_k));
    return v;
}

std::vector<std::string> SystemFactor::validate() const {
    std::vector<std::string> v = freq.validate();
    if (!(k_cal > 0.0) || !std::isfinite(k_cal))
        v.push_back("system factor must be positive, got " + fmt(k_cal));
    return v;
}

double Geometry::theta_offset_deg() const {
    const double d = 0.5 * (d_tx_tar_m + d_rx_tar_m);
    return 2.0 * std::atan((baseline_m / 2.0) / d) * 180.0 / std::numbers::pi;
}

bool Geometry::quasi_monostatic() const {
    return theta_offset_deg() <= max_quasi_monostatic_deg;
}

std::vector<std::string> Geometry::validate() const {
    std::vector<std::string> v;
    if (!(d_tx_tar_m > 0.0) || !std::isfinite(d_tx_tar_m))
        v.push_back("d_tx_tar_m must be positive, got " + fmt(d_tx_tar_m));
    if (!(d_rx_tar_m > 0.0) || !std::isfinite(d_rx_tar_m))
        v.push_back("d_rx_tar_m must be positive, got " + fmt(d_rx_tar_m));
    if (!(baseline_m > 0.0) || !std::isfinite(baseline_m))
        v.push_back("baseline_m must be positive, got " + fmt(baseline_m));
    if (!(max_quasi_monostatic_deg > 0.0))
        v.push_back("quasi-monostatic angle limit must be positive");
    if (v.empty() && !quasi_monostatic())
        v.push_back("geometry is not quasi-monostatic: offset " + fmt(theta_offset_deg()) +
                    " deg exceeds limit " + fmt(max_quasi_monostatic_deg) + " deg");
    return v;
}

} // namespace rcskit

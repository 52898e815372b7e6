#include "rcskit/calibration.hpp"

#include <cmath>
#include <numbers>

#include "rcskit/errors.hpp"
#include "rcskit/io.hpp"
#include "rcskit/power.hpp"

namespace rcskit {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

SystemFactor system_factor(PowerValue p_r, double d_m, Frequency freq) {
    if (!(p_r.value > 0.0))
        throw validation_error("system_factor: received power must be positive");
    if (!(d_m > 0.0))
        throw validation_error("system_factor: distance must be positive");
    return SystemFactor{freq, p_r.value / (kFourPi * d_m * d_m)};
}

double rcs_from_power(PowerValue p_tar, const SystemFactor& k) {
    if (!(p_tar.value > 0.0))
        throw validation_error("rcs_from_power: target power must be positive");
    if (!(k.k_cal > 0.0))
        throw validation_error("rcs_from_power: system factor must be positive");
    return p_tar.value / k.k_cal;
}

PowerValue forward_radar_power(double sigma_m2, Frequency freq, const Geometry& geom,
                               const LinkBudget& link) {
    if (!(sigma_m2 > 0.0))
        throw validation_error("forward_radar_power: RCS must be positive");
    if (geom.d_tx_tar_m != geom.d_rx_tar_m)
        throw validation_error("forward_radar_power: monostatic form requires equal "
                               "Tx-target and Rx-target distances");
    const double d = geom.d_tx_tar_m;
    const double lambda = freq.wavelength_m();
    const double num = link.p_t * link.g_t * link.g_r * lambda * lambda * sigma_m2 * link.loss;
    const double den = kFourPi * kFourPi * kFourPi * d * d * d * d;
    return PowerValue{num / den};
}

PowerValue free_space_received_power(Frequency freq, double d_m, const LinkBudget& link) {
    if (!(d_m > 0.0))
        throw validation_error("free_space_received_power: distance must be positive");
    const double lambda = freq.wavelength_m();
    const double num = link.p_t * link.g_t * link.g_r * lambda * lambda * link.loss;
    const double den = kFourPi * kFourPi * d_m * d_m;
    return PowerValue{num / den};
}

std::map<double, SystemFactor> collect_system_factors(
    const SweepDataset& dataset, const std::optional<std::map<double, double>>& sidecar,
    double d_m) {
    std::map<double, SystemFactor> out;

    // Calibration-kind records, averaged per frequency.
    std::map<double, std::vector<CirRecord>> cal_records;
    for (const auto& r : dataset.records)
        if (r.kind == SweepKind::Calibration)
            cal_records[r.freq.ghz].push_back(r);
    for (const auto& [ghz, recs] : cal_records) {
        std::vector<double> powers(recs.size());
        for (std::size_t i = 0; i < recs.size(); ++i)
            powers[i] = kernels::taps_power(recs[i].taps);
        const double p_r =
            kernels::compensated_sum(powers) / static_cast<double>(recs.size());
        out[ghz] = system_factor(PowerValue{p_r}, d_m, Frequency{ghz});
    }

    if (sidecar) {
        for (const auto& [ghz, p_r] : *sidecar) {
            if (out.count(ghz))
                throw validation_error("calibration for " + format_double(ghz) +
                                       " GHz given by both dataset records and sidecar");
            out[ghz] = system_factor(PowerValue{p_r}, d_m, Frequency{ghz});
        }
    }

    // Every frequency with target records must be covered.
    std::vector<std::string> missing;
    for (const auto& r : dataset.records)
        if (r.kind == SweepKind::Target && !out.count(r.freq.ghz)) {
            const std::string label = format_double(r.freq.ghz);
            if (std::find(missing.begin(), missing.end(), label) == missing.end())
                missing.push_back(label);
        }
    if (!missing.empty()) {
        std::string msg = "no calibration for frequencies (GHz):";
        for (const auto& m : missing)
            msg += " " + m;
        throw validation_error(msg);
    }
    return out;
}

} // namespace rcskit

#ifndef RCSKIT_CALIBRATION_HPP
#define RCSKIT_CALIBRATION_HPP

#include <map>
#include <optional>

#include "rcskit/types.hpp"

namespace rcskit {

struct SweepDataset; // io.hpp

// Transmit-side link parameters, linear units. These exist only for the
// synthetic forward model: the measurement path never sees them, because the
// whole point of K(lambda) is that the unknown gains and losses cancel.
struct LinkBudget {
    double p_t = 1.0;
    double g_t = 100.0; // 20 dBi
    double g_r = 100.0;
    double loss = 0.5;
};

// K(lambda) = P_r / (4 pi d^2), with P_r received at the target point.
SystemFactor system_factor(PowerValue p_r, double d_m, Frequency freq);

// sigma = P_tar / K.
double rcs_from_power(PowerValue p_tar, const SystemFactor& k);

// Radar equation for the monostatic form (equal Tx-target and Rx-target
// distances): P_tar = P_t G_t G_r lambda^2 sigma L / ((4 pi)^3 d^4).
PowerValue forward_radar_power(double sigma_m2, Frequency freq, const Geometry& geom,
                               const LinkBudget& link);

// One-way free-space received power at distance d:
// P_r = P_t G_t G_r lambda^2 L / ((4 pi)^2 d^2). Feeds the calibration sidecar
// in the synthetic oracle.
PowerValue free_space_received_power(Frequency freq, double d_m, const LinkBudget& link);

// Aggregate exactly one SystemFactor per frequency that needs one, from
// calibration-kind records (mean power over snapshots) or from a sidecar
// table. A frequency present in both sources is an error, as is a frequency
// required for RCS derivation but present in neither.
std::map<double, SystemFactor> collect_system_factors(
    const SweepDataset& dataset, const std::optional<std::map<double, double>>& sidecar,
    double d_m);

} // namespace rcskit

#endif

#ifndef RCSKIT_POWER_HPP
#define RCSKIT_POWER_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rcskit/kernels.hpp"
#include "rcskit/types.hpp"

namespace rcskit {

// Total CIR power sum_n |taps[n]|^2, compensated summation in tap order.
PowerValue cir_power(const CirRecord& record);

// Arithmetic mean of cir_power over reference snapshots at one frequency.
PowerValue mean_reference_power(std::span<const CirRecord> refs);

// Differentials at or below the floor are rejected rather than clamped: a
// non-positive RCS sample is unphysical and would poison the log-normal fit.
struct RejectionPolicy {
    double abs_floor = 1e-12;
    double rel_floor = 1e-6; // of the reference power

    double floor(double p_ref) const;
};

// P_tar = P_tot - P_ref, or nullopt when the differential does not clear the
// floor. Rejection is a data outcome, not an error.
std::optional<PowerValue> target_power(PowerValue p_tot, PowerValue p_ref,
                                       const RejectionPolicy& policy = {});

struct SweepDataset; // io.hpp

// Full clutter-differencing pipeline: for every (target, frequency) group,
// difference each target snapshot against the mean reference power at that
// frequency and invert through the system factor. Snapshots are processed in
// snapshot_index order; rejected snapshots increment discarded_count.
// Output is sorted by (target, freq).
std::vector<RcsSampleSet> extract_rcs_samples(const SweepDataset& dataset,
                                              const std::map<double, SystemFactor>& factors,
                                              const RejectionPolicy& policy = {},
                                              kernels::Exec exec = kernels::Exec::Parallel);

} // namespace rcskit

#endif

#ifndef RCSKIT_IO_HPP
#define RCSKIT_IO_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rcskit/types.hpp"

namespace rcskit {

// Parsed and indexed sweep dataset. Records keep file order; grouping is by
// (target, freq) with snapshot_index ordering within a group.
struct SweepDataset {
    std::vector<CirRecord> records;
    Geometry geometry;
    std::set<Frequency> frequencies;
    std::set<std::string> targets;

    // All violations, not just the first.
    std::vector<std::string> validate() const;

    bool operator==(const SweepDataset&) const = default;
};

// Rebuilds the frequency/target indexes from the records.
void reindex(SweepDataset& dataset);

// Dataset files are JSON Lines: one record object per line with fields
// freq_ghz, kind ("reference"|"target"|"calibration"), target (required iff
// kind=="target"), snapshot, taps_re[], taps_im[].
SweepDataset parse_dataset(const std::filesystem::path& path);
void write_dataset(const SweepDataset& dataset, const std::filesystem::path& path);

struct RunConfig {
    Geometry geometry;
    std::vector<Frequency> frequencies; // empty = use every frequency in the dataset
    double cap_k = 3.0;
    std::optional<std::filesystem::path> calibration_sidecar;
};

// Single JSON object; every field optional, unknown fields rejected.
// Defaults: d_tx_tar_m = d_rx_tar_m = 3.0, baseline_m = 0.55, cap_k = 3.
// A relative calibration_sidecar path is resolved against the config's parent
// directory.
RunConfig parse_config(const std::filesystem::path& path);

// Sidecar: JSON object mapping freq_ghz (as a numeric string key) to the
// received calibration power P_r, linear units.
std::map<double, double> parse_calibration_sidecar(const std::filesystem::path& path);
void write_calibration_sidecar(const std::map<double, double>& table,
                               const std::filesystem::path& path);

// Shortest round-trip decimal formatting used by every emitted file.
std::string format_double(double v);

} // namespace rcskit

#endif

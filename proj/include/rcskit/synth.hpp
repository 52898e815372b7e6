#ifndef RCSKIT_SYNTH_HPP
#define RCSKIT_SYNTH_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rcskit/calibration.hpp"
#include "rcskit/io.hpp"
#include "rcskit/kernels.hpp"
#include "rcskit/rng.hpp"
#include "rcskit/sampler.hpp"
#include "rcskit/types.hpp"

namespace rcskit {

// Zadoff-Chu sequence of the given length and root (gcd(root, length) = 1):
// x[n] = exp(-j pi u n^2 / N) for even N, exp(-j pi u n(n+1) / N) for odd N.
// Constant modulus, zero periodic autocorrelation at nonzero lags.
std::vector<std::complex<double>> zc_sequence(int length, int root);

struct PathTap {
    int delay = 0;
    std::complex<double> gain{0.0, 0.0};
};

// Dense CIR from sparse paths; gains at coincident delays add.
std::vector<std::complex<double>> synth_cir(std::span<const PathTap> paths, int length);

// Sound the channel with the code (circular convolution), add seeded complex
// white noise of the given per-sample power, and recover the leading
// taps.size() taps by normalized circular cross-correlation. Exact recovery
// at zero noise.
std::vector<std::complex<double>> sound_and_recover(
    std::span<const std::complex<double>> taps, std::span<const std::complex<double>> zc,
    double noise_power, Rng& rng, kernels::Exec exec = kernels::Exec::Serial);

// Forward-simulation scenario. Defaults give a fast self-consistent campaign
// on the 25-28 GHz grid.
struct CampaignScenario {
    std::map<std::string, RcsTriple> targets;
    std::vector<Frequency> frequencies{{25.0}, {26.0}, {27.0}, {28.0}};
    std::int64_t snapshots_per_freq = 2000;
    std::int64_t reference_snapshots_per_freq = 8;
    Geometry geometry;
    LinkBudget link;
    int taps_len = 32;
    int zc_length = 128;
    int zc_root = 5;
    int target_delay = 12;
    double noise_power = 0.0;
    double clutter_jitter = 0.0;   // relative per-snapshot clutter gain jitter
    double clutter_power = 2e-6;   // total clutter power per frequency
    bool sound_through_zc = true;
    SampleOptions sample_options;

    // Violations carry the field path (e.g. "link.p_t").
    std::vector<std::string> validate() const;
};

CampaignScenario default_campaign_scenario();

struct GroundTruthEntry {
    std::string target;
    Frequency freq;
    std::int64_t snapshot = 0;
    double sigma_m2 = 0.0;
};

struct Campaign {
    SweepDataset dataset;                  // reference + target records
    std::map<double, double> calibration;  // freq_ghz -> P_r (free-space sidecar)
    std::vector<GroundTruthEntry> ledger;  // every drawn sigma
};

// Forward-simulate a full campaign: deterministic clutter profile per
// frequency, target taps scaled through the radar equation from RCS draws,
// free-space calibration sidecar. Snapshots use per-snapshot derived RNG
// substreams, so serial and parallel generation are identical bit for bit.
Campaign generate_campaign(const CampaignScenario& scenario, std::uint64_t seed,
                           kernels::Exec exec = kernels::Exec::Parallel);

void write_campaign(const Campaign& campaign, const std::filesystem::path& out_dir);

} // namespace rcskit

#endif

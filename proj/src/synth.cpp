#include "rcskit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <numeric>

#include "rcskit/errors.hpp"
#include "rcskit/power.hpp"

namespace rcskit {

std::vector<std::complex<double>> zc_sequence(int length, int root) {
    if (length < 2)
        throw validation_error("zc_sequence: length must be >= 2");
    if (root < 1)
        throw validation_error("zc_sequence: root must be >= 1");
    if (std::gcd(root, length) != 1)
        throw validation_error("zc_sequence: root " + std::to_string(root) +
                               " is not coprime to length " + std::to_string(length));

    // Phases reduced modulo 2N in exact integer arithmetic so sidelobe levels
    // stay at machine precision for any (N, u).
    const std::uint64_t N = static_cast<std::uint64_t>(length);
    const std::uint64_t u = static_cast<std::uint64_t>(root);
    const std::uint64_t two_n = 2 * N;

    std::vector<std::complex<double>> x(length);
    for (std::uint64_t n = 0; n < N; ++n) {
        const std::uint64_t quad = (length % 2 == 0) ? (n * n) % two_n : (n * (n + 1)) % two_n;
        const std::uint64_t q = (u * quad) % two_n;
        const double phase = -std::numbers::pi * static_cast<double>(q) / static_cast<double>(N);
        x[n] = std::polar(1.0, phase);
    }
    return x;
}

std::vector<std::complex<double>> synth_cir(std::span<const PathTap> paths, int length) {
    if (length < 1)
        throw validation_error("synth_cir: length must be >= 1");
    std::vector<std::complex<double>> taps(length, {0.0, 0.0});
    for (const auto& p : paths) {
        if (p.delay < 0 || p.delay >= length)
            throw validation_error("synth_cir: delay " + std::to_string(p.delay) +
                                   " outside [0, " + std::to_string(length) + ")");
        taps[p.delay] += p.gain;
    }
    return taps;
}

std::vector<std::complex<double>> sound_and_recover(
    std::span<const std::complex<double>> taps, std::span<const std::complex<double>> zc,
    double noise_power, Rng& rng, kernels::Exec exec) {
    if (taps.empty())
        throw validation_error("sound_and_recover: empty channel");
    if (zc.size() < taps.size())
        throw validation_error("sound_and_recover: code shorter than channel");
    if (noise_power < 0.0)
        throw validation_error("sound_and_recover: negative noise power");

    const int L = static_cast<int>(zc.size());
    const int n_taps = static_cast<int>(taps.size());

    // Circular convolution over the (sparse) channel taps.
    std::vector<std::complex<double>> rx(L, {0.0, 0.0});
    for (int k = 0; k < n_taps; ++k) {
        if (taps[k] == std::complex<double>{0.0, 0.0})
            continue;
        for (int m = 0; m < L; ++m) {
            int i = m + k;
            if (i >= L)
                i -= L;
            rx[i] += taps[k] * zc[m];
        }
    }

    if (noise_power > 0.0) {
        const double s = std::sqrt(noise_power / 2.0);
        for (auto& v : rx)
            v += std::complex<double>{s * rng.normal(), s * rng.normal()};
    }

    return kernels::recover_taps(rx, zc, n_taps, exec);
}

std::vector<std::string> CampaignScenario::validate() const {
    std::vector<std::string> v;
    for (const auto& [name, triple] : targets) {
        for (const auto& tv : triple.validate())
            v.push_back("targets." + name + ": " + tv);
    }
    if (frequencies.empty())
        v.push_back("frequencies: must not be empty");
    for (std::size_t i = 0; i < frequencies.size(); ++i)
        for (const auto& fv : frequencies[i].validate())
            v.push_back("frequencies[" + std::to_string(i) + "]: " + fv);
    if (snapshots_per_freq < 1)
        v.push_back("snapshots_per_freq: must be >= 1");
    if (reference_snapshots_per_freq < 1)
        v.push_back("reference_snapshots_per_freq: must be >= 1");
    for (const auto& gv : geometry.validate())
        v.push_back("geometry: " + gv);
    if (!(link.p_t > 0.0))
        v.push_back("link.p_t: must be positive");
    if (!(link.g_t > 0.0))
        v.push_back("link.g_t: must be positive");
    if (!(link.g_r > 0.0))
        v.push_back("link.g_r: must be positive");
    if (!(link.loss > 0.0))
        v.push_back("link.loss: must be positive");
    if (taps_len < 2)
        v.push_back("taps_len: must be >= 2");
    if (zc_length < taps_len)
        v.push_back("zc_length: must be >= taps_len");
    if (zc_root < 1 || std::gcd(zc_root, zc_length) != 1)
        v.push_back("zc_root: must be coprime to zc_length");
    if (target_delay < 0 || target_delay >= taps_len)
        v.push_back("target_delay: must lie in [0, taps_len)");
    if (noise_power < 0.0)
        v.push_back("noise_power: must be non-negative");
    if (clutter_jitter < 0.0 || clutter_jitter >= 1.0)
        v.push_back("clutter_jitter: must lie in [0, 1)");
    if (!(clutter_power > 0.0))
        v.push_back("clutter_power: must be positive");
    return v;
}

CampaignScenario default_campaign_scenario() {
    CampaignScenario s;
    s.targets["small_uav"] = RcsTriple{-12.81, B1Constant{0.0}, 3.74, 3.0};
    return s;
}

namespace {

// Deterministic clutter multipath profile for one frequency: fixed delays,
// geometrically decaying magnitudes, phases derived from the frequency alone
// (stable across seeds, mirroring a static environment).
std::vector<PathTap> clutter_profile(const CampaignScenario& sc, Frequency freq) {
    static constexpr int kDelays[] = {0, 3, 7, 11, 18, 25};
    std::vector<int> delays;
    for (int d : kDelays)
        if (d < sc.taps_len && d != sc.target_delay)
            delays.push_back(d);

    double norm = 0.0;
    for (std::size_t i = 0; i < delays.size(); ++i)
        norm += std::pow(0.6, 2.0 * static_cast<double>(i));
    const double amp0 = std::sqrt(sc.clutter_power / norm);

    std::uint64_t h = 0x243F6A8885A308D3ULL; // phase hash state
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(double));
    std::memcpy(&bits, &freq.ghz, sizeof(bits));
    h ^= bits;

    std::vector<PathTap> paths;
    for (std::size_t i = 0; i < delays.size(); ++i) {
        h ^= h >> 33;
        h *= 0xFF51AFD7ED558CCDULL;
        h ^= h >> 33;
        const double phase =
            2.0 * std::numbers::pi * static_cast<double>(h >> 11) * 0x1.0p-53;
        const double amp = amp0 * std::pow(0.6, static_cast<double>(i));
        paths.push_back(PathTap{delays[i], std::polar(amp, phase)});
    }
    return paths;
}

std::vector<PathTap> jittered(const std::vector<PathTap>& base, double jitter, Rng& rng) {
    if (jitter == 0.0)
        return base;
    std::vector<PathTap> out = base;
    for (auto& p : out)
        p.gain *= 1.0 + jitter * rng.uniform(-1.0, 1.0);
    return out;
}

// Substream tag: one id per (frequency, lane, snapshot). Lane 0 holds
// reference snapshots, 1+ti the snapshots of target ti, 0x8000+ti the RCS
// draw stream of target ti. Fields are masked so they cannot bleed into
// each other.
std::uint64_t stream_tag(std::size_t freq_idx, std::size_t lane, std::int64_t snapshot) {
    return (static_cast<std::uint64_t>(freq_idx & 0xFFFF) << 48) |
           (static_cast<std::uint64_t>(lane & 0xFFFF) << 32) |
           (static_cast<std::uint64_t>(snapshot) & 0xFFFFFFFFULL);
}

CirRecord make_record(const CampaignScenario& sc, const std::vector<std::complex<double>>& zc,
                      const std::vector<PathTap>& paths, Frequency freq, SweepKind kind,
                      const std::string& target, std::int64_t snapshot, Rng& rng) {
    CirRecord rec;
    rec.freq = freq;
    rec.kind = kind;
    rec.target_id = target;
    rec.snapshot_index = snapshot;
    const auto taps = synth_cir(paths, sc.taps_len);
    if (sc.sound_through_zc)
        rec.taps = sound_and_recover(taps, zc, sc.noise_power, rng, kernels::Exec::Serial);
    else
        rec.taps = taps;
    return rec;
}

} // namespace

Campaign generate_campaign(const CampaignScenario& scenario, std::uint64_t seed,
                           kernels::Exec exec) {
    const auto violations = scenario.validate();
    if (!violations.empty()) {
        std::string msg = "invalid campaign scenario:";
        for (const auto& v : violations)
            msg += "\n  " + v;
        throw validation_error(msg);
    }

    const auto zc = zc_sequence(scenario.zc_length, scenario.zc_root);

    Campaign campaign;
    campaign.dataset.geometry = scenario.geometry;
    const double d = scenario.geometry.d_tx_tar_m;

    for (Frequency freq : scenario.frequencies)
        campaign.calibration[freq.ghz] =
            free_space_received_power(freq, d, scenario.link).value;

    // Lane 0 holds reference records; targets take lanes 1, 2, ...
    std::vector<std::string> target_names;
    for (const auto& [name, triple] : scenario.targets)
        target_names.push_back(name);

    for (std::size_t fi = 0; fi < scenario.frequencies.size(); ++fi) {
        const Frequency freq = scenario.frequencies[fi];
        const auto clutter = clutter_profile(scenario, freq);

        const std::int64_t n_ref = scenario.reference_snapshots_per_freq;
        std::vector<CirRecord> refs(n_ref);
        if (exec == kernels::Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (std::int64_t s = 0; s < n_ref; ++s) {
                Rng rng = Rng::substream(seed, stream_tag(fi, 0, s));
                refs[s] = make_record(scenario, zc, jittered(clutter, scenario.clutter_jitter, rng),
                                      freq, SweepKind::Reference, "", s, rng);
            }
        } else {
            for (std::int64_t s = 0; s < n_ref; ++s) {
                Rng rng = Rng::substream(seed, stream_tag(fi, 0, s));
                refs[s] = make_record(scenario, zc, jittered(clutter, scenario.clutter_jitter, rng),
                                      freq, SweepKind::Reference, "", s, rng);
            }
        }
        for (auto& r : refs)
            campaign.dataset.records.push_back(std::move(r));

        for (std::size_t ti = 0; ti < target_names.size(); ++ti) {
            const std::string& name = target_names[ti];
            const RcsTriple& triple = scenario.targets.at(name);

            // RCS draws come from a single per-(target, freq) stream so the
            // ledger is independent of how snapshots are parallelized.
            Rng draw_rng = Rng::substream(seed, stream_tag(fi, 0x8000 + ti, 0));
            const auto draws =
                sample_rcs(triple, SampleGeometry::monostatic(0.0), draw_rng,
                           scenario.snapshots_per_freq, scenario.sample_options);

            const std::int64_t n_snap = scenario.snapshots_per_freq;
            std::vector<CirRecord> recs(n_snap);
            auto synth_one = [&](std::int64_t s) {
                Rng rng = Rng::substream(seed, stream_tag(fi, 1 + ti, s));
                auto paths = jittered(clutter, scenario.clutter_jitter, rng);
                const double p_tar =
                    forward_radar_power(draws[s], freq, scenario.geometry, scenario.link).value;
                const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
                paths.push_back(PathTap{scenario.target_delay,
                                        std::polar(std::sqrt(p_tar), phase)});
                recs[s] = make_record(scenario, zc, paths, freq, SweepKind::Target, name, s, rng);
            };
            if (exec == kernels::Exec::Parallel) {
#pragma omp parallel for schedule(static)
                for (std::int64_t s = 0; s < n_snap; ++s)
                    synth_one(s);
            } else {
                for (std::int64_t s = 0; s < n_snap; ++s)
                    synth_one(s);
            }
            for (auto& r : recs)
                campaign.dataset.records.push_back(std::move(r));

            for (std::int64_t s = 0; s < n_snap; ++s)
                campaign.ledger.push_back(GroundTruthEntry{name, freq, s, draws[s]});
        }
    }

    reindex(campaign.dataset);
    return campaign;
}

void write_campaign(const Campaign& campaign, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw io_error("cannot create output directory " + out_dir.string());

    write_dataset(campaign.dataset, out_dir / "dataset.jsonl");
    write_calibration_sidecar(campaign.calibration, out_dir / "calibration.json");

    std::ofstream ledger(out_dir / "ledger.csv");
    if (!ledger)
        throw io_error("cannot write " + (out_dir / "ledger.csv").string());
    ledger << "target,freq_ghz,snapshot,sigma_true_m2\n";
    for (const auto& e : campaign.ledger)
        ledger << e.target << ',' << format_double(e.freq.ghz) << ',' << e.snapshot << ','
               << format_double(e.sigma_m2) << '\n';
}

} // namespace rcskit

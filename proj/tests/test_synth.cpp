#include <doctest.h>

#include <cmath>
#include <numeric>

#include "rcskit/calibration.hpp"
#include "rcskit/errors.hpp"
#include "rcskit/power.hpp"
#include "rcskit/statfit.hpp"
#include "rcskit/synth.hpp"
#include "rcskit/units.hpp"

using namespace rcskit;
using kernels::Exec;

TEST_CASE("zadoff-chu basics") {
    const auto zc = zc_sequence(128, 1);
    REQUIRE(zc.size() == 128);
    CHECK(std::abs(zc[0] - std::complex<double>{1.0, 0.0}) < 1e-15);
    for (const auto& x : zc)
        CHECK(std::abs(std::abs(x) - 1.0) < 1e-15);

    CHECK_THROWS_AS(zc_sequence(128, 2), validation_error); // gcd 2
    CHECK_THROWS_AS(zc_sequence(1, 1), validation_error);
    CHECK_THROWS_AS(zc_sequence(63, 21), validation_error);
}

TEST_CASE("zadoff-chu periodic autocorrelation vanishes off zero lag") {
    // Brute force over every lag for a spread of lengths and roots.
    const std::pair<int, std::vector<int>> cases[] = {
        {3, {1, 2}}, {63, {1, 2, 61}}, {128, {1, 3, 63, 127}}, {139, {1, 5, 138}}};
    for (const auto& [n, roots] : cases) {
        for (int root : roots) {
            const auto zc = zc_sequence(n, root);
            for (int lag = 0; lag < n; ++lag) {
                std::complex<double> acc{0.0, 0.0};
                for (int i = 0; i < n; ++i)
                    acc += zc[i] * std::conj(zc[(i + lag) % n]);
                if (lag == 0)
                    CHECK(std::abs(acc - std::complex<double>{double(n), 0.0}) < 1e-9);
                else
                    CHECK(std::abs(acc) < 1e-10);
            }
        }
    }
}

TEST_CASE("synth cir placement") {
    const PathTap impulse[] = {{0, {1.0, 0.0}}};
    const auto taps = synth_cir(impulse, 8);
    CHECK(taps[0] == std::complex<double>{1.0, 0.0});
    for (int i = 1; i < 8; ++i)
        CHECK(taps[i] == std::complex<double>{0.0, 0.0});

    // Two equal paths at distinct delays carry twice the single-path power.
    const PathTap two[] = {{1, {0.0, 0.7}}, {5, {0.0, 0.7}}};
    const auto taps2 = synth_cir(two, 8);
    CHECK(kernels::taps_power(taps2) == doctest::Approx(2.0 * 0.49).epsilon(1e-15));

    const PathTap bad[] = {{8, {1.0, 0.0}}};
    CHECK_THROWS_AS(synth_cir(bad, 8), validation_error);
    const PathTap neg[] = {{-1, {1.0, 0.0}}};
    CHECK_THROWS_AS(synth_cir(neg, 8), validation_error);
}

TEST_CASE("clutter plus target tap adds exactly the target power") {
    const PathTap clutter[] = {{0, {0.3, 0.1}}, {3, {-0.2, 0.25}}};
    const PathTap with_target[] = {{0, {0.3, 0.1}}, {3, {-0.2, 0.25}}, {5, {0.1, -0.4}}};
    const double p_clutter = kernels::taps_power(synth_cir(clutter, 16));
    const double p_total = kernels::taps_power(synth_cir(with_target, 16));
    CHECK(p_total - p_clutter == doctest::Approx(0.01 + 0.16).epsilon(1e-12));
}

TEST_CASE("noiseless sounding recovers the channel exactly") {
    const auto zc = zc_sequence(128, 5);
    Rng rng(1);

    std::vector<std::complex<double>> impulse(16, {0.0, 0.0});
    impulse[0] = {1.0, 0.0};
    auto rec = sound_and_recover(impulse, zc, 0.0, rng);
    for (int i = 0; i < 16; ++i)
        CHECK(std::abs(rec[i] - impulse[i]) < 1e-12);

    std::vector<std::complex<double>> two_path(16, {0.0, 0.0});
    two_path[2] = {0.8, -0.3};
    two_path[9] = {-0.1, 0.45};
    rec = sound_and_recover(two_path, zc, 0.0, rng);
    for (int i = 0; i < 16; ++i)
        CHECK(std::abs(rec[i] - two_path[i]) < 1e-10);
}

TEST_CASE("sounding at 30 dB SNR estimates tap power within 0.1 dB") {
    const auto zc = zc_sequence(128, 5);
    std::vector<std::complex<double>> taps(16, {0.0, 0.0});
    taps[0] = {1.0, 0.0};
    taps[5] = {0.0, 0.5};
    const double p_true = kernels::taps_power(taps); // 1.25
    const double noise_power = p_true * 1e-3;        // per-sample SNR 30 dB

    for (int trial = 0; trial < 100; ++trial) {
        Rng rng(5000 + trial);
        const auto rec = sound_and_recover(taps, zc, noise_power, rng);
        const double p_hat = kernels::taps_power(rec);
        CHECK(std::abs(10.0 * std::log10(p_hat / p_true)) < 0.1);
    }
}

TEST_CASE("sounding input validation") {
    const auto zc = zc_sequence(64, 5);
    Rng rng(2);
    std::vector<std::complex<double>> too_long(65, {1.0, 0.0});
    CHECK_THROWS_AS(sound_and_recover(too_long, zc, 0.0, rng), validation_error);
    std::vector<std::complex<double>> empty;
    CHECK_THROWS_AS(sound_and_recover(empty, zc, 0.0, rng), validation_error);
    std::vector<std::complex<double>> ok(8, {1.0, 0.0});
    CHECK_THROWS_AS(sound_and_recover(ok, zc, -1.0, rng), validation_error);
}

TEST_CASE("scenario validation reports field paths") {
    CampaignScenario sc = default_campaign_scenario();
    CHECK(sc.validate().empty());

    sc.link.p_t = 0.0;
    sc.target_delay = 999;
    sc.frequencies.clear();
    const auto violations = sc.validate();
    REQUIRE(violations.size() == 3);
    bool saw_link = false, saw_delay = false, saw_freq = false;
    for (const auto& v : violations) {
        saw_link = saw_link || v.find("link.p_t") != std::string::npos;
        saw_delay = saw_delay || v.find("target_delay") != std::string::npos;
        saw_freq = saw_freq || v.find("frequencies") != std::string::npos;
    }
    CHECK(saw_link);
    CHECK(saw_delay);
    CHECK(saw_freq);
}

TEST_CASE("campaign ledger matches the pipeline-recovered samples at zero noise") {
    CampaignScenario sc = default_campaign_scenario();
    sc.frequencies = {Frequency{26.0}};
    sc.snapshots_per_freq = 100;

    const Campaign campaign = generate_campaign(sc, 77);
    REQUIRE(campaign.ledger.size() == 100);

    std::optional<std::map<double, double>> sidecar(campaign.calibration);
    const auto factors =
        collect_system_factors(campaign.dataset, sidecar, sc.geometry.d_tx_tar_m);
    const auto sets = extract_rcs_samples(campaign.dataset, factors);
    REQUIRE(sets.size() == 1);
    REQUIRE(sets[0].samples.size() == 100);
    CHECK(sets[0].discarded_count == 0);

    for (std::size_t i = 0; i < 100; ++i) {
        const double truth = campaign.ledger[i].sigma_m2;
        CHECK(std::abs(sets[0].samples[i] - truth) / truth <= 1e-6);
    }
}

TEST_CASE("fit on campaign output matches the generating distribution") {
    CampaignScenario sc = default_campaign_scenario();
    sc.frequencies = {Frequency{28.0}};
    sc.snapshots_per_freq = 10000;
    sc.sound_through_zc = false; // direct taps: the sounding path has its own tests

    const Campaign campaign = generate_campaign(sc, 3);
    std::optional<std::map<double, double>> sidecar(campaign.calibration);
    const auto factors =
        collect_system_factors(campaign.dataset, sidecar, sc.geometry.d_tx_tar_m);
    const auto sets = extract_rcs_samples(campaign.dataset, factors);
    REQUIRE(sets.size() == 1);

    const auto fit = fit_lognormal(sets[0]);
    const auto dist = b2_distribution(3.74);
    const double mu_expected = std::log(db_to_linear(-12.81)) + dist.mu;
    CHECK(std::abs(fit.mu - mu_expected) / std::abs(mu_expected) <= 0.02);
    CHECK(std::abs(fit.sigma - dist.sigma) / dist.sigma <= 0.02);
}

TEST_CASE("campaign with no targets is reference and calibration only") {
    CampaignScenario sc = default_campaign_scenario();
    sc.targets.clear();
    sc.frequencies = {Frequency{25.0}, Frequency{26.0}};
    const Campaign campaign = generate_campaign(sc, 5);
    CHECK(campaign.ledger.empty());
    CHECK(campaign.dataset.records.size() ==
          static_cast<std::size_t>(2 * sc.reference_snapshots_per_freq));
    for (const auto& r : campaign.dataset.records)
        CHECK(r.kind == SweepKind::Reference);
    CHECK(campaign.calibration.size() == 2);
}

TEST_CASE("RCS draw streams are independent per target and frequency") {
    CampaignScenario sc = default_campaign_scenario();
    sc.targets["agv"] = RcsTriple{-11.235, B1Constant{0.0}, 6.27, 3.0};
    sc.frequencies = {Frequency{25.0}, Frequency{26.0}};
    sc.snapshots_per_freq = 20;
    sc.sound_through_zc = false;

    const Campaign campaign = generate_campaign(sc, 99);
    std::map<std::pair<std::string, double>, std::vector<double>> draws;
    for (const auto& e : campaign.ledger)
        draws[{e.target, e.freq.ghz}].push_back(e.sigma_m2);
    REQUIRE(draws.size() == 4);

    // Ratios of same-index draws factor out the triple's mean; equal ratio
    // sequences would mean two groups shared one RNG stream.
    std::vector<std::vector<double>> normalized;
    for (const auto& [key, values] : draws) {
        std::vector<double> r(values);
        for (auto& x : r)
            x /= values.front();
        normalized.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < normalized.size(); ++i)
        for (std::size_t j = i + 1; j < normalized.size(); ++j)
            CHECK(normalized[i] != normalized[j]);
}

TEST_CASE("serial and parallel campaign generation are identical") {
    CampaignScenario sc = default_campaign_scenario();
    sc.frequencies = {Frequency{25.0}, Frequency{27.0}};
    sc.snapshots_per_freq = 50;
    sc.clutter_jitter = 0.05;
    sc.noise_power = 1e-9;

    const Campaign serial = generate_campaign(sc, 11, Exec::Serial);
    const Campaign parallel = generate_campaign(sc, 11, Exec::Parallel);
    CHECK(serial.dataset == parallel.dataset);
    CHECK(serial.calibration == parallel.calibration);
    REQUIRE(serial.ledger.size() == parallel.ledger.size());
    for (std::size_t i = 0; i < serial.ledger.size(); ++i)
        CHECK(serial.ledger[i].sigma_m2 == parallel.ledger[i].sigma_m2);
}

TEST_CASE("clutter jitter exercises the rejection path") {
    CampaignScenario sc = default_campaign_scenario();
    sc.frequencies = {Frequency{26.0}};
    sc.snapshots_per_freq = 400;
    sc.clutter_jitter = 0.4;
    // Weak link: target returns sink under the clutter variation for small draws.
    sc.link.p_t = 1e-4;

    const Campaign campaign = generate_campaign(sc, 23);
    std::optional<std::map<double, double>> sidecar(campaign.calibration);
    const auto factors =
        collect_system_factors(campaign.dataset, sidecar, sc.geometry.d_tx_tar_m);
    const auto sets = extract_rcs_samples(campaign.dataset, factors);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].discarded_count > 0);
    CHECK(sets[0].samples.size() + sets[0].discarded_count == 400);
}

#include "rcskit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcskit/calibration.hpp"
#include "rcskit/errors.hpp"
#include "rcskit/gpp.hpp"
#include "rcskit/io.hpp"
#include "rcskit/power.hpp"
#include "rcskit/report.hpp"
#include "rcskit/sampler.hpp"
#include "rcskit/statfit.hpp"
#include "rcskit/synth.hpp"
#include "rcskit/units.hpp"

namespace rcskit::cli {

using nlohmann::json;

namespace {

void ensure_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw io_error("cannot create directory " + dir.string());
}

// ---- fit ----------------------------------------------------------------

struct FitResult {
    std::vector<FitRow> rows;
    std::vector<RcsSampleSet> sets;
};

FitResult run_fit_pipeline(const std::filesystem::path& dataset_path, const RunConfig& cfg) {
    SweepDataset dataset = parse_dataset(dataset_path);
    dataset.geometry = cfg.geometry;

    if (!cfg.frequencies.empty()) {
        std::erase_if(dataset.records, [&](const CirRecord& r) {
            return std::find(cfg.frequencies.begin(), cfg.frequencies.end(), r.freq) ==
                   cfg.frequencies.end();
        });
        reindex(dataset);
        if (dataset.records.empty())
            throw validation_error("no records left after frequency filter");
    }

    std::optional<std::map<double, double>> sidecar;
    if (cfg.calibration_sidecar)
        sidecar = parse_calibration_sidecar(*cfg.calibration_sidecar);
    const auto factors = collect_system_factors(dataset, sidecar, cfg.geometry.d_tx_tar_m);

    FitResult result;
    result.sets = extract_rcs_samples(dataset, factors);
    for (const auto& set : result.sets) {
        if (set.samples.size() < 2)
            throw validation_error("target '" + set.target_id + "' at " +
                                   format_double(set.freq.ghz) + " GHz has " +
                                   std::to_string(set.samples.size()) +
                                   " accepted samples; need at least 2 to fit");
        const LognormalFit fit = fit_lognormal(set);
        FitRow row;
        row.target = set.target_id;
        row.freq_ghz = set.freq.ghz;
        row.mu = fit.mu;
        row.sigma = fit.sigma;
        row.ks = fit.ks;
        row.mse = fit.mse;
        row.n = fit.n;
        row.discarded = set.discarded_count;
        result.rows.push_back(std::move(row));
    }
    if (result.rows.empty())
        throw validation_error("dataset contains no target records to fit");
    return result;
}

int cmd_fit(const std::filesystem::path& dataset_path, const std::filesystem::path& config_path,
            const std::filesystem::path& out_dir, bool curves) {
    const RunConfig cfg = parse_config(config_path);
    const FitResult result = run_fit_pipeline(dataset_path, cfg);

    ensure_dir(out_dir);
    write_fit_table(result.rows, out_dir / "fits.csv");
    if (curves) {
        for (std::size_t i = 0; i < result.rows.size(); ++i) {
            const auto& row = result.rows[i];
            if (row.sigma > 0.0) {
                write_curves(result.sets[i].samples, row.mu, row.sigma,
                             out_dir / ("curves_" + row.target + "_" +
                                        format_double(row.freq_ghz) + "ghz.csv"));
            }
        }
    }
    std::cout << render_fit_table_text(result.rows);
    return 0;
}

// ---- derive ---------------------------------------------------------------

std::map<std::string, RcsTriple> derive_triples(const std::vector<FitRow>& rows, double cap_k) {
    if (rows.empty())
        throw validation_error("fit table is empty");

    std::vector<std::string> degenerate;
    std::map<std::string, std::map<Frequency, LognormalFit>> by_target;
    for (const auto& r : rows) {
        if (r.sigma <= 0.0) {
            degenerate.push_back(r.target + " @ " + format_double(r.freq_ghz) + " GHz");
            continue;
        }
        LognormalFit fit;
        fit.mu = r.mu;
        fit.sigma = r.sigma;
        fit.n = r.n;
        fit.ks = r.ks;
        fit.mse = r.mse;
        by_target[r.target][Frequency{r.freq_ghz}] = fit;
    }
    if (!degenerate.empty()) {
        std::string msg = "degenerate fits (sigma = 0) cannot produce B2:";
        for (const auto& d : degenerate)
            msg += "\n  " + d;
        throw validation_error(msg);
    }

    std::map<std::string, RcsTriple> triples;
    for (const auto& [target, fits] : by_target)
        triples[target] = consolidate(fits, B1Constant{0.0}, cap_k);
    return triples;
}

int cmd_derive(const std::filesystem::path& fits_path, const std::filesystem::path& out_dir,
               double cap_k) {
    const auto rows = read_fit_table(fits_path);
    const auto triples = derive_triples(rows, cap_k);

    ensure_dir(out_dir);
    write_per_frequency_table(rows, out_dir / "per_frequency.csv");
    write_consolidated_table(triples, out_dir / "consolidated.csv");
    for (const auto& [target, triple] : triples)
        write_triple_json(triple, out_dir / (target + ".triple.json"));

    std::cout << render_consolidated_text(triples);
    return 0;
}

// ---- compare ----------------------------------------------------------------

int cmd_compare(const std::filesystem::path& triple_path, const std::string& standard_name,
                double tol_db, const std::optional<std::filesystem::path>& out_path) {
    const RcsTriple measured = read_triple_json(triple_path);
    const auto& standards = builtin_standards();
    const auto it = standards.find(standard_name);
    if (it == standards.end()) {
        std::string known;
        for (const auto& [name, _] : standards)
            known += (known.empty() ? "" : ", ") + name;
        throw validation_error("no standardized values for '" + standard_name + "' (known: " +
                               known + ")");
    }

    const DeviationReport rep = compare_to_standard(measured, it->second, tol_db);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "delta_a_db=%.4f\ndelta_b2_db=%.4f\ntol_db=%.4f\nwithin_tol=%s\n",
                  rep.delta_a_db, rep.delta_b2_db, rep.tol_db, rep.within ? "yes" : "no");
    std::cout << buf;

    if (out_path) {
        std::ofstream out(*out_path);
        if (!out)
            throw io_error("cannot write " + out_path->string());
        out << "standard,delta_a_db,delta_b2_db,tol_db,within\n";
        out << standard_name << ',' << format_double(rep.delta_a_db) << ','
            << format_double(rep.delta_b2_db) << ',' << format_double(rep.tol_db) << ','
            << (rep.within ? "yes" : "no") << '\n';
    }
    return 0;
}

// ---- sample -------------------------------------------------------------------

SampleGeometry parse_angles(const std::string& spec) {
    if (spec.empty())
        return SampleGeometry::monostatic(0.0);
    const auto colon = spec.find(':');
    try {
        if (colon == std::string::npos)
            return SampleGeometry::monostatic(std::stod(spec));
        return SampleGeometry::bistatic(std::stod(spec.substr(0, colon)),
                                        std::stod(spec.substr(colon + 1)));
    } catch (const std::exception&) {
        throw validation_error("bad --angles spec '" + spec +
                               "' (expected \"theta\" or \"incident:scattered\")");
    }
}

int cmd_sample(const std::optional<std::string>& target,
               const std::optional<std::filesystem::path>& triple_path, std::int64_t n,
               std::uint64_t seed, const std::string& angles,
               const std::optional<std::filesystem::path>& out_path, const SampleOptions& opts) {
    RcsTriple triple;
    if (target) {
        const auto& standards = builtin_standards();
        const auto it = standards.find(*target);
        if (it == standards.end())
            throw validation_error("no standardized values for target class '" + *target + "'");
        triple = it->second;
    } else if (triple_path) {
        triple = read_triple_json(*triple_path);
    } else {
        throw validation_error("one of --target or --triple is required");
    }
    if (n < 1)
        throw validation_error("--n must be >= 1");

    const SampleGeometry geom = parse_angles(angles);
    Rng rng(seed);
    const auto samples = sample_rcs_detailed(triple, geom, rng, n, opts);

    if (out_path) {
        write_sample_dump(samples, *out_path);
    } else {
        std::cout << "index,b2_linear,rcs_m2,rcs_dbsm\n";
        for (std::size_t i = 0; i < samples.size(); ++i)
            std::cout << i << ',' << format_double(samples[i].b2_linear) << ','
                      << format_double(samples[i].rcs_m2) << ','
                      << format_double(linear_to_db(samples[i].rcs_m2)) << '\n';
    }
    return 0;
}

// ---- synth ----------------------------------------------------------------------

// Scenario JSON parsing; unknown fields are rejected with their dotted path.
void reject_unknown(const json& j, const std::set<std::string>& known,
                    const std::string& prefix) {
    for (const auto& [key, _] : j.items())
        if (!known.count(key))
            throw validation_error("scenario: unknown field '" + prefix + key + "'");
}

RcsTriple triple_from_scenario_json(const json& j, const std::string& path) {
    reject_unknown(j, {"a_dbsm", "b1_db", "b2_db", "cap_k"}, path + ".");
    RcsTriple t;
    try {
        t.a_dbsm = j.at("a_dbsm").get<double>();
        t.b2_db = j.at("b2_db").get<double>();
        if (j.contains("b1_db"))
            t.b1 = B1Constant{j.at("b1_db").get<double>()};
        if (j.contains("cap_k"))
            t.cap_k = j.at("cap_k").get<double>();
    } catch (const json::exception& e) {
        throw validation_error("scenario: " + path + ": " + e.what());
    }
    return t;
}

CampaignScenario parse_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open scenario " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error("scenario " + path.string() + ": " + e.what());
    }
    if (!j.is_object())
        throw validation_error("scenario " + path.string() + ": must be a JSON object");

    reject_unknown(j,
                   {"targets", "frequencies_ghz", "snapshots_per_freq",
                    "reference_snapshots_per_freq", "geometry", "link", "taps_len", "zc_length",
                    "zc_root", "target_delay", "noise_power", "clutter_jitter", "clutter_power",
                    "sound_through_zc"},
                   "");

    CampaignScenario sc = default_campaign_scenario();
    try {
        if (j.contains("targets")) {
            sc.targets.clear();
            for (const auto& [name, tj] : j.at("targets").items())
                sc.targets[name] = triple_from_scenario_json(tj, "targets." + name);
        }
        if (j.contains("frequencies_ghz")) {
            sc.frequencies.clear();
            for (double f : j.at("frequencies_ghz").get<std::vector<double>>())
                sc.frequencies.push_back(Frequency{f});
        }
        if (j.contains("snapshots_per_freq"))
            sc.snapshots_per_freq = j.at("snapshots_per_freq").get<std::int64_t>();
        if (j.contains("reference_snapshots_per_freq"))
            sc.reference_snapshots_per_freq =
                j.at("reference_snapshots_per_freq").get<std::int64_t>();
        if (j.contains("geometry")) {
            const auto& g = j.at("geometry");
            reject_unknown(g, {"d_tx_tar_m", "d_rx_tar_m", "baseline_m"}, "geometry.");
            if (g.contains("d_tx_tar_m"))
                sc.geometry.d_tx_tar_m = g.at("d_tx_tar_m").get<double>();
            if (g.contains("d_rx_tar_m"))
                sc.geometry.d_rx_tar_m = g.at("d_rx_tar_m").get<double>();
            if (g.contains("baseline_m"))
                sc.geometry.baseline_m = g.at("baseline_m").get<double>();
        }
        if (j.contains("link")) {
            const auto& l = j.at("link");
            reject_unknown(l, {"p_t", "g_t_db", "g_r_db", "loss_db"}, "link.");
            if (l.contains("p_t"))
                sc.link.p_t = l.at("p_t").get<double>();
            if (l.contains("g_t_db"))
                sc.link.g_t = db_to_linear(l.at("g_t_db").get<double>());
            if (l.contains("g_r_db"))
                sc.link.g_r = db_to_linear(l.at("g_r_db").get<double>());
            if (l.contains("loss_db"))
                sc.link.loss = db_to_linear(l.at("loss_db").get<double>());
        }
        if (j.contains("taps_len"))
            sc.taps_len = j.at("taps_len").get<int>();
        if (j.contains("zc_length"))
            sc.zc_length = j.at("zc_length").get<int>();
        if (j.contains("zc_root"))
            sc.zc_root = j.at("zc_root").get<int>();
        if (j.contains("target_delay"))
            sc.target_delay = j.at("target_delay").get<int>();
        if (j.contains("noise_power"))
            sc.noise_power = j.at("noise_power").get<double>();
        if (j.contains("clutter_jitter"))
            sc.clutter_jitter = j.at("clutter_jitter").get<double>();
        if (j.contains("clutter_power"))
            sc.clutter_power = j.at("clutter_power").get<double>();
        if (j.contains("sound_through_zc"))
            sc.sound_through_zc = j.at("sound_through_zc").get<bool>();
    } catch (const json::exception& e) {
        throw validation_error("scenario " + path.string() + ": " + e.what());
    }
    return sc;
}

int cmd_synth(const std::optional<std::filesystem::path>& scenario_path,
              const std::filesystem::path& out_dir, std::uint64_t seed) {
    const CampaignScenario scenario =
        scenario_path ? parse_scenario(*scenario_path) : default_campaign_scenario();

    const Campaign campaign = generate_campaign(scenario, seed);
    ensure_dir(out_dir);
    write_campaign(campaign, out_dir);

    // Ready-to-use fit config pointing at the sidecar.
    json cfg;
    cfg["d_tx_tar_m"] = scenario.geometry.d_tx_tar_m;
    cfg["d_rx_tar_m"] = scenario.geometry.d_rx_tar_m;
    cfg["baseline_m"] = scenario.geometry.baseline_m;
    cfg["cap_k"] = 3.0;
    cfg["calibration_sidecar"] = "calibration.json";
    std::ofstream out(out_dir / "config.json");
    if (!out)
        throw io_error("cannot write " + (out_dir / "config.json").string());
    out << cfg.dump(2) << '\n';

    std::cout << "wrote " << campaign.dataset.records.size() << " records, "
              << campaign.ledger.size() << " ledger entries to " << out_dir.string() << "\n";
    return 0;
}

// ---- report -----------------------------------------------------------------------

int cmd_report(const std::filesystem::path& dataset_path,
               const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
               const std::string& standard, double tol_db) {
    const RunConfig cfg = parse_config(config_path);
    const FitResult result = run_fit_pipeline(dataset_path, cfg);
    const auto triples = derive_triples(result.rows, cfg.cap_k);

    ensure_dir(out_dir);
    write_fit_table(result.rows, out_dir / "fits.csv");
    write_per_frequency_table(result.rows, out_dir / "per_frequency.csv");
    write_consolidated_table(triples, out_dir / "consolidated.csv");
    for (const auto& [target, triple] : triples)
        write_triple_json(triple, out_dir / (target + ".triple.json"));

    std::cout << render_fit_table_text(result.rows) << "\n"
              << render_consolidated_text(triples);

    if (standard != "none") {
        std::ofstream cmp(out_dir / "comparison.csv");
        if (!cmp)
            throw io_error("cannot write " + (out_dir / "comparison.csv").string());
        cmp << "target,standard,delta_a_db,delta_b2_db,tol_db,within\n";
        for (const auto& [target, triple] : triples) {
            const std::string name = (standard == "auto") ? target : standard;
            const auto it = builtin_standards().find(name);
            if (it == builtin_standards().end()) {
                if (standard != "auto")
                    throw validation_error("no standardized values for '" + name + "'");
                continue;
            }
            const DeviationReport rep = compare_to_standard(triple, it->second, tol_db);
            cmp << target << ',' << name << ',' << format_double(rep.delta_a_db) << ','
                << format_double(rep.delta_b2_db) << ',' << format_double(rep.tol_db) << ','
                << (rep.within ? "yes" : "no") << '\n';
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "\n%s vs %s standard: dA=%.3f dB, dB2=%.3f dB (tol %.2f dB) -> %s\n",
                          target.c_str(), name.c_str(), rep.delta_a_db, rep.delta_b2_db,
                          rep.tol_db, rep.within ? "within" : "outside");
            std::cout << buf;
        }
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"rcskit - 3GPP-compliant RCS characterization and sampling toolkit"};
    app.require_subcommand(1);

    // fit
    std::string fit_dataset, fit_config, fit_out;
    bool fit_curves = false;
    auto* fit = app.add_subcommand("fit", "Fit per-(target, frequency) log-normal RCS models");
    fit->add_option("--dataset", fit_dataset, "Sweep dataset (JSON Lines)")->required();
    fit->add_option("--config", fit_config, "Run configuration (JSON)")->required();
    fit->add_option("--out", fit_out, "Output directory")->required();
    fit->add_flag("--curves", fit_curves, "Also emit 200-point PDF/CDF curve tables");

    // derive
    std::string derive_fits, derive_out;
    double derive_cap_k = 3.0;
    auto* derive = app.add_subcommand("derive", "Consolidate fits into (A, B1, B2) triples");
    derive->add_option("--fits", derive_fits, "fits.csv from the fit step")->required();
    derive->add_option("--out", derive_out, "Output directory")->required();
    derive->add_option("--cap-k", derive_cap_k, "Cap factor k (default 3)");

    // compare
    std::string cmp_triple, cmp_standard, cmp_out;
    double cmp_tol = 1.0;
    auto* compare = app.add_subcommand("compare", "Compare a triple against standardized values");
    compare->add_option("--triple", cmp_triple, "Triple JSON file")->required();
    compare->add_option("--standard", cmp_standard, "Standard name (small_uav | human)")
        ->required();
    compare->add_option("--tol", cmp_tol, "Tolerance in dB (default 1.0)");
    compare->add_option("--out", cmp_out, "Optional CSV report path");

    // sample
    std::string smp_target, smp_triple, smp_angles, smp_out, smp_cap_mode = "mean",
                                                            smp_b2_form = "cov";
    std::int64_t smp_n = 0;
    std::uint64_t smp_seed = 0;
    bool smp_bypass = false;
    auto* sample = app.add_subcommand("sample", "Draw stochastic RCS realizations");
    auto* opt_target = sample->add_option("--target", smp_target, "Standardized target class");
    auto* opt_triple = sample->add_option("--triple", smp_triple, "Triple JSON file");
    opt_target->excludes(opt_triple);
    sample->add_option("--n", smp_n, "Number of draws")->required();
    sample->add_option("--seed", smp_seed, "RNG seed (required for reproducibility)")
        ->required();
    sample->add_option("--angles", smp_angles,
                       "\"theta\" (monostatic) or \"incident:scattered\" (bistatic)");
    sample->add_option("--out", smp_out, "Output CSV (default: stdout)");
    sample->add_flag("--bypass-b2", smp_bypass, "Deterministic draws without B2 fluctuation");
    sample->add_option("--cap-mode", smp_cap_mode, "Cap placement: mean | unit (default mean)")
        ->check(CLI::IsMember({"mean", "unit"}));
    sample->add_option("--b2-form", smp_b2_form,
                       "B2 parameter reading: cov | sigma-db (default cov)")
        ->check(CLI::IsMember({"cov", "sigma-db"}));

    // synth
    std::string synth_scenario, synth_out;
    std::uint64_t synth_seed = 0;
    auto* synth = app.add_subcommand("synth", "Forward-simulate a sounding campaign");
    synth->add_option("--scenario", synth_scenario, "Scenario JSON (default: built-in)");
    synth->add_option("--out", synth_out, "Output directory")->required();
    synth->add_option("--seed", synth_seed, "RNG seed")->required();

    // report
    std::string rep_dataset, rep_config, rep_out, rep_standard = "auto";
    double rep_tol = 1.0;
    auto* report = app.add_subcommand("report", "End-to-end fit + derive + compare");
    report->add_option("--dataset", rep_dataset, "Sweep dataset (JSON Lines)")->required();
    report->add_option("--config", rep_config, "Run configuration (JSON)")->required();
    report->add_option("--out", rep_out, "Output directory")->required();
    report->add_option("--standard", rep_standard,
                       "auto | none | <name>: standards to compare against");
    report->add_option("--tol", rep_tol, "Comparison tolerance in dB (default 1.0)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*fit)
            return cmd_fit(fit_dataset, fit_config, fit_out, fit_curves);
        if (*derive)
            return cmd_derive(derive_fits, derive_out, derive_cap_k);
        if (*compare)
            return cmd_compare(cmp_triple, cmp_standard, cmp_tol,
                               cmp_out.empty()
                                   ? std::nullopt
                                   : std::optional<std::filesystem::path>(cmp_out));
        if (*sample) {
            SampleOptions opts;
            opts.bypass_b2 = smp_bypass;
            opts.cap_mode = (smp_cap_mode == "unit") ? CapMode::AboveUnitMean
                                                     : CapMode::MeanRelative;
            opts.b2_form = (smp_b2_form == "sigma-db") ? B2Form::SigmaDb
                                                       : B2Form::CoeffVariation;
            return cmd_sample(
                smp_target.empty() ? std::nullopt : std::optional<std::string>(smp_target),
                smp_triple.empty() ? std::nullopt
                                   : std::optional<std::filesystem::path>(smp_triple),
                smp_n, smp_seed, smp_angles,
                smp_out.empty() ? std::nullopt : std::optional<std::filesystem::path>(smp_out),
                opts);
        }
        if (*synth)
            return cmd_synth(synth_scenario.empty()
                                 ? std::nullopt
                                 : std::optional<std::filesystem::path>(synth_scenario),
                             synth_out, synth_seed);
        if (*report)
            return cmd_report(rep_dataset, rep_config, rep_out, rep_standard, rep_tol);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace rcskit::cli

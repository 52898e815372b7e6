#include "rcskit/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcskit/errors.hpp"

namespace rcskit {

using nlohmann::json;

std::string format_double(double v) {
    // Shortest decimal form that parses back to the same bits.
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v)
            break;
    }
    return buf;
}

std::vector<std::string> SweepDataset::validate() const {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (const auto& rv : records[i].validate())
            v.push_back("record " + std::to_string(i) + ": " + rv);
    }
    for (const auto& gv : geometry.validate())
        v.push_back("geometry: " + gv);

    // Every target frequency needs at least one reference record.
    std::set<double> ref_freqs, target_freqs;
    for (const auto& r : records) {
        if (r.kind == SweepKind::Reference)
            ref_freqs.insert(r.freq.ghz);
        else if (r.kind == SweepKind::Target)
            target_freqs.insert(r.freq.ghz);
    }
    for (double f : target_freqs)
        if (!ref_freqs.count(f))
            v.push_back("no reference sweep at " + format_double(f) + " GHz");
    return v;
}

void reindex(SweepDataset& dataset) {
    dataset.frequencies.clear();
    dataset.targets.clear();
    for (const auto& r : dataset.records) {
        dataset.frequencies.insert(r.freq);
        if (r.kind == SweepKind::Target)
            dataset.targets.insert(r.target_id);
    }
}

namespace {

SweepKind parse_kind(const std::string& s, int line_no) {
    if (s == "reference")
        return SweepKind::Reference;
    if (s == "target")
        return SweepKind::Target;
    if (s == "calibration")
        return SweepKind::Calibration;
    throw validation_error("line " + std::to_string(line_no) + ": unknown kind '" + s + "'");
}

CirRecord parse_record_line(const std::string& line, int line_no) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw validation_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.is_object())
        throw validation_error("line " + std::to_string(line_no) + ": record must be an object");

    static const std::set<std::string> known = {"freq_ghz", "kind",    "target",
                                                "snapshot", "taps_re", "taps_im"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key))
            throw validation_error("line " + std::to_string(line_no) + ": unknown field '" +
                                   key + "'");
    for (const char* req : {"freq_ghz", "kind", "snapshot", "taps_re", "taps_im"})
        if (!j.contains(req))
            throw validation_error("line " + std::to_string(line_no) + ": missing field '" +
                                   std::string(req) + "'");

    CirRecord rec;
    try {
        rec.freq = Frequency{j.at("freq_ghz").get<double>()};
        rec.kind = parse_kind(j.at("kind").get<std::string>(), line_no);
        rec.snapshot_index = j.at("snapshot").get<std::int64_t>();
        if (j.contains("target"))
            rec.target_id = j.at("target").get<std::string>();
        const auto re = j.at("taps_re").get<std::vector<double>>();
        const auto im = j.at("taps_im").get<std::vector<double>>();
        if (re.size() != im.size())
            throw validation_error("line " + std::to_string(line_no) +
                                   ": taps_re length " + std::to_string(re.size()) +
                                   " != taps_im length " + std::to_string(im.size()));
        rec.taps.reserve(re.size());
        for (std::size_t i = 0; i < re.size(); ++i)
            rec.taps.emplace_back(re[i], im[i]);
    } catch (const json::exception& e) {
        throw validation_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (rec.kind != SweepKind::Target && !rec.target_id.empty())
        throw validation_error("line " + std::to_string(line_no) +
                               ": target label on a non-target record");

    auto violations = rec.validate();
    if (!violations.empty())
        throw validation_error("line " + std::to_string(line_no) + ": " + violations.front());
    return rec;
}

} // namespace

SweepDataset parse_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open dataset " + path.string());

    SweepDataset dataset;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        dataset.records.push_back(parse_record_line(line, line_no));
    }
    reindex(dataset);

    // Report every violation at once.
    const auto violations = dataset.validate();
    if (!violations.empty()) {
        std::string msg = "invalid dataset " + path.string() + ":";
        for (const auto& v : violations)
            msg += "\n  " + v;
        throw validation_error(msg);
    }
    return dataset;
}

void write_dataset(const SweepDataset& dataset, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write dataset " + path.string());
    for (const auto& rec : dataset.records) {
        json j;
        j["freq_ghz"] = rec.freq.ghz;
        j["kind"] = to_string(rec.kind);
        if (rec.kind == SweepKind::Target)
            j["target"] = rec.target_id;
        j["snapshot"] = rec.snapshot_index;
        std::vector<double> re(rec.taps.size()), im(rec.taps.size());
        for (std::size_t i = 0; i < rec.taps.size(); ++i) {
            re[i] = rec.taps[i].real();
            im[i] = rec.taps[i].imag();
        }
        j["taps_re"] = re;
        j["taps_im"] = im;
        out << j.dump() << '\n';
    }
    if (!out)
        throw io_error("failed while writing dataset " + path.string());
}

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open config " + path.string());

    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error("config " + path.string() + ": " + e.what());
    }
    if (!j.is_object())
        throw validation_error("config " + path.string() + ": must be a JSON object");

    static const std::set<std::string> known = {"d_tx_tar_m",       "d_rx_tar_m", "baseline_m",
                                                "frequencies_ghz",  "cap_k",
                                                "calibration_sidecar"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key))
            throw validation_error("config " + path.string() + ": unknown field '" + key + "'");

    RunConfig cfg;
    try {
        if (j.contains("d_tx_tar_m"))
            cfg.geometry.d_tx_tar_m = j.at("d_tx_tar_m").get<double>();
        if (j.contains("d_rx_tar_m"))
            cfg.geometry.d_rx_tar_m = j.at("d_rx_tar_m").get<double>();
        if (j.contains("baseline_m"))
            cfg.geometry.baseline_m = j.at("baseline_m").get<double>();
        if (j.contains("cap_k"))
            cfg.cap_k = j.at("cap_k").get<double>();
        if (j.contains("frequencies_ghz"))
            for (double f : j.at("frequencies_ghz").get<std::vector<double>>())
                cfg.frequencies.push_back(Frequency{f});
        if (j.contains("calibration_sidecar")) {
            std::filesystem::path p = j.at("calibration_sidecar").get<std::string>();
            if (p.is_relative())
                p = path.parent_path() / p;
            cfg.calibration_sidecar = p;
        }
    } catch (const json::exception& e) {
        throw validation_error("config " + path.string() + ": " + e.what());
    }

    std::vector<std::string> violations = cfg.geometry.validate();
    if (!(cfg.cap_k > 0.0))
        violations.push_back("cap_k must be positive");
    for (const auto& f : cfg.frequencies)
        for (const auto& fv : f.validate())
            violations.push_back(fv);
    if (!violations.empty()) {
        std::string msg = "config " + path.string() + ":";
        for (const auto& v : violations)
            msg += "\n  " + v;
        throw validation_error(msg);
    }
    return cfg;
}

std::map<double, double> parse_calibration_sidecar(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open calibration sidecar " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error("sidecar " + path.string() + ": " + e.what());
    }
    if (!j.is_object())
        throw validation_error("sidecar " + path.string() + ": must be a JSON object");

    std::map<double, double> table;
    for (const auto& [key, value] : j.items()) {
        char* end = nullptr;
        const double ghz = std::strtod(key.c_str(), &end);
        if (end == key.c_str() || *end != '\0' || !(ghz > 0.0))
            throw validation_error("sidecar " + path.string() + ": bad frequency key '" + key +
                                   "'");
        if (!value.is_number())
            throw validation_error("sidecar " + path.string() + ": value for '" + key +
                                   "' must be a number");
        const double p_r = value.get<double>();
        if (!(p_r > 0.0))
            throw validation_error("sidecar " + path.string() + ": power for '" + key +
                                   "' must be positive");
        table[ghz] = p_r;
    }
    return table;
}

void write_calibration_sidecar(const std::map<double, double>& table,
                               const std::filesystem::path& path) {
    json j = json::object();
    for (const auto& [ghz, p_r] : table)
        j[format_double(ghz)] = p_r;
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write sidecar " + path.string());
    out << j.dump(2) << '\n';
}

} // namespace rcskit

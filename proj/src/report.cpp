#include "rcskit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcskit/errors.hpp"
#include "rcskit/io.hpp"
#include "rcskit/statfit.hpp"
#include "rcskit/units.hpp"

namespace rcskit {

using nlohmann::json;

namespace {

void check_label(const std::string& target) {
    if (target.find_first_of(",\n\r") != std::string::npos)
        throw validation_error("target label '" + target +
                               "' cannot contain commas or newlines in CSV output");
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.push_back("");
    return fields;
}

double parse_num(const std::string& s, const std::string& where) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw validation_error(where + ": bad number '" + s + "'");
    return v;
}

} // namespace

void write_fit_table(std::span<const FitRow> rows, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write fit table " + path.string());
    out << "target,freq_ghz,mu,sigma,ks_x100,mse_x1000,n,discarded\n";
    for (const auto& r : rows) {
        check_label(r.target);
        out << r.target << ',' << format_double(r.freq_ghz) << ',' << format_double(r.mu) << ','
            << format_double(r.sigma) << ',' << format_double(r.ks * 100.0) << ','
            << format_double(r.mse * 1000.0) << ',' << r.n << ',' << r.discarded << '\n';
    }
}

std::vector<FitRow> read_fit_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open fit table " + path.string());

    std::string line;
    if (!std::getline(in, line))
        throw validation_error("fit table " + path.string() + " is empty");
    if (line != "target,freq_ghz,mu,sigma,ks_x100,mse_x1000,n,discarded")
        throw validation_error("fit table " + path.string() + ": unexpected header '" + line +
                               "'");

    std::vector<FitRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const auto f = split_csv_line(line);
        const std::string where = path.string() + " line " + std::to_string(line_no);
        if (f.size() != 8)
            throw validation_error(where + ": expected 8 fields, got " +
                                   std::to_string(f.size()));
        FitRow r;
        r.target = f[0];
        r.freq_ghz = parse_num(f[1], where);
        r.mu = parse_num(f[2], where);
        r.sigma = parse_num(f[3], where);
        r.ks = parse_num(f[4], where) / 100.0;
        r.mse = parse_num(f[5], where) / 1000.0;
        r.n = static_cast<std::int64_t>(parse_num(f[6], where));
        r.discarded = static_cast<std::int64_t>(parse_num(f[7], where));
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_per_frequency_table(std::span<const FitRow> rows,
                               const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write per-frequency table " + path.string());
    out << "target,freq_ghz,mu,sigma,ks,mse,a_dbsm,b2_db\n";
    for (const auto& r : rows) {
        check_label(r.target);
        out << r.target << ',' << format_double(r.freq_ghz) << ',' << format_double(r.mu) << ','
            << format_double(r.sigma) << ',' << format_double(r.ks) << ','
            << format_double(r.mse) << ',' << format_double(a_dbsm(r.mu, r.sigma)) << ','
            << format_double(b2_db(r.sigma)) << '\n';
    }
}

void write_consolidated_table(const std::map<std::string, RcsTriple>& triples,
                              const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write consolidated table " + path.string());
    out << "target,a_dbsm,b1_db,b2_db,cap_k\n";
    for (const auto& [target, triple] : triples) {
        check_label(target);
        if (!b1_is_constant(triple.b1))
            throw validation_error("consolidated table only holds constant-B1 triples");
        out << target << ',' << format_double(triple.a_dbsm) << ','
            << format_double(std::get<B1Constant>(triple.b1).db) << ','
            << format_double(triple.b2_db) << ',' << format_double(triple.cap_k) << '\n';
    }
}

namespace {

json b1_to_json(const B1Spec& spec) {
    json j;
    if (const auto* c = std::get_if<B1Constant>(&spec)) {
        j["type"] = "constant";
        j["db"] = c->db;
    } else if (const auto* a = std::get_if<B1Analytic>(&spec)) {
        j["type"] = "analytic";
        j["exponent"] = a->exponent;
        j["boresight_deg"] = a->boresight_deg;
        j["floor_db"] = a->floor_db;
    } else {
        const auto& t = std::get<B1Table>(spec);
        j["type"] = "table";
        j["angles_deg"] = t.angles_deg;
        j["gains_db"] = t.gains_db;
        j["wrap360"] = t.wrap360;
    }
    return j;
}

B1Spec b1_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("type"))
        throw validation_error(where + ": b1 must be an object with a 'type'");
    const std::string type = j.at("type").get<std::string>();
    try {
        if (type == "constant")
            return B1Constant{j.at("db").get<double>()};
        if (type == "analytic") {
            B1Analytic a;
            a.exponent = j.at("exponent").get<double>();
            if (j.contains("boresight_deg"))
                a.boresight_deg = j.at("boresight_deg").get<double>();
            if (j.contains("floor_db"))
                a.floor_db = j.at("floor_db").get<double>();
            return a;
        }
        if (type == "table") {
            B1Table t;
            t.angles_deg = j.at("angles_deg").get<std::vector<double>>();
            t.gains_db = j.at("gains_db").get<std::vector<double>>();
            if (j.contains("wrap360"))
                t.wrap360 = j.at("wrap360").get<bool>();
            return t;
        }
    } catch (const json::exception& e) {
        throw validation_error(where + ": " + e.what());
    }
    throw validation_error(where + ": unknown b1 type '" + type + "'");
}

} // namespace

void write_triple_json(const RcsTriple& triple, const std::filesystem::path& path) {
    json j;
    j["a_dbsm"] = triple.a_dbsm;
    j["b1"] = b1_to_json(triple.b1);
    j["b2_db"] = triple.b2_db;
    j["cap_k"] = triple.cap_k;
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write triple " + path.string());
    out << j.dump(2) << '\n';
}

RcsTriple read_triple_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open triple " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error("triple " + path.string() + ": " + e.what());
    }

    RcsTriple triple;
    try {
        triple.a_dbsm = j.at("a_dbsm").get<double>();
        triple.b2_db = j.at("b2_db").get<double>();
        if (j.contains("cap_k"))
            triple.cap_k = j.at("cap_k").get<double>();
        if (j.contains("b1"))
            triple.b1 = b1_from_json(j.at("b1"), "triple " + path.string());
    } catch (const json::exception& e) {
        throw validation_error("triple " + path.string() + ": " + e.what());
    }
    const auto violations = triple.validate();
    if (!violations.empty())
        throw validation_error("triple " + path.string() + ": " + violations.front());
    return triple;
}

void write_sample_dump(std::span<const RcsSample> samples, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write sample dump " + path.string());
    out << "index,b2_linear,rcs_m2,rcs_dbsm\n";
    for (std::size_t i = 0; i < samples.size(); ++i)
        out << i << ',' << format_double(samples[i].b2_linear) << ','
            << format_double(samples[i].rcs_m2) << ','
            << format_double(linear_to_db(samples[i].rcs_m2)) << '\n';
}

void write_curves(std::span<const double> samples, double mu, double sigma,
                  const std::filesystem::path& path) {
    if (samples.size() < 2)
        throw validation_error("write_curves: need at least two samples");
    const EmpiricalCdf emp(samples);
    const auto& sorted = emp.sorted();
    const double lo = sorted.front();
    const double hi = sorted.back();
    if (!(hi > lo))
        throw validation_error("write_curves: degenerate sample range");

    // Histogram density for the empirical PDF.
    const std::size_t n_bins =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::sqrt(double(samples.size()))), 8, 64);
    const double bin_w = (hi - lo) / static_cast<double>(n_bins);
    std::vector<double> hist(n_bins, 0.0);
    for (double x : sorted) {
        std::size_t b = static_cast<std::size_t>((x - lo) / bin_w);
        if (b >= n_bins)
            b = n_bins - 1;
        hist[b] += 1.0;
    }
    for (double& h : hist)
        h /= static_cast<double>(samples.size()) * bin_w;

    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write curves " + path.string());
    out << "x,pdf_fit,cdf_fit,pdf_emp,cdf_emp\n";
    constexpr int kGrid = 200;
    for (int i = 0; i < kGrid; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (kGrid - 1);
        std::size_t b = static_cast<std::size_t>((x - lo) / bin_w);
        if (b >= n_bins)
            b = n_bins - 1;
        out << format_double(x) << ',' << format_double(lognormal_pdf(x, mu, sigma)) << ','
            << format_double(lognormal_cdf(x, mu, sigma)) << ',' << format_double(hist[b]) << ','
            << format_double(emp(x)) << '\n';
    }
}

std::string render_fit_table_text(std::span<const FitRow> rows) {
    std::string s;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-16s %9s %8s %8s %10s %10s %8s %10s\n", "target",
                  "freq_GHz", "mu", "sigma", "KS(x1e-2)", "MSE(x1e-3)", "n", "discarded");
    s += buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%-16s %9g %8.4f %8.4f %10.3f %10.3f %8lld %10lld\n",
                      r.target.c_str(), r.freq_ghz, r.mu, r.sigma, r.ks * 100.0, r.mse * 1000.0,
                      static_cast<long long>(r.n), static_cast<long long>(r.discarded));
        s += buf;
    }
    return s;
}

std::string render_consolidated_text(const std::map<std::string, RcsTriple>& triples) {
    std::string s;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "%-16s %10s %8s %8s %6s\n", "target", "A_dBsm", "B1_dB",
                  "B2_dB", "k");
    s += buf;
    for (const auto& [target, t] : triples) {
        std::snprintf(buf, sizeof(buf), "%-16s %10.3f %8.3f %8.3f %6g\n", target.c_str(),
                      t.a_dbsm, std::get<B1Constant>(t.b1).db, t.b2_db, t.cap_k);
        s += buf;
    }
    return s;
}

} // namespace rcskit

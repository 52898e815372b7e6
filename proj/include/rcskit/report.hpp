#ifndef RCSKIT_REPORT_HPP
#define RCSKIT_REPORT_HPP

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rcskit/gpp.hpp"
#include "rcskit/sampler.hpp"
#include "rcskit/types.hpp"

namespace rcskit {

// One fitted (target, frequency) row of the per-sweep fit table.
struct FitRow {
    std::string target;
    double freq_ghz = 0.0;
    double mu = 0.0;
    double sigma = 0.0;
    double ks = 0.0;
    double mse = 0.0;
    std::int64_t n = 0;
    std::int64_t discarded = 0;
};

// CSV columns: target,freq_ghz,mu,sigma,ks_x100,mse_x1000,n,discarded.
// KS and MSE are stored scaled the way the report tables print them.
void write_fit_table(std::span<const FitRow> rows, const std::filesystem::path& path);
std::vector<FitRow> read_fit_table(const std::filesystem::path& path);

// CSV columns: target,freq_ghz,mu,sigma,ks,mse,a_dbsm,b2_db (unscaled).
void write_per_frequency_table(std::span<const FitRow> rows, const std::filesystem::path& path);

// CSV columns: target,a_dbsm,b1_db,b2_db,cap_k. Constant-B1 triples only.
void write_consolidated_table(const std::map<std::string, RcsTriple>& triples,
                              const std::filesystem::path& path);

void write_triple_json(const RcsTriple& triple, const std::filesystem::path& path);
RcsTriple read_triple_json(const std::filesystem::path& path);

// CSV columns: index,b2_linear,rcs_m2,rcs_dbsm.
void write_sample_dump(std::span<const RcsSample> samples, const std::filesystem::path& path);

// Empirical vs fitted PDF/CDF on a 200-point grid spanning the sample range.
// CSV columns: x,pdf_fit,cdf_fit,pdf_emp,cdf_emp.
void write_curves(std::span<const double> samples, double mu, double sigma,
                  const std::filesystem::path& path);

std::string render_fit_table_text(std::span<const FitRow> rows);
std::string render_consolidated_text(const std::map<std::string, RcsTriple>& triples);

} // namespace rcskit

#endif

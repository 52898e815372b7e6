#include "rcskit/gpp.hpp"

#include <cmath>

#include "rcskit/errors.hpp"
#include "rcskit/io.hpp"
#include "rcskit/kernels.hpp"
#include "rcskit/units.hpp"

namespace rcskit {

double a_dbsm(double mu, double sigma) {
    if (!std::isfinite(mu) || !(sigma >= 0.0) || !std::isfinite(sigma))
        throw validation_error("a_dbsm: mu must be finite and sigma non-negative");
    return kDbPerNat * (mu + 0.5 * sigma * sigma);
}

double b2_db(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw validation_error("b2_db: undefined for sigma <= 0 (degenerate fit)");
    // expm1 keeps small sigma accurate.
    return 10.0 * std::log10(std::expm1(sigma * sigma));
}

RcsTriple consolidate(const std::map<Frequency, LognormalFit>& per_freq, const B1Spec& b1,
                      double cap_k) {
    if (per_freq.empty())
        throw validation_error("consolidate: empty fit map");
    if (!(cap_k > 0.0))
        throw validation_error("consolidate: cap factor must be positive");

    std::vector<double> a_values, b2_values;
    a_values.reserve(per_freq.size());
    b2_values.reserve(per_freq.size());
    for (const auto& [freq, fit] : per_freq) {
        if (fit.degenerate || fit.sigma <= 0.0)
            throw validation_error("consolidate: degenerate fit (sigma = 0) at " +
                                   format_double(freq.ghz) + " GHz");
        a_values.push_back(a_dbsm(fit.mu, fit.sigma));
        b2_values.push_back(b2_db(fit.sigma));
    }

    RcsTriple triple;
    triple.a_dbsm = kernels::compensated_sum(a_values) / static_cast<double>(a_values.size());
    triple.b2_db = kernels::compensated_sum(b2_values) / static_cast<double>(b2_values.size());
    triple.b1 = b1;
    triple.cap_k = cap_k;
    return triple;
}

DeviationReport compare_to_standard(const RcsTriple& measured, const RcsTriple& standard,
                                    double tol_db) {
    if (!b1_is_constant(measured.b1) || !b1_is_constant(standard.b1))
        throw validation_error("compare_to_standard: only constant-B1 triples are comparable");
    DeviationReport rep;
    rep.delta_a_db = std::abs(measured.a_dbsm - standard.a_dbsm);
    rep.delta_b2_db = std::abs(measured.b2_db - standard.b2_db);
    rep.tol_db = tol_db;
    rep.within = rep.delta_a_db <= tol_db && rep.delta_b2_db <= tol_db;
    return rep;
}

const std::map<std::string, RcsTriple>& builtin_standards() {
    static const std::map<std::string, RcsTriple> standards = {
        {"small_uav", RcsTriple{-12.81, B1Constant{0.0}, 3.74, 3.0}},
        {"human", RcsTriple{-1.37, B1Constant{0.0}, 3.94, 3.0}},
    };
    return standards;
}

} // namespace rcskit

#ifndef RCSKIT_GPP_HPP
#define RCSKIT_GPP_HPP

#include <map>
#include <string>

#include "rcskit/types.hpp"

namespace rcskit {

// Mean RCS in dBsm: 10*log10(E[X]) = 10*log10(e) * (mu + sigma^2/2).
double a_dbsm(double mu, double sigma);

// Fluctuation parameter in dB, the squared coefficient of variation:
// B2 = 10*log10(e^(sigma^2) - 1). Undefined (-inf) at sigma == 0, refused.
double b2_db(double sigma);

// Per-frequency A and B2 averaged arithmetically in the dB domain; that
// convention reproduces the consolidated reference results to well under
// 0.02 dB, which linear-domain averaging does not.
RcsTriple consolidate(const std::map<Frequency, LognormalFit>& per_freq, const B1Spec& b1,
                      double cap_k);

struct DeviationReport {
    double delta_a_db = 0.0;
    double delta_b2_db = 0.0;
    double tol_db = 0.0;
    bool within = false;
};

// Absolute dB deviations between two constant-B1 triples, checked against tol.
DeviationReport compare_to_standard(const RcsTriple& measured, const RcsTriple& standard,
                                    double tol_db);

// The two RAN#120bis standardized target classes ("small_uav", "human"),
// cap_k = 3. No other class has standardized values; lookups beyond these two
// are intentionally absent.
const std::map<std::string, RcsTriple>& builtin_standards();

} // namespace rcskit

#endif

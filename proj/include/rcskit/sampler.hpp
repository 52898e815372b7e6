#ifndef RCSKIT_SAMPLER_HPP
#define RCSKIT_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "rcskit/rng.hpp"
#include "rcskit/types.hpp"

namespace rcskit {

enum class SampleMode { Monostatic, Bistatic };

struct SampleGeometry {
    double incident_az_deg = 0.0;
    double scattered_az_deg = 0.0;
    SampleMode mode = SampleMode::Monostatic;

    static SampleGeometry monostatic(double az_deg);
    static SampleGeometry bistatic(double incident_deg, double scattered_deg);

    // Angle B1 forms are evaluated at; for coincident angles this equals the
    // monostatic angle, which is what makes bistatic agree with monostatic.
    double bisector_deg() const;

    std::vector<std::string> validate() const;
};

// How the scalar B2 parameter in dB is read:
//  CoeffVariation — squared coefficient of variation, sigma^2 = ln(1 + 10^(B2/10))
//                   (the derivation-chain form; default);
//  SigmaDb        — directly the dB-domain standard deviation,
//                   sigma = B2 / (10 log10 e).
enum class B2Form { CoeffVariation, SigmaDb };

// Where the k-sigma cap sits in the dB domain:
//  MeanRelative  — at mean_dB + k*sigma_dB, with mean_dB the dB value of the
//                  log-domain mean (default);
//  AboveUnitMean — at 0 dB + k*sigma_dB, reading the bound as absolute above
//                  the unit-mean point.
enum class CapMode { MeanRelative, AboveUnitMean };

struct SampleOptions {
    B2Form b2_form = B2Form::CoeffVariation;
    CapMode cap_mode = CapMode::MeanRelative;
    bool bypass_b2 = false; // deterministic draws, B2 = 1; consumes no randomness
};

struct B2Distribution {
    double mu = 0.0;    // of ln(B2); equals -sigma^2/2 (unit mean)
    double sigma = 0.0;
};

// Parameters of the unit-mean log-normal B2 implied by the dB parameter.
B2Distribution b2_distribution(double b2_param_db, B2Form form = B2Form::CoeffVariation);

// Deterministic B1 gain in dB at the geometry's bisector angle.
double eval_b1(const B1Spec& spec, const SampleGeometry& geom);

struct RcsSample {
    double b2_linear = 1.0;
    double rcs_m2 = 0.0;
};

// Stochastic RCS realizations: draw = lin(A) * lin(B1) * B2_i with ln(B2_i)
// normal, clipped in the dB domain at the configured cap. Deterministic for a
// fixed (triple, geom, seed, n); one normal variate per draw.
std::vector<RcsSample> sample_rcs_detailed(const RcsTriple& triple, const SampleGeometry& geom,
                                           Rng& rng, std::int64_t n,
                                           const SampleOptions& opts = {});
std::vector<double> sample_rcs(const RcsTriple& triple, const SampleGeometry& geom, Rng& rng,
                               std::int64_t n, const SampleOptions& opts = {});

// Bistatic(theta, theta) must reproduce Monostatic(theta) draw-for-draw under
// the same seed.
bool check_consistency(const RcsTriple& triple, double theta_deg, std::uint64_t seed,
                       std::int64_t n = 64, const SampleOptions& opts = {});

} // namespace rcskit

#endif

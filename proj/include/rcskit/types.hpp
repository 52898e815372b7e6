#ifndef RCSKIT_TYPES_HPP
#define RCSKIT_TYPES_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace rcskit {

// Carrier frequency in GHz. Frequencies are compared by exact value: datasets
// on the 1 GHz calibration grid must use consistent labels, so no tolerance
// matching is done anywhere.
struct Frequency {
    double ghz = 0.0;

    double wavelength_m() const;
    auto operator<=>(const Frequency&) const = default;

    std::vector<std::string> validate() const;
};

enum class SweepKind { Reference, Target, Calibration };

const char* to_string(SweepKind kind);

// One complex channel-impulse-response snapshot.
struct CirRecord {
    Frequency freq;
    SweepKind kind = SweepKind::Reference;
    std::string target_id;               // required iff kind == Target
    std::vector<std::complex<double>> taps;
    std::int64_t snapshot_index = 0;

    std::vector<std::string> validate() const;
    bool operator==(const CirRecord&) const = default;
};

// Linear power, arbitrary consistent unit.
struct PowerValue {
    double value = 0.0;

    std::vector<std::string> validate() const;
};

// Per-target, per-frequency collection of linear RCS samples in m^2.
struct RcsSampleSet {
    std::string target_id;
    Frequency freq;
    std::vector<double> samples;       // each > 0
    std::int64_t discarded_count = 0;  // snapshots rejected by the differencing floor

    std::vector<std::string> validate() const;
};

// Fitted (mu, sigma) of ln(RCS) plus goodness-of-fit metrics.
// sigma uses the maximum-likelihood divisor n. A constant sample set yields
// sigma == 0 and degenerate == true; degenerate fits cannot produce a B2.
struct LognormalFit {
    double mu = 0.0;
    double sigma = 0.0;
    std::int64_t n = 0;
    double ks = 0.0;
    double mse = 0.0;
    bool degenerate = false;

    std::vector<std::string> validate() const;
};

// Angle-dependent deterministic RCS component, one of three forms.
struct B1Constant {
    double db = 0.0;
};

// Cosine-power pattern: gain_db(theta) = exponent * 10*log10(cos(theta - boresight)),
// clamped at floor_db; exponent 0 is identically 0 dB.
struct B1Analytic {
    double exponent = 0.0;
    double boresight_deg = 0.0;
    double floor_db = -100.0;
};

// Lookup table over a strictly increasing angle grid, linear interpolation in dB.
// With wrap360 the grid covers [0, 360) and interpolation wraps; otherwise the
// declared coverage is [front, back] and queries outside it are errors.
struct B1Table {
    std::vector<double> angles_deg;
    std::vector<double> gains_db;
    bool wrap360 = false;
};

using B1Spec = std::variant<B1Constant, B1Analytic, B1Table>;

std::vector<std::string> validate_b1(const B1Spec& spec);
bool b1_is_constant(const B1Spec& spec);

// 3GPP RCS model parameters: RCS = A x B1 x B2.
struct RcsTriple {
    double a_dbsm = 0.0;
    B1Spec b1 = B1Constant{0.0};
    double b2_db = 0.0;
    double cap_k = 3.0;

    std::vector<std::string> validate() const;
};

// Calibration constant K(lambda): target power = k_cal * RCS.
struct SystemFactor {
    Frequency freq;
    double k_cal = 0.0;

    std::vector<std::string> validate() const;
};

// Measurement geometry. The angular offset at the observation point is derived
// from the baseline and target distance (planar geometry), never stored.
struct Geometry {
    double d_tx_tar_m = 3.0;
    double d_rx_tar_m = 3.0;
    double baseline_m = 0.55;
    double max_quasi_monostatic_deg = 15.0;

    double theta_offset_deg() const; // 2*atan((baseline/2)/d), d = mean target distance
    bool quasi_monostatic() const;

    std::vector<std::string> validate() const;
    bool operator==(const Geometry&) const = default;
};

} // namespace rcskit

#endif

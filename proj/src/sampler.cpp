#include "rcskit/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rcskit/errors.hpp"
#include "rcskit/units.hpp"

namespace rcskit {

SampleGeometry SampleGeometry::monostatic(double az_deg) {
    return SampleGeometry{az_deg, az_deg, SampleMode::Monostatic};
}

SampleGeometry SampleGeometry::bistatic(double incident_deg, double scattered_deg) {
    return SampleGeometry{incident_deg, scattered_deg, SampleMode::Bistatic};
}

double SampleGeometry::bisector_deg() const {
    return 0.5 * (incident_az_deg + scattered_az_deg);
}

std::vector<std::string> SampleGeometry::validate() const {
    std::vector<std::string> v;
    if (!std::isfinite(incident_az_deg) || !std::isfinite(scattered_az_deg))
        v.push_back("sample geometry angles must be finite");
    if (mode == SampleMode::Monostatic && incident_az_deg != scattered_az_deg)
        v.push_back("monostatic geometry requires coincident incident and scattered angles");
    return v;
}

B2Distribution b2_distribution(double b2_param_db, B2Form form) {
    if (!std::isfinite(b2_param_db))
        throw validation_error("b2_distribution: B2 parameter must be finite");
    B2Distribution d;
    if (form == B2Form::CoeffVariation) {
        // Inverse of B2(dB) = 10*log10(e^(sigma^2) - 1).
        d.sigma = std::sqrt(std::log1p(std::pow(10.0, b2_param_db / 10.0)));
    } else {
        d.sigma = b2_param_db / kDbPerNat;
        if (!(d.sigma > 0.0))
            throw validation_error("b2_distribution: sigma-dB form requires a positive value");
    }
    d.mu = -0.5 * d.sigma * d.sigma; // unit mean
    return d;
}

namespace {

double eval_b1_table(const B1Table& table, double angle_deg) {
    const auto& grid = table.angles_deg;
    const auto& gains = table.gains_db;

    double a = angle_deg;
    if (table.wrap360) {
        a = std::fmod(a, 360.0);
        if (a < 0.0)
            a += 360.0;
        // Wrap segment between the last grid point and the first one +360.
        if (a < grid.front() || a >= grid.back()) {
            const double span = grid.front() + 360.0 - grid.back();
            double t = a - grid.back();
            if (t < 0.0)
                t += 360.0;
            return gains.back() + (gains.front() - gains.back()) * (t / span);
        }
    } else if (a < grid.front() || a > grid.back()) {
        throw validation_error("eval_b1: angle " + std::to_string(a) +
                               " deg outside table coverage [" + std::to_string(grid.front()) +
                               ", " + std::to_string(grid.back()) + "]");
    }

    const auto it = std::upper_bound(grid.begin(), grid.end(), a);
    if (it == grid.begin())
        return gains.front();
    if (it == grid.end())
        return gains.back();
    const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
    const std::size_t lo = hi - 1;
    const double t = (a - grid[lo]) / (grid[hi] - grid[lo]);
    return gains[lo] + (gains[hi] - gains[lo]) * t;
}

} // namespace

double eval_b1(const B1Spec& spec, const SampleGeometry& geom) {
    auto violations = validate_b1(spec);
    if (!violations.empty())
        throw validation_error("eval_b1: " + violations.front());
    auto gv = geom.validate();
    if (!gv.empty())
        throw validation_error("eval_b1: " + gv.front());

    const double angle = geom.bisector_deg();
    if (const auto* c = std::get_if<B1Constant>(&spec))
        return c->db;
    if (const auto* a = std::get_if<B1Analytic>(&spec)) {
        if (a->exponent == 0.0)
            return 0.0;
        const double delta = (angle - a->boresight_deg) * std::numbers::pi / 180.0;
        const double c = std::cos(delta);
        if (c <= 0.0)
            return a->floor_db;
        return std::max(a->floor_db, a->exponent * 10.0 * std::log10(c));
    }
    return eval_b1_table(std::get<B1Table>(spec), angle);
}

std::vector<RcsSample> sample_rcs_detailed(const RcsTriple& triple, const SampleGeometry& geom,
                                           Rng& rng, std::int64_t n,
                                           const SampleOptions& opts) {
    if (n < 1)
        throw validation_error("sample_rcs: draw count must be >= 1");
    auto violations = triple.validate();
    if (!violations.empty())
        throw validation_error("sample_rcs: invalid triple: " + violations.front());

    const double base = db_to_linear(triple.a_dbsm) * db_to_linear(eval_b1(triple.b1, geom));

    std::vector<RcsSample> out;
    out.reserve(static_cast<std::size_t>(n));

    if (opts.bypass_b2) {
        for (std::int64_t i = 0; i < n; ++i)
            out.push_back(RcsSample{1.0, base});
        return out;
    }

    const B2Distribution dist = b2_distribution(triple.b2_db, opts.b2_form);
    if (!(dist.sigma > 0.0))
        throw validation_error("sample_rcs: degenerate B2 distribution (sigma = 0)");

    // The cap bound in natural-log units; dB and nat clip at the same point
    // since dB = 10*log10(e) * nat.
    const double nat_cap = (opts.cap_mode == CapMode::MeanRelative)
                               ? dist.mu + triple.cap_k * dist.sigma
                               : triple.cap_k * dist.sigma;

    for (std::int64_t i = 0; i < n; ++i) {
        const double nat = dist.mu + dist.sigma * rng.normal();
        const double b2 = std::exp(std::min(nat, nat_cap));
        out.push_back(RcsSample{b2, base * b2});
    }
    return out;
}

std::vector<double> sample_rcs(const RcsTriple& triple, const SampleGeometry& geom, Rng& rng,
                               std::int64_t n, const SampleOptions& opts) {
    const auto detailed = sample_rcs_detailed(triple, geom, rng, n, opts);
    std::vector<double> out;
    out.reserve(detailed.size());
    for (const auto& s : detailed)
        out.push_back(s.rcs_m2);
    return out;
}

bool check_consistency(const RcsTriple& triple, double theta_deg, std::uint64_t seed,
                       std::int64_t n, const SampleOptions& opts) {
    Rng rng_mono(seed);
    Rng rng_bi(seed);
    const auto mono = sample_rcs(triple, SampleGeometry::monostatic(theta_deg), rng_mono, n, opts);
    const auto bi =
        sample_rcs(triple, SampleGeometry::bistatic(theta_deg, theta_deg), rng_bi, n, opts);
    return mono == bi;
}

} // namespace rcskit

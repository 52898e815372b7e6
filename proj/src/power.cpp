#include "rcskit/power.hpp"

#include <algorithm>
#include <cmath>

#include "rcskit/calibration.hpp"
#include "rcskit/errors.hpp"
#include "rcskit/io.hpp"

namespace rcskit {

PowerValue cir_power(const CirRecord& record) {
    if (record.taps.empty())
        throw validation_error("cir_power: record has empty taps");
    return PowerValue{kernels::taps_power(record.taps)};
}

PowerValue mean_reference_power(std::span<const CirRecord> refs) {
    if (refs.empty())
        throw validation_error("mean_reference_power: no reference records");
    const Frequency freq = refs.front().freq;
    for (const auto& r : refs) {
        if (r.kind != SweepKind::Reference)
            throw validation_error("mean_reference_power: record of kind '" +
                                   std::string(to_string(r.kind)) + "' in reference set");
        if (r.freq != freq)
            throw validation_error("mean_reference_power: mixed frequencies in reference set");
    }
    std::vector<double> powers(refs.size());
    for (std::size_t i = 0; i < refs.size(); ++i)
        powers[i] = kernels::taps_power(refs[i].taps);
    return PowerValue{kernels::compensated_sum(powers) / static_cast<double>(refs.size())};
}

double RejectionPolicy::floor(double p_ref) const {
    return std::max(abs_floor, rel_floor * p_ref);
}

std::optional<PowerValue> target_power(PowerValue p_tot, PowerValue p_ref,
                                       const RejectionPolicy& policy) {
    if (p_tot.value < 0.0 || p_ref.value < 0.0)
        throw validation_error("target_power: powers must be non-negative");
    const double diff = p_tot.value - p_ref.value;
    if (diff <= policy.floor(p_ref.value))
        return std::nullopt;
    return PowerValue{diff};
}

std::vector<RcsSampleSet> extract_rcs_samples(const SweepDataset& dataset,
                                              const std::map<double, SystemFactor>& factors,
                                              const RejectionPolicy& policy,
                                              kernels::Exec exec) {
    // Mean reference power per frequency.
    std::map<double, PowerValue> ref_power;
    for (Frequency f : dataset.frequencies) {
        std::vector<CirRecord> refs;
        for (const auto& r : dataset.records)
            if (r.kind == SweepKind::Reference && r.freq == f)
                refs.push_back(r);
        if (!refs.empty())
            ref_power[f.ghz] = mean_reference_power(refs);
    }

    // Group target records by (target, freq), snapshot order within a group.
    std::map<std::pair<std::string, double>, std::vector<const CirRecord*>> groups;
    for (const auto& r : dataset.records)
        if (r.kind == SweepKind::Target)
            groups[{r.target_id, r.freq.ghz}].push_back(&r);

    std::vector<RcsSampleSet> out;
    for (auto& [key, recs] : groups) {
        const auto& [target, ghz] = key;
        auto rp = ref_power.find(ghz);
        if (rp == ref_power.end())
            throw validation_error("no reference sweep at " + format_double(ghz) +
                                   " GHz for target '" + target + "'");
        auto kf = factors.find(ghz);
        if (kf == factors.end())
            throw validation_error("no system factor at " + format_double(ghz) +
                                   " GHz for target '" + target + "'");

        std::sort(recs.begin(), recs.end(), [](const CirRecord* a, const CirRecord* b) {
            return a->snapshot_index < b->snapshot_index;
        });

        std::vector<CirRecord> ordered;
        ordered.reserve(recs.size());
        for (const auto* r : recs)
            ordered.push_back(*r);
        const std::vector<double> totals = kernels::snapshot_powers(ordered, exec);

        RcsSampleSet set;
        set.target_id = target;
        set.freq = Frequency{ghz};
        set.samples.reserve(totals.size());
        for (double p_tot : totals) {
            auto diff = target_power(PowerValue{p_tot}, rp->second, policy);
            if (diff)
                set.samples.push_back(rcs_from_power(*diff, kf->second));
            else
                ++set.discarded_count;
        }
        out.push_back(std::move(set));
    }
    return out;
}

} // namespace rcskit

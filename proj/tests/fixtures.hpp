// Shared test fixtures: published per-frequency log-normal parameters for the
// four factory targets and the consolidated golden values they average to.
#ifndef RCSKIT_TESTS_FIXTURES_HPP
#define RCSKIT_TESTS_FIXTURES_HPP

#include <map>
#include <string>
#include <vector>

namespace fixtures {

struct FreqParams {
    double freq_ghz;
    double mu;
    double sigma;
};

struct TargetTable {
    std::string name;
    std::vector<FreqParams> rows;
    double golden_a_dbsm;
    double golden_b2_db;
};

inline const std::vector<TargetTable>& target_tables() {
    static const std::vector<TargetTable> tables = {
        {"small_uav",
         {{25.0, -3.9, 1.4}, {26.0, -3.8, 0.52}, {27.0, -3.83, 1.74}, {28.0, -3.79, 0.61}},
         -13.57,
         3.065},
        {"mid_uav",
         {{25.0, -3.5, 1.42}, {26.0, -3.49, 1.47}, {27.0, -3.47, 1.96}, {28.0, -3.49, 1.48}},
         -9.6,
         10.66},
        {"robotic_arm",
         {{25.0, -3.43, 1.79}, {26.0, -3.45, 1.83}, {27.0, -3.48, 1.82}, {28.0, -3.49, 1.67}},
         -8.165,
         13.54},
        {"agv",
         {{25.0, -3.44, 1.52}, {26.0, -3.44, 1.10}, {27.0, -3.42, 1.3}, {28.0, -3.4, 1.22}},
         -11.235,
         6.27},
    };
    return tables;
}

} // namespace fixtures

#endif

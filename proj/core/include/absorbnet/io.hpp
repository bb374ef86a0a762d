#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "absorbnet/domain.hpp"
#include "absorbnet/flow_network.hpp"
#include "absorbnet/metrics.hpp"
#include "absorbnet/scenario.hpp"
#include "absorbnet/stress.hpp"

namespace absorbnet {

/// Shortest text form that parses back to the identical double.
std::string format_double(double v);
double parse_double(const std::string& text, const char* field);

/// Run-wide configuration, loadable from a flat key=value file.
struct RunConfig {
    double rho = 0.5;
    int v_max = 3;
    bool clamp = true;
    DistanceWeighting distance_weighting = DistanceWeighting::flow_weighted;
    int age_old_boundary = 65;  // documented bucketing boundary for "old"
    ScenarioConfig scenario;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string state = "NY";  // state code scoping zip3-keyed files
};

RunConfig load_config(const std::filesystem::path& path);

/// ABSORBNET_SEED overrides the configured seed when set.
void apply_env_overrides(RunConfig& cfg);

struct RejectedRow {
    std::size_t line = 0;  // 1-based, header included
    std::string reason;
};

struct VisitLoadResult {
    std::vector<VisitRecord> records;
    std::vector<RejectedRow> rejected;
};

/// visits.csv: patient_id,month,zip3,state,age_group,race,icd10_codes
/// Malformed rows are skipped and reported; a bad header is a hard error.
VisitLoadResult load_visits(const std::filesystem::path& path);
void write_visits(const std::vector<VisitRecord>& records, const std::filesystem::path& path);

struct RegionTable {
    std::map<RegionId, RegionInfo> by_id;
    std::map<std::string, RegionId> by_zip3;
};

/// regions.csv: zip3,state,lat,lon
RegionTable load_regions(const std::filesystem::path& path);
void write_regions(const std::vector<RegionInfo>& regions, const std::filesystem::path& path);

/// physicians.csv: zip3,month,physician_count — joined to regions by zip3.
void load_physicians(const std::filesystem::path& path, RegionTable& table);
void write_physicians(const std::vector<RegionInfo>& regions, const std::filesystem::path& path);

/// stress.csv: zip3,month,incoming,capacity over a complete (region,month)
/// grid. zip3 keys are scoped by the supplied state code.
StressProfile load_stress(const std::filesystem::path& path, const std::string& state);
void write_stress(const StressProfile& profile, const std::filesystem::path& path);

/// network.csv: sparse src_zip3,dst_zip3,weight edge list (diagonal included
/// when positive) plus a '#totals' trailer with per-node incoming totals.
/// Node zip3s must be unique; loads are scoped by the supplied state code.
void write_network(const FlowNetwork& net, const std::filesystem::path& path);
FlowNetwork load_network(const std::filesystem::path& path, const std::string& state,
                         const std::string& period = {});

/// Dense per-region monthly load (visit counts) with capacity P_i(t)/rho,
/// spanning the contiguous month range of the records.
StressProfile stress_from_corpus(const std::vector<VisitRecord>& records,
                                 const RegionTable& regions, double rho);

}  // namespace absorbnet

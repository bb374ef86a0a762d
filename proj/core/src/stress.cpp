#include "absorbnet/stress.hpp"

#include <algorithm>

#include "absorbnet/errors.hpp"

namespace absorbnet {

StressProfile::StressProfile(std::vector<RegionId> regions, std::vector<MonthIndex> months,
                             std::vector<double> load, std::vector<double> capacity)
    : regions_(std::move(regions)),
      months_(std::move(months)),
      load_(std::move(load)),
      capacity_(std::move(capacity)) {
    if (regions_.empty()) throw StructuralError("stress profile: no regions");
    if (months_.empty()) throw StructuralError("stress profile: no months");
    if (!std::is_sorted(regions_.begin(), regions_.end()) ||
        std::adjacent_find(regions_.begin(), regions_.end()) != regions_.end()) {
        throw StructuralError("stress profile: regions must be sorted and unique");
    }
    if (!std::is_sorted(months_.begin(), months_.end()) ||
        std::adjacent_find(months_.begin(), months_.end()) != months_.end()) {
        throw StructuralError("stress profile: months must be sorted and unique");
    }
    const std::size_t cells = regions_.size() * months_.size();
    if (load_.size() != cells || capacity_.size() != cells) {
        throw StructuralError("stress profile: load/capacity must cover every (region, month)");
    }
    for (double v : load_) {
        if (!(v >= 0.0)) throw StructuralError("stress profile: negative or NaN load");
    }
    for (double v : capacity_) {
        if (!(v >= 0.0)) throw StructuralError("stress profile: negative or NaN capacity");
    }
}

std::size_t StressProfile::month_index(const MonthIndex& t) const {
    const auto it = std::lower_bound(months_.begin(), months_.end(), t);
    if (it == months_.end() || *it != t) {
        throw StructuralError("stress profile: month " + t.str() + " not covered");
    }
    return static_cast<std::size_t>(it - months_.begin());
}

double capacity_from_physicians(std::int64_t physicians, const CapacityModel& model) {
    if (!(model.rho > 0.0)) {
        throw ConfigError("capacity model: physician-to-patient ratio must be positive");
    }
    if (physicians < 0) {
        throw ConfigError("capacity model: negative physician count");
    }
    return static_cast<double>(physicians) / model.rho;
}

}  // namespace absorbnet

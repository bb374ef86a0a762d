#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace absorbnet {

/// Calendar month with total-order ordinal arithmetic.
/// ordinal = year*12 + (month-1); parse/format use "YYYY-MM".
class MonthIndex {
public:
    MonthIndex(int year, int month);

    static MonthIndex parse(const std::string& text);
    static MonthIndex from_ordinal(std::int64_t ordinal);

    int year() const { return year_; }
    int month() const { return month_; }
    std::int64_t ordinal() const { return static_cast<std::int64_t>(year_) * 12 + (month_ - 1); }

    std::string str() const;

    MonthIndex plus_months(std::int64_t n) const { return from_ordinal(ordinal() + n); }
    std::int64_t months_until(const MonthIndex& later) const { return later.ordinal() - ordinal(); }

    auto operator<=>(const MonthIndex& other) const { return ordinal() <=> other.ordinal(); }
    bool operator==(const MonthIndex& other) const = default;

private:
    int year_;
    int month_;
};

inline MonthIndex parse_month(const std::string& text) { return MonthIndex::parse(text); }

/// Three-digit zip prefix plus the two-letter USPS state code.
class RegionId {
public:
    RegionId(std::string zip3, std::string state);

    const std::string& zip3() const { return zip3_; }
    const std::string& state() const { return state_; }

    auto operator<=>(const RegionId& other) const = default;

private:
    std::string zip3_;
    std::string state_;
};

bool is_valid_state_code(const std::string& code);

enum class AgeGroup { child, young, middle, old, unknown };
enum class Race { asian, black, hispanic, white, other, unknown };
enum class ServiceClass { chronic, acute_respiratory, other };

const char* to_string(AgeGroup g);
const char* to_string(Race r);
const char* to_string(ServiceClass c);
AgeGroup age_group_from_string(const std::string& s);
Race race_from_string(const std::string& s);
ServiceClass service_class_from_string(const std::string& s);

/// Uppercases and validates an ICD-10 code (^[A-Z][0-9A-Z.]{1,6}$).
std::string normalize_icd10(const std::string& raw);

/// Range-table classification of a normalized ICD-10 code. Codes outside
/// every listed range are `other`; codes too short to carry a three-character
/// category raise ParseError.
ServiceClass classify_service(const std::string& code);

/// One patient-month-region encounter.
struct VisitRecord {
    std::string patient_id;
    MonthIndex month;
    RegionId region;
    AgeGroup age_group = AgeGroup::unknown;
    Race race = Race::unknown;
    std::vector<std::string> service_codes;  // normalized, possibly empty
};

/// Region coordinates and the per-month physician headcount.
struct RegionInfo {
    RegionId region;
    double lat = 0.0;
    double lon = 0.0;
    std::map<MonthIndex, std::int64_t> physicians;
};

void validate_region_info(const RegionInfo& info);

/// Conjunction of optional demographic/service predicates. Absent dimension
/// matches everything; the service dimension accepts a record when any of its
/// codes classifies to the requested class.
struct CohortFilter {
    std::optional<std::set<AgeGroup>> age_groups;
    std::optional<std::set<Race>> races;
    std::optional<ServiceClass> service_class;

    bool empty() const { return !age_groups && !races && !service_class; }
};

bool matches(const CohortFilter& filter, const VisitRecord& rec);

/// Intersection of two filters. The service dimensions must agree (or one
/// must be absent); conflicting classes have no single-class representation.
CohortFilter conjunction(const CohortFilter& a, const CohortFilter& b);

}  // namespace absorbnet

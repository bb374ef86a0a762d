#include "absorbnet/domain.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <iterator>

#include "absorbnet/errors.hpp"

namespace absorbnet {

namespace {

int parse_int_field(const std::string& text, std::size_t begin, std::size_t end,
                    const char* field) {
    int value = 0;
    const char* first = text.data() + begin;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(std::string("month: non-numeric ") + field + " in '" + text + "'");
    }
    return value;
}

}  // namespace

MonthIndex::MonthIndex(int year, int month) : year_(year), month_(month) {
    if (month < 1 || month > 12) {
        throw ParseError("month: month out of range 1-12: " + std::to_string(month));
    }
}

MonthIndex MonthIndex::parse(const std::string& text) {
    // YYYY-MM, both fields mandatory
    if (text.size() != 7 || text[4] != '-') {
        throw ParseError("month: expected YYYY-MM, got '" + text + "'");
    }
    const int year = parse_int_field(text, 0, 4, "year");
    const int month = parse_int_field(text, 5, 7, "month");
    if (month < 1 || month > 12) {
        throw ParseError("month: month out of range 1-12 in '" + text + "'");
    }
    return MonthIndex(year, month);
}

MonthIndex MonthIndex::from_ordinal(std::int64_t ordinal) {
    std::int64_t year = ordinal / 12;
    std::int64_t month = ordinal % 12;
    if (month < 0) {
        month += 12;
        year -= 1;
    }
    return MonthIndex(static_cast<int>(year), static_cast<int>(month) + 1);
}

std::string MonthIndex::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year_, month_);
    return buf;
}

namespace {

// USPS two-letter codes: 50 states, DC, and the inhabited territories.
constexpr std::array<const char*, 56> kStateCodes = {
    "AL", "AK", "AZ", "AR", "CA", "CO", "CT", "DE", "FL", "GA", "HI", "ID", "IL", "IN",
    "IA", "KS", "KY", "LA", "ME", "MD", "MA", "MI", "MN", "MS", "MO", "MT", "NE", "NV",
    "NH", "NJ", "NM", "NY", "NC", "ND", "OH", "OK", "OR", "PA", "RI", "SC", "SD", "TN",
    "TX", "UT", "VT", "VA", "WA", "WV", "WI", "WY", "DC", "AS", "GU", "MP", "PR", "VI"};

}  // namespace

bool is_valid_state_code(const std::string& code) {
    return std::any_of(kStateCodes.begin(), kStateCodes.end(),
                       [&](const char* s) { return code == s; });
}

RegionId::RegionId(std::string zip3, std::string state)
    : zip3_(std::move(zip3)), state_(std::move(state)) {
    if (zip3_.size() != 3 || !std::all_of(zip3_.begin(), zip3_.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        })) {
        throw ParseError("region: zip3 must be three digits, got '" + zip3_ + "'");
    }
    if (!is_valid_state_code(state_)) {
        throw ParseError("region: unknown state code '" + state_ + "'");
    }
}

const char* to_string(AgeGroup g) {
    switch (g) {
        case AgeGroup::child: return "child";
        case AgeGroup::young: return "young";
        case AgeGroup::middle: return "middle";
        case AgeGroup::old: return "old";
        case AgeGroup::unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(Race r) {
    switch (r) {
        case Race::asian: return "asian";
        case Race::black: return "black";
        case Race::hispanic: return "hispanic";
        case Race::white: return "white";
        case Race::other: return "other";
        case Race::unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(ServiceClass c) {
    switch (c) {
        case ServiceClass::chronic: return "chronic";
        case ServiceClass::acute_respiratory: return "acute_respiratory";
        case ServiceClass::other: return "other";
    }
    return "other";
}

AgeGroup age_group_from_string(const std::string& s) {
    if (s == "child") return AgeGroup::child;
    if (s == "young") return AgeGroup::young;
    if (s == "middle") return AgeGroup::middle;
    if (s == "old") return AgeGroup::old;
    if (s == "unknown" || s.empty()) return AgeGroup::unknown;
    throw ParseError("age_group: unknown value '" + s + "'");
}

Race race_from_string(const std::string& s) {
    if (s == "asian") return Race::asian;
    if (s == "black") return Race::black;
    if (s == "hispanic") return Race::hispanic;
    if (s == "white") return Race::white;
    if (s == "other") return Race::other;
    if (s == "unknown" || s.empty()) return Race::unknown;
    throw ParseError("race: unknown value '" + s + "'");
}

ServiceClass service_class_from_string(const std::string& s) {
    if (s == "chronic") return ServiceClass::chronic;
    if (s == "acute_respiratory") return ServiceClass::acute_respiratory;
    if (s == "other") return ServiceClass::other;
    throw ParseError("service_class: unknown value '" + s + "'");
}

std::string normalize_icd10(const std::string& raw) {
    std::string code;
    code.reserve(raw.size());
    for (unsigned char c : raw) {
        if (std::isspace(c)) continue;
        code.push_back(static_cast<char>(std::toupper(c)));
    }
    if (code.size() < 2 || code.size() > 7) {
        throw ParseError("icd10: bad length for code '" + raw + "'");
    }
    if (code[0] < 'A' || code[0] > 'Z') {
        throw ParseError("icd10: code must start with a letter: '" + raw + "'");
    }
    for (std::size_t i = 1; i < code.size(); ++i) {
        const char c = code[i];
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.';
        if (!ok) throw ParseError("icd10: invalid character in code '" + raw + "'");
    }
    return code;
}

void validate_region_info(const RegionInfo& info) {
    if (info.lat < -90.0 || info.lat > 90.0) {
        throw ParseError("region " + info.region.zip3() + ": latitude out of [-90,90]");
    }
    if (info.lon < -180.0 || info.lon > 180.0) {
        throw ParseError("region " + info.region.zip3() + ": longitude out of [-180,180]");
    }
    for (const auto& [month, count] : info.physicians) {
        if (count < 0) {
            throw ParseError("region " + info.region.zip3() + ": negative physician count at " +
                             month.str());
        }
    }
}

bool matches(const CohortFilter& filter, const VisitRecord& rec) {
    if (filter.age_groups && !filter.age_groups->count(rec.age_group)) return false;
    if (filter.races && !filter.races->count(rec.race)) return false;
    if (filter.service_class) {
        const auto wanted = *filter.service_class;
        const bool any = std::any_of(rec.service_codes.begin(), rec.service_codes.end(),
                                     [&](const std::string& code) {
                                         return classify_service(code) == wanted;
                                     });
        if (!any) return false;
    }
    return true;
}

namespace {

template <typename T>
std::optional<std::set<T>> intersect(const std::optional<std::set<T>>& a,
                                     const std::optional<std::set<T>>& b) {
    if (!a) return b;
    if (!b) return a;
    std::set<T> out;
    std::set_intersection(a->begin(), a->end(), b->begin(), b->end(),
                          std::inserter(out, out.begin()));
    return out;
}

}  // namespace

CohortFilter conjunction(const CohortFilter& a, const CohortFilter& b) {
    CohortFilter out;
    out.age_groups = intersect(a.age_groups, b.age_groups);
    out.races = intersect(a.races, b.races);
    if (a.service_class && b.service_class && *a.service_class != *b.service_class) {
        throw ConfigError("cohort filter: conflicting service classes in conjunction");
    }
    out.service_class = a.service_class ? a.service_class : b.service_class;
    return out;
}

}  // namespace absorbnet

#include <doctest.h>

#include "absorbnet/builder.hpp"
#include "absorbnet/domain.hpp"
#include "absorbnet/errors.hpp"
#include "absorbnet/rng.hpp"

using namespace absorbnet;

TEST_CASE("month parsing and formatting") {
    const MonthIndex m = parse_month("2020-03");
    CHECK(m.year() == 2020);
    CHECK(m.month() == 3);
    CHECK(m.str() == "2020-03");

    CHECK(parse_month("2019-12").plus_months(1) == parse_month("2020-01"));

    CHECK_THROWS_AS(parse_month("2020-13"), ParseError);
    CHECK_THROWS_AS(parse_month("2020"), ParseError);
    CHECK_THROWS_AS(parse_month("20x0-01"), ParseError);
    CHECK_THROWS_AS(parse_month("2020-0a"), ParseError);
    CHECK_THROWS_AS(parse_month("2020-00"), ParseError);
}

TEST_CASE("month ordinal is total, injective and monotone") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int year = 1900 + static_cast<int>(rng.below(300));
        const int month = 1 + static_cast<int>(rng.below(12));
        const MonthIndex a(year, month);
        CHECK(MonthIndex::from_ordinal(a.ordinal()) == a);
        CHECK(parse_month(a.str()) == a);

        const int year2 = 1900 + static_cast<int>(rng.below(300));
        const int month2 = 1 + static_cast<int>(rng.below(12));
        const MonthIndex b(year2, month2);
        const bool lexical_less = year < year2 || (year == year2 && month < month2);
        CHECK((a.ordinal() < b.ordinal()) == lexical_less);
    }
}

TEST_CASE("month arithmetic carries across years") {
    const MonthIndex m(2020, 1);
    CHECK(m.plus_months(-1) == MonthIndex(2019, 12));
    CHECK(m.plus_months(12) == MonthIndex(2021, 1));
    CHECK(m.plus_months(25) == MonthIndex(2022, 2));
    CHECK(MonthIndex(2019, 11).months_until(MonthIndex(2020, 2)) == 3);
}

TEST_CASE("region id validation") {
    const RegionId r("123", "NY");
    CHECK(r.zip3() == "123");
    CHECK(r.state() == "NY");
    CHECK_THROWS_AS(RegionId("12", "NY"), ParseError);
    CHECK_THROWS_AS(RegionId("12a", "NY"), ParseError);
    CHECK_THROWS_AS(RegionId("123", "XX"), ParseError);
    CHECK(RegionId("100", "NY") < RegionId("101", "NY"));
}

TEST_CASE("icd10 normalization") {
    CHECK(normalize_icd10(" e11.9 ") == "E11.9");
    CHECK(normalize_icd10("u07.1") == "U07.1");
    CHECK_THROWS_AS(normalize_icd10("9AB"), ParseError);
    CHECK_THROWS_AS(normalize_icd10("E"), ParseError);
    CHECK_THROWS_AS(normalize_icd10("E11_9"), ParseError);
    CHECK_THROWS_AS(normalize_icd10("E11.99999"), ParseError);
}

namespace {

VisitRecord record(AgeGroup age, Race race, std::vector<std::string> codes) {
    return VisitRecord{"p1", MonthIndex(2020, 1), RegionId("100", "NY"), age, race,
                       std::move(codes)};
}

}  // namespace

TEST_CASE("cohort filter matching") {
    const VisitRecord child = record(AgeGroup::child, Race::asian, {});

    CHECK(matches(CohortFilter{}, child));  // match-all

    CohortFilter old_only;
    old_only.age_groups = {{AgeGroup::old}};
    CHECK_FALSE(matches(old_only, child));

    CohortFilter chronic_only;
    chronic_only.service_class = ServiceClass::chronic;
    CHECK(matches(chronic_only, record(AgeGroup::old, Race::white, {"E11.9"})));
    CHECK_FALSE(matches(chronic_only, record(AgeGroup::old, Race::white, {"Z00.0"})));
    CHECK_FALSE(matches(chronic_only, record(AgeGroup::old, Race::white, {})));

    // unknowns are excluded only when that dimension is filtered
    const VisitRecord unknown_age = record(AgeGroup::unknown, Race::black, {});
    CHECK(matches(CohortFilter{}, unknown_age));
    CHECK_FALSE(matches(old_only, unknown_age));
}

TEST_CASE("cohort filter conjunction equals matching both") {
    Rng rng(99);
    const auto random_filter = [&rng]() {
        CohortFilter f;
        if (rng.below(2) == 0) {
            std::set<AgeGroup> ages;
            for (int g = 0; g < 5; ++g) {
                if (rng.below(2) == 0) ages.insert(static_cast<AgeGroup>(g));
            }
            f.age_groups = ages;
        }
        if (rng.below(2) == 0) {
            std::set<Race> races;
            for (int g = 0; g < 6; ++g) {
                if (rng.below(2) == 0) races.insert(static_cast<Race>(g));
            }
            f.races = races;
        }
        if (rng.below(3) == 0) {
            f.service_class = rng.below(2) == 0 ? ServiceClass::chronic
                                                : ServiceClass::acute_respiratory;
        }
        return f;
    };
    const auto random_record = [&rng]() {
        std::vector<std::string> codes;
        const int pick = static_cast<int>(rng.below(4));
        if (pick == 1) codes = {"E11.9"};
        if (pick == 2) codes = {"J12.82"};
        if (pick == 3) codes = {"Z00.0", "E11.9"};
        return record(static_cast<AgeGroup>(rng.below(5)), static_cast<Race>(rng.below(6)),
                      std::move(codes));
    };

    int composed = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const CohortFilter f1 = random_filter();
        const CohortFilter f2 = random_filter();
        if (f1.service_class && f2.service_class && *f1.service_class != *f2.service_class) {
            CHECK_THROWS_AS(conjunction(f1, f2), ConfigError);
            continue;
        }
        const CohortFilter both = conjunction(f1, f2);
        ++composed;
        for (int r = 0; r < 10; ++r) {
            const VisitRecord rec = random_record();
            CHECK(matches(both, rec) == (matches(f1, rec) && matches(f2, rec)));
        }
    }
    CHECK(composed > 100);
}

TEST_CASE("service classification against the published ranges") {
    CHECK(classify_service("G30.9") == ServiceClass::chronic);   // Alzheimer's
    CHECK(classify_service("J12.82") == ServiceClass::acute_respiratory);  // pneumonia
    CHECK(classify_service("Z00.0") == ServiceClass::other);

    CHECK(classify_service("E11.9") == ServiceClass::chronic);   // diabetes E10-E14
    CHECK(classify_service("C50.911") == ServiceClass::chronic); // cancer C00-C97
    CHECK(classify_service("I10") == ServiceClass::chronic);     // hypertension
    CHECK(classify_service("I48.91") == ServiceClass::chronic);  // heart I20-I51
    CHECK(classify_service("N18.6") == ServiceClass::chronic);   // kidney N17-N19
    CHECK(classify_service("J45.40") == ServiceClass::chronic);  // asthma (also COPD range)
    CHECK(classify_service("U07.1") == ServiceClass::acute_respiratory);  // COVID-19
    CHECK(classify_service("J00") == ServiceClass::acute_respiratory);
    CHECK(classify_service("J22") == ServiceClass::acute_respiratory);

    // boundary neighbors fall outside
    CHECK(classify_service("J23") == ServiceClass::other);
    CHECK(classify_service("J08") == ServiceClass::other);
    CHECK(classify_service("C98.0") == ServiceClass::other);
    CHECK(classify_service("N08") == ServiceClass::other);

    CHECK_THROWS_AS(classify_service("E1"), ParseError);
    CHECK_THROWS_AS(classify_service("E.19"), ParseError);
    CHECK_THROWS_AS(classify_service("123"), ParseError);
}

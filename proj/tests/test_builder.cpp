#include <doctest.h>

#include <cstdio>
#include <map>
#include <vector>

#include "absorbnet/builder.hpp"
#include "absorbnet/errors.hpp"
#include "absorbnet/rng.hpp"
#include "brute_force.hpp"

using namespace absorbnet;

namespace {

VisitRecord visit(const std::string& patient, int year, int month, const std::string& zip,
                  AgeGroup age = AgeGroup::unknown, Race race = Race::unknown) {
    return VisitRecord{patient, MonthIndex(year, month), RegionId(zip, "NY"), age, race, {}};
}

std::vector<VisitRecord> random_small_corpus(Rng& rng, int max_patients, int max_regions,
                                             int max_months) {
    const int n_patients = 1 + static_cast<int>(rng.below(max_patients));
    const int n_regions = 1 + static_cast<int>(rng.below(max_regions));
    const int n_months = 1 + static_cast<int>(rng.below(max_months));
    std::vector<VisitRecord> records;
    for (int k = 0; k < n_patients; ++k) {
        for (int m = 0; m < n_months; ++m) {
            const int visits = static_cast<int>(rng.below(4));  // 0..3 visits
            for (int v = 0; v < visits; ++v) {
                char zip[8];
                std::snprintf(zip, sizeof(zip), "%03d",
                              100 + static_cast<int>(rng.below(n_regions)));
                records.push_back(visit("p" + std::to_string(k), 2020, 1 + m, zip));
            }
        }
    }
    return records;
}

}  // namespace

TEST_CASE("visit matrices count records per patient-region-month") {
    const std::vector<VisitRecord> records = {
        visit("a", 2020, 1, "100"), visit("a", 2020, 1, "100"), visit("a", 2020, 2, "101"),
        visit("b", 2020, 1, "101")};
    const auto matrices = build_visit_matrices(records, {});
    REQUIRE(matrices.size() == 2);
    CHECK(matrices.at(MonthIndex(2020, 1)).count("a", RegionId("100", "NY")) == 2);
    CHECK(matrices.at(MonthIndex(2020, 1)).count("b", RegionId("101", "NY")) == 1);
    CHECK(matrices.at(MonthIndex(2020, 2)).count("a", RegionId("101", "NY")) == 1);
    CHECK(matrices.at(MonthIndex(2020, 1)).count("a", RegionId("101", "NY")) == 0);

    CHECK(build_visit_matrices({}, {}).empty());
}

TEST_CASE("visit matrices honor cohort filters (hand recount)") {
    const std::vector<VisitRecord> records = {
        visit("a", 2020, 1, "100", AgeGroup::old, Race::asian),
        visit("a", 2020, 1, "100", AgeGroup::old, Race::asian),
        visit("b", 2020, 1, "100", AgeGroup::young, Race::white),
        visit("c", 2020, 1, "101", AgeGroup::old, Race::asian),
        visit("d", 2020, 2, "101", AgeGroup::child, Race::black)};
    CohortFilter asian_only;
    asian_only.races = {{Race::asian}};
    const auto matrices = build_visit_matrices(records, asian_only);
    REQUIRE(matrices.size() == 1);  // d's month drops entirely
    const VisitMatrix& jan = matrices.at(MonthIndex(2020, 1));
    CHECK(jan.count("a", RegionId("100", "NY")) == 2);
    CHECK(jan.count("b", RegionId("100", "NY")) == 0);
    CHECK(jan.count("c", RegionId("101", "NY")) == 1);
}

TEST_CASE("transit rule: direct application") {
    const std::vector<VisitRecord> records = {visit("a", 2020, 1, "100"),
                                              visit("a", 2020, 2, "101")};
    const auto matrices = build_visit_matrices(records, {});
    const FlowNetwork net = build_flow_network(matrices, MonthIndex(2020, 1), 3);
    const std::size_t i = *net.index_of(RegionId("100", "NY"));
    const std::size_t j = *net.index_of(RegionId("101", "NY"));
    CHECK(net.weight(i, j) == 1.0);
    CHECK(net.weight(j, i) == 0.0);
    CHECK(net.incoming_total(i) == 1.0);
    CHECK(net.incoming_total(j) == 0.0);  // totals are month-t visits only
}

TEST_CASE("transit rule: one unit per patient-pair regardless of qualifying offsets") {
    const std::vector<VisitRecord> records = {visit("a", 2020, 1, "100"),
                                              visit("a", 2020, 2, "101"),
                                              visit("a", 2020, 3, "101")};
    const auto matrices = build_visit_matrices(records, {});
    const FlowNetwork net = build_flow_network(matrices, MonthIndex(2020, 1), 3);
    const std::size_t i = *net.index_of(RegionId("100", "NY"));
    const std::size_t j = *net.index_of(RegionId("101", "NY"));
    CHECK(net.weight(i, j) == 1.0);  // not 2
    // and the brute-force enumerator agrees
    const FlowNetwork brute =
        testing::brute_force_flow_network(records, {}, MonthIndex(2020, 1), 3);
    CHECK(brute == net);
}

TEST_CASE("transit rule: no later visit, no flow") {
    const std::vector<VisitRecord> records = {visit("a", 2020, 1, "100")};
    const auto matrices = build_visit_matrices(records, {});
    const FlowNetwork net = build_flow_network(matrices, MonthIndex(2020, 1), 3);
    CHECK(net.offdiagonal_sum() == 0.0);
    CHECK(net.weight(0, 0) == 0.0);  // same-month visits are not a revisit
}

TEST_CASE("transit rule: same-month multi-region visits do not transit") {
    const std::vector<VisitRecord> records = {visit("a", 2020, 1, "100"),
                                              visit("a", 2020, 1, "101")};
    const auto matrices = build_visit_matrices(records, {});
    const FlowNetwork net = build_flow_network(matrices, MonthIndex(2020, 1), 3);
    CHECK(net.offdiagonal_sum() == 0.0);
}

TEST_CASE("transit rule: window is bounded by v_max") {
    const std::vector<VisitRecord> records = {visit("a", 2020, 1, "100"),
                                              visit("a", 2020, 5, "101")};
    const auto matrices = build_visit_matrices(records, {});
    const FlowNetwork at3 = build_flow_network(matrices, MonthIndex(2020, 1), 3);
    CHECK(at3.offdiagonal_sum() == 0.0);  // 4 months later, outside window
    const FlowNetwork at4 = build_flow_network(matrices, MonthIndex(2020, 1), 4);
    CHECK(at4.offdiagonal_sum() == 1.0);
    CHECK_THROWS_AS(build_flow_network(matrices, MonthIndex(2020, 1), 0), ConfigError);
}

TEST_CASE("within-region revisits land on the diagonal") {
    const std::vector<VisitRecord> records = {visit("a", 2020, 1, "100"),
                                              visit("a", 2020, 2, "100")};
    const auto matrices = build_visit_matrices(records, {});
    const FlowNetwork net = build_flow_network(matrices, MonthIndex(2020, 1), 3);
    CHECK(net.weight(0, 0) == 1.0);
    CHECK(net.offdiagonal_sum() == 0.0);
}

TEST_CASE("builder equals exhaustive enumeration on small corpora") {
    Rng rng(20240207);
    for (int trial = 0; trial < 120; ++trial) {
        const std::vector<VisitRecord> records = random_small_corpus(rng, 20, 6, 6);
        if (records.empty()) continue;
        const auto matrices = build_visit_matrices(records, {});
        for (const auto& [month, matrix] : matrices) {
            const FlowNetwork built = build_flow_network(matrices, month, 3);
            const FlowNetwork brute = testing::brute_force_flow_network(records, {}, month, 3);
            CHECK(built == brute);
        }
    }
}

TEST_CASE("per-month cross weight never exceeds the active patient count") {
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const std::vector<VisitRecord> records = random_small_corpus(rng, 15, 5, 6);
        if (records.empty()) continue;
        const auto matrices = build_visit_matrices(records, {});
        for (const auto& [month, matrix] : matrices) {
            const FlowNetwork net = build_flow_network(matrices, month, 3);
            const auto active = static_cast<double>(matrix.visits.size());
            for (std::size_t i = 0; i < net.size(); ++i) {
                for (std::size_t j = 0; j < net.size(); ++j) {
                    CHECK(net.weight(i, j) <= active);
                }
            }
        }
    }
}

TEST_CASE("stratified networks sum to the unfiltered network") {
    Rng rng(7);
    std::vector<VisitRecord> records;
    for (int k = 0; k < 40; ++k) {
        // demographics are patient attributes, constant across a patient's records
        const auto age = static_cast<AgeGroup>(rng.below(5));
        const auto race = static_cast<Race>(rng.below(6));
        for (int m = 0; m < 5; ++m) {
            if (rng.below(3) == 0) continue;
            char zip[8];
            std::snprintf(zip, sizeof(zip), "%03d", 100 + static_cast<int>(rng.below(4)));
            records.push_back(visit("p" + std::to_string(k), 2021, 1 + m, zip, age, race));
        }
    }
    const auto all_matrices = build_visit_matrices(records, {});
    const MonthIndex t(2021, 2);
    const FlowNetwork whole = build_flow_network(all_matrices, t, 3);

    std::vector<double> weight_sum(whole.size() * whole.size(), 0.0);
    std::vector<double> total_sum(whole.size(), 0.0);
    for (int g = 0; g < 5; ++g) {
        CohortFilter f;
        f.age_groups = {{static_cast<AgeGroup>(g)}};
        const auto stratified = build_visit_matrices(records, f);
        if (stratified.empty()) continue;  // cohort absent from the corpus
        const FlowNetwork part = build_flow_network(stratified, t, 3);
        // map the (possibly smaller) node set into the whole network's frame
        for (std::size_t i = 0; i < part.size(); ++i) {
            const auto wi = whole.index_of(part.node(i));
            REQUIRE(wi);
            total_sum[*wi] += part.incoming_total(i);
            for (std::size_t j = 0; j < part.size(); ++j) {
                const auto wj = whole.index_of(part.node(j));
                REQUIRE(wj);
                weight_sum[*wi * whole.size() + *wj] += part.weight(i, j);
            }
        }
    }
    for (std::size_t c = 0; c < weight_sum.size(); ++c) {
        CHECK(weight_sum[c] == whole.weights()[c]);
    }
    for (std::size_t i = 0; i < total_sum.size(); ++i) {
        CHECK(total_sum[i] == whole.incoming_total(i));
    }
}

TEST_CASE("relabeling months by a constant offset leaves weights unchanged") {
    Rng rng(11);
    const std::vector<VisitRecord> records = random_small_corpus(rng, 12, 4, 5);
    std::vector<VisitRecord> shifted = records;
    for (VisitRecord& rec : shifted) rec.month = rec.month.plus_months(7);

    const auto base = build_visit_matrices(records, {});
    const auto moved = build_visit_matrices(shifted, {});
    for (const auto& [month, matrix] : base) {
        const FlowNetwork a = build_flow_network(base, month, 3);
        const FlowNetwork b = build_flow_network(moved, month.plus_months(7), 3);
        CHECK(a.weights() == b.weights());
        CHECK(a.incoming_totals() == b.incoming_totals());
    }
}

TEST_CASE("aggregation sums buckets") {
    const std::vector<RegionId> nodes = {RegionId("100", "NY"), RegionId("101", "NY")};

    std::vector<FlowNetwork> monthly;
    for (int m = 0; m < 12; ++m) {
        monthly.emplace_back(MonthIndex(2020, 1 + m).str(), nodes,
                             std::vector<double>{1.0, 1.0, 1.0, 1.0},
                             std::vector<double>{1.0, 1.0});
    }
    const auto yearly = aggregate_flows(monthly, AggregationScheme::yearly);
    REQUIRE(yearly.size() == 1);
    CHECK(yearly[0].period() == "2020");
    for (double w : yearly[0].weights()) CHECK(w == 12.0);
    for (double t : yearly[0].incoming_totals()) CHECK(t == 12.0);

    const auto seasonal = aggregate_flows(monthly, AggregationScheme::seasonal);
    REQUIRE(seasonal.size() == 5);  // DJF(Jan,Feb) MAM JJA SON DJF(Dec)
    CHECK(seasonal[0].period() == "2020-DJF");
    CHECK(seasonal[0].weights()[0] == 2.0);  // Jan + Feb
    CHECK(seasonal[4].period() == "2021-DJF");
    CHECK(seasonal[4].weights()[0] == 1.0);  // December rolls forward
}

TEST_CASE("mixed-year winter bucket: December joins the following winter") {
    const std::vector<RegionId> nodes = {RegionId("100", "NY")};
    std::vector<FlowNetwork> monthly;
    for (const char* label : {"2019-12", "2020-01", "2020-02"}) {
        monthly.emplace_back(label, nodes, std::vector<double>{1.0}, std::vector<double>{1.0});
    }
    const auto seasonal = aggregate_flows(monthly, AggregationScheme::seasonal);
    REQUIRE(seasonal.size() == 1);
    CHECK(seasonal[0].period() == "2020-DJF");
    CHECK(seasonal[0].weights()[0] == 3.0);
}

TEST_CASE("aggregation rejects mismatched node lists") {
    const FlowNetwork a("2020-01", {RegionId("100", "NY")}, {1.0}, {1.0});
    const FlowNetwork b("2020-02", {RegionId("101", "NY")}, {1.0}, {1.0});
    CHECK_THROWS_AS(aggregate_flows({a, b}, AggregationScheme::yearly), StructuralError);
}

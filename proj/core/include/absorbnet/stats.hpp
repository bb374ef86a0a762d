#pragma once

#include <map>
#include <string>
#include <vector>

namespace absorbnet {

struct WelchResult {
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;  // two-sided
};

/// Regularized incomplete beta I_x(a,b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided p-value for a t statistic with (possibly fractional) df.
double student_t_two_sided_p(double t, double df);

/// Welch's unequal-variance t-test with Welch-Satterthwaite df. Requires two
/// observations per sample; identical samples take the t = 0, p = 1 path.
WelchResult welch_t_test(const std::vector<double>& a, const std::vector<double>& b);

/// Paired t-test on per-unit differences (df = n - 1).
WelchResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b);

struct CharacteristicSummary {
    std::string name;
    double pre_mean = 0.0;
    double pre_min = 0.0;
    double pre_max = 0.0;
    double during_mean = 0.0;
    double during_min = 0.0;
    double during_max = 0.0;
    double mean_diff = 0.0;  // during - pre
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;
    bool significant = false;  // p < 0.05
};

struct PhaseSummary {
    std::size_t unit_count = 0;
    std::vector<CharacteristicSummary> rows;  // sorted by characteristic name
};

/// Per-characteristic phase comparison over matched units (states): means,
/// ranges, mean differences and significance. Unit sets and characteristic
/// sets must agree between the phases.
PhaseSummary summarize_phases(const std::map<std::string, std::map<std::string, double>>& pre,
                              const std::map<std::string, std::map<std::string, double>>& during,
                              bool paired = false);

}  // namespace absorbnet

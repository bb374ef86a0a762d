#include "absorbnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absorbnet/errors.hpp"

namespace absorbnet {

namespace {

// Continued fraction for the incomplete beta, evaluated with modified Lentz.
// Terms: d_{2m}   =  m (b - m) x / ((a + 2m - 1)(a + 2m))
//        d_{2m+1} = -(a + m)(a + b + m) x / ((a + 2m)(a + 2m + 1))
double beta_continued_fraction(double a, double b, double x) {
    constexpr double kTiny = 1e-300;
    constexpr double kEps = 1e-15;
    constexpr int kMaxIter = 500;

    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double f = d;

    for (int m = 1; m <= kMaxIter; ++m) {
        const double dm = static_cast<double>(m);
        // even step
        double num = dm * (b - dm) * x / ((a + 2.0 * dm - 1.0) * (a + 2.0 * dm));
        d = 1.0 + num * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        f *= d * c;
        // odd step
        num = -(a + dm) * (a + b + dm) * x / ((a + 2.0 * dm) * (a + 2.0 * dm + 1.0));
        d = 1.0 + num * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        f *= delta;
        if (std::fabs(delta - 1.0) < kEps) return f;
    }
    return f;  // converged to working precision in practice long before this
}

double sample_mean(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v, double mean) {
    double sum = 0.0;
    for (double x : v) sum += (x - mean) * (x - mean);
    return sum / static_cast<double>(v.size() - 1);
}

WelchResult p_from_t(double t, double df) {
    WelchResult r;
    r.t = t;
    r.df = df;
    r.p = t == 0.0 ? 1.0 : student_t_two_sided_p(t, df);
    return r;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw ConfigError("incomplete beta: parameters must be positive");
    }
    if (x < 0.0 || x > 1.0) {
        throw ConfigError("incomplete beta: x out of [0,1]");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double log_prefactor = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                 a * std::log(x) + b * std::log1p(-x);
    const double prefactor = std::exp(log_prefactor);
    // The continued fraction converges fast only for x below the pivot;
    // otherwise use the tail symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return prefactor * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - prefactor * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double df) {
    if (!(df > 0.0)) throw ConfigError("t distribution: df must be positive");
    const double x = df / (df + t * t);
    return regularized_incomplete_beta(df / 2.0, 0.5, x);
}

WelchResult welch_t_test(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() < 2 || b.size() < 2) {
        throw ConfigError("welch t-test: each sample needs at least two observations");
    }
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double ma = sample_mean(a);
    const double mb = sample_mean(b);
    const double va = sample_variance(a, ma);
    const double vb = sample_variance(b, mb);

    if (va == 0.0 && vb == 0.0) {
        if (ma == mb) return p_from_t(0.0, na + nb - 2.0);
        throw UndefinedMetricError("welch t-test: zero variance in both samples, unequal means");
    }

    const double se_a = va / na;
    const double se_b = vb / nb;
    const double t = (ma - mb) / std::sqrt(se_a + se_b);
    const double df = (se_a + se_b) * (se_a + se_b) /
                      (se_a * se_a / (na - 1.0) + se_b * se_b / (nb - 1.0));
    return p_from_t(t, df);
}

WelchResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw StructuralError("paired t-test: samples differ in length");
    }
    if (a.size() < 2) {
        throw ConfigError("paired t-test: needs at least two pairs");
    }
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    const double n = static_cast<double>(diff.size());
    const double mean = sample_mean(diff);
    const double var = sample_variance(diff, mean);
    if (var == 0.0) {
        if (mean == 0.0) return p_from_t(0.0, n - 1.0);
        throw UndefinedMetricError("paired t-test: zero variance with nonzero mean difference");
    }
    return p_from_t(mean / std::sqrt(var / n), n - 1.0);
}

PhaseSummary summarize_phases(const std::map<std::string, std::map<std::string, double>>& pre,
                              const std::map<std::string, std::map<std::string, double>>& during,
                              bool paired) {
    if (pre.size() != during.size()) {
        throw StructuralError("phase summary: phases cover different unit counts");
    }
    for (const auto& [unit, values] : pre) {
        if (!during.count(unit)) {
            throw StructuralError("phase summary: unit '" + unit + "' missing from during-phase");
        }
    }
    if (pre.empty()) throw StructuralError("phase summary: no units");
    if (pre.size() < 2) {
        throw ConfigError("phase summary: need at least two units for a t-test");
    }

    const auto& characteristic_names = pre.begin()->second;
    for (const auto& [unit, values] : pre) {
        for (const auto& [name, value] : characteristic_names) {
            if (!values.count(name) || !during.at(unit).count(name)) {
                throw StructuralError("phase summary: characteristic '" + name +
                                      "' missing for unit '" + unit + "'");
            }
        }
    }

    PhaseSummary summary;
    summary.unit_count = pre.size();
    for (const auto& [name, unused] : characteristic_names) {
        std::vector<double> xs, ys;
        xs.reserve(pre.size());
        ys.reserve(pre.size());
        for (const auto& [unit, values] : pre) {
            xs.push_back(values.at(name));
            ys.push_back(during.at(unit).at(name));
        }
        CharacteristicSummary row;
        row.name = name;
        row.pre_mean = sample_mean(xs);
        row.pre_min = *std::min_element(xs.begin(), xs.end());
        row.pre_max = *std::max_element(xs.begin(), xs.end());
        row.during_mean = sample_mean(ys);
        row.during_min = *std::min_element(ys.begin(), ys.end());
        row.during_max = *std::max_element(ys.begin(), ys.end());
        row.mean_diff = row.during_mean - row.pre_mean;
        const WelchResult test = paired ? paired_t_test(ys, xs) : welch_t_test(ys, xs);
        row.t = test.t;
        row.df = test.df;
        row.p = test.p;
        row.significant = test.p < 0.05;
        summary.rows.push_back(std::move(row));
    }
    return summary;
}

}  // namespace absorbnet

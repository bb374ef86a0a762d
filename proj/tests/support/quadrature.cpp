#include "quadrature.hpp"

#include <cmath>
#include <numbers>

namespace absorbnet::testing {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm, double whole, double tolerance, int depth) {
    const double lm = (a + m) / 2.0;
    const double rm = (m + b) / 2.0;
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tolerance) {
        return left + right + delta / 15.0;
    }
    return recurse(f, a, fa, m, fm, lm, flm, left, tolerance / 2.0, depth - 1) +
           recurse(f, m, fm, b, fb, rm, frm, right, tolerance / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tolerance) {
    const double fa = f(a);
    const double fb = f(b);
    const double m = (a + b) / 2.0;
    const double fm = f(m);
    return recurse(f, a, fa, b, fb, m, fm, simpson(a, fa, b, fb, fm), tolerance, 48);
}

double student_t_two_sided_p_quadrature(double t, double df) {
    // With x = tan(theta), the unnormalized t density (1 + x^2/df)^(-(df+1)/2)
    // times dx becomes cos(theta)^(df-1) * (cos^2 + sin^2/df)^(-(df+1)/2) up
    // to a constant that cancels in the ratio below. This scaling keeps the
    // integrand O(1) for every df so the absolute Simpson tolerance is
    // meaningful.
    const auto integrand = [df](double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return std::pow(c, df - 1.0) * std::pow(c * c + s * s / df, -(df + 1.0) / 2.0);
    };
    const double upper = std::numbers::pi / 2.0;
    const double split = std::atan(std::fabs(t));
    const double tail = adaptive_simpson(integrand, split, upper, 1e-14);
    const double half_mass = adaptive_simpson(integrand, 0.0, upper, 1e-14);
    return tail / half_mass;
}

}  // namespace absorbnet::testing

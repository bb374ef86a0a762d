#pragma once

#include <vector>

namespace absorbnet::testing {

/// Spearman rank correlation with average ranks for ties.
double spearman_rho(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace absorbnet::testing

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absorbnet/domain.hpp"

namespace absorbnet {

/// Weighted directed flow network for one period. Entry (i,j) of the dense
/// N x N matrix is the flow weight from node i to node j; the diagonal holds
/// within-region flow. `incoming_totals` is the separately-tracked count of
/// all patients arriving at each node during the period (it is not a row or
/// column sum of the matrix).
class FlowNetwork {
public:
    FlowNetwork(std::string period, std::vector<RegionId> nodes, std::vector<double> weights,
                std::vector<double> incoming_totals);

    const std::string& period() const { return period_; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<RegionId>& nodes() const { return nodes_; }
    const RegionId& node(std::size_t i) const { return nodes_[i]; }
    std::optional<std::size_t> index_of(const RegionId& id) const;

    double weight(std::size_t i, std::size_t j) const { return weights_[i * size() + j]; }
    const std::vector<double>& weights() const { return weights_; }

    double incoming_total(std::size_t i) const { return incoming_totals_[i]; }
    const std::vector<double>& incoming_totals() const { return incoming_totals_; }

    /// Total cross-region flow (off-diagonal sum).
    double offdiagonal_sum() const;

    /// Per-node inflow from other regions: m_j = sum over i != j of w(i,j).
    std::vector<double> column_inflows() const;

    /// Count of off-diagonal edges with positive weight.
    std::size_t edge_count() const;

    /// Copy with a replaced weight matrix (same nodes and totals).
    FlowNetwork with_weights(std::vector<double> weights, std::string period = {}) const;

    bool operator==(const FlowNetwork& other) const = default;

private:
    std::string period_;
    std::vector<RegionId> nodes_;
    std::vector<double> weights_;
    std::vector<double> incoming_totals_;
};

}  // namespace absorbnet

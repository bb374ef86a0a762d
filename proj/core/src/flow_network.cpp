#include "absorbnet/flow_network.hpp"

#include <algorithm>

#include "absorbnet/errors.hpp"

namespace absorbnet {

FlowNetwork::FlowNetwork(std::string period, std::vector<RegionId> nodes,
                         std::vector<double> weights, std::vector<double> incoming_totals)
    : period_(std::move(period)),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      incoming_totals_(std::move(incoming_totals)) {
    const std::size_t n = nodes_.size();
    if (n == 0) throw StructuralError("flow network: at least one node required");
    if (!std::is_sorted(nodes_.begin(), nodes_.end())) {
        throw StructuralError("flow network: node list must be sorted");
    }
    if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
        throw StructuralError("flow network: duplicate node");
    }
    if (weights_.size() != n * n) {
        throw StructuralError("flow network: weight matrix must be N*N");
    }
    if (incoming_totals_.size() != n) {
        throw StructuralError("flow network: one incoming total per node required");
    }
    for (double w : weights_) {
        if (!(w >= 0.0)) throw StructuralError("flow network: negative or NaN weight");
    }
    for (double t : incoming_totals_) {
        if (!(t >= 0.0)) throw StructuralError("flow network: negative or NaN incoming total");
    }
}

std::optional<std::size_t> FlowNetwork::index_of(const RegionId& id) const {
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
    if (it == nodes_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

double FlowNetwork::offdiagonal_sum() const {
    const std::size_t n = size();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) sum += weights_[i * n + j];
        }
    }
    return sum;
}

std::vector<double> FlowNetwork::column_inflows() const {
    const std::size_t n = size();
    std::vector<double> m(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j) m[j] += weights_[i * n + j];
        }
    }
    return m;
}

std::size_t FlowNetwork::edge_count() const {
    const std::size_t n = size();
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && weights_[i * n + j] > 0.0) ++count;
        }
    }
    return count;
}

FlowNetwork FlowNetwork::with_weights(std::vector<double> weights, std::string period) const {
    return FlowNetwork(period.empty() ? period_ : std::move(period), nodes_, std::move(weights),
                       incoming_totals_);
}

}  // namespace absorbnet

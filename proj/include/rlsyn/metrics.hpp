#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rlsyn/circuit.hpp"

namespace rlsyn {

/// L(S), D(S) and Q(S) of a circuit, plus the gates-per-layer histogram.
struct Metrics {
    std::uint64_t gate_count = 0;
    std::uint64_t depth = 0;
    int ancilla = 0;
    std::vector<std::uint32_t> per_level_histogram;
};

inline std::uint64_t gate_count(const Circuit& circuit) { return circuit.gates().size(); }

inline int ancilla_count(const Circuit& circuit) {
    return static_cast<int>(circuit.width()) - circuit.num_inputs();
}

/// Minimal layer count with disjoint-support gates sharing a layer, computed
/// by per-wire level tracking: level(g) = 1 + max level over g's support.
/// Two gates conflict whenever their supports intersect at any wire,
/// control-control sharing included.
std::uint64_t depth(std::span<const Gate> gates, std::uint32_t width);

inline std::uint64_t depth(const Circuit& circuit) {
    return depth(circuit.gates(), circuit.width());
}

Metrics compute_metrics(const Circuit& circuit);

} // namespace rlsyn

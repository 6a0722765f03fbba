#include "rlsyn/metrics.hpp"

#include <algorithm>

namespace rlsyn {

namespace {

std::uint64_t levelize(std::span<const Gate> gates, std::uint32_t width,
                       std::vector<std::uint32_t>* histogram) {
    std::vector<std::uint64_t> wire_level(width, 0);
    std::uint64_t max_level = 0;
    for (const Gate& g : gates) {
        std::uint64_t lvl = wire_level[g.target];
        for (int i = 0; i < g.num_controls(); ++i)
            lvl = std::max(lvl, wire_level[g.controls[i]]);
        ++lvl;
        wire_level[g.target] = lvl;
        for (int i = 0; i < g.num_controls(); ++i)
            wire_level[g.controls[i]] = lvl;
        max_level = std::max(max_level, lvl);
        if (histogram) {
            if (histogram->size() < lvl)
                histogram->resize(lvl, 0);
            ++(*histogram)[lvl - 1];
        }
    }
    return max_level;
}

} // namespace

std::uint64_t depth(std::span<const Gate> gates, std::uint32_t width) {
    return levelize(gates, width, nullptr);
}

Metrics compute_metrics(const Circuit& circuit) {
    Metrics m;
    m.gate_count = gate_count(circuit);
    m.ancilla = ancilla_count(circuit);
    m.depth = levelize(circuit.gates(), circuit.width(), &m.per_level_histogram);
    return m;
}

} // namespace rlsyn

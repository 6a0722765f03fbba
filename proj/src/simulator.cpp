#include "rlsyn/simulator.hpp"

#include <string>

namespace rlsyn {

namespace {

BitVec initial_state(const Circuit& circuit, std::uint64_t input) {
    const int n = circuit.num_inputs();
    if (n > 0 && n < 64 && (input >> n) != 0)
        throw WidthMismatch("input word has more than " + std::to_string(n) + " bits");
    BitVec state(circuit.width());
    for (int j = 0; j < n; ++j)
        state.set(circuit.input_wires()[static_cast<std::size_t>(j)],
                  (input >> (n - 1 - j)) & 1);
    return state;
}

} // namespace

BitVec run_prefix(const Circuit& circuit, std::uint64_t input, std::size_t gate_count) {
    BitVec state = initial_state(circuit, input);
    for (std::size_t i = 0; i < gate_count; ++i)
        apply_gate(state, circuit.gates()[i]);
    return state;
}

BitVec run(const Circuit& circuit, std::uint64_t input) {
    return run_prefix(circuit, input, circuit.gates().size());
}

ExhaustiveSimulator::ExhaustiveSimulator(int n, std::uint32_t width)
    : n_(n), words_((std::size_t{1} << n) / 64 + ((std::size_t{1} << n) % 64 ? 1 : 0)) {
    if (n > 20)
        throw TooLarge("exhaustive simulation capped at n = 20, got " + std::to_string(n));
    wires_.assign(width, std::vector<std::uint64_t>(words_, 0));
    scratch_.resize(words_);
    // Input wire j carries the standard truth-table pattern of x_{j+1}.
    const std::uint32_t count = std::uint32_t{1} << n;
    for (int j = 0; j < n && static_cast<std::uint32_t>(j) < width; ++j) {
        auto& mask = wires_[static_cast<std::uint32_t>(j)];
        for (std::uint32_t x = 0; x < count; ++x)
            if ((x >> (n - 1 - j)) & 1)
                mask[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
}

void ExhaustiveSimulator::ensure_width(std::uint32_t width) {
    while (wires_.size() < width)
        wires_.emplace_back(words_, 0);
}

void ExhaustiveSimulator::apply(const Gate& g) {
    ensure_width(g.target + 1);
    for (int i = 0; i < g.num_controls(); ++i)
        ensure_width(g.controls[i] + 1);
    auto& tgt = wires_[g.target];
    switch (g.kind) {
    case GateKind::Not:
        for (std::size_t w = 0; w < words_; ++w)
            tgt[w] = ~tgt[w];
        // Keep unused high bits of the last word zero.
        if ((std::size_t{1} << n_) % 64)
            tgt[words_ - 1] &= (std::uint64_t{1} << ((std::size_t{1} << n_) % 64)) - 1;
        break;
    case GateKind::Cnot: {
        const auto& c = wires_[g.controls[0]];
        for (std::size_t w = 0; w < words_; ++w)
            tgt[w] ^= c[w];
        break;
    }
    case GateKind::Ccnot: {
        const auto& c0 = wires_[g.controls[0]];
        const auto& c1 = wires_[g.controls[1]];
        for (std::size_t w = 0; w < words_; ++w)
            tgt[w] ^= c0[w] & c1[w];
        break;
    }
    }
}

void ExhaustiveSimulator::apply_all(std::span<const Gate> gates) {
    for (const Gate& g : gates)
        apply(g);
}

bool ExhaustiveSimulator::wire_is_zero(std::uint32_t wire) const {
    for (std::uint64_t w : wires_[wire])
        if (w != 0)
            return false;
    return true;
}

bool ExhaustiveSimulator::wire_matches(std::uint32_t wire,
                                       const std::function<bool(std::uint32_t)>& predicate) const {
    const std::uint32_t count = std::uint32_t{1} << n_;
    for (std::uint32_t x = 0; x < count; ++x)
        if (wire_value(wire, x) != predicate(x))
            return false;
    return true;
}

TruthTable extract_transformation(const Circuit& circuit) {
    const int n = circuit.num_inputs();
    if (n > 20)
        throw TooLarge("extract_transformation capped at n = 20, got " + std::to_string(n));
    ExhaustiveSimulator sim(n, circuit.width());
    sim.apply_all(circuit.gates());
    TruthTable tt{n, std::vector<std::uint32_t>(std::size_t{1} << n, 0)};
    const auto& outs = circuit.output_wires();
    for (std::uint32_t x = 0; x < tt.size(); ++x) {
        std::uint32_t word = 0;
        for (std::size_t j = 0; j < outs.size(); ++j)
            if (sim.wire_value(outs[j], x))
                word |= std::uint32_t{1} << (n - 1 - static_cast<int>(j));
        tt.entries[x] = word;
    }
    return tt;
}

VerificationReport verify_against(const Circuit& circuit, const TruthTable& tt) {
    if (tt.n != circuit.num_inputs())
        throw WidthMismatch("truth table has n = " + std::to_string(tt.n) +
                            " but circuit has " + std::to_string(circuit.num_inputs()) +
                            " significant inputs");
    const int n = circuit.num_inputs();
    ExhaustiveSimulator sim(n, circuit.width());
    sim.apply_all(circuit.gates());

    VerificationReport report;
    const auto& outs = circuit.output_wires();
    for (std::uint32_t x = 0; x < tt.size(); ++x) {
        std::uint32_t word = 0;
        for (std::size_t j = 0; j < outs.size(); ++j)
            if (sim.wire_value(outs[j], x))
                word |= std::uint32_t{1} << (n - 1 - static_cast<int>(j));
        if (word != tt.entries[x])
            report.mismatches.push_back({x, tt.entries[x], word});
    }
    report.passed = report.mismatches.empty();

    report.ancilla_final.resize(circuit.width());
    const std::uint32_t count = std::uint32_t{1} << n;
    for (std::uint32_t w = 0; w < circuit.width(); ++w) {
        bool any0 = false, any1 = false;
        for (std::uint32_t x = 0; x < count && !(any0 && any1); ++x)
            (sim.wire_value(w, x) ? any1 : any0) = true;
        report.ancilla_final[w] = any1 ? (any0 ? VerificationReport::FinalBit::Varies
                                               : VerificationReport::FinalBit::AlwaysOne)
                                       : VerificationReport::FinalBit::AlwaysZero;
    }
    return report;
}

bool wire_predicate_check(const Circuit& circuit, std::uint32_t wire,
                          const std::function<bool(std::uint32_t)>& predicate,
                          std::size_t probe_point) {
    if (probe_point > circuit.gates().size())
        throw IndexOutOfRange("probe point past end of gate list");
    ExhaustiveSimulator sim(circuit.num_inputs(), circuit.width());
    sim.apply_all(std::span<const Gate>(circuit.gates().data(), probe_point));
    return sim.wire_matches(wire, predicate);
}

} // namespace rlsyn

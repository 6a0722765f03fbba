#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rlsyn/bitvec.hpp"
#include "rlsyn/circuit.hpp"
#include "rlsyn/truth_table.hpp"

namespace rlsyn {

struct VerificationReport {
    struct Mismatch {
        std::uint32_t input;
        std::uint32_t expected;
        std::uint32_t actual;
    };
    /// Final-value summary per wire over all basis inputs.
    enum class FinalBit : std::uint8_t { AlwaysZero, AlwaysOne, Varies };

    bool passed = false;
    std::vector<Mismatch> mismatches;
    std::vector<FinalBit> ancilla_final; // indexed by wire
};

/// Target bit XORed with the AND of the control bits; everything else
/// untouched.
inline void apply_gate(BitVec& state, const Gate& g) {
    bool ctrl = true;
    for (int i = 0; i < g.num_controls(); ++i)
        ctrl = ctrl && state.get(g.controls[i]);
    if (ctrl)
        state.flip(g.target);
}

/// Initial state: input bits on the significant inputs, 0 elsewhere.
BitVec run(const Circuit& circuit, std::uint64_t input);
BitVec run_prefix(const Circuit& circuit, std::uint64_t input, std::size_t gate_count);

/// Tracks all 2^n basis inputs at once: one 2^n-bit mask per wire, so a gate
/// application is a couple of word-wide AND/XOR sweeps. This is the workhorse
/// behind extract_transformation and the provider oracles.
class ExhaustiveSimulator {
  public:
    ExhaustiveSimulator(int n, std::uint32_t width);

    int n() const { return n_; }
    std::uint32_t width() const { return static_cast<std::uint32_t>(wires_.size()); }

    /// Widen the state with fresh zero wires (e.g. after late allocations).
    void ensure_width(std::uint32_t width);

    void apply(const Gate& g);
    void apply_all(std::span<const Gate> gates);

    /// Bit x of the returned mask = current value of `wire` on input x.
    const std::vector<std::uint64_t>& wire_mask(std::uint32_t wire) const {
        return wires_[wire];
    }
    bool wire_value(std::uint32_t wire, std::uint32_t input) const {
        return (wires_[wire][input >> 6] >> (input & 63)) & 1;
    }
    bool wire_is_zero(std::uint32_t wire) const;
    bool wire_matches(std::uint32_t wire, const std::function<bool(std::uint32_t)>& predicate) const;

  private:
    int n_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> wires_;
    std::vector<std::uint64_t> scratch_;
};

/// Exhaustive extraction of the realized transformation; n is capped at 20.
TruthTable extract_transformation(const Circuit& circuit);

VerificationReport verify_against(const Circuit& circuit, const TruthTable& tt);

/// True iff for every input x, the bit on `wire` after the first
/// `probe_point` gates equals predicate(x).
bool wire_predicate_check(const Circuit& circuit, std::uint32_t wire,
                          const std::function<bool(std::uint32_t)>& predicate,
                          std::size_t probe_point);

} // namespace rlsyn

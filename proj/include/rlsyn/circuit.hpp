#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rlsyn/errors.hpp"

namespace rlsyn {

enum class GateKind : std::uint8_t { Not, Cnot, Ccnot };

/// One reversible element: NOT, CNOT or 2-CNOT. The target bit is XORed
/// with the AND of the control bits (empty AND = 1), every gate is an
/// involution.
struct Gate {
    GateKind kind = GateKind::Not;
    std::uint32_t controls[2] = {0, 0};
    std::uint32_t target = 0;

    static Gate make_not(std::uint32_t t) { return Gate{GateKind::Not, {0, 0}, t}; }
    static Gate make_cnot(std::uint32_t c, std::uint32_t t) {
        return Gate{GateKind::Cnot, {c, 0}, t};
    }
    static Gate make_ccnot(std::uint32_t c0, std::uint32_t c1, std::uint32_t t) {
        return Gate{GateKind::Ccnot, {c0, c1}, t};
    }

    int num_controls() const { return static_cast<int>(kind); }

    bool touches(std::uint32_t w) const {
        if (target == w)
            return true;
        for (int i = 0; i < num_controls(); ++i)
            if (controls[i] == w)
                return true;
        return false;
    }

    bool supports_intersect(const Gate& other) const {
        if (other.touches(target))
            return true;
        for (int i = 0; i < num_controls(); ++i)
            if (other.touches(controls[i]))
                return true;
        return false;
    }

    bool operator==(const Gate& other) const {
        if (kind != other.kind || target != other.target)
            return false;
        for (int i = 0; i < num_controls(); ++i)
            if (controls[i] != other.controls[i])
                return false;
        return true;
    }
};

enum class WireRole : std::uint8_t { SignificantInput, Negation, Storage, Scratch, Output };

/// Flat gate list over a fixed wire set. Wire indices are dense and assigned
/// in allocation order; the first n indices are the significant inputs.
class Circuit {
  public:
    explicit Circuit(int n_inputs);

    /// Rebuild a circuit from parsed parts. Significant inputs are the wires
    /// carrying WireRole::SignificantInput, in index order.
    static Circuit from_parts(std::vector<WireRole> roles,
                              std::vector<std::uint32_t> output_wires,
                              std::vector<Gate> gates);

    std::uint32_t alloc_wire(WireRole role);
    void add_gate(const Gate& g);

    std::uint32_t width() const { return static_cast<std::uint32_t>(roles_.size()); }
    int num_inputs() const { return n_; }
    const std::vector<Gate>& gates() const { return gates_; }
    WireRole role(std::uint32_t w) const { return roles_.at(w); }
    const std::vector<WireRole>& roles() const { return roles_; }
    const std::vector<std::uint32_t>& input_wires() const { return input_wires_; }
    const std::vector<std::uint32_t>& output_wires() const { return output_wires_; }
    void set_output_wires(std::vector<std::uint32_t> wires);

    bool operator==(const Circuit& other) const = default;

  private:
    Circuit() = default;
    void validate_gate(const Gate& g) const;

    int n_ = 0;
    std::vector<WireRole> roles_;
    std::vector<Gate> gates_;
    std::vector<std::uint32_t> input_wires_;
    std::vector<std::uint32_t> output_wires_;
};

/// Same gates in reverse order; since every gate is an involution the
/// reversed list undoes the original one.
std::vector<Gate> inverse_sequence(std::span<const Gate> gates);

} // namespace rlsyn

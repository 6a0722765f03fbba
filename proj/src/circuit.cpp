#include "rlsyn/circuit.hpp"

#include <algorithm>
#include <string>

namespace rlsyn {

Circuit::Circuit(int n_inputs) : n_(n_inputs) {
    roles_.assign(static_cast<std::size_t>(n_inputs), WireRole::SignificantInput);
    input_wires_.resize(static_cast<std::size_t>(n_inputs));
    for (int i = 0; i < n_inputs; ++i)
        input_wires_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
}

Circuit Circuit::from_parts(std::vector<WireRole> roles,
                            std::vector<std::uint32_t> output_wires,
                            std::vector<Gate> gates) {
    Circuit c;
    c.roles_ = std::move(roles);
    for (std::uint32_t w = 0; w < c.width(); ++w)
        if (c.roles_[w] == WireRole::SignificantInput)
            c.input_wires_.push_back(w);
    c.n_ = static_cast<int>(c.input_wires_.size());
    for (std::uint32_t w : output_wires)
        if (w >= c.width())
            throw IndexOutOfRange("output wire " + std::to_string(w) + " out of range");
    c.output_wires_ = std::move(output_wires);
    for (const Gate& g : gates)
        c.add_gate(g);
    return c;
}

std::uint32_t Circuit::alloc_wire(WireRole role) {
    roles_.push_back(role);
    return width() - 1;
}

void Circuit::validate_gate(const Gate& g) const {
    if (g.target >= width())
        throw IndexOutOfRange("gate target " + std::to_string(g.target) +
                              " >= width " + std::to_string(width()));
    for (int i = 0; i < g.num_controls(); ++i) {
        if (g.controls[i] >= width())
            throw IndexOutOfRange("gate control " + std::to_string(g.controls[i]) +
                                  " >= width " + std::to_string(width()));
        if (g.controls[i] == g.target)
            throw DegenerateGate("control equals target wire " + std::to_string(g.target));
    }
    if (g.num_controls() == 2 && g.controls[0] == g.controls[1])
        throw DegenerateGate("duplicate control wire " + std::to_string(g.controls[0]));
}

void Circuit::add_gate(const Gate& g) {
    validate_gate(g);
    gates_.push_back(g);
}

void Circuit::set_output_wires(std::vector<std::uint32_t> wires) {
    for (std::uint32_t w : wires)
        if (w >= width())
            throw IndexOutOfRange("output wire " + std::to_string(w) + " out of range");
    output_wires_ = std::move(wires);
}

std::vector<Gate> inverse_sequence(std::span<const Gate> gates) {
    std::vector<Gate> out(gates.begin(), gates.end());
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace rlsyn

#include "rlsyn/product_tree.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace rlsyn {

namespace {

int ceil_log2(int m) {
    int k = 0;
    while ((1 << k) < m)
        ++k;
    return k;
}

} // namespace

TreePlan TreePlan::build(int var_count) {
    if (var_count < 1)
        throw Error("product tree needs at least one variable");
    TreePlan plan;
    plan.var_count = var_count;
    plan.levels = std::max(1, ceil_log2(var_count));

    // Depth-first; the first child takes the floor(m/2) prefix.
    struct Frame {
        int begin, end, level, parent_slot;
    };
    std::vector<Frame> stack{{0, var_count, 1, -1}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        const int index = static_cast<int>(plan.nodes.size());
        plan.nodes.push_back(TreeNode{f.begin, f.end, f.level, -1, -1});
        if (f.parent_slot >= 0) {
            TreeNode& parent = plan.nodes[static_cast<std::size_t>(f.parent_slot)];
            (parent.child0 < 0 ? parent.child0 : parent.child1) = index;
        }
        const int size = f.end - f.begin;
        if (size >= 2 && f.level < plan.levels) {
            const int half = size / 2;
            // Push the second child first so the first child pops first and
            // node indices follow a stable preorder.
            stack.push_back({f.begin + half, f.end, f.level + 1, index});
            stack.push_back({f.begin, f.begin + half, f.level + 1, index});
        }
    }
    return plan;
}

std::uint64_t TreePlan::level_storage(int level) const {
    std::uint64_t total = 0;
    for (const TreeNode& node : nodes)
        if (node.level == level && node.size() >= 2)
            total += std::uint64_t{1} << node.size();
    return total;
}

int TreePlan::emitting_nodes_above(int first_stored_level) const {
    int count = 0;
    for (const TreeNode& node : nodes)
        if (node.level < first_stored_level && node.size() >= 2)
            ++count;
    return count;
}

StoragePlan storage_split(const TreePlan& plan, std::uint64_t budget) {
    const int levels = plan.levels;
    StoragePlan best;
    best.stored_level_count = 0;
    best.first_stored_level = levels + 1;
    best.r = levels;
    best.stored_wires = 0;
    best.scratch_wires = plan.emitting_nodes_above(levels + 1);
    // A provider always gets its on-demand scratch floor (at most m - 1
    // wires) even when the storage budget cannot cover it.
    const std::uint64_t effective = std::max<std::uint64_t>(budget, best.cost());

    std::uint64_t stored = 0;
    for (int j = 1; j <= levels; ++j) {
        const int first = levels - j + 1;
        stored += plan.level_storage(first);
        StoragePlan candidate;
        candidate.stored_level_count = j;
        candidate.first_stored_level = first;
        candidate.r = levels - j;
        candidate.stored_wires = stored;
        candidate.scratch_wires = plan.emitting_nodes_above(first);
        if (candidate.cost() <= effective)
            best = candidate;
    }
    return best;
}

std::uint32_t WirePool::take() {
    if (next_ >= wires_.size())
        throw ScratchExhausted("wire pool exhausted");
    return wires_[next_++];
}

ProductTreeProvider::ProductTreeProvider(ProviderMode mode, std::vector<VarWires> vars,
                                         std::uint64_t budget, Circuit& circuit, WirePool* pool)
    : mode_(mode), vars_(std::move(vars)), budget_(budget), circuit_(circuit),
      tree_(TreePlan::build(static_cast<int>(vars_.size()))), plan_(storage_split(tree_, budget)) {
    auto next_wire = [&](WireRole role) {
        const std::uint32_t w = pool ? pool->take() : circuit_.alloc_wire(role);
        owned_wires_.push_back(w);
        return w;
    };
    storage_wires_.reserve(plan_.stored_wires);
    for (std::uint64_t i = 0; i < plan_.stored_wires; ++i)
        storage_wires_.push_back(next_wire(WireRole::Storage));
    for (int i = 0; i < plan_.scratch_wires; ++i)
        scratch_free_.push_back(next_wire(WireRole::Scratch));

    // Storage bases, leaf level first, preorder within a level.
    node_storage_base_.assign(tree_.nodes.size(), ~std::uint64_t{0});
    std::uint64_t base = 0;
    for (int level = tree_.levels; level >= plan_.first_stored_level; --level) {
        for (std::size_t i = 0; i < tree_.nodes.size(); ++i) {
            const TreeNode& node = tree_.nodes[i];
            if (node.level == level && node.size() >= 2) {
                node_storage_base_[i] = base;
                base += std::uint64_t{1} << node.size();
            }
        }
    }
}

bool ProductTreeProvider::node_stored(int node_index) const {
    return node_storage_base_[static_cast<std::size_t>(node_index)] != ~std::uint64_t{0};
}

std::uint32_t ProductTreeProvider::storage_wire(int node_index, std::uint64_t word) const {
    if (!node_stored(node_index))
        throw Error("node " + std::to_string(node_index) + " is not stored");
    return storage_wires_[node_storage_base_[static_cast<std::size_t>(node_index)] + word];
}

std::uint32_t ProductTreeProvider::zero_wire() {
    if (!zero_wire_) {
        zero_wire_ = circuit_.alloc_wire(WireRole::Scratch);
        owned_wires_.push_back(*zero_wire_);
    }
    return *zero_wire_;
}

std::optional<std::uint32_t> ProductTreeProvider::stored_or_literal(int node_index,
                                                                    std::uint64_t selector) const {
    const TreeNode& node = tree_.nodes[static_cast<std::size_t>(node_index)];
    const std::uint64_t word = local_word(node, selector);
    if (node.size() == 1) {
        const VarWires& v = vars_[static_cast<std::size_t>(node.var_begin)];
        if (mode_ == ProviderMode::And)
            return word ? v.pos : v.neg;
        return word ? std::optional<std::uint32_t>(v.pos) : std::nullopt;
    }
    if (node_stored(node_index)) {
        if (mode_ == ProviderMode::Xor && word == 0)
            return std::nullopt; // that storage wire just holds the empty XOR
        return storage_wire(node_index, word);
    }
    throw Error("node value not directly available");
}

std::uint32_t ProductTreeProvider::acquire_scratch(Handle& h) {
    if (scratch_free_.empty())
        throw ScratchExhausted("scratch pool empty; outstanding handle not released?");
    const std::uint32_t w = scratch_free_.back();
    scratch_free_.pop_back();
    h.scratch.push_back(w);
    return w;
}

void ProductTreeProvider::emit(const Gate& g, Handle& h) {
    circuit_.add_gate(g);
    emitted_gates_.push_back(g);
    h.trace.push_back(g);
    ++stats_.emitted;
}

ProductTreeProvider::Operands ProductTreeProvider::operands_of(int node_index,
                                                               std::uint64_t selector, Handle& h) {
    const TreeNode& node = tree_.nodes[static_cast<std::size_t>(node_index)];
    if (node.is_leaf()) {
        // Unstored size-2 leaf: the operands are the literal wires.
        const std::uint64_t word = local_word(node, selector);
        const VarWires& v0 = vars_[static_cast<std::size_t>(node.var_begin)];
        const VarWires& v1 = vars_[static_cast<std::size_t>(node.var_begin + 1)];
        if (mode_ == ProviderMode::And)
            return {(word & 1) ? v0.pos : v0.neg, (word & 2) ? v1.pos : v1.neg};
        return {(word & 1) ? std::optional<std::uint32_t>(v0.pos) : std::nullopt,
                (word & 2) ? std::optional<std::uint32_t>(v1.pos) : std::nullopt};
    }
    return {value_of(node.child0, selector, h), value_of(node.child1, selector, h)};
}

std::optional<std::uint32_t> ProductTreeProvider::value_of(int node_index, std::uint64_t selector,
                                                           Handle& h) {
    const TreeNode& node = tree_.nodes[static_cast<std::size_t>(node_index)];
    if (node.size() == 1 || node_stored(node_index))
        return stored_or_literal(node_index, selector);

    const auto [a, b] = operands_of(node_index, selector, h);
    if (mode_ == ProviderMode::And) {
        const std::uint32_t s = acquire_scratch(h);
        emit(Gate::make_ccnot(*a, *b, s), h);
        return s;
    }
    if (!a && !b)
        return std::nullopt;
    if (!a || !b)
        return a ? a : b;
    const std::uint32_t s = acquire_scratch(h);
    emit(Gate::make_cnot(*a, s), h);
    emit(Gate::make_cnot(*b, s), h);
    return s;
}

void ProductTreeProvider::materialize() {
    if (materialized_)
        throw Error("provider already materialized");
    materialized_ = true;
    for (int level = tree_.levels; level >= plan_.first_stored_level; --level) {
        for (std::size_t i = 0; i < tree_.nodes.size(); ++i) {
            const TreeNode& node = tree_.nodes[i];
            if (node.level != level || node.size() < 2)
                continue;
            const int size0 = tree_.nodes[static_cast<std::size_t>(
                                              node.child0 < 0 ? 0 : node.child0)]
                                  .size();
            for (std::uint64_t word = 0; word < (std::uint64_t{1} << node.size()); ++word) {
                const std::uint32_t target = storage_wire(static_cast<int>(i), word);
                std::optional<std::uint32_t> a, b;
                if (node.is_leaf()) {
                    // Size-2 leaf: operands are the literal wires themselves.
                    const VarWires& v0 = vars_[static_cast<std::size_t>(node.var_begin)];
                    const VarWires& v1 = vars_[static_cast<std::size_t>(node.var_begin + 1)];
                    if (mode_ == ProviderMode::And) {
                        a = (word & 1) ? v0.pos : v0.neg;
                        b = (word & 2) ? v1.pos : v1.neg;
                    } else {
                        a = (word & 1) ? std::optional<std::uint32_t>(v0.pos) : std::nullopt;
                        b = (word & 2) ? std::optional<std::uint32_t>(v1.pos) : std::nullopt;
                    }
                } else {
                    const std::uint64_t w0 = word & ((std::uint64_t{1} << size0) - 1);
                    const std::uint64_t w1 = word >> size0;
                    const std::uint64_t shifted0 = w0 << node.var_begin;
                    const std::uint64_t shifted1 = w1 << (node.var_begin + size0);
                    a = stored_or_literal(node.child0, shifted0);
                    b = stored_or_literal(node.child1, shifted1);
                }
                auto put = [&](const Gate& g) {
                    circuit_.add_gate(g);
                    emitted_gates_.push_back(g);
                    materialize_gates_.push_back(g);
                    ++stats_.emitted;
                };
                if (mode_ == ProviderMode::And) {
                    put(Gate::make_ccnot(*a, *b, target));
                } else {
                    if (a)
                        put(Gate::make_cnot(*a, target));
                    if (b)
                        put(Gate::make_cnot(*b, target));
                }
            }
        }
    }
}

void ProductTreeProvider::unmaterialize() {
    if (!materialized_)
        throw Error("provider not materialized");
    for (auto it = materialize_gates_.rbegin(); it != materialize_gates_.rend(); ++it) {
        circuit_.add_gate(*it);
        unmaterialize_gates_.push_back(*it);
        ++stats_.unmaterialize_emitted;
    }
    materialized_ = false;
    materialize_gates_.clear();
}

Handle ProductTreeProvider::request(std::uint64_t selector) {
    ++stats_.t;
    Handle h;
    const auto value = value_of(0, selector, h);
    if (value) {
        h.wire = *value;
    } else {
        h.zero = true;
        h.wire = zero_wire();
    }
    return h;
}

void ProductTreeProvider::realize_into(std::uint64_t selector, std::uint32_t target) {
    ++stats_.t;
    const TreeNode& root = tree_.nodes[0];
    auto put = [&](const Gate& g) {
        circuit_.add_gate(g);
        emitted_gates_.push_back(g);
        ++stats_.emitted;
    };
    if (root.size() == 1 || node_stored(0)) {
        const auto value = stored_or_literal(0, selector);
        if (value)
            put(Gate::make_cnot(*value, target));
        return;
    }
    Handle operands;
    const auto [a, b] = operands_of(0, selector, operands);
    if (mode_ == ProviderMode::And) {
        put(Gate::make_ccnot(*a, *b, target));
    } else {
        if (a)
            put(Gate::make_cnot(*a, target));
        if (b)
            put(Gate::make_cnot(*b, target));
    }
    // Uncompute the operands right away; only `target` keeps a value.
    for (auto it = operands.trace.rbegin(); it != operands.trace.rend(); ++it)
        put(*it);
    for (auto it = operands.scratch.rbegin(); it != operands.scratch.rend(); ++it)
        scratch_free_.push_back(*it);
}

void ProductTreeProvider::release(Handle& handle) {
    if (handle.released)
        throw DoubleRelease("handle already released");
    for (auto it = handle.trace.rbegin(); it != handle.trace.rend(); ++it) {
        circuit_.add_gate(*it);
        emitted_gates_.push_back(*it);
        ++stats_.emitted;
    }
    for (auto it = handle.scratch.rbegin(); it != handle.scratch.rend(); ++it)
        scratch_free_.push_back(*it);
    handle.released = true;
}

} // namespace rlsyn

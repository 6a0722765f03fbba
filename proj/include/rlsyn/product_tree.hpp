#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rlsyn/circuit.hpp"

namespace rlsyn {

enum class ProviderMode : std::uint8_t { And, Xor };

/// Literal wires for one variable: `pos` carries x, `neg` carries its
/// complement. Xor mode only ever reads `pos`.
struct VarWires {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
};

/// One node of the balanced product tree over a contiguous variable range.
/// Levels are numbered 1 at the root (output side) up to `levels` at the
/// leaves (input side); every node of size >= 2 below the last level splits
/// into a floor(m/2) first child and a ceil(m/2) second child.
struct TreeNode {
    int var_begin = 0;
    int var_end = 0;
    int level = 1;
    int child0 = -1;
    int child1 = -1;

    int size() const { return var_end - var_begin; }
    bool is_leaf() const { return child0 < 0; }
};

struct TreePlan {
    std::vector<TreeNode> nodes; // nodes[0] is the root
    int var_count = 0;
    int levels = 0; // K = ceil(log2 m), at least 1

    static TreePlan build(int var_count);

    /// Storage demand of one level: sum of 2^size over its size>=2 nodes
    /// (size-1 leaves are literal wires and consume nothing).
    std::uint64_t level_storage(int level) const;
    /// Size>=2 nodes strictly above the storage cut; this is the exact
    /// scratch demand of one full on-demand request.
    int emitting_nodes_above(int first_stored_level) const;
};

/// Which level suffix is stored and how much scratch the on-demand remainder
/// needs. `scratch_wires` counts the exact per-request demand, which never
/// exceeds 2^r - 1.
struct StoragePlan {
    int stored_level_count = 0;
    int first_stored_level = 0; // levels + 1 when nothing is stored
    int r = 0;                  // on-demand levels
    std::uint64_t stored_wires = 0;
    int scratch_wires = 0;

    std::uint64_t cost() const { return stored_wires + scratch_wires; }
};

/// Greedy split: store whole levels from the leaf side down while the total
/// of stored outputs plus remaining scratch fits the budget. A budget below
/// the fully on-demand scratch demand (at most m - 1 wires) still yields the
/// store-nothing plan; that scratch is the provider's unavoidable floor.
StoragePlan storage_split(const TreePlan& plan, std::uint64_t budget);

/// An outstanding provider value: the wire carrying it plus the trace needed
/// to uncompute it on release.
struct Handle {
    std::uint32_t wire = 0;
    std::vector<Gate> trace;
    std::vector<std::uint32_t> scratch;
    bool released = false;
    bool zero = false; // Xor mode, empty linear form
};

struct ProviderStats {
    std::uint64_t t = 0;       // request count (request + realize_into)
    std::uint64_t emitted = 0; // materialize + request + release gates
    std::uint64_t unmaterialize_emitted = 0;
};

/// Preallocated wires handed to a provider instead of fresh allocations;
/// lets the synthesizer reuse one wire block across the per-group XOR
/// providers.
class WirePool {
  public:
    explicit WirePool(std::vector<std::uint32_t> wires) : wires_(std::move(wires)) {}

    void reset() { next_ = 0; }
    std::uint32_t take();
    std::size_t size() const { return wires_.size(); }

  private:
    std::vector<std::uint32_t> wires_;
    std::size_t next_ = 0;
};

/// S_CONJ / S_XOR: serves every conjunction (And mode) or linear form
/// (Xor mode) over its variables, storing a level suffix of the product tree
/// and computing the rest on demand with uncomputation.
class ProductTreeProvider {
  public:
    ProductTreeProvider(ProviderMode mode, std::vector<VarWires> vars, std::uint64_t budget,
                        Circuit& circuit, WirePool* pool = nullptr);

    ProviderMode mode() const { return mode_; }
    int var_count() const { return tree_.var_count; }
    std::uint64_t budget() const { return budget_; }
    const TreePlan& tree() const { return tree_; }
    const StoragePlan& plan() const { return plan_; }
    const ProviderStats& stats() const { return stats_; }
    /// Every gate this provider appended, in order (uncomputation of the
    /// stored levels excluded; see unmaterialize_gates()).
    const std::vector<Gate>& emitted_gates() const { return emitted_gates_; }
    const std::vector<Gate>& unmaterialize_gates() const { return unmaterialize_gates_; }
    /// All wires this provider allocated or was handed: storage + scratch
    /// (+ the lazily created constant-0 wire in Xor mode).
    const std::vector<std::uint32_t>& wires() const { return owned_wires_; }
    int wires_consumed() const { return static_cast<int>(owned_wires_.size()); }

    /// Storage wire of a stored node's output `word` (bit j of word = the
    /// polarity of the node's j-th variable); for unit tests.
    std::uint32_t storage_wire(int node_index, std::uint64_t word) const;

    /// Emit the stored levels, children before parents. And mode: one 2-CNOT
    /// per stored output; Xor mode: up to two CNOTs, skipping constant-0
    /// sources.
    void materialize();
    /// Replay the materialization in reverse, zeroing every storage wire.
    void unmaterialize();

    /// Selector bit j (LSB first) is the polarity of variable j. And mode:
    /// the handle's wire carries the conjunction of the selected literals;
    /// Xor mode: the XOR of the selected variables, with the all-zero
    /// selector served by a dedicated constant-0 wire.
    Handle request(std::uint64_t selector);

    /// XOR the requested value into `target` and leave no scratch behind:
    /// compute the root's operands, apply the final gate(s) onto `target`,
    /// then uncompute the operands. Calling it again with the same selector
    /// zeroes the target. Counts as one request.
    void realize_into(std::uint64_t selector, std::uint32_t target);

    /// Replay the handle's trace in reverse; its scratch wires read 0 on
    /// every input afterwards and return to the pool.
    void release(Handle& handle);

  private:
    using Operands = std::pair<std::optional<std::uint32_t>, std::optional<std::uint32_t>>;

    std::uint32_t acquire_scratch(Handle& h);
    /// Child values for an unstored size>=2 node; size-2 leaves draw their
    /// operands straight from the literal wires.
    Operands operands_of(int node_index, std::uint64_t selector, Handle& h);
    void emit(const Gate& g, Handle& h);
    bool node_stored(int node_index) const;
    /// Wire holding node value for the selector, or nullopt when the value
    /// is identically zero (Xor mode only). May emit gates into `h`.
    std::optional<std::uint32_t> value_of(int node_index, std::uint64_t selector, Handle& h);
    std::optional<std::uint32_t> stored_or_literal(int node_index, std::uint64_t selector) const;
    std::uint64_t local_word(const TreeNode& node, std::uint64_t selector) const {
        return (selector >> node.var_begin) & ((std::uint64_t{1} << node.size()) - 1);
    }
    std::uint32_t zero_wire();

    ProviderMode mode_;
    std::vector<VarWires> vars_;
    std::uint64_t budget_;
    Circuit& circuit_;
    TreePlan tree_;
    StoragePlan plan_;
    std::vector<std::uint32_t> storage_wires_;
    std::vector<std::uint64_t> node_storage_base_; // per node, or ~0 when unstored
    std::vector<std::uint32_t> scratch_free_;
    std::vector<std::uint32_t> owned_wires_;
    std::optional<std::uint32_t> zero_wire_;
    std::vector<Gate> emitted_gates_;
    std::vector<Gate> materialize_gates_;
    std::vector<Gate> unmaterialize_gates_;
    bool materialized_ = false;
    ProviderStats stats_;
};

} // namespace rlsyn

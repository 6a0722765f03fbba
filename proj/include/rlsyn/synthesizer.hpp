#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rlsyn/bounds.hpp"
#include "rlsyn/circuit.hpp"
#include "rlsyn/product_tree.hpp"
#include "rlsyn/truth_table.hpp"

namespace rlsyn {

/// Strategy 1 builds each suffix conjunction once and walks the outputs
/// (minimizes t2); strategy 2 builds each linear form once and walks its
/// uses (minimizes t3).
enum class Strategy : int { MinimizeT2 = 1, MinimizeT3 = 2 };

struct SynthesisParams {
    int k = 0; // split point over x_1..x_k
    int s = 0; // conjunctions per group
    int p = 0; // ceil(2^k / s) groups
    std::uint64_t q1 = 0;
    std::uint64_t q2 = 0;
    std::uint64_t q3 = 0;
    Strategy strategy = Strategy::MinimizeT2;
};

/// Where every ancilla wire went; totals must match the measured Q.
struct AncillaLedger {
    int negations = 0;
    int outputs = 0;
    int holders = 0;
    int s1_scratch = 0;
    int s2_wires = 0;
    int s3_pool = 0;

    int total() const {
        return negations + outputs + holders + s1_scratch + s2_wires + s3_pool;
    }
};

/// Post-synthesis audit of one provider: request count, gates, wires, and
/// the standalone depth of its emitted gate subsequence.
struct ProviderAudit {
    ProviderMode mode = ProviderMode::And;
    int m = 0;
    std::uint64_t q_p = 0;
    int r = 0;
    std::uint64_t t = 0;
    std::uint64_t emitted = 0;
    std::uint64_t unmaterialize_emitted = 0;
    std::uint64_t depth = 0;
    int wires = 0;
};

struct StageCounts {
    std::uint64_t negation = 0;
    std::uint64_t s1 = 0;
    std::uint64_t s2 = 0;
    std::uint64_t s3 = 0; // all groups, uncomputation included
    std::uint64_t output = 0;
};

struct SynthesisReport {
    int n = 0;
    std::uint64_t q = 0;
    SynthesisParams params;

    std::uint64_t gate_count = 0;
    std::uint64_t depth = 0;
    int ancilla = 0;

    std::uint64_t t1 = 0;
    std::uint64_t t2 = 0;
    std::uint64_t t3_total = 0;
    std::uint64_t t3_max_group = 0;

    std::uint64_t t2_cap = 0;
    std::uint64_t t3_group_cap = 0;
    std::uint64_t output_cap = 0; // p * n * 2^(n-k)

    StageCounts stages;
    ProviderAudit s1_audit;
    ProviderAudit s2_audit;
    std::vector<ProviderAudit> s3_audits; // one per group
    AncillaLedger ledger;

    bounds::BoundReport l_bound; // whole-circuit bounds at (n, q)
    bounds::BoundReport d_bound;
};

/// Coefficient function of the expansion over the last n-k variables:
/// sigma -> f_i(<sigma, a>), indexed by sigma with x_1 most significant.
/// `output` and the suffix index `a` are 0-based.
std::vector<bool> restrict_output(const TruthTable& tt, int output, std::uint32_t suffix, int k);

/// Minterms 0..2^k-1 split into p consecutive blocks of at most s.
struct GroupPlan {
    int k = 0;
    int s = 0;
    int p = 0;

    int group_begin(int t) const { return t * s; }
    int group_size(int t) const {
        const int total = 1 << k;
        return std::min(s, total - group_begin(t));
    }
};

GroupPlan plan_groups(const TruthTable& tt, int k, int s);

/// Selector word over group t's minterms for (output i, suffix a):
/// bit j = f_i(<sigma_{t*s+j}, a>).
std::uint64_t group_selector(const TruthTable& tt, const GroupPlan& plan, int output, int group,
                             std::uint32_t suffix);

/// Smallest ancilla budget any (k, s) point accepts.
std::uint64_t min_budget(int n, std::optional<int> k_override = {},
                         std::optional<int> s_override = {});

/// Searches k (and s = n - k unless overridden), splits the leftover budget
/// evenly between q2 and q3 on top of each provider's scratch floor, and
/// returns the feasible point with the smallest predicted gate count.
/// Throws QBudgetTooSmall when nothing fits.
SynthesisParams select_params(int n, std::uint64_t q, Strategy strategy,
                              std::optional<int> k_override = {},
                              std::optional<int> s_override = {});

std::pair<Circuit, SynthesisReport> synthesize(const TruthTable& tt, std::uint64_t q,
                                               Strategy strategy,
                                               std::optional<SynthesisParams> params = {});

/// True iff measured Q fits the budget and the ledger matches the wires the
/// circuit actually allocated.
bool ancilla_audit(const SynthesisReport& report, std::uint64_t q);

} // namespace rlsyn

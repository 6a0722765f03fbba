#include "rlsyn/synthesizer.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>

#include "rlsyn/metrics.hpp"

namespace rlsyn {

namespace {

/// Minterm and suffix indices are MSB-first (x_1 first); provider selectors
/// are LSB-first (bit j = variable j). Bridge between the two.
std::uint64_t msb_to_lsb(std::uint64_t word, int m) {
    std::uint64_t out = 0;
    for (int j = 0; j < m; ++j)
        if ((word >> (m - 1 - j)) & 1)
            out |= std::uint64_t{1} << j;
    return out;
}

struct ParamPoint {
    SynthesisParams params;
    std::uint64_t min_q = 0;
    bool feasible = false;
    double score = 0.0;
};

int scratch_floor(int m) { return m >= 2 ? m - 1 : 0; }

ParamPoint evaluate_point(int n, std::uint64_t q, int k, int s, Strategy strategy) {
    ParamPoint point;
    const int m2 = n - k;
    const std::uint64_t minterms = std::uint64_t{1} << k;
    const int p = static_cast<int>((minterms + s - 1) / static_cast<std::uint64_t>(s));

    const int holders = k >= 2 ? s : 0;
    const int s1_scratch = scratch_floor(k);
    const int ms2 = scratch_floor(m2);
    const int ms3 = scratch_floor(s);
    const std::uint64_t base = 2 * static_cast<std::uint64_t>(n) + holders + s1_scratch;
    point.min_q = base + ms2 + ms3;
    point.params = SynthesisParams{k, s, p, 0, 0, 0, strategy};
    if (q < point.min_q)
        return point;
    point.feasible = true;

    // q1 = 0; the leftover splits evenly on top of each scratch floor, odd
    // wire to q2.
    const std::uint64_t extra = q - point.min_q;
    point.params.q2 = ms2 + (extra + 1) / 2;
    point.params.q3 = ms3 + extra / 2;

    const TreePlan tree2 = TreePlan::build(m2);
    const TreePlan tree3 = TreePlan::build(s);
    const StoragePlan plan2 = storage_split(tree2, point.params.q2);
    const StoragePlan plan3 = storage_split(tree3, point.params.q3);

    const double t1 = 2.0 * static_cast<double>(minterms);
    const double suffixes = static_cast<double>(std::uint64_t{1} << m2);
    const double t2_cap = strategy == Strategy::MinimizeT2 ? p * suffixes : p * n * suffixes;
    const double t3_group_cap = strategy == Strategy::MinimizeT2
                                    ? n * suffixes
                                    : static_cast<double>(std::uint64_t{1} << s);

    double score = 2.0 * n;
    if (k >= 2)
        score += 2.0 * (k - 1) * t1;
    score += static_cast<double>(plan2.stored_wires) + 2.0 * t2_cap * plan2.scratch_wires;
    score += p * (4.0 * static_cast<double>(plan3.stored_wires) +
                  4.0 * t3_group_cap * plan3.scratch_wires);
    score += p * n * suffixes;
    point.score = score;
    return point;
}

ProviderAudit audit_provider(const ProductTreeProvider& provider, std::uint32_t width) {
    ProviderAudit audit;
    audit.mode = provider.mode();
    audit.m = provider.var_count();
    audit.q_p = provider.budget();
    audit.r = provider.plan().r;
    audit.t = provider.stats().t;
    audit.emitted = provider.stats().emitted;
    audit.unmaterialize_emitted = provider.stats().unmaterialize_emitted;
    audit.depth = depth(provider.emitted_gates(), width);
    audit.wires = provider.wires_consumed();
    return audit;
}

} // namespace

std::vector<bool> restrict_output(const TruthTable& tt, int output, std::uint32_t suffix, int k) {
    const int m2 = tt.n - k;
    std::vector<bool> values(std::size_t{1} << k);
    for (std::uint32_t sigma = 0; sigma < (std::uint32_t{1} << k); ++sigma)
        values[sigma] = tt.output_bit((sigma << m2) | suffix, output);
    return values;
}

GroupPlan plan_groups(const TruthTable& tt, int k, int s) {
    if (k < 1 || k >= tt.n)
        throw Error("split point k must satisfy 1 <= k <= n-1");
    if (s < 1 || static_cast<std::uint64_t>(s) > (std::uint64_t{1} << k))
        throw Error("group size s must satisfy 1 <= s <= 2^k");
    GroupPlan plan;
    plan.k = k;
    plan.s = s;
    plan.p = static_cast<int>(((std::uint64_t{1} << k) + s - 1) / static_cast<std::uint64_t>(s));
    return plan;
}

std::uint64_t group_selector(const TruthTable& tt, const GroupPlan& plan, int output, int group,
                             std::uint32_t suffix) {
    const int m2 = tt.n - plan.k;
    std::uint64_t word = 0;
    const int begin = plan.group_begin(group);
    const int size = plan.group_size(group);
    for (int j = 0; j < size; ++j) {
        const std::uint32_t sigma = static_cast<std::uint32_t>(begin + j);
        if (tt.output_bit((sigma << m2) | suffix, output))
            word |= std::uint64_t{1} << j;
    }
    return word;
}

std::uint64_t min_budget(int n, std::optional<int> k_override, std::optional<int> s_override) {
    if (n < 2)
        throw Error("synthesis needs n >= 2");
    std::uint64_t best = ~std::uint64_t{0};
    for (int k = 1; k < n; ++k) {
        if (k_override && *k_override != k)
            continue;
        const int s = s_override ? *s_override
                                 : std::min<int>(n - k, static_cast<int>(
                                                            std::min<std::uint64_t>(
                                                                std::uint64_t{1} << k, 63)));
        if (s < 1 || static_cast<std::uint64_t>(s) > (std::uint64_t{1} << k))
            continue;
        best = std::min(best, evaluate_point(n, 0, k, s, Strategy::MinimizeT2).min_q);
    }
    if (best == ~std::uint64_t{0})
        throw Error("no admissible (k, s) point");
    return best;
}

SynthesisParams select_params(int n, std::uint64_t q, Strategy strategy,
                              std::optional<int> k_override, std::optional<int> s_override) {
    if (n < 2)
        throw Error("synthesis needs n >= 2");
    std::optional<ParamPoint> best;
    std::uint64_t smallest_min = ~std::uint64_t{0};
    for (int k = 1; k < n; ++k) {
        if (k_override && *k_override != k)
            continue;
        const int s = s_override ? *s_override
                                 : std::min<int>(n - k, static_cast<int>(
                                                            std::min<std::uint64_t>(
                                                                std::uint64_t{1} << k, 63)));
        if (s < 1 || static_cast<std::uint64_t>(s) > (std::uint64_t{1} << k))
            continue;
        ParamPoint point = evaluate_point(n, q, k, s, strategy);
        smallest_min = std::min(smallest_min, point.min_q);
        if (point.feasible && (!best || point.score < best->score))
            best = point;
    }
    if (!best) {
        if (smallest_min == ~std::uint64_t{0})
            throw Error("no admissible (k, s) point");
        throw QBudgetTooSmall(smallest_min,
                              "budget q = " + std::to_string(q) + " too small; minimum is " +
                                  std::to_string(smallest_min));
    }
    return best->params;
}

std::pair<Circuit, SynthesisReport> synthesize(const TruthTable& tt, std::uint64_t q,
                                               Strategy strategy,
                                               std::optional<SynthesisParams> params_override) {
    const int n = tt.n;
    if (tt.entries.size() != (std::size_t{1} << n))
        throw WidthMismatch("truth table entry count does not match n");
    SynthesisParams params =
        params_override ? *params_override : select_params(n, q, strategy);
    const int k = params.k;
    const int s = params.s;
    const int m2 = n - k;
    GroupPlan gplan = plan_groups(tt, k, s);
    params.p = gplan.p;

    SynthesisReport report;
    report.n = n;
    report.q = q;
    report.params = params;

    Circuit circuit(n);

    // Negation stage: a CNOT copy plus a NOT per input.
    std::vector<std::uint32_t> neg(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        neg[static_cast<std::size_t>(i)] = circuit.alloc_wire(WireRole::Negation);
        circuit.add_gate(Gate::make_cnot(static_cast<std::uint32_t>(i), neg[i]));
        circuit.add_gate(Gate::make_not(neg[i]));
    }
    report.stages.negation = 2 * static_cast<std::uint64_t>(n);

    // Holders keep a group's conjunctions alive while its linear forms are
    // built; with k = 1 the literal wires serve directly.
    std::vector<std::uint32_t> holders;
    std::optional<ProductTreeProvider> s1;
    if (k >= 2) {
        for (int j = 0; j < s; ++j)
            holders.push_back(circuit.alloc_wire(WireRole::Storage));
        std::vector<VarWires> vars1;
        for (int j = 0; j < k; ++j)
            vars1.push_back({static_cast<std::uint32_t>(j), neg[static_cast<std::size_t>(j)]});
        s1.emplace(ProviderMode::And, std::move(vars1), params.q1, circuit);
    }

    std::vector<VarWires> vars2;
    for (int j = k; j < n; ++j)
        vars2.push_back({static_cast<std::uint32_t>(j), neg[static_cast<std::size_t>(j)]});
    ProductTreeProvider s2(ProviderMode::And, std::move(vars2), params.q2, circuit);
    s2.materialize();

    // One wire block serves every per-group XOR provider.
    std::uint64_t pool_size = 0;
    for (int t = 0; t < gplan.p; ++t) {
        const StoragePlan plan3 =
            storage_split(TreePlan::build(gplan.group_size(t)), params.q3);
        pool_size = std::max(pool_size, plan3.cost());
    }
    std::vector<std::uint32_t> pool_wires;
    for (std::uint64_t i = 0; i < pool_size; ++i)
        pool_wires.push_back(circuit.alloc_wire(WireRole::Scratch));

    std::vector<std::uint32_t> outs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        outs[static_cast<std::size_t>(i)] = circuit.alloc_wire(WireRole::Output);
    circuit.set_output_wires(outs);

    const std::uint32_t suffix_count = std::uint32_t{1} << m2;
    std::uint64_t t1_literal = 0;
    std::uint64_t output_gates = 0;

    for (int t = 0; t < gplan.p; ++t) {
        const int gs = gplan.group_size(t);
        const int begin = gplan.group_begin(t);

        std::vector<std::uint32_t> conj(static_cast<std::size_t>(gs));
        for (int j = 0; j < gs; ++j) {
            const std::uint64_t sigma = static_cast<std::uint64_t>(begin + j);
            if (k == 1) {
                conj[static_cast<std::size_t>(j)] = sigma ? 0 : neg[0];
                ++t1_literal;
            } else {
                s1->realize_into(msb_to_lsb(sigma, k), holders[static_cast<std::size_t>(j)]);
                conj[static_cast<std::size_t>(j)] = holders[static_cast<std::size_t>(j)];
            }
        }

        std::vector<VarWires> vars3;
        for (std::uint32_t w : conj)
            vars3.push_back({w, 0});
        WirePool pool(pool_wires);
        ProductTreeProvider s3(ProviderMode::Xor, std::move(vars3), params.q3, circuit, &pool);
        s3.materialize();

        if (strategy == Strategy::MinimizeT2) {
            for (std::uint32_t a = 0; a < suffix_count; ++a) {
                std::vector<std::uint64_t> gw(static_cast<std::size_t>(n));
                bool any = false;
                for (int i = 0; i < n; ++i) {
                    gw[static_cast<std::size_t>(i)] = group_selector(tt, gplan, i, t, a);
                    any = any || gw[static_cast<std::size_t>(i)] != 0;
                }
                if (!any)
                    continue;
                Handle h2 = s2.request(msb_to_lsb(a, m2));
                for (int i = 0; i < n; ++i) {
                    if (!gw[static_cast<std::size_t>(i)])
                        continue;
                    Handle h3 = s3.request(gw[static_cast<std::size_t>(i)]);
                    circuit.add_gate(Gate::make_ccnot(h2.wire, h3.wire,
                                                      outs[static_cast<std::size_t>(i)]));
                    ++output_gates;
                    s3.release(h3);
                }
                s2.release(h2);
            }
        } else {
            std::map<std::uint64_t, std::vector<std::pair<int, std::uint32_t>>> uses;
            for (std::uint32_t a = 0; a < suffix_count; ++a)
                for (int i = 0; i < n; ++i) {
                    const std::uint64_t g = group_selector(tt, gplan, i, t, a);
                    if (g)
                        uses[g].push_back({i, a});
                }
            for (const auto& [g, list] : uses) {
                Handle h3 = s3.request(g);
                for (const auto& [i, a] : list) {
                    Handle h2 = s2.request(msb_to_lsb(a, m2));
                    circuit.add_gate(Gate::make_ccnot(h2.wire, h3.wire,
                                                      outs[static_cast<std::size_t>(i)]));
                    ++output_gates;
                    s2.release(h2);
                }
                s3.release(h3);
            }
        }

        s3.unmaterialize();
        report.t3_total += s3.stats().t;
        report.t3_max_group = std::max(report.t3_max_group, s3.stats().t);
        report.stages.s3 += s3.stats().emitted + s3.stats().unmaterialize_emitted;
        report.s3_audits.push_back(audit_provider(s3, circuit.width()));

        // Zero the holders by realizing the same conjunctions once more.
        for (int j = gs - 1; j >= 0; --j) {
            if (k == 1) {
                ++t1_literal;
            } else {
                const std::uint64_t sigma = static_cast<std::uint64_t>(begin + j);
                s1->realize_into(msb_to_lsb(sigma, k), holders[static_cast<std::size_t>(j)]);
            }
        }
    }

    report.t1 = k == 1 ? t1_literal : s1->stats().t;
    report.t2 = s2.stats().t;
    report.stages.s1 = k == 1 ? 0 : s1->stats().emitted;
    report.stages.s2 = s2.stats().emitted;
    report.stages.output = output_gates;

    report.t2_cap = strategy == Strategy::MinimizeT2
                        ? static_cast<std::uint64_t>(gplan.p) * suffix_count
                        : static_cast<std::uint64_t>(gplan.p) * n * suffix_count;
    report.t3_group_cap = strategy == Strategy::MinimizeT2
                              ? static_cast<std::uint64_t>(n) * suffix_count
                              : std::uint64_t{1} << s;
    report.output_cap = static_cast<std::uint64_t>(gplan.p) * n * suffix_count;

    if (k >= 2) {
        report.s1_audit = audit_provider(*s1, circuit.width());
    } else {
        report.s1_audit.mode = ProviderMode::And;
        report.s1_audit.m = 1;
        report.s1_audit.t = report.t1;
    }
    report.s2_audit = audit_provider(s2, circuit.width());

    report.ledger.negations = n;
    report.ledger.outputs = n;
    report.ledger.holders = static_cast<int>(holders.size());
    report.ledger.s1_scratch = k >= 2 ? s1->wires_consumed() : 0;
    report.ledger.s2_wires = s2.wires_consumed();
    report.ledger.s3_pool = static_cast<int>(pool_wires.size());

    const Metrics metrics = compute_metrics(circuit);
    report.gate_count = metrics.gate_count;
    report.depth = metrics.depth;
    report.ancilla = metrics.ancilla;
    assert(report.ledger.total() == report.ancilla);
    assert(report.gate_count == report.stages.negation + report.stages.s1 + report.stages.s2 +
                                    report.stages.s3 + report.stages.output);

    report.l_bound = bounds::l_shannon_upper(n, static_cast<double>(q));
    report.d_bound = bounds::d_shannon_upper(n, static_cast<double>(q));
    return {std::move(circuit), std::move(report)};
}

bool ancilla_audit(const SynthesisReport& report, std::uint64_t q) {
    return static_cast<std::uint64_t>(report.ancilla) <= q &&
           report.ledger.total() == report.ancilla;
}

} // namespace rlsyn

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlsyn/circuit.hpp"
#include "rlsyn/synthesizer.hpp"
#include "rlsyn/truth_table.hpp"

namespace rlsyn::io {

/// Truth-table text: optional `#` comments, a header `n <int>`, then exactly
/// 2^n binary lines; line x holds f(x) with f_1 written first.
TruthTable parse_truth_table(const std::string& text);
std::string write_truth_table(const TruthTable& tt);

/// TFC-style netlist. Wire names: inputs x1..xn, negations nx1..nxn, outputs
/// y1..yn, remaining ancilla w1, w2, ... in allocation order. A `# roles`
/// comment preserves the storage/scratch distinction that the names alone
/// cannot, so parse(write(c)) == c including roles.
std::string write_netlist(const Circuit& circuit);
Circuit parse_netlist(const std::string& text);

/// Stable-key-order JSON report of one synthesis run.
nlohmann::ordered_json report_to_json(const SynthesisReport& report);

struct BenchRow {
    int n = 0;
    std::uint64_t q = 0;
    int strategy = 1;
    int k = 0;
    int s = 0;
    std::uint64_t gate_count = 0;
    std::uint64_t depth = 0;
    int ancilla = 0;
    std::uint64_t t1 = 0;
    std::uint64_t t2 = 0;
    std::uint64_t t3 = 0;
    double l_bound = 0.0;
    double d_bound = 0.0;
    bool valid = false; // bounds in domain, Q <= q, and verification passed
};

/// One random table per n (from `seed`), synthesized at every (q, strategy)
/// grid point; infeasible points are skipped. Rows come out ordered by
/// (n, q, strategy).
std::vector<BenchRow> run_bench(const std::vector<int>& ns, const std::vector<std::uint64_t>& qs,
                                const std::vector<Strategy>& strategies, std::uint64_t seed);

std::string bench_to_csv(const std::vector<BenchRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace rlsyn::io

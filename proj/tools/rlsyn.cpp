#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rlsyn/bounds.hpp"
#include "rlsyn/io.hpp"
#include "rlsyn/metrics.hpp"
#include "rlsyn/simulator.hpp"
#include "rlsyn/synthesizer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitWidthMismatch = 4;

int run_synth(const std::string& table_path, std::uint64_t q, int strategy,
              std::optional<int> k, std::optional<int> s, const std::string& out_path,
              const std::string& report_path) {
    const rlsyn::TruthTable tt = rlsyn::io::parse_truth_table(rlsyn::io::read_file(table_path));
    const rlsyn::Strategy strat = static_cast<rlsyn::Strategy>(strategy);
    std::optional<rlsyn::SynthesisParams> params;
    if (k || s)
        params = rlsyn::select_params(tt.n, q, strat, k, s);
    auto [circuit, report] = rlsyn::synthesize(tt, q, strat, params);

    const std::string netlist = rlsyn::io::write_netlist(circuit);
    const std::string json = rlsyn::io::report_to_json(report).dump(2) + "\n";
    if (out_path.empty())
        std::cout << netlist;
    else
        rlsyn::io::write_file(out_path, netlist);
    if (report_path.empty()) {
        if (!out_path.empty())
            std::cout << json;
    } else {
        rlsyn::io::write_file(report_path, json);
    }
    return kExitOk;
}

int run_verify(const std::string& netlist_path, const std::string& table_path) {
    const rlsyn::Circuit circuit =
        rlsyn::io::parse_netlist(rlsyn::io::read_file(netlist_path));
    const rlsyn::TruthTable tt =
        rlsyn::io::parse_truth_table(rlsyn::io::read_file(table_path));
    if (circuit.num_inputs() != tt.n) {
        std::cerr << "width mismatch: netlist has " << circuit.num_inputs()
                  << " significant inputs, table has " << tt.n << "\n";
        return kExitWidthMismatch;
    }
    const rlsyn::VerificationReport report = rlsyn::verify_against(circuit, tt);
    if (report.passed) {
        std::cout << "verified: all " << (1u << tt.n) << " inputs match\n";
        return kExitOk;
    }
    std::cout << report.mismatches.size() << " mismatching inputs\n";
    const std::size_t shown = std::min<std::size_t>(report.mismatches.size(), 16);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& m = report.mismatches[i];
        std::cout << "  x=" << m.input << " expected=" << m.expected << " actual=" << m.actual
                  << "\n";
    }
    return kExitVerifyFailed;
}

int run_simulate(const std::string& netlist_path, const std::string& input_bits, bool all) {
    const rlsyn::Circuit circuit =
        rlsyn::io::parse_netlist(rlsyn::io::read_file(netlist_path));
    if (input_bits.size() != static_cast<std::size_t>(circuit.num_inputs())) {
        std::cerr << "width mismatch: expected " << circuit.num_inputs() << " input bits\n";
        return kExitWidthMismatch;
    }
    std::uint64_t x = 0;
    for (char c : input_bits) {
        if (c != '0' && c != '1') {
            std::cerr << "input must be a binary string\n";
            return kExitError;
        }
        x = (x << 1) | static_cast<std::uint64_t>(c - '0');
    }
    const rlsyn::BitVec state = rlsyn::run(circuit, x);
    if (circuit.output_wires().empty() || all) {
        for (std::uint32_t w = 0; w < circuit.width(); ++w)
            std::cout << "wire " << w << " = " << (state.get(w) ? 1 : 0) << "\n";
    }
    if (!circuit.output_wires().empty()) {
        std::string out;
        for (std::uint32_t w : circuit.output_wires())
            out += state.get(w) ? '1' : '0';
        std::cout << "outputs " << out << "\n";
    }
    return kExitOk;
}

void print_bound(const std::string& name, const rlsyn::bounds::BoundReport& b) {
    std::cout << name << " = " << b.value << (b.valid ? "" : "  (out of domain)") << "\n";
}

int run_bounds(int n, double q, std::optional<std::uint64_t> t) {
    namespace b = rlsyn::bounds;
    std::cout << "q_conj0(n) = " << b::q_conj0(n) << "\n";
    std::cout << "q_conj(n,q) = " << b::q_conj(n, q) << "\n";
    if (t) {
        std::cout << "l_conj0(n,t) = " << b::l_conj0(n, *t) << "\n";
        std::cout << "d_conj0(n,t) = " << b::d_conj0(n, *t) << "\n";
        print_bound("l_conj(n,q,t)", b::l_conj(n, q, static_cast<double>(*t)));
        print_bound("d_conj(n,q,t)", b::d_conj(n, q, static_cast<double>(*t)));
        print_bound("l_xor(n,q,t)", b::l_xor(n, q, static_cast<double>(*t)));
        print_bound("d_xor(n,q,t)", b::d_xor(n, q, static_cast<double>(*t)));
    }
    print_bound("ondemand_factor(n,q)", b::ondemand_factor(n, q));
    std::cout << "storage_levels_bound(n,q) = " << b::storage_levels_bound(n, q) << "\n";
    print_bound("l_shannon_upper(n,q)", b::l_shannon_upper(n, q));
    print_bound("d_shannon_upper(n,q)", b::d_shannon_upper(n, q));
    return kExitOk;
}

int run_bench(const std::vector<int>& ns, const std::vector<std::uint64_t>& qs,
              const std::vector<int>& strategies, std::uint64_t seed,
              const std::string& csv_path) {
    std::vector<rlsyn::Strategy> strats;
    for (int s : strategies)
        strats.push_back(static_cast<rlsyn::Strategy>(s));
    const std::vector<rlsyn::io::BenchRow> rows = rlsyn::io::run_bench(ns, qs, strats, seed);
    const std::string csv = rlsyn::io::bench_to_csv(rows);
    if (csv_path.empty())
        std::cout << csv;
    else
        rlsyn::io::write_file(csv_path, csv);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"reversible-circuit synthesis under an ancilla budget"};
    app.require_subcommand(1);

    std::string table_path, netlist_path, out_path, report_path, csv_path, input_bits;
    std::uint64_t q = 0, seed = 1;
    int strategy = 1, bounds_n = 0;
    double bounds_q = 0.0;
    std::optional<int> opt_k, opt_s;
    std::optional<std::uint64_t> opt_t;
    bool sim_all = false;
    std::vector<int> ns{4};
    std::vector<std::uint64_t> qs;
    std::vector<int> strategies{1, 2};

    CLI::App* synth = app.add_subcommand("synth", "compile a truth table to a netlist");
    synth->add_option("table", table_path, "truth-table file")->required();
    synth->add_option("--q", q, "ancilla budget")->required();
    synth->add_option("--strategy", strategy, "1 or 2")->check(CLI::Range(1, 2));
    synth->add_option("--k", opt_k, "force the split point");
    synth->add_option("--group-size", opt_s, "force the group size s");
    synth->add_option("--out", out_path, "netlist output path (default stdout)");
    synth->add_option("--report", report_path, "JSON report path");

    CLI::App* verify = app.add_subcommand("verify", "check a netlist against a truth table");
    verify->add_option("netlist", netlist_path, "netlist file")->required();
    verify->add_option("table", table_path, "truth-table file")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "run a netlist on one input");
    simulate->add_option("netlist", netlist_path, "netlist file")->required();
    simulate->add_option("--input", input_bits, "binary input, x1 first")->required();
    simulate->add_flag("--all", sim_all, "print every wire");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate the closed-form bounds");
    bounds_cmd->add_option("--n", bounds_n, "significant inputs")->required();
    bounds_cmd->add_option("--q", bounds_q, "ancilla budget")->required();
    bounds_cmd->add_option("--t", opt_t, "request count for the provider bounds");

    CLI::App* bench = app.add_subcommand("bench", "sweep random tables over a q grid");
    bench->add_option("--n-list", ns, "values of n");
    bench->add_option("--q-grid", qs, "ancilla budgets")->required();
    bench->add_option("--strategies", strategies, "subset of {1,2}");
    bench->add_option("--seed", seed, "PRNG seed");
    bench->add_option("--csv", csv_path, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed())
            return run_synth(table_path, q, strategy, opt_k, opt_s, out_path, report_path);
        if (verify->parsed())
            return run_verify(netlist_path, table_path);
        if (simulate->parsed())
            return run_simulate(netlist_path, input_bits, sim_all);
        if (bounds_cmd->parsed())
            return run_bounds(bounds_n, bounds_q, opt_t);
        if (bench->parsed())
            return run_bench(ns, qs, strategies, seed, csv_path);
    } catch (const rlsyn::QBudgetTooSmall& e) {
        std::cerr << "error: " << e.what() << " (minimum budget " << e.minimum_budget << ")\n";
        return kExitBudget;
    } catch (const rlsyn::ParseError& e) {
        std::cerr << "parse error (line " << e.line << "): " << e.what() << "\n";
        return kExitError;
    } catch (const rlsyn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

#include <doctest.h>

#include "rlsyn/io.hpp"
#include "rlsyn/prng.hpp"
#include "rlsyn/simulator.hpp"

using namespace rlsyn;

namespace {

Circuit random_circuit(int width, int gates, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Circuit c(2);
    const WireRole roles[] = {WireRole::Negation, WireRole::Storage, WireRole::Scratch,
                              WireRole::Output};
    std::vector<std::uint32_t> outs;
    for (int w = 2; w < width; ++w) {
        const WireRole role = roles[rng.next_below(4)];
        const std::uint32_t idx = c.alloc_wire(role);
        if (role == WireRole::Output)
            outs.push_back(idx);
    }
    c.set_output_wires(outs);
    for (int i = 0; i < gates; ++i) {
        const std::uint64_t kind = rng.next_below(3);
        const std::uint32_t t = static_cast<std::uint32_t>(rng.next_below(width));
        if (kind == 0) {
            c.add_gate(Gate::make_not(t));
            continue;
        }
        std::uint32_t a = static_cast<std::uint32_t>(rng.next_below(width));
        if (a == t)
            a = (a + 1) % static_cast<std::uint32_t>(width);
        if (kind == 1) {
            c.add_gate(Gate::make_cnot(a, t));
            continue;
        }
        std::uint32_t b = static_cast<std::uint32_t>(rng.next_below(width));
        while (b == t || b == a)
            b = (b + 1) % static_cast<std::uint32_t>(width);
        c.add_gate(Gate::make_ccnot(a, b, t));
    }
    return c;
}

} // namespace

TEST_CASE("truth-table parsing: 1-bit identity and NOT") {
    const TruthTable id = io::parse_truth_table("n 1\n0\n1\n");
    CHECK(id == TruthTable::identity(1));

    const TruthTable inv = io::parse_truth_table("# a comment\nn 1\n1\n0\n");
    CHECK(inv.entries == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("truth-table parsing errors") {
    CHECK_THROWS_AS(io::parse_truth_table("n 1\n0\n1\n0\n"), WrongLineCount);
    CHECK_THROWS_AS(io::parse_truth_table("n 1\n0\n"), WrongLineCount);
    CHECK_THROWS_AS(io::parse_truth_table("n 1\n0\n2\n"), BadDigit);
    CHECK_THROWS_AS(io::parse_truth_table("n 2\n00\n01\n1\n11\n"), BadDigit);
    CHECK_THROWS_AS(io::parse_truth_table("m 1\n0\n1\n"), ParseError);
    try {
        io::parse_truth_table("n 1\n0\nx\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("truth-table round trip") {
    for (int n : {1, 3, 5}) {
        const TruthTable tt = TruthTable::random(n, 11);
        CHECK(io::parse_truth_table(io::write_truth_table(tt)) == tt);
    }
}

TEST_CASE("netlist body uses t1/t2/t3 lines with the target last") {
    Circuit c(3);
    c.add_gate(Gate::make_ccnot(0, 1, 2));
    const std::string text = io::write_netlist(c);
    CHECK(text.find("t3 x1,x2,x3\n") != std::string::npos);
    CHECK(text.find("BEGIN\n") != std::string::npos);
    CHECK(text.find("END\n") != std::string::npos);
}

TEST_CASE("netlist round trip on random circuits") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Circuit c = random_circuit(4 + static_cast<int>(seed % 9), 30, seed);
        const Circuit back = io::parse_netlist(io::write_netlist(c));
        CHECK(back == c);
    }
}

TEST_CASE("netlist parsing errors") {
    CHECK_THROWS_AS(io::parse_netlist(".v a,b,c,d\n.i a\nBEGIN\nt4 a,b,c,d\nEND\n"),
                    UnknownGateArity);
    CHECK_THROWS_AS(io::parse_netlist(".v a,b\nBEGIN\nt2 a,z\nEND\n"), ParseError);
    CHECK_THROWS_AS(io::parse_netlist(".v a,b\nBEGIN\nt2 a,b\n"), ParseError);
    CHECK_THROWS_AS(io::parse_netlist(".v a,b\nBEGIN\nt2 a\nEND\n"), ParseError);
}

TEST_CASE("hand-written netlists without a roles line still parse") {
    const Circuit c = io::parse_netlist(
        ".v a,b,t\n.i a,b\n.o t\n.c t\nBEGIN\nt3 a,b,t\nEND\n");
    CHECK(c.num_inputs() == 2);
    CHECK(c.output_wires() == std::vector<std::uint32_t>{2});
    REQUIRE(c.gates().size() == 1);
    CHECK(c.gates()[0] == Gate::make_ccnot(0, 1, 2));
}

TEST_CASE("JSON report carries metrics, params and bounds") {
    const TruthTable tt = TruthTable::random(3, 4);
    auto [circuit, report] = synthesize(tt, 32, Strategy::MinimizeT3);
    const nlohmann::ordered_json j = io::report_to_json(report);
    CHECK(j["n"] == 3);
    CHECK(j["q"] == 32);
    CHECK(j["strategy"] == 2);
    CHECK(j["L"] == report.gate_count);
    CHECK(j["Q"] == report.ancilla);
    CHECK(j["params"]["k"] == report.params.k);
    CHECK(j["ledger"]["total"] == report.ancilla);
    CHECK(j["bounds"]["L"].contains("valid"));
    // Key order is stable for golden files.
    CHECK(j.begin().key() == "n");
    CHECK(io::report_to_json(report).dump() == j.dump());
}

TEST_CASE("bench sweep: n=4 over four budgets, both strategies") {
    const std::vector<io::BenchRow> rows =
        io::run_bench({4}, {33, 40, 64, 128}, {Strategy::MinimizeT2, Strategy::MinimizeT3}, 9);
    REQUIRE(rows.size() == 8);
    for (const io::BenchRow& row : rows) {
        CHECK(row.valid);
        CHECK(static_cast<std::uint64_t>(row.ancilla) <= row.q);
    }
    // Ordered by (n, q, strategy).
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto key = [](const io::BenchRow& r) {
            return std::tuple(r.n, r.q, r.strategy);
        };
        CHECK(key(rows[i - 1]) < key(rows[i]));
    }
}

TEST_CASE("bench CSV is deterministic and flags out-of-domain budgets") {
    const auto rows1 = io::run_bench({3}, {20, 33}, {Strategy::MinimizeT2}, 123);
    const auto rows2 = io::run_bench({3}, {20, 33}, {Strategy::MinimizeT2}, 123);
    CHECK(io::bench_to_csv(rows1) == io::bench_to_csv(rows2));
    REQUIRE(rows1.size() == 2);
    CHECK_FALSE(rows1[0].valid); // q = 20 <= 8n: whole-circuit bounds out of domain
    CHECK(rows1[1].valid);
    const std::string csv = io::bench_to_csv(rows1);
    CHECK(csv.rfind("n,q,strategy,k,s,L,D,Q,t1,t2,t3,L_bound,D_bound,valid\n", 0) == 0);
}

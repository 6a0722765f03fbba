#include "rlsyn/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rlsyn/simulator.hpp"

namespace rlsyn::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return {};
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ' ' || ch == '\t') {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

char role_letter(WireRole role) {
    switch (role) {
    case WireRole::SignificantInput: return 'i';
    case WireRole::Negation: return 'n';
    case WireRole::Storage: return 's';
    case WireRole::Scratch: return 'c';
    case WireRole::Output: return 'o';
    }
    return '?';
}

WireRole role_from_letter(char c, int line) {
    switch (c) {
    case 'i': return WireRole::SignificantInput;
    case 'n': return WireRole::Negation;
    case 's': return WireRole::Storage;
    case 'c': return WireRole::Scratch;
    case 'o': return WireRole::Output;
    }
    throw ParseError(line, std::string("unknown role letter '") + c + "'");
}

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            out += ',';
        out += names[i];
    }
    return out;
}

std::string format_value(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

TruthTable parse_truth_table(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int n = -1;
    TruthTable tt;
    std::size_t expected = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (n < 0) {
            std::istringstream header(line);
            std::string tag;
            header >> tag >> n;
            if (tag != "n" || header.fail() || n < 1 || n > 20)
                throw ParseError(line_no, "expected header 'n <int>' with 1 <= n <= 20");
            tt.n = n;
            expected = std::size_t{1} << n;
            continue;
        }
        if (tt.entries.size() == expected)
            throw WrongLineCount(line_no, "more than 2^n data lines");
        if (line.size() != static_cast<std::size_t>(n))
            throw BadDigit(line_no, "data line must hold exactly n binary digits");
        std::uint32_t word = 0;
        for (char c : line) {
            if (c != '0' && c != '1')
                throw BadDigit(line_no, std::string("bad digit '") + c + "'");
            word = (word << 1) | static_cast<std::uint32_t>(c - '0');
        }
        tt.entries.push_back(word);
    }
    if (n < 0)
        throw ParseError(line_no, "missing 'n <int>' header");
    if (tt.entries.size() != expected)
        throw WrongLineCount(line_no, "expected exactly 2^n data lines");
    return tt;
}

std::string write_truth_table(const TruthTable& tt) {
    std::string out = "n " + std::to_string(tt.n) + "\n";
    for (std::uint32_t word : tt.entries) {
        for (int i = tt.n - 1; i >= 0; --i)
            out += ((word >> i) & 1) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string write_netlist(const Circuit& circuit) {
    const std::uint32_t width = circuit.width();
    std::vector<std::string> names(width);
    int ix = 0, inx = 0, iy = 0, iw = 0;
    for (std::uint32_t w = 0; w < width; ++w) {
        switch (circuit.role(w)) {
        case WireRole::SignificantInput: names[w] = "x" + std::to_string(++ix); break;
        case WireRole::Negation: names[w] = "nx" + std::to_string(++inx); break;
        case WireRole::Output: names[w] = "y" + std::to_string(++iy); break;
        default: names[w] = "w" + std::to_string(++iw); break;
        }
    }

    std::string out = "# roles ";
    for (std::uint32_t w = 0; w < width; ++w)
        out += role_letter(circuit.role(w));
    out += "\n.v " + join(names) + "\n";

    std::vector<std::string> inputs, outputs, constants;
    for (std::uint32_t w : circuit.input_wires())
        inputs.push_back(names[w]);
    for (std::uint32_t w : circuit.output_wires())
        outputs.push_back(names[w]);
    for (std::uint32_t w = 0; w < width; ++w)
        if (circuit.role(w) != WireRole::SignificantInput)
            constants.push_back(names[w]);
    out += ".i " + join(inputs) + "\n";
    if (!outputs.empty())
        out += ".o " + join(outputs) + "\n";
    if (!constants.empty())
        out += ".c " + join(constants) + "\n";

    out += "BEGIN\n";
    for (const Gate& g : circuit.gates()) {
        out += 't';
        out += static_cast<char>('1' + g.num_controls());
        out += ' ';
        std::vector<std::string> parts;
        for (int i = 0; i < g.num_controls(); ++i)
            parts.push_back(names[g.controls[i]]);
        parts.push_back(names[g.target]);
        out += join(parts) + "\n";
    }
    out += "END\n";
    return out;
}

Circuit parse_netlist(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    std::vector<std::string> names;
    std::string roles_letters;
    std::vector<std::string> input_names, output_names;
    std::vector<Gate> gates;
    bool in_body = false, ended = false;

    auto wire_index = [&](const std::string& name, int line) -> std::uint32_t {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return static_cast<std::uint32_t>(i);
        throw ParseError(line, "wire '" + name + "' not declared in .v");
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty())
            continue;
        if (line[0] == '#') {
            const std::string prefix = "# roles ";
            if (line.rfind(prefix, 0) == 0)
                roles_letters = trim(line.substr(prefix.size()));
            continue;
        }
        if (ended)
            throw ParseError(line_no, "content after END");
        if (line == "BEGIN") {
            in_body = true;
            continue;
        }
        if (line == "END") {
            if (!in_body)
                throw ParseError(line_no, "END without BEGIN");
            in_body = false;
            ended = true;
            continue;
        }
        if (!in_body) {
            if (line.rfind(".v", 0) == 0)
                names = split_names(line.substr(2));
            else if (line.rfind(".i", 0) == 0)
                input_names = split_names(line.substr(2));
            else if (line.rfind(".o", 0) == 0)
                output_names = split_names(line.substr(2));
            else if (line.rfind(".c", 0) == 0)
                ; // ancilla list is implied by roles; accepted and ignored
            else
                throw ParseError(line_no, "unknown header line '" + line + "'");
            continue;
        }
        if (line[0] != 't')
            throw ParseError(line_no, "gate line must start with t1/t2/t3");
        const std::size_t sp = line.find_first_of(" \t");
        const std::string tag = line.substr(0, sp == std::string::npos ? line.size() : sp);
        if (tag != "t1" && tag != "t2" && tag != "t3")
            throw UnknownGateArity(line_no, "unsupported gate '" + tag + "'");
        const int arity = tag[1] - '0';
        const std::vector<std::string> parts =
            split_names(sp == std::string::npos ? "" : line.substr(sp));
        if (static_cast<int>(parts.size()) != arity)
            throw ParseError(line_no, tag + " expects " + std::to_string(arity) + " wires");
        std::uint32_t w[3] = {0, 0, 0};
        for (int i = 0; i < arity; ++i)
            w[i] = wire_index(parts[static_cast<std::size_t>(i)], line_no);
        if (arity == 1)
            gates.push_back(Gate::make_not(w[0]));
        else if (arity == 2)
            gates.push_back(Gate::make_cnot(w[0], w[1]));
        else
            gates.push_back(Gate::make_ccnot(w[0], w[1], w[2]));
    }
    if (!ended)
        throw ParseError(line_no, "missing END");
    if (names.empty())
        throw ParseError(line_no, "missing .v declaration");

    std::vector<WireRole> roles(names.size(), WireRole::Scratch);
    if (!roles_letters.empty()) {
        if (roles_letters.size() != names.size())
            throw ParseError(1, "# roles length does not match .v");
        for (std::size_t i = 0; i < names.size(); ++i)
            roles[i] = role_from_letter(roles_letters[i], 1);
    } else {
        for (const std::string& name : input_names)
            roles[wire_index(name, line_no)] = WireRole::SignificantInput;
        for (const std::string& name : output_names)
            roles[wire_index(name, line_no)] = WireRole::Output;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (roles[i] == WireRole::Scratch && names[i].rfind("nx", 0) == 0)
                roles[i] = WireRole::Negation;
    }

    std::vector<std::uint32_t> output_wires;
    for (const std::string& name : output_names)
        output_wires.push_back(wire_index(name, line_no));
    return Circuit::from_parts(std::move(roles), std::move(output_wires), std::move(gates));
}

nlohmann::ordered_json report_to_json(const SynthesisReport& report) {
    using json = nlohmann::ordered_json;
    auto audit_json = [](const ProviderAudit& a) {
        return json{{"mode", a.mode == ProviderMode::And ? "and" : "xor"},
                    {"m", a.m},
                    {"q_p", a.q_p},
                    {"r", a.r},
                    {"t", a.t},
                    {"emitted", a.emitted},
                    {"unmaterialize_emitted", a.unmaterialize_emitted},
                    {"depth", a.depth},
                    {"wires", a.wires}};
    };
    auto bound_json = [](const bounds::BoundReport& b) {
        json j{{"formula", b.formula}, {"valid", b.valid}};
        if (std::isinf(b.value))
            j["value"] = "inf";
        else
            j["value"] = b.value;
        return j;
    };
    json j;
    j["n"] = report.n;
    j["q"] = report.q;
    j["strategy"] = static_cast<int>(report.params.strategy);
    j["params"] = json{{"k", report.params.k}, {"s", report.params.s},
                       {"p", report.params.p}, {"q1", report.params.q1},
                       {"q2", report.params.q2}, {"q3", report.params.q3}};
    j["L"] = report.gate_count;
    j["D"] = report.depth;
    j["Q"] = report.ancilla;
    j["t1"] = report.t1;
    j["t2"] = report.t2;
    j["t3_total"] = report.t3_total;
    j["t3_max_group"] = report.t3_max_group;
    j["caps"] = json{{"t2", report.t2_cap},
                     {"t3_group", report.t3_group_cap},
                     {"output", report.output_cap}};
    j["stages"] = json{{"negation", report.stages.negation}, {"s1", report.stages.s1},
                       {"s2", report.stages.s2}, {"s3", report.stages.s3},
                       {"output", report.stages.output}};
    j["providers"] = json{{"s1", audit_json(report.s1_audit)},
                          {"s2", audit_json(report.s2_audit)}};
    json groups = json::array();
    for (const ProviderAudit& a : report.s3_audits)
        groups.push_back(audit_json(a));
    j["providers"]["s3"] = groups;
    j["ledger"] = json{{"negations", report.ledger.negations},
                       {"outputs", report.ledger.outputs},
                       {"holders", report.ledger.holders},
                       {"s1_scratch", report.ledger.s1_scratch},
                       {"s2_wires", report.ledger.s2_wires},
                       {"s3_pool", report.ledger.s3_pool},
                       {"total", report.ledger.total()}};
    j["bounds"] = json{{"L", bound_json(report.l_bound)}, {"D", bound_json(report.d_bound)}};
    return j;
}

std::vector<BenchRow> run_bench(const std::vector<int>& ns, const std::vector<std::uint64_t>& qs,
                                const std::vector<Strategy>& strategies, std::uint64_t seed) {
    std::vector<BenchRow> rows;
    for (int n : ns) {
        const TruthTable tt = TruthTable::random(n, seed + static_cast<std::uint64_t>(n));
        for (std::uint64_t q : qs) {
            for (Strategy strategy : strategies) {
                BenchRow row;
                row.n = n;
                row.q = q;
                row.strategy = static_cast<int>(strategy);
                try {
                    auto [circuit, report] = synthesize(tt, q, strategy);
                    row.k = report.params.k;
                    row.s = report.params.s;
                    row.gate_count = report.gate_count;
                    row.depth = report.depth;
                    row.ancilla = report.ancilla;
                    row.t1 = report.t1;
                    row.t2 = report.t2;
                    row.t3 = report.t3_total;
                    row.l_bound = report.l_bound.value;
                    row.d_bound = report.d_bound.value;
                    const bool verified = extract_transformation(circuit) == tt;
                    row.valid = report.l_bound.valid && report.d_bound.valid && verified &&
                                static_cast<std::uint64_t>(report.ancilla) <= q;
                } catch (const QBudgetTooSmall&) {
                    continue;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::string out = "n,q,strategy,k,s,L,D,Q,t1,t2,t3,L_bound,D_bound,valid\n";
    for (const BenchRow& row : rows) {
        out += std::to_string(row.n) + ',' + std::to_string(row.q) + ',' +
               std::to_string(row.strategy) + ',' + std::to_string(row.k) + ',' +
               std::to_string(row.s) + ',' + std::to_string(row.gate_count) + ',' +
               std::to_string(row.depth) + ',' + std::to_string(row.ancilla) + ',' +
               std::to_string(row.t1) + ',' + std::to_string(row.t2) + ',' +
               std::to_string(row.t3) + ',' + format_value(row.l_bound) + ',' +
               format_value(row.d_bound) + ',' + (row.valid ? "true" : "false") + '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << text;
}

} // namespace rlsyn::io

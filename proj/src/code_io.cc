#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "eaqec/errors.h"
#include "eaqec/quantum_code.h"

namespace eaqec {

namespace {

struct TableLine {
    char label = 0;
    PauliVec op;
};

PauliVec parse_alice(const std::string &token) {
    auto bar = token.find('|');
    std::string alice = token.substr(0, bar);
    if (bar != std::string::npos) {
        std::string bob = token.substr(bar + 1);
        if (!bob.empty()) {
            parse_pauli(bob);
        }
    }
    return parse_pauli(alice);
}

std::string bob_part(size_t c, size_t slot, char p) {
    if (c == 0) {
        return "";
    }
    std::string s(c, 'I');
    if (slot < c) {
        s[slot] = p;
    }
    return "|" + s;
}

}  // namespace

QuantumCode read_code(std::istream &in) {
    std::vector<TableLine> lines;
    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream ss(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) {
            tokens.push_back(tok);
        }
        if (tokens.empty()) {
            continue;
        }
        TableLine line;
        if (tokens.size() == 2) {
            if (tokens[0] != "I" && tokens[0] != "E" && tokens[0] != "G") {
                throw ParseError(fmt::format("line {}: unknown label '{}'", line_no, tokens[0]));
            }
            line.label = tokens[0][0];
            line.op = parse_alice(tokens[1]);
        } else if (tokens.size() == 1) {
            line.op = parse_alice(tokens[0]);
        } else {
            throw ParseError(fmt::format("line {}: expected '[LABEL] PAULI'", line_no));
        }
        if (!lines.empty() && (lines.front().label == 0) != (line.label == 0)) {
            throw ParseError(fmt::format("line {}: labeled and unlabeled generators are mixed", line_no));
        }
        if (!lines.empty() && line.op.n() != lines.front().op.n()) {
            throw ParseError(fmt::format("line {}: generator length {} differs from {}", line_no, line.op.n(),
                                         lines.front().op.n()));
        }
        lines.push_back(std::move(line));
    }
    if (lines.empty()) {
        throw ParseError("code table has no generators");
    }
    size_t n = lines.front().op.n();
    try {
        if (lines.front().label == 0) {
            std::vector<PauliVec> ops;
            for (auto &l : lines) {
                ops.push_back(std::move(l.op));
            }
            return QuantumCode::from_decomposition(decompose(ops, n));
        }
        std::vector<PauliVec> isotropic, e_ops, g_ops;
        for (auto &l : lines) {
            (l.label == 'I' ? isotropic : l.label == 'E' ? e_ops : g_ops).push_back(std::move(l.op));
        }
        if (e_ops.size() % 2 || g_ops.size() % 2) {
            throw ParseError("E and G generators must come in pairs");
        }
        std::vector<SymplecticPair> entangled, gauge;
        for (size_t i = 0; i < e_ops.size(); i += 2) {
            entangled.push_back({e_ops[i], e_ops[i + 1]});
        }
        for (size_t i = 0; i < g_ops.size(); i += 2) {
            gauge.push_back({g_ops[i], g_ops[i + 1]});
        }
        return QuantumCode(n, std::move(isotropic), std::move(entangled), std::move(gauge));
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

void write_code(std::ostream &out, const QuantumCode &code) {
    size_t c = code.c();
    out << "# " << format_params(code) << '\n';
    for (const auto &op : code.isotropic()) {
        out << "I " << op.str() << bob_part(c, c, 'I') << '\n';
    }
    for (size_t j = 0; j < c; j++) {
        out << "E " << code.entangled()[j].first.str() << bob_part(c, j, 'Z') << '\n';
        out << "E " << code.entangled()[j].second.str() << bob_part(c, j, 'X') << '\n';
    }
    for (const auto &p : code.gauge()) {
        out << "G " << p.first.str() << bob_part(c, c, 'I') << '\n';
        out << "G " << p.second.str() << bob_part(c, c, 'I') << '\n';
    }
    for (const auto &p : code.logicals) {
        out << "# Zbar " << p.first.str() << '\n';
        out << "# Xbar " << p.second.str() << '\n';
    }
}

CodeReport analyze_code(const QuantumCode &code, const ReportOptions &options) {
    CodeReport report;
    report.dual_containing = code.c() == 0;
    std::optional<size_t> target = options.verify_d ? options.verify_d : code.claims.d;
    if (options.verify && target) {
        DistanceResult res = verify_distance(code, *target, options.mode, options.budget);
        if (res.status == DistanceStatus::budget_exceeded) {
            report.distance_budget_exceeded = true;
        } else if (res.ok()) {
            report.verified_d = *target;
            if (options.mode == DistanceMode::strict) {
                report.hamming_ok = hamming_check(code, *target);
            }
        }
    }
    std::optional<size_t> d = report.verified_d ? report.verified_d : code.claims.d;
    if (d) {
        report.singleton_ok = singleton_check(code, d);
    }
    report.params = format_params(code, d);
    return report;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

void print_report(std::ostream &out, const QuantumCode &code, const CodeReport &report) {
    if (!code.name.empty()) {
        out << "code: " << code.name << '\n';
    }
    out << "computed: " << format_params(code) << '\n';
    const Claims &cl = code.claims;
    if (cl.k || cl.d || cl.c || cl.r) {
        auto show = [](const std::optional<size_t> &v) { return v ? std::to_string(*v) : std::string("?"); };
        out << "claimed: [[" << code.n() << ',' << show(cl.k) << ',' << show(cl.d) << ';' << show(cl.r) << ','
            << show(cl.c) << "]]\n";
    }
    out << "params: " << report.params << '\n';
    out << fmt::format("n {} k {} c {} r {} isotropic {}\n", code.n(), code.k(), code.c(), code.r(),
                       code.isotropic().size());
    out << "dual-containing: " << yes_no(report.dual_containing) << '\n';
    if (report.verified_d) {
        out << "verified distance: " << *report.verified_d << '\n';
    } else if (report.distance_budget_exceeded) {
        out << "verified distance: unverifiable within budget\n";
    }
    if (report.singleton_ok) {
        out << "singleton: " << (*report.singleton_ok ? "ok" : "violated") << '\n';
    }
    if (report.hamming_ok) {
        out << "hamming: " << (*report.hamming_ok ? "ok" : "violated") << '\n';
    }
    out << "generators:\n";
    write_code(out, code);
}

}  // namespace eaqec

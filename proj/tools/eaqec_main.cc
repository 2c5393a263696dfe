#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "eaqec/errors.h"
#include "eaqec/monte_carlo.h"
#include "eaqec/qc_ldpc.h"
#include "eaqec/quantum_code.h"
#include "eaqec/symplectic_gram_schmidt.h"

using namespace eaqec;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(fmt::format("cannot open '{}'", path));
    }
    return in;
}

const std::map<std::string, DistanceMode> kModes{{"strict", DistanceMode::strict},
                                                 {"degenerate", DistanceMode::degenerate}};

struct VerifyFlags {
    std::optional<size_t> verify_d;
    bool verify = false;
    DistanceMode mode = DistanceMode::degenerate;
    uint64_t budget = kDefaultDistanceBudget;

    void attach(CLI::App *app) {
        app->add_option("--verify-d", verify_d, "Distance to verify by enumeration");
        app->add_flag("--verify", verify, "Verify the claimed distance");
        app->add_option("--mode", mode, "Distance criterion")->transform(CLI::CheckedTransformer(kModes));
        app->add_option("--budget", budget, "Maximum number of errors to enumerate");
    }

    int report(const QuantumCode &code) const {
        ReportOptions opts{verify_d, verify || verify_d.has_value(), mode, budget};
        CodeReport rep = analyze_code(code, opts);
        print_report(std::cout, code, rep);
        return rep.distance_budget_exceeded ? kExitBudget : 0;
    }
};

// Known parameters of the QC-LDPC examples; ex-MacKay has none.
Claims example_claims(const std::string &name) {
    if (name == "ex1" || name == "ex2") {
        return {.k = 48, .d = 6, .c = 18, .r = 0};
    }
    if (name == "hi") {
        return {.k = 38, .d = 4, .c = 0, .r = 0};
    }
    return {};
}

struct MackayFlags {
    size_t n = 128;
    size_t m = 48;
    size_t L = 8;
};

struct QcSource {
    std::optional<ExponentMatrix> exponents;
    std::optional<ExponentMatrix> second;  // H_D for ex-HI
    BitMatrix h;
};

QcSource load_example(const std::string &name, const MackayFlags &mk, uint64_t seed) {
    QcSource src;
    if (name == "ex1" || name == "ex2") {
        src.exponents = name == "ex1" ? make_ex1() : make_ex2();
        src.h = expand(*src.exponents);
    } else if (name == "hi") {
        HiPair hi = make_ex_hi(3, 8, 15, 2, 3);
        src.exponents = hi.hc;
        src.second = hi.hd;
        src.h = expand(hi.hc);
    } else if (name == "mackay") {
        src.h = make_ex_mackay(mk.n, mk.m, mk.L, seed);
    } else {
        throw std::invalid_argument(fmt::format("unknown example '{}'", name));
    }
    return src;
}

QuantumCode code_of(const QcSource &src) {
    if (src.second) {
        return build_css(src.h, expand(*src.second));
    }
    return build_eaqecc_binary(src.h);
}

void print_multiplicities(std::ostream &out, const ExponentMatrix &e) {
    out << "row differences (even/free):\n";
    for (size_t i = 0; i < e.J; i++) {
        for (size_t j = 0; j < e.J; j++) {
            DifferenceVector d = row_difference(e, i, j);
            std::string cells;
            for (const auto &col : d) {
                std::string cell;
                for (size_t v : col) {
                    cell += (cell.empty() ? "" : "/") + std::to_string(v);
                }
                cells += " " + (cell.empty() ? std::string("-") : cell);
            }
            out << fmt::format("  c{}-c{}:{}  even={} free={}\n", i, j, cells, is_multiplicity_even(d) ? "yes" : "no",
                               is_multiplicity_free(d) ? "yes" : "no");
        }
    }
}

void print_qc_report(std::ostream &out, const std::string &name, const QcSource &src) {
    const BitMatrix &h = src.h;
    QuantumCode code = code_of(src);
    code.name = name;
    code.claims = example_claims(name);
    out << "code: " << name << '\n';
    out << fmt::format("parity check: {}x{}\n", h.rows(), h.cols());
    auto g = girth_exact(h);
    out << "girth: " << (g ? std::to_string(*g) : std::string("inf")) << '\n';
    out << "rank H: " << rank(h) << '\n';
    if (src.second) {
        BitMatrix hd = expand(*src.second);
        out << "rank H_D: " << rank(hd) << '\n';
        out << "H_C H_D^T = 0: " << (mat_mul(h, hd.transpose()).is_zero() ? "yes" : "no") << '\n';
    } else {
        out << "rank HH^T: " << rank(mat_mul(h, h.transpose())) << '\n';
    }
    if (src.exponents) {
        const ExponentMatrix &e = *src.exponents;
        out << "girth >= 6 (predicate): " << (girth_ge_6(e) ? "yes" : "no") << '\n';
        out << "dual-containing (predicate): " << (dual_containing_qc(e) ? "yes" : "no") << '\n';
        if (!src.second) {
            auto hhat = hermitian_poly_product(e);
            size_t deg = gcd_degree(hhat);
            out << fmt::format("deg gcd(Hhat, X^r-1): {}\n", deg);
            out << fmt::format("rank HH^T (polynomial): {}\n", e.J * e.r - deg);
            out << "rank bound: " << rank_bound(e) << '\n';
        }
        print_multiplicities(out, e);
    }
    out << "c: " << code.c() << '\n';
    out << "computed: " << format_params(code) << '\n';
    const Claims &cl = code.claims;
    if (cl.k) {
        out << fmt::format("claimed: [[{},{},{};{}]]\n", code.n(), *cl.k, *cl.d, *cl.c);
    }
}

int run_construct(const std::string &input, const std::string &field, const VerifyFlags &vf) {
    QuantumCode code = [&] {
        if (field == "gf4") {
            auto in = open_input(input);
            return build_eaqecc_gf4(read_f4_matrix(in));
        }
        return build_eaqecc_binary(read_matrix_file(input));
    }();
    code.name = input;
    return vf.report(code);
}

int run_sgs(const std::string &input) {
    auto in = open_input(input);
    std::vector<PauliVec> ops;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            ops.push_back(parse_pauli(tok));
        }
    }
    if (ops.empty()) {
        throw ParseError("no Pauli operators in input");
    }
    GroupDecomposition dec = decompose(ops);
    std::cout << fmt::format("n {} dim {} c {} ell {}\n", dec.n, dec.dim(), dec.c(), dec.ell());
    for (const auto &p : dec.pairs) {
        std::cout << "pair " << p.first.str() << ' ' << p.second.str() << '\n';
    }
    for (const auto &v : dec.isotropic) {
        std::cout << "isotropic " << v.str() << '\n';
    }
    return 0;
}

std::vector<double> parse_p_list(const std::string &list) {
    std::vector<double> ps;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        double p = 0;
        try {
            p = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() || item.empty() || !(p >= 0 && p < 1)) {
            throw std::invalid_argument(fmt::format("invalid probability '{}'", item));
        }
        ps.push_back(p);
    }
    return ps;
}

QuantumCode resolve_sim_code(const std::string &spec, const MackayFlags &mk, uint64_t seed) {
    for (const auto &b : builtin_names()) {
        if (spec == b) {
            QuantumCode code = builtin(spec);
            if (!code.css) {
                throw std::invalid_argument(fmt::format("builtin '{}' is not a CSS code", spec));
            }
            return code;
        }
    }
    if (spec == "ex1" || spec == "ex2" || spec == "hi" || spec == "mackay") {
        return code_of(load_example(spec, mk, seed));
    }
    return build_eaqecc_binary(read_matrix_file(spec));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement-assisted quantum code toolkit"};
    app.require_subcommand(1);

    VerifyFlags verify;
    MackayFlags mackay;

    std::string construct_input, construct_field = "gf2";
    auto *construct = app.add_subcommand("construct", "Build an EAQECC from a classical parity check");
    construct->add_option("--input", construct_input, "Parity check file")->required();
    construct->add_option("--field", construct_field, "Field of the parity check")
        ->check(CLI::IsMember({"gf2", "gf4"}));
    verify.attach(construct);

    std::string analyze_input;
    auto *analyze = app.add_subcommand("analyze", "Report parameters of a generator table");
    analyze->add_option("--input", analyze_input, "Generator table file")->required();
    verify.attach(analyze);

    std::string builtin_name;
    bool builtin_list = false;
    std::string builtin_emit = "report";
    auto *builtin_cmd = app.add_subcommand("builtin", "Report on a code from the built-in catalogue");
    builtin_cmd->add_option("name", builtin_name, "Code name");
    builtin_cmd->add_flag("--list", builtin_list, "List available codes");
    builtin_cmd->add_option("--emit", builtin_emit, "Output kind")->check(CLI::IsMember({"report", "table"}));
    verify.attach(builtin_cmd);

    std::string sgs_input;
    auto *sgs = app.add_subcommand("sgs", "Symplectic Gram-Schmidt decomposition of Pauli operators");
    sgs->add_option("--input", sgs_input, "File of Pauli strings")->required();

    std::string qc_example, qc_exponent, qc_emit = "report", qc_format = "dense";
    std::optional<size_t> qc_r;
    uint64_t seed = 0;
    auto *qc = app.add_subcommand("qcldpc", "Quasi-cyclic LDPC constructions");
    auto *ex_opt = qc->add_option("--example", qc_example, "Named construction")
                       ->check(CLI::IsMember({"ex1", "ex2", "mackay", "hi"}));
    auto *exp_opt = qc->add_option("--exponent", qc_exponent, "Exponent matrix file");
    ex_opt->excludes(exp_opt);
    qc->add_option("--r", qc_r, "Circulant size, overriding the file header");
    qc->add_option("--emit", qc_emit, "Output kind")->check(CLI::IsMember({"matrix", "report"}));
    qc->add_option("--format", qc_format, "Matrix format")->check(CLI::IsMember({"dense", "alist"}));
    qc->add_option("--seed", seed, "Seed for ex-MacKay");
    qc->add_option("--mackay-n", mackay.n, "ex-MacKay length");
    qc->add_option("--mackay-m", mackay.m, "ex-MacKay rows kept");
    qc->add_option("--mackay-L", mackay.L, "ex-MacKay row weight");

    std::string sim_code, sim_p;
    size_t sim_trials = 1000, sim_max_iter = kDefaultMaxIter, sim_threads = 1;
    DistanceMode sim_mode = DistanceMode::degenerate;
    auto *sim = app.add_subcommand("simulate", "Depolarizing-channel Monte Carlo with sum-product decoding");
    sim->add_option("--code", sim_code, "Builtin name, example name or parity check file")->required();
    sim->add_option("--p", sim_p, "Comma-separated depolarizing probabilities")->required();
    sim->add_option("--trials", sim_trials, "Trials per point")->check(CLI::PositiveNumber);
    sim->add_option("--seed", seed, "Random seed");
    sim->add_option("--max-iter", sim_max_iter, "Decoder iterations")->check(CLI::PositiveNumber);
    sim->add_option("--mode", sim_mode, "Success criterion")->transform(CLI::CheckedTransformer(kModes));
    sim->add_option("--threads", sim_threads, "Worker threads")->check(CLI::PositiveNumber);
    sim->add_option("--mackay-n", mackay.n, "ex-MacKay length");
    sim->add_option("--mackay-m", mackay.m, "ex-MacKay rows kept");
    sim->add_option("--mackay-L", mackay.L, "ex-MacKay row weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct->parsed()) {
            return run_construct(construct_input, construct_field, verify);
        }
        if (analyze->parsed()) {
            auto in = open_input(analyze_input);
            QuantumCode code = read_code(in);
            code.name = analyze_input;
            return verify.report(code);
        }
        if (builtin_cmd->parsed()) {
            if (builtin_list) {
                for (const auto &n : builtin_names()) {
                    std::cout << n << '\n';
                }
                return 0;
            }
            if (builtin_name.empty()) {
                std::cerr << "builtin: a code name or --list is required\n";
                return kExitUsage;
            }
            QuantumCode code = builtin(builtin_name);
            if (builtin_emit == "table") {
                write_code(std::cout, code);
                return 0;
            }
            return verify.report(code);
        }
        if (sgs->parsed()) {
            return run_sgs(sgs_input);
        }
        if (qc->parsed()) {
            QcSource src;
            std::string name = qc_example;
            if (!qc_example.empty()) {
                src = load_example(qc_example, mackay, seed);
            } else if (!qc_exponent.empty()) {
                auto in = open_input(qc_exponent);
                ExponentMatrix e = read_exponent_matrix(in);
                if (qc_r) {
                    e = ExponentMatrix(*qc_r, e.entries);
                }
                src.exponents = e;
                src.h = expand(e);
                name = qc_exponent;
            } else {
                std::cerr << "qcldpc: --example or --exponent is required\n";
                return kExitUsage;
            }
            if (qc_emit == "matrix") {
                if (qc_format == "alist") {
                    write_alist(std::cout, src.h);
                } else {
                    write_dense(std::cout, src.h);
                }
                return 0;
            }
            print_qc_report(std::cout, name, src);
            return 0;
        }
        if (sim->parsed()) {
            SimConfig cfg{resolve_sim_code(sim_code, mackay, seed),
                          parse_p_list(sim_p),
                          sim_trials,
                          seed,
                          sim_max_iter,
                          sim_mode,
                          sim_threads};
            write_csv(std::cout, sweep(cfg));
            return 0;
        }
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

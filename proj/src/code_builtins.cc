#include <stdexcept>

#include <fmt/format.h>

#include "eaqec/quantum_code.h"

namespace eaqec {

namespace {

std::vector<PauliVec> paulis(std::initializer_list<const char *> strings) {
    std::vector<PauliVec> out;
    for (const char *s : strings) {
        out.push_back(parse_pauli(s));
    }
    return out;
}

SymplecticPair pair(const char *a, const char *b) { return {parse_pauli(a), parse_pauli(b)}; }

// Classical check matrix made of the X parts (or Z parts) of pure-type generators.
BitMatrix part_matrix(const std::vector<PauliVec> &ops, bool x_part) {
    BitMatrix out(0, ops.front().n());
    for (const auto &op : ops) {
        out.append_row(x_part ? op.x() : op.z());
    }
    return out;
}

QuantumCode shor9() {
    auto z_checks = paulis({"ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII", "IIIIIIZZI", "IIIIIIIZZ"});
    auto x_checks = paulis({"XXXIIIXXX", "XXXXXXIII"});
    auto gens = z_checks;
    gens.insert(gens.end(), x_checks.begin(), x_checks.end());
    QuantumCode code(9, gens, {});
    code.logicals = {pair("ZZZZZZZZZ", "XXXXXXXXX")};
    code.css = CssChecks{part_matrix(x_checks, true), part_matrix(z_checks, false)};
    code.claims = {.k = 1, .d = 3, .c = 0, .r = 0};
    return code;
}

QuantumCode steane7() {
    QuantumCode code(7, paulis({"IIIZZZZ", "IZZIIZZ", "ZIZIZIZ", "IIIXXXX", "IXXIIXX", "XIXIXIX"}), {});
    code.logicals = {pair("ZZZZZZZ", "XXXXXXX")};
    code.css = CssChecks{hamming7_parity_check(), hamming7_parity_check()};
    code.claims = {.k = 1, .d = 3, .c = 0, .r = 0};
    return code;
}

QuantumCode ea8() {
    auto z_checks = paulis({"ZZIIIIII", "ZIZIIIII", "IIIZZIII", "IIIZIZII", "IIIIIIZZ", "IIIIIIIZ"});
    auto x_checks = paulis({"XXXIIIXX", "XXXXXXII"});
    auto isotropic = paulis({"ZZIIIIII", "ZIZIIIII", "IIIZZIII", "IIIZIZII", "IIIIIIZZ", "XXXXXXII"});
    QuantumCode code(8, isotropic, {pair("IIIIIIIZ", "XXXIIIXX")});
    code.logicals = {pair("ZIIZIIIZ", "IIIXXXII")};
    code.css = CssChecks{part_matrix(x_checks, true), part_matrix(z_checks, false)};
    code.claims = {.k = 1, .d = 3, .c = 1, .r = 0};
    return code;
}

QuantumCode eaoq8() {
    QuantumCode code(8, paulis({"ZZIZZIII", "ZIZZIZII", "IIIIIIZZ", "XXXXXXII"}), {pair("IIIIIIIZ", "XXXIIIXX")},
                     {pair("ZZIIIIII", "IXIIXIII"), pair("IIIZIZII", "IIXIIXII")});
    code.logicals = {pair("ZIIZIIIZ", "IIIXXXII")};
    code.claims = {.k = 1, .d = 3, .c = 1, .r = 2};
    return code;
}

QuantumCode fivequbit() {
    QuantumCode code(5, paulis({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}), {});
    code.logicals = {pair("ZZZZZ", "XXXXX")};
    code.claims = {.k = 1, .d = 3, .c = 0, .r = 0};
    return code;
}

}  // namespace

BitMatrix hamming7_parity_check() { return BitMatrix::from_strings({"0001111", "0110011", "1010101"}); }

BitMatrix bch63_parity_check() {
    constexpr unsigned kPrimitive = 0b1000011;  // α^6 + α + 1
    constexpr size_t kN = 63;
    constexpr size_t kM = 6;
    std::vector<unsigned> power(kN);
    unsigned a = 1;
    for (size_t e = 0; e < kN; e++) {
        power[e] = a;
        a <<= 1;
        if (a & (1u << kM)) {
            a ^= kPrimitive;
        }
    }
    BitMatrix h(4 * kM, kN);
    const size_t exponents[4] = {1, 3, 5, 7};
    for (size_t b = 0; b < 4; b++) {
        for (size_t j = 0; j < kN; j++) {
            unsigned symbol = power[(exponents[b] * j) % kN];
            for (size_t bit = 0; bit < kM; bit++) {
                h.set(b * kM + bit, j, (symbol >> bit) & 1);
            }
        }
    }
    return h;
}

F4Matrix q15_parity_check() {
    return F4Matrix::from_rows({
        "1 0 0 0 1 1 W 0 1 W 0 w W 1 0",
        "0 1 0 0 1 0 w W 1 w 0 0 1 w 1",
        "0 0 1 0 w W 1 w 1 0 0 w 1 W w",
        "0 0 0 1 1 W 0 1 W w 0 W 1 0 W",
        "0 0 0 0 0 0 0 0 0 0 1 0 0 0 0",
    });
}

std::vector<std::string> builtin_names() { return {"shor9", "steane7", "ea8", "eaoq8", "bch63", "q15", "fivequbit"}; }

QuantumCode builtin(const std::string &name) {
    QuantumCode code = [&] {
        if (name == "shor9") return shor9();
        if (name == "steane7") return steane7();
        if (name == "ea8") return ea8();
        if (name == "eaoq8") return eaoq8();
        if (name == "fivequbit") return fivequbit();
        if (name == "bch63") {
            QuantumCode c = build_eaqecc_binary(bch63_parity_check());
            c.claims = {.k = 21, .d = 9, .c = 6, .r = 0};
            return c;
        }
        if (name == "q15") {
            QuantumCode c = build_eaqecc_gf4(q15_parity_check());
            c.claims = {.k = 9, .d = 4, .c = 4, .r = 0};
            return c;
        }
        throw std::invalid_argument(fmt::format("unknown builtin code '{}'", name));
    }();
    code.name = name;
    return code;
}

}  // namespace eaqec

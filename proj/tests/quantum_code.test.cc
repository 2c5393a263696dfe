#include "eaqec/quantum_code.h"

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "eaqec/errors.h"
#include "eaqec/qc_ldpc.h"
#include "test_util.h"

using namespace eaqec;
using eaqec::testing::random_matrix;

namespace {

std::vector<PauliVec> ops_of(const std::vector<std::string> &rows) {
    std::vector<PauliVec> out;
    for (const auto &r : rows) {
        out.push_back(parse_pauli(r));
    }
    return out;
}

RowSpace group_of(const QuantumCode &code) {
    RowSpace s(2 * code.n());
    for (const auto &g : code.all_generators()) {
        s.insert(g.symplectic());
    }
    return s;
}

bool same_group(const QuantumCode &a, const QuantumCode &b) {
    RowSpace sa = group_of(a), sb = group_of(b);
    if (sa.dim() != sb.dim()) {
        return false;
    }
    for (const auto &g : b.all_generators()) {
        if (!sa.contains(g.symplectic())) {
            return false;
        }
    }
    return true;
}

// Generators of the [[15,9,4;4]] code as printed: four entanglement pairs
// followed by two isotropic generators.
const std::vector<std::string> kQ15Pairs = {
    "IIYIZXYZYIIZYXZ", "IYIIYIZXYZIIYZY", "IZYIIXZXXXIZXII", "IIXIYZXYXIIYXZY",
    "IIIIIIIIIIZIIII", "IIIIIIIIIIYIIII", "IZZZXIYIYIIZZZI", "IYYYZIXIXIIYYYI",
};
const std::vector<std::string> kQ15Isotropic = {"ZZYIZYXXYZIYZZI", "YYXIYXZZXYIXYYI"};
// The printed [[15,9,3;3,1]] table: the last pair above becomes a gauge pair.
const std::vector<std::string> kMovedQ15Isotropic = {"XXZIXZYYZXIZXXI", "ZZYIZYXXYZIYZZI"};

std::vector<SymplecticPair> pairs_of(const std::vector<std::string> &rows, size_t begin, size_t end) {
    std::vector<SymplecticPair> out;
    for (size_t i = begin; i < end; i += 2) {
        out.push_back({parse_pauli(rows[i]), parse_pauli(rows[i + 1])});
    }
    return out;
}

QuantumCode random_code(size_t n, size_t gens, std::mt19937_64 &rng) {
    auto ops = from_symplectic_matrix(random_matrix(gens, 2 * n, rng));
    return QuantumCode::from_decomposition(decompose(ops, n));
}

// Every single-qubit error on qubit 0 anticommutes with some generator.
bool first_qubit_detected(const QuantumCode &code) {
    auto gens = code.all_generators();
    for (char c : {'X', 'Y', 'Z'}) {
        PauliVec e = PauliVec::single(code.n(), 0, c);
        if (std::none_of(gens.begin(), gens.end(), [&](const PauliVec &g) { return symplectic_product(g, e); })) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(QuantumCode, BuiltinParameters) {
    EXPECT_EQ(format_params(builtin("shor9")), "[[9,1;0]]");
    EXPECT_EQ(format_params(builtin("steane7")), "[[7,1;0]]");
    EXPECT_EQ(format_params(builtin("fivequbit")), "[[5,1;0]]");
    EXPECT_EQ(format_params(builtin("ea8")), "[[8,1;1]]");
    EXPECT_EQ(format_params(builtin("eaoq8"), 3), "[[8,1,3;2,1]]");
    EXPECT_EQ(format_params(builtin("q15")), "[[15,9;4]]");
    EXPECT_EQ(format_params(builtin("bch63")), "[[63,21;6]]");
    EXPECT_THROW(builtin("nope"), std::invalid_argument);
}

TEST(QuantumCode, BuiltinsCarryTheirClaims) {
    for (const auto &name : builtin_names()) {
        QuantumCode code = builtin(name);
        EXPECT_EQ(code.name, name);
        ASSERT_TRUE(code.claims.d.has_value()) << name;
        if (code.claims.k) {
            EXPECT_EQ(*code.claims.k, code.k()) << name;
        }
        if (code.claims.c) {
            EXPECT_EQ(*code.claims.c, code.c()) << name;
        }
    }
}

TEST(QuantumCode, ConstructorValidates) {
    // Anticommuting isotropic generators.
    EXPECT_THROW(QuantumCode(2, ops_of({"XI", "ZI"}), {}), std::invalid_argument);
    // Dependent generators.
    EXPECT_THROW(QuantumCode(2, ops_of({"XX", "XX"}), {}), std::invalid_argument);
    // A commuting "pair".
    EXPECT_THROW(QuantumCode(2, {}, {{parse_pauli("XI"), parse_pauli("XX")}}), std::invalid_argument);
    // Wrong length.
    EXPECT_THROW(QuantumCode(3, ops_of({"XX"}), {}), std::invalid_argument);
    QuantumCode ok(2, ops_of({"IZ"}), {{parse_pauli("XI"), parse_pauli("ZI")}});
    EXPECT_EQ(ok.k(), 0u);
    EXPECT_EQ(ok.c(), 1u);
}

TEST(QuantumCode, CssFromHamming) {
    BitMatrix h = hamming7_parity_check();
    EXPECT_TRUE(is_dual_containing(css_sp_matrix(h)));
    QuantumCode code = build_eaqecc_binary(h);
    EXPECT_EQ(format_params(code), "[[7,1;0]]");
    ASSERT_TRUE(code.css.has_value());
    EXPECT_EQ(code.css->x_checks, h);
    EXPECT_EQ(code.css->z_checks, h);
    EXPECT_EQ(code.logicals.size(), 1u);
}

TEST(QuantumCode, SymplecticComplementDimension) {
    BitMatrix hsp = css_sp_matrix(hamming7_parity_check());
    BitMatrix comp = symplectic_complement(hsp);
    EXPECT_EQ(comp.rows(), 14 - rank(hsp));
    for (size_t i = 0; i < comp.rows(); i++) {
        for (size_t j = 0; j < hsp.rows(); j++) {
            EXPECT_FALSE(symplectic_product(comp.row(i), hsp.row(j)));
        }
    }
}

TEST(QuantumCode, EaqeccParameterFormula) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; t++) {
        size_t m = 1 + rng() % 6, n = 6 + rng() % 6;
        BitMatrix h = random_matrix(m, n, rng);
        QuantumCode code = build_eaqecc_binary(h);
        size_t c = rank(mat_mul(h, h.transpose()));
        size_t kc = n - rank(h);
        EXPECT_EQ(code.c(), c);
        EXPECT_EQ(code.k(), 2 * kc - n + c);
    }
}

TEST(QuantumCode, BchEbitCount) {
    BitMatrix h = bch63_parity_check();
    ASSERT_EQ(h.rows(), 24u);
    ASSERT_EQ(h.cols(), 63u);
    EXPECT_EQ(rank(h), 24u);
    // The BCH code is cyclic: the null space is closed under cyclic shifts.
    BitMatrix ns = nullspace(h);
    EXPECT_EQ(ns.rows(), 39u);
    for (size_t i = 0; i < ns.rows(); i++) {
        EXPECT_TRUE(h.multiply(ns.row(i).block_rotate(63, 1)).is_zero());
    }
    EXPECT_EQ(rank(mat_mul(h, h.transpose())), 6u);
    QuantumCode code = build_eaqecc_binary(h);
    EXPECT_EQ(code.c(), 6u);
    EXPECT_EQ(code.k(), 21u);
    EXPECT_EQ(2 * 39 - 63 + 6, 21);

    QuantumCode sub = build_eaqecc_binary(h.row_range(0, 18));
    EXPECT_EQ(sub.c(), 0u);
    EXPECT_EQ(format_params(sub), "[[63,27;0]]");
}

TEST(QuantumCode, QuaternaryEbitCount) {
    F4Matrix h4 = q15_parity_check();
    EXPECT_EQ(rank_f4(h4), 5u);
    QuantumCode code = build_eaqecc_gf4(h4);
    EXPECT_EQ(code.c(), 4u);
    EXPECT_EQ(code.k(), 9u);
    EXPECT_EQ(2 * 10 - 15 + 4, 9);
}

TEST(Distance, EnumerationCost) {
    EXPECT_EQ(enumeration_cost(7, 1), 0u);
    EXPECT_EQ(enumeration_cost(7, 2), 21u);
    EXPECT_EQ(enumeration_cost(7, 3), 21u + 21u * 9u);
    EXPECT_EQ(enumeration_cost(1000, 40), UINT64_MAX);
}

TEST(Distance, SteaneStrict) {
    QuantumCode code = builtin("steane7");
    EXPECT_TRUE(verify_distance(code, 3, DistanceMode::strict).ok());
    DistanceResult r = verify_distance(code, 4, DistanceMode::strict);
    EXPECT_EQ(r.status, DistanceStatus::violated);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(weight(*r.witness), 3u);
    EXPECT_EQ(find_distance(code, 7, DistanceMode::strict), 3u);
}

TEST(Distance, ShorIsDegenerate) {
    QuantumCode code = builtin("shor9");
    DistanceResult strict = verify_distance(code, 3, DistanceMode::strict);
    ASSERT_EQ(strict.status, DistanceStatus::violated);
    ASSERT_TRUE(strict.witness);
    EXPECT_EQ(weight(*strict.witness), 2u);
    // The weight-2 witness is itself a stabilizer element.
    EXPECT_TRUE(group_of(code).contains(strict.witness->symplectic()));
    EXPECT_TRUE(verify_distance(code, 3, DistanceMode::degenerate).ok());
    EXPECT_EQ(find_distance(code, 9, DistanceMode::degenerate), 3u);
}

TEST(Distance, EntanglementAssistedTables) {
    EXPECT_EQ(find_distance(builtin("ea8"), 8, DistanceMode::degenerate), 3u);
    EXPECT_EQ(find_distance(builtin("eaoq8"), 8, DistanceMode::degenerate), 3u);
    EXPECT_EQ(find_distance(builtin("fivequbit"), 5, DistanceMode::strict), 3u);
}

TEST(Distance, StrictImpliesDegenerate) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 30; t++) {
        QuantumCode code = random_code(5, 1 + rng() % 5, rng);
        for (size_t d = 1; d <= 4; d++) {
            if (verify_distance(code, d, DistanceMode::strict).ok()) {
                EXPECT_TRUE(verify_distance(code, d, DistanceMode::degenerate).ok());
            }
        }
    }
}

TEST(Distance, BudgetIsReported) {
    DistanceResult r = verify_distance(builtin("bch63"), 9, DistanceMode::degenerate, 1000);
    EXPECT_EQ(r.status, DistanceStatus::budget_exceeded);
    EXPECT_EQ(find_distance(builtin("bch63"), 9, DistanceMode::degenerate, 1000), std::nullopt);
}

TEST(Distance, WitnessOrderIsLightestFirst) {
    // The first undetected error of Shor's code is ZZ on qubits 0 and 1.
    DistanceResult r = verify_distance(builtin("shor9"), 3, DistanceMode::strict);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->str(), "ZZIIIIIII");
}

TEST(PrintedQ15, LiteralGroupMatchesConstruction) {
    QuantumCode table(15, ops_of(kQ15Isotropic), pairs_of(kQ15Pairs, 0, 8));
    EXPECT_EQ(format_params(table), "[[15,9;4]]");
    EXPECT_TRUE(same_group(table, builtin("q15")));
    EXPECT_TRUE(verify_distance(table, 4, DistanceMode::strict).ok());
    EXPECT_FALSE(verify_distance(table, 5, DistanceMode::strict).ok());
}

TEST(GaugedQ15, GaugeMoveSearchKeepsDistanceThree) {
    QuantumCode q15 = builtin("q15");
    auto index = search_gauge_move(q15, 3, DistanceMode::degenerate);
    ASSERT_TRUE(index.has_value());
    QuantumCode moved = gauge_move(q15, *index);
    EXPECT_EQ(format_params(moved), "[[15,9;1,3]]");
    EXPECT_TRUE(verify_distance(moved, 3, DistanceMode::degenerate).ok());
}

TEST(GaugedQ15, SomePlaneGivesExactlyDistanceThree) {
    QuantumCode q15 = builtin("q15");
    bool found = false;
    for (const auto &pair : hyperbolic_planes(q15)) {
        QuantumCode moved = gauge_move(q15, pair);
        if (find_distance(moved, 4, DistanceMode::degenerate) == 3u) {
            EXPECT_EQ(format_params(moved, 3), "[[15,9,3;1,3]]");
            found = true;
            break;
        }
    }
    EXPECT_TRUE(found);
}

TEST(GaugedQ15, PrintedTableLeavesQubitThreeUnprotected) {
    auto pairs = pairs_of(kQ15Pairs, 0, 8);
    std::vector<SymplecticPair> entangled(pairs.begin(), pairs.begin() + 3), gauge{pairs[3]};
    QuantumCode table(15, ops_of(kMovedQ15Isotropic), entangled, gauge);
    EXPECT_EQ(table.k(), 9u);
    EXPECT_EQ(table.c(), 3u);
    EXPECT_EQ(table.r(), 1u);
    DistanceResult r = verify_distance(table, 3, DistanceMode::degenerate);
    ASSERT_EQ(r.status, DistanceStatus::violated);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(weight(*r.witness), 1u);
    EXPECT_NE(r.witness->at(3), 'I');
}

TEST(GaugeMove, PlaneCountMatchesSymplecticCount) {
    // (2^{2c} - 1) 2^{2c-1} anticommuting ordered pairs, 6 per plane.
    EXPECT_EQ(hyperbolic_planes(builtin("q15")).size(), 255u * 128 / 6);
    EXPECT_EQ(hyperbolic_planes(builtin("ea8")).size(), 1u);
    EXPECT_TRUE(hyperbolic_planes(builtin("steane7")).empty());
}

TEST(GaugeMove, ArbitraryPlaneKeepsGroup) {
    QuantumCode q15 = builtin("q15");
    auto planes = hyperbolic_planes(q15);
    for (size_t i = 0; i < planes.size(); i += 97) {
        QuantumCode moved = gauge_move(q15, planes[i]);
        EXPECT_EQ(moved.k(), q15.k());
        EXPECT_EQ(moved.c(), 3u);
        EXPECT_EQ(moved.r(), 1u);
        EXPECT_TRUE(same_group(moved, q15));
    }
    QuantumCode by_index = gauge_move(q15, 1);
    QuantumCode by_pair = gauge_move(q15, q15.entangled()[1]);
    EXPECT_TRUE(same_group(by_index, by_pair));
    EXPECT_EQ(by_index.gauge(), by_pair.gauge());
}

TEST(GaugeMove, PairMustBeHyperbolicInsideEntangledSpan) {
    QuantumCode q15 = builtin("q15");
    const auto &p = q15.entangled()[0];
    EXPECT_THROW(gauge_move(q15, SymplecticPair{p.first, p.first}), std::invalid_argument);
    EXPECT_THROW(gauge_move(q15, SymplecticPair{q15.isotropic()[0], p.second}), std::invalid_argument);
}

TEST(GaugeMove, PreservesKAndTradesEbits) {
    QuantumCode ea = builtin("ea8");
    QuantumCode moved = gauge_move(ea, 0);
    EXPECT_EQ(moved.k(), ea.k());
    EXPECT_EQ(moved.c(), ea.c() - 1);
    EXPECT_EQ(moved.r(), ea.r() + 1);
    EXPECT_THROW(gauge_move(ea, 5), std::out_of_range);
    QuantumCode back = ungauge(moved);
    EXPECT_EQ(back.r(), 0u);
    EXPECT_EQ(back.k(), moved.k());
    EXPECT_THROW(ungauge(ea), std::invalid_argument);
}

TEST(Bounds, SingletonAndHamming) {
    for (const auto &name : builtin_names()) {
        EXPECT_TRUE(singleton_check(builtin(name))) << name;
    }
    QuantumCode five = builtin("fivequbit");
    EXPECT_EQ(five.n() - five.k(), 2 * (3 - 1));
    EXPECT_TRUE(hamming_check(five, 3));
    EXPECT_FALSE(singleton_check(five, 4));
    EXPECT_TRUE(hamming_check(builtin("steane7"), 3));
    QuantumCode plain = build_eaqecc_binary(hamming7_parity_check());
    EXPECT_THROW(singleton_check(plain), std::invalid_argument);
}

TEST(ExtendPuncture, SteaneToEightZeroFour) {
    QuantumCode ext = extend_code(builtin("steane7"));
    EXPECT_EQ(ext.n(), 8u);
    EXPECT_EQ(ext.k(), 0u);
    EXPECT_TRUE(verify_distance(ext, 4, DistanceMode::strict).ok());
    QuantumCode back = puncture_code(ext);
    EXPECT_EQ(back.n(), 7u);
    EXPECT_EQ(back.k(), 1u);
    EXPECT_TRUE(verify_distance(back, 3, DistanceMode::strict).ok());
}

TEST(ExtendPuncture, NetYieldAndDistanceOnRandomCodes) {
    std::mt19937_64 rng(33);
    size_t punctured = 0;
    for (int t = 0; t < 25; t++) {
        QuantumCode code = random_code(5, 2 + rng() % 4, rng);
        long yield = static_cast<long>(code.k()) - static_cast<long>(code.c());
        auto d = find_distance(code, 6, DistanceMode::strict);
        ASSERT_TRUE(d);

        QuantumCode ext = extend_code(code);
        EXPECT_EQ(ext.n(), 6u);
        EXPECT_EQ(static_cast<long>(ext.k()) - static_cast<long>(ext.c()), yield - 1);
        auto de = find_distance(ext, 7, DistanceMode::strict);
        ASSERT_TRUE(de);
        EXPECT_GE(*de, *d);

        QuantumCode pun = puncture_code(code);
        EXPECT_EQ(pun.n(), 4u);
        if (!first_qubit_detected(code)) {
            continue;
        }
        punctured++;
        EXPECT_EQ(static_cast<long>(pun.k()) - static_cast<long>(pun.c()), yield + 1);
        auto dp = find_distance(pun, 5, DistanceMode::strict);
        ASSERT_TRUE(dp);
        EXPECT_GE(*dp + 1, *d);
    }
    EXPECT_GE(punctured, 5u);
    EXPECT_THROW(puncture_code(random_code(1, 1, rng)), std::invalid_argument);
}

TEST(CodeIo, RoundTripKeepsGroupAndLabels) {
    for (const auto &name : {"steane7", "ea8", "eaoq8", "q15"}) {
        QuantumCode code = builtin(name);
        std::stringstream ss;
        write_code(ss, code);
        QuantumCode back = read_code(ss);
        EXPECT_EQ(format_params(back), format_params(code)) << name;
        EXPECT_TRUE(same_group(back, code)) << name;
        EXPECT_EQ(back.isotropic(), code.isotropic()) << name;
    }
}

TEST(CodeIo, UnlabeledTableIsDecomposed) {
    std::stringstream ss("XXXX\nZZZZ\n# comment\nXZIX\n");
    QuantumCode code = read_code(ss);
    EXPECT_EQ(code.n(), 4u);
    EXPECT_EQ(code.c() * 2 + code.isotropic().size(), 3u);
}

TEST(CodeIo, MalformedTables) {
    auto fails = [](const std::string &text) {
        std::stringstream ss(text);
        EXPECT_THROW(read_code(ss), ParseError) << text;
    };
    fails("");
    fails("I XX\nZZ\n");
    fails("Q XX\n");
    fails("E XI\n");
    fails("I XX\nI ZZZ\n");
    fails("I XI\nI ZI\n");
    fails("I XQ\n");
}

TEST(Report, ShowsComputedAndClaimed) {
    QuantumCode code = builtin("eaoq8");
    ReportOptions opts;
    opts.verify = true;
    CodeReport rep = analyze_code(code, opts);
    EXPECT_EQ(rep.verified_d, 3u);
    EXPECT_EQ(rep.params, "[[8,1,3;2,1]]");
    std::stringstream out;
    print_report(out, code, rep);
    EXPECT_NE(out.str().find("computed: [[8,1;2,1]]"), std::string::npos) << out.str();
    EXPECT_NE(out.str().find("claimed: [[8,1,3;2,1]]"), std::string::npos);
}

TEST(Report, QcLdpcSymplecticMatrixIsNotDualContaining) {
    EXPECT_FALSE(is_dual_containing(css_sp_matrix(expand(make_ex1()))));
}

#include "eaqec/spa_decoder.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "eaqec/errors.h"
#include "eaqec/qc_ldpc.h"
#include "eaqec/quantum_code.h"
#include "test_util.h"

using namespace eaqec;
using eaqec::testing::random_tree;

namespace {

BitVec bits_of(uint32_t pattern, size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, (pattern >> i) & 1);
    }
    return v;
}

}  // namespace

TEST(Spa, ZeroSyndromeConvergesImmediately) {
    BitMatrix h = hamming7_parity_check();
    DecodeResult r = decode(h, BitVec(3), 0.1);
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.iterations, 1u);
    EXPECT_TRUE(r.estimate.is_zero());
}

TEST(Spa, HammingSingleErrorsAreExplained) {
    BitMatrix h = hamming7_parity_check();
    for (size_t i = 0; i < 7; i++) {
        BitVec e(7);
        e.set(i, true);
        BitVec s = h.multiply(e);
        DecodeResult r = decode(h, s, 0.01);
        ASSERT_TRUE(r.converged);
        EXPECT_EQ(h.multiply(r.estimate), s);
        EXPECT_TRUE(r.estimate.get(i));
    }
}

TEST(Spa, ConvergedEstimatesSatisfySyndromeOnAllPatterns) {
    BitMatrix h = hamming7_parity_check();
    SpaDecoder dec(h);
    for (double f : {0.01, 0.05, 0.1}) {
        size_t converged = 0;
        for (uint32_t p = 0; p < 128; p++) {
            BitVec s = h.multiply(bits_of(p, 7));
            DecodeResult r = dec.decode(s, f);
            if (r.converged) {
                converged++;
                EXPECT_EQ(h.multiply(r.estimate), s);
            }
            for (double q : r.posterior) {
                EXPECT_GE(q, 0.0);
                EXPECT_LE(q, 1.0);
            }
        }
        EXPECT_EQ(converged, 128u) << "f = " << f;
    }
}

TEST(Spa, TreeMarginalsAreExact) {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 20; t++) {
        size_t n = 3 + rng() % 13, m = 1 + rng() % std::min<size_t>(n, 8);
        BitMatrix h = random_tree(m, n, rng);
        BitVec e = eaqec::testing::random_vec(n, rng, 0.2);
        BitVec s = h.multiply(e);
        double f = 0.05 + 0.1 * (rng() % 4);
        SpaOptions opts;
        opts.max_iter = 2 * (m + n);
        opts.stop_on_syndrome = false;
        DecodeResult r = decode(h, s, f, opts);
        std::vector<double> exact = exact_marginals(h, s, f);
        for (size_t i = 0; i < n; i++) {
            EXPECT_NEAR(r.posterior[i], exact[i], 1e-9) << "case " << t << " bit " << i;
        }
    }
}

TEST(Spa, SingleErrorsOnGirthSixCode) {
    BitMatrix h = expand(make_ex1());
    ASSERT_EQ(girth_exact(h), 6u);
    SpaDecoder dec(h);
    std::mt19937_64 rng(52);
    size_t ok = 0, trials = 1000;
    for (size_t t = 0; t < trials; t++) {
        BitVec e(h.cols());
        e.set(rng() % h.cols(), true);
        ok += dec.decode(h.multiply(e), 0.01).estimate == e;
    }
    EXPECT_GE(static_cast<double>(ok) / trials, 0.99);
}

TEST(Spa, RejectsBadArguments) {
    BitMatrix h = hamming7_parity_check();
    EXPECT_THROW(decode(h, BitVec(4), 0.1), DimensionError);
    EXPECT_THROW(decode(h, BitVec(3), 0.0), std::invalid_argument);
    EXPECT_THROW(decode(h, BitVec(3), 1.0), std::invalid_argument);
    SpaOptions none;
    none.max_iter = 0;
    EXPECT_THROW(decode(h, BitVec(3), 0.1, none), std::invalid_argument);
}

TEST(ExactMarginals, Symmetry) {
    BitMatrix h = BitMatrix::from_strings({"11"});
    auto q = exact_marginals(h, BitVec::from_string("1"), 0.1);
    EXPECT_NEAR(q[0], 0.5, 1e-15);
    EXPECT_NEAR(q[1], 0.5, 1e-15);
}

TEST(ExactMarginals, ZeroSyndromeWithTinyPrior) {
    auto q = exact_marginals(hamming7_parity_check(), BitVec(3), 1e-9);
    for (double v : q) {
        EXPECT_LT(v, 1e-20);
    }
}

TEST(ExactMarginals, Limits) {
    EXPECT_THROW(exact_marginals(BitMatrix(1, 25), BitVec(1), 0.1), std::invalid_argument);
    // Second column is zero, so syndrome 01 is unreachable.
    BitMatrix h = BitMatrix::from_strings({"1", "0"});
    EXPECT_THROW(exact_marginals(h, BitVec::from_string("01"), 0.1), std::invalid_argument);
}

#include "eaqec/bit_matrix.h"

#include <sstream>

#include <gtest/gtest.h>

#include "eaqec/errors.h"
#include "test_util.h"

using namespace eaqec;
using eaqec::testing::brute_rank;
using eaqec::testing::random_matrix;
using eaqec::testing::random_vec;
using eaqec::testing::span_of;

TEST(BitVec, SetGetFlip) {
    BitVec v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    EXPECT_EQ(v.popcount(), 3u);
    v.flip(64);
    EXPECT_FALSE(v.get(64));
    EXPECT_EQ(v.first_one(), 0u);
    v.set(0, false);
    EXPECT_EQ(v.first_one(), 129u);
    EXPECT_EQ(BitVec(7).first_one(), 7u);
}

TEST(BitVec, StringRoundTrip) {
    BitVec v = BitVec::from_string("1011001");
    EXPECT_EQ(v.str(), "1011001");
    EXPECT_TRUE(v.get(0));
    EXPECT_FALSE(v.get(1));
}

TEST(BitVec, DotIsParityOfOverlap) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; t++) {
        BitVec a = random_vec(100, rng), b = random_vec(100, rng);
        size_t overlap = 0;
        for (size_t i = 0; i < 100; i++) {
            overlap += a.get(i) && b.get(i);
        }
        EXPECT_EQ(a.dot(b), overlap % 2 == 1);
    }
}

TEST(BitVec, ConcatAndSlice) {
    BitVec a = BitVec::from_string("101"), b = BitVec::from_string("0011");
    BitVec c = a.concat(b);
    EXPECT_EQ(c.str(), "1010011");
    EXPECT_EQ(c.slice(3, 7), b);
    EXPECT_EQ(c.slice(0, 3), a);
}

TEST(BitVec, BlockRotateMovesBitForward) {
    BitVec v = BitVec::from_string("10000100");
    // Two blocks of four: bit 0 -> 1, bit 5 -> 6.
    EXPECT_EQ(v.block_rotate(4, 1).str(), "01000010");
    EXPECT_EQ(v.block_rotate(4, 4), v);
    EXPECT_EQ(BitVec::from_string("0001").block_rotate(4, 1).str(), "1000");
}

TEST(BitMatrix, RankMatchesSpanEnumeration) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; t++) {
        size_t rows = 1 + rng() % 10, cols = 1 + rng() % 12;
        BitMatrix m = random_matrix(rows, cols, rng, 0.4);
        EXPECT_EQ(rank(m), brute_rank(m));
    }
}

TEST(BitMatrix, NullspaceIsOrthogonalWithFullDimension) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; t++) {
        size_t rows = 1 + rng() % 8, cols = 1 + rng() % 14;
        BitMatrix m = random_matrix(rows, cols, rng);
        BitMatrix ns = nullspace(m);
        EXPECT_EQ(ns.rows(), cols - rank(m));
        EXPECT_EQ(rank(ns), ns.rows());
        for (size_t i = 0; i < ns.rows(); i++) {
            EXPECT_TRUE(m.multiply(ns.row(i)).is_zero());
        }
    }
}

TEST(BitMatrix, RrefPreservesSpan) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; t++) {
        BitMatrix m = random_matrix(1 + rng() % 7, 1 + rng() % 9, rng);
        BitMatrix r = rref(m);
        EXPECT_EQ(r.rows(), rank(m));
        EXPECT_EQ(span_of(r), span_of(m));
        // Each pivot column has a single one.
        for (size_t i = 0; i < r.rows(); i++) {
            size_t p = r.row(i).first_one();
            EXPECT_EQ(r.column(p).popcount(), 1u);
        }
    }
}

TEST(BitMatrix, MatMulAgainstDefinition) {
    std::mt19937_64 rng(5);
    BitMatrix a = random_matrix(6, 9, rng), b = random_matrix(9, 5, rng);
    BitMatrix c = mat_mul(a, b);
    for (size_t i = 0; i < 6; i++) {
        for (size_t j = 0; j < 5; j++) {
            bool s = false;
            for (size_t k = 0; k < 9; k++) {
                s ^= a.get(i, k) && b.get(k, j);
            }
            EXPECT_EQ(c.get(i, j), s);
        }
    }
    EXPECT_THROW(mat_mul(a, a), DimensionError);
}

TEST(BitMatrix, TransposeAndStacking) {
    BitMatrix m = BitMatrix::from_strings({"110", "011"});
    EXPECT_EQ(m.transpose(), BitMatrix::from_strings({"10", "11", "01"}));
    EXPECT_EQ(m.vstack(m).rows(), 4u);
    EXPECT_EQ(m.hstack(m).row(0).str(), "110110");
    EXPECT_EQ(BitMatrix::identity(3).nnz(), 3u);
}

TEST(BitMatrix, ZeroRowMatrixKeepsWidth) {
    BitMatrix m(0, 5);
    EXPECT_EQ(m.cols(), 5u);
    EXPECT_EQ(rank(m), 0u);
    EXPECT_EQ(nullspace(m).rows(), 5u);
    m.append_row(BitVec::from_string("10100"));
    EXPECT_EQ(rank(m), 1u);
}

TEST(RowSpace, InsertAndContains) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; t++) {
        BitMatrix m = random_matrix(1 + rng() % 6, 10, rng);
        RowSpace s(m);
        EXPECT_EQ(s.dim(), rank(m));
        auto span = span_of(m);
        for (int probe = 0; probe < 20; probe++) {
            BitVec v = random_vec(10, rng);
            std::vector<bool> bits(10);
            for (size_t i = 0; i < 10; i++) {
                bits[i] = v.get(i);
            }
            EXPECT_EQ(s.contains(v), span.count(bits) == 1);
            EXPECT_EQ(in_rowspace(m, v), span.count(bits) == 1);
        }
    }
}

TEST(MatrixIo, DenseRoundTrip) {
    std::mt19937_64 rng(7);
    BitMatrix m = random_matrix(5, 70, rng);
    std::stringstream ss;
    write_dense(ss, m);
    EXPECT_EQ(read_dense(ss), m);
}

TEST(MatrixIo, AlistRoundTrip) {
    std::mt19937_64 rng(8);
    BitMatrix m = random_matrix(9, 20, rng, 0.3);
    std::stringstream ss;
    write_alist(ss, m);
    EXPECT_EQ(read_alist(ss), m);
}

TEST(MatrixIo, MalformedDenseThrows) {
    std::stringstream bad_char("2 3\n101\n1x1\n");
    EXPECT_THROW(read_dense(bad_char), ParseError);
    std::stringstream short_row("2 3\n101\n11\n");
    EXPECT_THROW(read_dense(short_row), ParseError);
    std::stringstream missing_rows("3 3\n101\n");
    EXPECT_THROW(read_dense(missing_rows), ParseError);
}

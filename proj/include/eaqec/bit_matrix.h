#ifndef EAQEC_BIT_MATRIX_H
#define EAQEC_BIT_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eaqec {

/// Packed vector over GF(2). Bits past `size()` in the last word are always zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    static BitVec from_string(std::string_view bits);

    size_t size() const { return num_bits_; }
    size_t num_words() const { return words_.size(); }
    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool value);
    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec &b) { return a |= b; }
    bool operator==(const BitVec &other) const = default;

    size_t popcount() const;
    bool is_zero() const;
    /// Parity of the bitwise AND, i.e. the ordinary GF(2) dot product.
    bool dot(const BitVec &other) const;
    /// Index of the lowest set bit, or size() when the vector is zero.
    size_t first_one() const;

    /// Concatenation `this | tail`.
    BitVec concat(const BitVec &tail) const;
    BitVec slice(size_t begin, size_t end) const;
    /// Cyclic shift inside each consecutive block of `block` bits.
    BitVec block_rotate(size_t block, size_t amount) const;

    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense matrix over GF(2), one BitVec per row.
///
/// Zero-row matrices are allowed so that an empty basis (for example the
/// nullspace of a full-rank square matrix) has a representation.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);
    explicit BitMatrix(std::vector<BitVec> rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// Rows given as strings of '0'/'1'; all rows must have equal length.
    static BitMatrix from_strings(const std::vector<std::string> &rows);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const { return rows_[r].get(c); }
    void set(size_t r, size_t c, bool v) { rows_[r].set(c, v); }
    const BitVec &row(size_t r) const { return rows_[r]; }
    BitVec &row(size_t r) { return rows_[r]; }
    const std::vector<BitVec> &row_list() const { return rows_; }

    void append_row(BitVec row);
    BitVec column(size_t c) const;
    BitMatrix transpose() const;
    /// Rows [begin, end).
    BitMatrix row_range(size_t begin, size_t end) const;
    BitMatrix vstack(const BitMatrix &below) const;
    BitMatrix hstack(const BitMatrix &right) const;
    /// M·v over GF(2); v has length cols().
    BitVec multiply(const BitVec &v) const;
    size_t nnz() const;
    bool is_zero() const;

    bool operator==(const BitMatrix &other) const = default;

    std::string str() const;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b);
size_t rank(const BitMatrix &m);
bool in_rowspace(const BitMatrix &m, const BitVec &v);
/// Basis of {v : m·vᵀ = 0}, one basis vector per row.
BitMatrix nullspace(const BitMatrix &m);
/// Reduced row echelon form with zero rows removed. Pivot columns are
/// searched left to right.
BitMatrix rref(const BitMatrix &m);

/// Incrementally maintained reduced basis of a GF(2) row space.
///
/// Rows are kept fully reduced against each other's pivots so `reduce`
/// is a single pass.
class RowSpace {
   public:
    explicit RowSpace(size_t cols) : cols_(cols) {}
    explicit RowSpace(const BitMatrix &m);

    size_t cols() const { return cols_; }
    size_t dim() const { return basis_.size(); }
    /// Residue of v after eliminating every pivot of the basis.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec &v) const { return reduce(v).is_zero(); }
    /// Adds v to the space; returns false when v was already in it.
    bool insert(const BitVec &v);
    BitMatrix basis() const;

   private:
    size_t cols_;
    std::vector<BitVec> basis_;
    std::vector<size_t> pivots_;
};

/// Dense text format: "ROWS COLS" then ROWS lines of COLS characters in {0,1}.
BitMatrix read_dense(std::istream &in);
void write_dense(std::ostream &out, const BitMatrix &m);

/// MacKay alist format. The matrix is M×N with N columns (bits) and M rows (checks).
BitMatrix read_alist(std::istream &in);
void write_alist(std::ostream &out, const BitMatrix &m);

/// Reads either format, sniffing the header. Files whose second line is a
/// pair of weights and whose row count exceeds the header are treated as alist.
BitMatrix read_matrix_file(const std::string &path);

}  // namespace eaqec

#endif

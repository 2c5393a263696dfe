#ifndef EAQEC_GF4_H
#define EAQEC_GF4_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eaqec/bit_matrix.h"

namespace eaqec {

/// Element of the quaternary field {0, 1, w, W} with W = w̄ = w².
///
/// The stored code is the image under gamma, packed as (z << 1) | x:
/// 0 -> 00, W -> 01, 1 -> 11, w -> 10. Field addition is then XOR of codes.
class F4 {
   public:
    constexpr F4() = default;

    static constexpr F4 zero() { return F4(0b00); }
    static constexpr F4 one() { return F4(0b11); }
    static constexpr F4 w() { return F4(0b10); }
    static constexpr F4 wbar() { return F4(0b01); }
    static F4 from_char(char c);
    /// All four elements in the order 0, W, 1, w.
    static std::vector<F4> all();

    constexpr uint8_t code() const { return code_; }
    constexpr bool is_zero() const { return code_ == 0; }
    char symbol() const;

    /// The pair gamma(a) = (z, x).
    std::pair<bool, bool> gamma() const { return {(code_ >> 1) & 1, code_ & 1}; }

    F4 conj() const;
    /// Absolute trace to GF(2): 0 for {0, 1}, 1 for {w, W}.
    bool trace() const;

    friend constexpr F4 operator+(F4 a, F4 b) { return F4(a.code_ ^ b.code_); }
    friend F4 operator*(F4 a, F4 b);
    friend constexpr bool operator==(F4 a, F4 b) { return a.code_ == b.code_; }
    F4 inverse() const;

   private:
    explicit constexpr F4(uint8_t code) : code_(code) {}
    uint8_t code_ = 0;
};

/// tr<a,b> = tr(a† b).
bool trace_inner(F4 a, F4 b);

class F4Matrix {
   public:
    F4Matrix() = default;
    F4Matrix(size_t rows, size_t cols);
    /// Rows as whitespace-separated symbol strings, e.g. "1 0 w W".
    static F4Matrix from_rows(const std::vector<std::string> &rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    F4 get(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set(size_t r, size_t c, F4 v) { data_[r * cols_ + c] = v; }
    std::vector<F4> row(size_t r) const;

    /// Every entry multiplied by s.
    F4Matrix scaled(F4 s) const;
    F4Matrix vstack(const F4Matrix &below) const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<F4> data_;
};

/// Rank over GF(4).
size_t rank_f4(const F4Matrix &m);

/// Number of nonzero entries.
size_t weight_f4(const std::vector<F4> &v);

/// Hermitian trace product of two vectors: sum_i tr(a_i† b_i).
bool trace_inner(const std::vector<F4> &a, const std::vector<F4> &b);

/// gamma applied entrywise to a vector, returned in (z|x) layout of length 2n.
BitVec gamma(const std::vector<F4> &v);

/// gamma applied to [w·H4 ; W·H4]; a 2m×2n bit matrix in (z|x) layout.
BitMatrix f4_to_symplectic(const F4Matrix &h4);

/// "ROWS COLS" header, then ROWS lines of COLS symbols from {0,1,w,W}.
F4Matrix read_f4_matrix(std::istream &in);
void write_f4_matrix(std::ostream &out, const F4Matrix &m);

}  // namespace eaqec

#endif

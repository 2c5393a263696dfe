#ifndef EAQEC_QC_LDPC_H
#define EAQEC_QC_LDPC_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eaqec/bit_matrix.h"
#include "eaqec/f2_poly.h"

namespace eaqec {

/// Element of F2[X]/(X^r - 1), i.e. an r×r circulant. Row s of the
/// circulant is X^s·p(X), so X^e has its 1 at column (s + e) mod r.
class CircPoly {
   public:
    CircPoly() = default;
    explicit CircPoly(size_t r) : r_(r), coeffs_(r) {}
    static CircPoly monomial(size_t r, size_t e);
    static CircPoly from_poly(size_t r, const F2Poly &p);

    size_t r() const { return r_; }
    const BitVec &coeffs() const { return coeffs_; }
    bool coeff(size_t i) const { return coeffs_.get(i); }
    void flip(size_t i) { coeffs_.flip(i); }
    bool is_zero() const { return coeffs_.is_zero(); }
    size_t weight() const { return coeffs_.popcount(); }

    CircPoly &operator+=(const CircPoly &o);
    friend CircPoly operator+(CircPoly a, const CircPoly &b) { return a += b; }
    friend CircPoly operator*(const CircPoly &a, const CircPoly &b);
    bool operator==(const CircPoly &o) const = default;

    /// Polynomial of the transposed circulant: X^k -> X^{r-k}.
    CircPoly transpose() const;
    F2Poly to_poly() const;
    BitMatrix to_matrix() const;

   private:
    size_t r_ = 0;
    BitVec coeffs_;
};

/// r - deg gcd(p, X^r - 1).
size_t circ_rank(const CircPoly &p);

/// One block of an exponent matrix: zero (written "-"), X^e, or X^e1 + X^e2.
struct ExponentEntry {
    enum class Kind { zero, monomial, binomial };
    Kind kind = Kind::zero;
    size_t e1 = 0;
    size_t e2 = 0;

    static ExponentEntry none() { return {}; }
    static ExponentEntry mono(size_t e) { return {Kind::monomial, e, 0}; }
    static ExponentEntry bi(size_t a, size_t b) { return {Kind::binomial, a, b}; }

    std::vector<size_t> exponents() const;
    std::string str() const;
    bool operator==(const ExponentEntry &) const = default;
};

struct ExponentMatrix {
    size_t r = 0;
    size_t J = 0;
    size_t L = 0;
    std::vector<std::vector<ExponentEntry>> entries;

    ExponentMatrix() = default;
    ExponentMatrix(size_t r, std::vector<std::vector<ExponentEntry>> rows);
    /// Rows of plain integer exponents.
    static ExponentMatrix from_exponents(size_t r, const std::vector<std::vector<size_t>> &rows);

    const ExponentEntry &at(size_t j, size_t l) const { return entries[j][l]; }
    bool is_type_one() const;
    CircPoly poly(size_t j, size_t l) const;
    std::vector<std::vector<CircPoly>> poly_matrix() const;
};

/// Jr × Lr binary parity check.
BitMatrix expand(const ExponentMatrix &e);

/// Text format: "r J L" then J lines of L entries from {integer, e1+e2, -}.
ExponentMatrix read_exponent_matrix(std::istream &in);
void write_exponent_matrix(std::ostream &out, const ExponentMatrix &e);

/// Per column residues of c_i - c_j mod r; an empty column stands for ∞.
/// Binomial minus binomial lists (a1-b1, a1-b2, a2-b1, a2-b2).
using DifferenceVector = std::vector<std::vector<size_t>>;

DifferenceVector row_difference(const ExponentMatrix &e, size_t i, size_t j);
bool is_multiplicity_even(const DifferenceVector &d);
bool is_multiplicity_free(const DifferenceVector &d);

/// No 4-cycles. For i != j every residue of c_i - c_j must be distinct; for
/// i == j the zeros contributed by each block against itself are ignored.
bool girth_ge_6(const ExponentMatrix &e);
/// H Hᵀ = 0, i.e. every c_i - c_j is multiplicity even.
bool dual_containing_qc(const ExponentMatrix &e);

/// Length of the shortest cycle in the Tanner graph, nullopt if acyclic.
std::optional<size_t> girth_exact(const BitMatrix &h);

/// Ĥ(X) = H(X)·H(X)ᵀ with the transpose rule X^k -> X^{r-k}.
std::vector<std::vector<CircPoly>> hermitian_poly_product(const ExponentMatrix &e);

/// Degree of the gcd of the grid with X^r - 1 taken over F2[X]-modules:
/// dim of F2[X]^cols / (rows + (X^r - 1)F2[X]^cols). For a single
/// circulant p this is deg gcd(p, X^r - 1).
size_t gcd_degree(const std::vector<std::vector<CircPoly>> &grid);

/// F2-rank of the expansion of a grid of circulants: cols·r - gcd_degree.
size_t block_rank(const std::vector<std::vector<CircPoly>> &grid);

/// min of Σ_i max_j rank(ĥ_ij) and, for Type-I matrices with L even and
/// gcd(ĥ_ij, X^r - 1) ≠ 1 for all i ≠ j, J(r - L + 1).
size_t rank_bound(const ExponentMatrix &e);

ExponentMatrix make_ex1();
ExponentMatrix make_ex2();
/// [C, Cᵀ] with C an (n/2)×(n/2) circulant of first-row weight L/2 drawn
/// from `seed`; only the first m rows are kept. With `reject_4cycles` the
/// draw repeats until the result has girth at least 6.
BitMatrix make_ex_mackay(size_t n, size_t m, size_t L, uint64_t seed, bool reject_4cycles = false);

struct HiPair {
    ExponentMatrix hc;
    ExponentMatrix hd;
};
/// The pair of J×L exponent matrices over Z_P built from σ and τ.
/// Throws std::invalid_argument when the parameters are out of range.
HiPair make_ex_hi(size_t J, size_t L, size_t P, size_t sigma, size_t tau);

}  // namespace eaqec

#endif

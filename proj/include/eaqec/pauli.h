#ifndef EAQEC_PAULI_H
#define EAQEC_PAULI_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eaqec/bit_matrix.h"

namespace eaqec {

/// Phase-free n-qubit Pauli operator Z^z X^x stored as the vector (z|x).
///
/// Single-qubit map: I = (0|0), X = (0|1), Y = (1|1), Z = (1|0).
/// Qubit 0 is the leftmost character of the string form.
class PauliVec {
   public:
    PauliVec() = default;
    explicit PauliVec(size_t n) : z_(n), x_(n) {}
    PauliVec(BitVec z, BitVec x);

    /// Splits a length-2n vector in (z|x) layout.
    static PauliVec from_symplectic(const BitVec &zx);
    /// Single-qubit operator `p` in {I,X,Y,Z} on qubit q of n.
    static PauliVec single(size_t n, size_t q, char p);

    size_t n() const { return z_.size(); }
    const BitVec &z() const { return z_; }
    const BitVec &x() const { return x_; }
    bool z(size_t q) const { return z_.get(q); }
    bool x(size_t q) const { return x_.get(q); }
    void set(size_t q, char p);
    char at(size_t q) const;

    /// (z|x) as one length-2n vector.
    BitVec symplectic() const { return z_.concat(x_); }

    /// Product up to phase.
    PauliVec &operator*=(const PauliVec &other);
    friend PauliVec operator*(PauliVec a, const PauliVec &b) { return a *= b; }
    bool operator==(const PauliVec &other) const = default;

    bool is_identity() const { return z_.is_zero() && x_.is_zero(); }
    /// Restriction to qubits [begin, end).
    PauliVec slice(size_t begin, size_t end) const;

    std::string str() const;

   private:
    BitVec z_;
    BitVec x_;
};

/// z·x'ᵀ + z'·xᵀ mod 2; zero iff the operators commute.
bool symplectic_product(const PauliVec &u, const PauliVec &v);
/// Same form on raw (z|x) vectors of even length.
bool symplectic_product(const BitVec &u, const BitVec &v);

/// Number of qubits where the operator is not the identity.
size_t weight(const PauliVec &u);

/// Parses a string over {I,X,Y,Z}. A single '|' may separate sender and
/// receiver qubits; it is dropped and the result spans all qubits.
PauliVec parse_pauli(std::string_view s);
std::string format_pauli(const PauliVec &u);

/// Rows of (z|x) vectors, one per operator.
BitMatrix to_symplectic_matrix(const std::vector<PauliVec> &ops, size_t n);
std::vector<PauliVec> from_symplectic_matrix(const BitMatrix &m);

}  // namespace eaqec

#endif

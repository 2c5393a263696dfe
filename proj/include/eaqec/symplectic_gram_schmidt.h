#ifndef EAQEC_SYMPLECTIC_GRAM_SCHMIDT_H
#define EAQEC_SYMPLECTIC_GRAM_SCHMIDT_H

#include <vector>

#include "eaqec/pauli.h"

namespace eaqec {

struct SymplecticPair {
    PauliVec first;
    PauliVec second;
    bool operator==(const SymplecticPair &) const = default;
};

/// Splitting of a subspace V of (Z2)^{2n} into a symplectic part (c
/// hyperbolic pairs) and an isotropic part (ell vectors), together with a
/// completion to a full symplectic basis of (Z2)^{2n}.
struct GroupDecomposition {
    size_t n = 0;
    /// Hyperbolic pairs lying entirely inside V.
    std::vector<SymplecticPair> pairs;
    /// Isotropic generators of V; their span is independent of the input basis.
    std::vector<PauliVec> isotropic;
    /// Partners of the isotropic generators, in the same order. Not in V.
    std::vector<PauliVec> isotropic_partners;
    /// Hyperbolic pairs with neither element in V.
    std::vector<SymplecticPair> outside;

    size_t c() const { return pairs.size(); }
    size_t ell() const { return isotropic.size(); }
    size_t dim() const { return 2 * c() + ell(); }
};

/// Runs the round-based symplectic Gram-Schmidt procedure on span(basis).
///
/// Linearly dependent inputs are dropped first (earlier vectors are kept);
/// the surviving input vectors seed w_1..w_m, and standard basis vectors
/// g_i = Z_i then h_i = X_i extend them to a basis of the whole space.
/// Each round takes u = w_1 and the smallest-index w_j with u ⊙ w_j = 1 as
/// its partner, so the output is a deterministic function of input order.
GroupDecomposition decompose(const std::vector<PauliVec> &basis, size_t n);
GroupDecomposition decompose(const std::vector<PauliVec> &basis);

/// Half the dimension of the symplectic part of span(basis).
size_t symp_dim(const std::vector<PauliVec> &basis, size_t n);

}  // namespace eaqec

#endif

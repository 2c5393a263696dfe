#ifndef EAQEC_SPA_DECODER_H
#define EAQEC_SPA_DECODER_H

#include <vector>

#include "eaqec/bit_matrix.h"

namespace eaqec {

inline constexpr size_t kDefaultMaxIter = 100;

struct SpaOptions {
    size_t max_iter = kDefaultMaxIter;
    /// Stop as soon as the tentative decoding satisfies the syndrome. Turn
    /// off to keep iterating, e.g. to let marginals settle on a tree.
    bool stop_on_syndrome = true;
};

struct DecodeResult {
    BitVec estimate;
    bool converged = false;
    size_t iterations = 0;
    /// Pseudoposterior q_i^1 after the last iteration.
    std::vector<double> posterior;
};

/// Sum-product syndrome decoder for a fixed parity check, flooding
/// schedule, probability domain. The decoder itself is immutable, so one
/// instance may serve several threads.
class SpaDecoder {
   public:
    explicit SpaDecoder(const BitMatrix &h);

    size_t num_checks() const { return check_start_.size() - 1; }
    size_t num_bits() const { return bit_edges_.size(); }

    /// Throws std::invalid_argument for a syndrome of the wrong length or a
    /// prior outside (0, 1) or max_iter == 0.
    DecodeResult decode(const BitVec &syndrome, double prior_flip, const SpaOptions &options = {}) const;

   private:
    BitMatrix h_;
    // Edges are numbered check by check; check j owns [check_start_[j], check_start_[j+1]).
    std::vector<size_t> check_start_;
    std::vector<size_t> edge_bit_;
    std::vector<std::vector<size_t>> bit_edges_;
};

DecodeResult decode(const BitMatrix &h, const BitVec &syndrome, double prior_flip, const SpaOptions &options = {});

inline constexpr size_t kMaxExactBits = 24;

/// P(n_i = 1 | H n = z) with i.i.d. Bernoulli(prior_flip) noise, by summing
/// over all 2^n error patterns. Throws std::invalid_argument when n exceeds
/// kMaxExactBits or no pattern matches the syndrome.
std::vector<double> exact_marginals(const BitMatrix &h, const BitVec &syndrome, double prior_flip);

}  // namespace eaqec

#endif

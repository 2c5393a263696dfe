#ifndef EAQEC_MONTE_CARLO_H
#define EAQEC_MONTE_CARLO_H

#include <cstdint>
#include <iosfwd>
#include <random>
#include <utility>
#include <vector>

#include "eaqec/pauli.h"
#include "eaqec/quantum_code.h"
#include "eaqec/spa_decoder.h"

namespace eaqec {

/// I with probability 1-p, otherwise X, Y or Z with probability p/3 each,
/// independently per qubit.
PauliVec sample_depolarizing(size_t n, double p, std::mt19937_64 &rng);

/// One bit per measured generator (S_I, then both halves of each S_E
/// pair): the symplectic product of the error with its channel-side part.
BitVec syndrome(const QuantumCode &code, const PauliVec &error);

struct SimConfig {
    /// Must carry CSS checks.
    QuantumCode code;
    std::vector<double> p_grid;
    size_t trials = 1000;
    uint64_t seed = 0;
    size_t max_iter = kDefaultMaxIter;
    DistanceMode success_mode = DistanceMode::degenerate;
    size_t threads = 1;
};

struct SimRow {
    double p = 0;
    uint64_t trials = 0;
    uint64_t block_errors = 0;
    double wer = 0;
    double ci_lo = 0;
    double ci_hi = 0;
};

/// 95% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials);

/// Seed of the generator for trial `trial` at grid index `point`.
uint64_t trial_seed(uint64_t seed, uint64_t point, uint64_t trial);

/// Runs config.trials trials at p_grid[point]. Each trial decodes the X and
/// Z parts separately with prior 2p/3 and scores the residual. Results do
/// not depend on config.threads.
SimRow run_point(const SimConfig &config, size_t point);
std::vector<SimRow> sweep(const SimConfig &config);

/// "p,trials,block_errors,wer,ci_lo,ci_hi" followed by one line per row.
void write_csv(std::ostream &out, const std::vector<SimRow> &rows);

}  // namespace eaqec

#endif

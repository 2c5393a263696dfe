#include "eaqec/monte_carlo.h"

#include <atomic>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "eaqec/errors.h"

namespace eaqec {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr double kWilsonZ = 1.959963984540054;

struct TrialContext {
    const QuantumCode &code;
    SpaDecoder x_decoder;  // Z-type checks, finds X flips
    SpaDecoder z_decoder;  // X-type checks, finds Z flips
    RowSpace degenerate_span;
    DistanceMode mode;
    SpaOptions options;
};

RowSpace make_degenerate_span(const QuantumCode &code) {
    BitMatrix m(0, 2 * code.n());
    for (const auto &g : code.degenerate_group()) {
        m.append_row(g.symplectic());
    }
    return RowSpace(m);
}

bool trial_fails(const TrialContext &ctx, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    size_t n = ctx.code.n();
    PauliVec error = sample_depolarizing(n, p, rng);
    double f = 2 * p / 3;
    auto estimate = [&](const SpaDecoder &dec, const BitMatrix &h, const BitVec &flips) {
        BitVec z = h.multiply(flips);
        if (z.is_zero() && f < 0.5) {
            return BitVec(n);
        }
        return dec.decode(z, f, ctx.options).estimate;
    };
    const CssChecks &css = *ctx.code.css;
    BitVec x_hat = estimate(ctx.x_decoder, css.z_checks, error.x());
    BitVec z_hat = estimate(ctx.z_decoder, css.x_checks, error.z());
    PauliVec residual(error.z() ^ z_hat, error.x() ^ x_hat);
    if (residual.is_identity()) {
        return false;
    }
    if (ctx.mode == DistanceMode::strict) {
        return true;
    }
    return !ctx.degenerate_span.contains(residual.symplectic());
}

}  // namespace

PauliVec sample_depolarizing(size_t n, double p, std::mt19937_64 &rng) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> kind(0, 2);
    PauliVec e{BitVec(n), BitVec(n)};
    for (size_t q = 0; q < n; q++) {
        if (coin(rng) < p) {
            e.set(q, "XYZ"[kind(rng)]);
        }
    }
    return e;
}

BitVec syndrome(const QuantumCode &code, const PauliVec &error) {
    if (error.n() != code.n()) {
        throw DimensionError(fmt::format("error acts on {} qubits, code has {}", error.n(), code.n()));
    }
    auto checks = code.check_operators();
    BitVec s(checks.size());
    for (size_t i = 0; i < checks.size(); i++) {
        s.set(i, symplectic_product(checks[i], error));
    }
    return s;
}

std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    double nt = static_cast<double>(trials);
    double ph = static_cast<double>(successes) / nt;
    double z2 = kWilsonZ * kWilsonZ;
    double denom = 1 + z2 / nt;
    double center = (ph + z2 / (2 * nt)) / denom;
    double half = kWilsonZ * std::sqrt(ph * (1 - ph) / nt + z2 / (4 * nt * nt)) / denom;
    double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

uint64_t trial_seed(uint64_t seed, uint64_t point, uint64_t trial) {
    return splitmix64(splitmix64(splitmix64(seed) ^ point) ^ trial);
}

SimRow run_point(const SimConfig &config, size_t point) {
    const QuantumCode &code = config.code;
    if (!code.css) {
        throw std::invalid_argument("simulation needs a CSS code");
    }
    if (point >= config.p_grid.size()) {
        throw std::out_of_range("grid index out of range");
    }
    double p = config.p_grid[point];
    if (!(p >= 0 && p < 1)) {
        throw std::invalid_argument(fmt::format("p = {} is outside [0, 1)", p));
    }
    if (config.trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    TrialContext ctx{code,
                     SpaDecoder(code.css->z_checks),
                     SpaDecoder(code.css->x_checks),
                     make_degenerate_span(code),
                     config.success_mode,
                     SpaOptions{config.max_iter, true}};

    std::atomic<uint64_t> errors{0};
    auto work = [&](size_t worker, size_t workers) {
        uint64_t local = 0;
        for (size_t t = worker; t < config.trials; t += workers) {
            local += trial_fails(ctx, p, trial_seed(config.seed, point, t)) ? 1 : 0;
        }
        errors += local;
    };
    size_t workers = std::max<size_t>(1, std::min(config.threads, config.trials));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (size_t w = 0; w < workers; w++) {
            pool.emplace_back(work, w, workers);
        }
    }

    SimRow row;
    row.p = p;
    row.trials = config.trials;
    row.block_errors = errors.load();
    row.wer = static_cast<double>(row.block_errors) / static_cast<double>(row.trials);
    std::tie(row.ci_lo, row.ci_hi) = wilson_interval(row.block_errors, row.trials);
    return row;
}

std::vector<SimRow> sweep(const SimConfig &config) {
    std::vector<SimRow> rows;
    for (size_t i = 0; i < config.p_grid.size(); i++) {
        rows.push_back(run_point(config, i));
    }
    return rows;
}

void write_csv(std::ostream &out, const std::vector<SimRow> &rows) {
    out << "p,trials,block_errors,wer,ci_lo,ci_hi\n";
    for (const auto &r : rows) {
        out << fmt::format("{},{},{},{:.6g},{:.6g},{:.6g}\n", r.p, r.trials, r.block_errors, r.wer, r.ci_lo, r.ci_hi);
    }
}

}  // namespace eaqec

#include "eaqec/spa_decoder.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "eaqec/errors.h"

namespace eaqec {

namespace {

constexpr double kFloor = 1e-300;

void normalize(double &a, double &b) {
    double s = a + b;
    a /= s;
    b /= s;
    a = std::max(a, kFloor);
    b = std::max(b, kFloor);
}

}  // namespace

SpaDecoder::SpaDecoder(const BitMatrix &h) : h_(h), bit_edges_(h.cols()) {
    check_start_.push_back(0);
    for (size_t j = 0; j < h.rows(); j++) {
        for (size_t i = 0; i < h.cols(); i++) {
            if (h.get(j, i)) {
                bit_edges_[i].push_back(edge_bit_.size());
                edge_bit_.push_back(i);
            }
        }
        check_start_.push_back(edge_bit_.size());
    }
}

DecodeResult SpaDecoder::decode(const BitVec &syndrome, double prior_flip, const SpaOptions &options) const {
    size_t m = num_checks(), n = num_bits();
    if (syndrome.size() != m) {
        throw DimensionError(fmt::format("syndrome has {} bits, parity check has {} rows", syndrome.size(), m));
    }
    if (!(prior_flip > 0 && prior_flip < 1)) {
        throw std::invalid_argument("prior_flip must lie in (0, 1)");
    }
    if (options.max_iter == 0) {
        throw std::invalid_argument("max_iter must be at least 1");
    }
    size_t num_edges = edge_bit_.size();
    const double p1 = prior_flip, p0 = 1 - prior_flip;
    std::vector<double> q0(num_edges, p0), q1(num_edges, p1);
    std::vector<double> r0(num_edges), r1(num_edges);
    std::vector<double> prefix, suffix, pre0, pre1;

    DecodeResult res;
    res.estimate = BitVec(n);
    res.posterior.assign(n, p1);
    for (size_t iter = 1; iter <= options.max_iter; iter++) {
        // Horizontal step: r^0 - r^1 on edge (j,i) is ±Π_{i'≠i}(q^0 - q^1).
        for (size_t j = 0; j < m; j++) {
            size_t b = check_start_[j], e = check_start_[j + 1], deg = e - b;
            prefix.assign(deg + 1, 1.0);
            suffix.assign(deg + 1, 1.0);
            for (size_t k = 0; k < deg; k++) {
                prefix[k + 1] = prefix[k] * (q0[b + k] - q1[b + k]);
            }
            for (size_t k = deg; k-- > 0;) {
                suffix[k] = suffix[k + 1] * (q0[b + k] - q1[b + k]);
            }
            double sign = syndrome.get(j) ? -1.0 : 1.0;
            for (size_t k = 0; k < deg; k++) {
                double dr = sign * prefix[k] * suffix[k + 1];
                r0[b + k] = std::max((1 + dr) / 2, kFloor);
                r1[b + k] = std::max((1 - dr) / 2, kFloor);
            }
        }
        // Vertical step and pseudoposterior.
        for (size_t i = 0; i < n; i++) {
            const auto &edges = bit_edges_[i];
            size_t deg = edges.size();
            double a0 = p0, a1 = p1;
            pre0.assign(deg + 1, 1.0);
            pre1.assign(deg + 1, 1.0);
            for (size_t k = 0; k < deg; k++) {
                pre0[k + 1] = pre0[k] * r0[edges[k]];
                pre1[k + 1] = pre1[k] * r1[edges[k]];
            }
            double suf0 = 1.0, suf1 = 1.0;
            for (size_t k = deg; k-- > 0;) {
                size_t ed = edges[k];
                double v0 = p0 * pre0[k] * suf0, v1 = p1 * pre1[k] * suf1;
                normalize(v0, v1);
                q0[ed] = v0;
                q1[ed] = v1;
                suf0 *= r0[ed];
                suf1 *= r1[ed];
            }
            a0 *= pre0[deg];
            a1 *= pre1[deg];
            double post = a1 / (a0 + a1);
            res.posterior[i] = post;
            res.estimate.set(i, post > 0.5);
        }
        res.iterations = iter;
        res.converged = h_.multiply(res.estimate) == syndrome;
        if (res.converged && options.stop_on_syndrome) {
            break;
        }
    }
    return res;
}

DecodeResult decode(const BitMatrix &h, const BitVec &syndrome, double prior_flip, const SpaOptions &options) {
    return SpaDecoder(h).decode(syndrome, prior_flip, options);
}

std::vector<double> exact_marginals(const BitMatrix &h, const BitVec &syndrome, double prior_flip) {
    size_t n = h.cols();
    if (n > kMaxExactBits) {
        throw std::invalid_argument(fmt::format("exact marginals need n <= {}, got {}", kMaxExactBits, n));
    }
    if (syndrome.size() != h.rows()) {
        throw DimensionError(fmt::format("syndrome has {} bits, parity check has {} rows", syndrome.size(), h.rows()));
    }
    if (h.rows() > 32) {
        throw std::invalid_argument("exact marginals support at most 32 checks");
    }
    std::vector<uint32_t> cols(n, 0);
    uint32_t target = 0;
    for (size_t j = 0; j < h.rows(); j++) {
        for (size_t i = 0; i < n; i++) {
            if (h.get(j, i)) {
                cols[i] |= uint32_t{1} << j;
            }
        }
        if (syndrome.get(j)) {
            target |= uint32_t{1} << j;
        }
    }
    double lp1 = std::log(prior_flip), lp0 = std::log1p(-prior_flip);
    std::vector<double> mass(n, 0.0);
    double total = 0;
    for (uint32_t pattern = 0; pattern < (uint32_t{1} << n); pattern++) {
        uint32_t s = 0;
        for (size_t i = 0; i < n; i++) {
            if ((pattern >> i) & 1) {
                s ^= cols[i];
            }
        }
        if (s != target) {
            continue;
        }
        int w = std::popcount(pattern);
        double prob = std::exp(w * lp1 + static_cast<double>(n - w) * lp0);
        total += prob;
        for (size_t i = 0; i < n; i++) {
            if ((pattern >> i) & 1) {
                mass[i] += prob;
            }
        }
    }
    if (total == 0) {
        throw std::invalid_argument("syndrome is not in the column space of the parity check");
    }
    for (double &v : mass) {
        v /= total;
    }
    return mass;
}

}  // namespace eaqec

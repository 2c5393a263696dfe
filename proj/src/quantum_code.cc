#include "eaqec/quantum_code.h"

#include <array>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "eaqec/errors.h"

namespace eaqec {

namespace {

PauliVec pad_one(const PauliVec &u) {
    BitVec extra(1);
    return PauliVec(u.z().concat(extra), u.x().concat(extra));
}

BitVec drop_first_qubit(const BitVec &zx, size_t n) {
    BitVec out(2 * (n - 1));
    for (size_t q = 1; q < n; q++) {
        out.set(q - 1, zx.get(q));
        out.set(n - 1 + q - 1, zx.get(n + q));
    }
    return out;
}

uint64_t sat_add(uint64_t a, uint64_t b) {
    return a > std::numeric_limits<uint64_t>::max() - b ? std::numeric_limits<uint64_t>::max() : a + b;
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
        return std::numeric_limits<uint64_t>::max();
    }
    return a * b;
}

// Exhaustive search over errors of weight 1..max_weight in order of weight,
// then position tuple, then Pauli type (X, Y, Z).
class ErrorEnumerator {
   public:
    ErrorEnumerator(const QuantumCode &code, DistanceMode mode)
        : n_(code.n()), mode_(mode), degenerate_span_(2 * code.n()) {
        auto checks = code.check_operators();
        size_t m = checks.size();
        syndromes_.assign(n_, {BitVec(m), BitVec(m), BitVec(m)});
        for (size_t g = 0; g < m; g++) {
            for (size_t q = 0; q < n_; q++) {
                bool z = checks[g].z(q), x = checks[g].x(q);
                syndromes_[q][0].set(g, z);
                syndromes_[q][1].set(g, z ^ x);
                syndromes_[q][2].set(g, x);
            }
        }
        for (const auto &op : code.degenerate_group()) {
            degenerate_span_.insert(op.symplectic());
        }
    }

    // Searches one weight class; fills `witness` and returns true on a violation.
    bool search(size_t weight, uint64_t &checked, std::optional<PauliVec> &witness) {
        weight_ = weight;
        pos_.assign(weight, 0);
        type_.assign(weight, 0);
        acc_.assign(weight + 1, BitVec(syndromes_.empty() ? 0 : syndromes_[0][0].size()));
        checked_ = &checked;
        witness_ = &witness;
        return recurse(0, 0);
    }

   private:
    bool recurse(size_t level, size_t start) {
        if (level == weight_) {
            (*checked_)++;
            if (!acc_[level].is_zero()) {
                return false;
            }
            PauliVec u(n_);
            static constexpr char kTypes[3] = {'X', 'Y', 'Z'};
            for (size_t i = 0; i < weight_; i++) {
                u.set(pos_[i], kTypes[type_[i]]);
            }
            if (mode_ == DistanceMode::degenerate && degenerate_span_.contains(u.symplectic())) {
                return false;
            }
            *witness_ = std::move(u);
            return true;
        }
        for (size_t q = start; q + (weight_ - level) <= n_; q++) {
            pos_[level] = q;
            for (int t = 0; t < 3; t++) {
                type_[level] = t;
                acc_[level + 1] = acc_[level];
                acc_[level + 1] ^= syndromes_[q][t];
                if (recurse(level + 1, q + 1)) {
                    return true;
                }
            }
        }
        return false;
    }

    size_t n_;
    DistanceMode mode_;
    RowSpace degenerate_span_;
    std::vector<std::array<BitVec, 3>> syndromes_;
    size_t weight_ = 0;
    std::vector<size_t> pos_;
    std::vector<int> type_;
    std::vector<BitVec> acc_;
    uint64_t *checked_ = nullptr;
    std::optional<PauliVec> *witness_ = nullptr;
};

}  // namespace

QuantumCode::QuantumCode(size_t n, std::vector<PauliVec> isotropic, std::vector<SymplecticPair> entangled,
                         std::vector<SymplecticPair> gauge)
    : n_(n), isotropic_(std::move(isotropic)), entangled_(std::move(entangled)), gauge_(std::move(gauge)) {
    auto gens = all_generators();
    if (gens.size() > 2 * n_) {
        throw std::invalid_argument("more generators than the symplectic space allows");
    }
    // partner[i] is the index of the generator that must anticommute with i.
    std::vector<size_t> partner(gens.size(), gens.size());
    size_t base = isotropic_.size();
    for (size_t p = 0; p < entangled_.size() + gauge_.size(); p++) {
        partner[base + 2 * p] = base + 2 * p + 1;
        partner[base + 2 * p + 1] = base + 2 * p;
    }
    RowSpace span(2 * n_);
    for (size_t i = 0; i < gens.size(); i++) {
        if (gens[i].n() != n_) {
            throw std::invalid_argument(fmt::format("generator {} acts on {} qubits, expected {}", i, gens[i].n(), n_));
        }
        if (!span.insert(gens[i].symplectic())) {
            throw std::invalid_argument(fmt::format("generator {} ({}) is dependent", i, gens[i].str()));
        }
    }
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (symplectic_product(gens[i], gens[j]) != (partner[i] == j)) {
                throw std::invalid_argument(
                    fmt::format("generators {} and {} have the wrong commutation relation", gens[i].str(), gens[j].str()));
            }
        }
    }
}

QuantumCode QuantumCode::from_decomposition(const GroupDecomposition &dec) {
    QuantumCode code(dec.n, dec.isotropic, dec.pairs);
    code.logicals = dec.outside;
    return code;
}

std::vector<PauliVec> QuantumCode::check_operators() const {
    std::vector<PauliVec> out = isotropic_;
    for (const auto &p : entangled_) {
        out.push_back(p.first);
        out.push_back(p.second);
    }
    return out;
}

std::vector<PauliVec> QuantumCode::all_generators() const {
    std::vector<PauliVec> out = check_operators();
    for (const auto &p : gauge_) {
        out.push_back(p.first);
        out.push_back(p.second);
    }
    return out;
}

std::vector<PauliVec> QuantumCode::degenerate_group() const {
    std::vector<PauliVec> out = isotropic_;
    for (const auto &p : gauge_) {
        out.push_back(p.first);
        out.push_back(p.second);
    }
    return out;
}

std::string format_params(const QuantumCode &code, std::optional<size_t> d) {
    std::string head = fmt::format("[[{},{}", code.n(), code.k());
    if (d) {
        head += fmt::format(",{}", *d);
    }
    if (code.r() > 0) {
        return fmt::format("{};{},{}]]", head, code.r(), code.c());
    }
    return fmt::format("{};{}]]", head, code.c());
}

BitMatrix css_sp_matrix(const BitMatrix &h) {
    BitMatrix zero(h.rows(), h.cols());
    return h.hstack(zero).vstack(zero.hstack(h));
}

bool is_dual_containing(const BitMatrix &hsp) {
    if (hsp.cols() % 2) {
        throw DimensionError("symplectic matrix needs an even column count");
    }
    for (size_t i = 0; i < hsp.rows(); i++) {
        for (size_t j = i + 1; j < hsp.rows(); j++) {
            if (symplectic_product(hsp.row(i), hsp.row(j))) {
                return false;
            }
        }
    }
    return true;
}

BitMatrix symplectic_complement(const BitMatrix &hsp) {
    size_t n = hsp.cols() / 2;
    BitMatrix swapped(0, hsp.cols());
    for (const auto &row : hsp.row_list()) {
        swapped.append_row(row.slice(n, 2 * n).concat(row.slice(0, n)));
    }
    return nullspace(swapped);
}

QuantumCode build_css(const BitMatrix &hx, const BitMatrix &hz) {
    if (hx.cols() != hz.cols()) {
        throw DimensionError("X and Z check matrices differ in length");
    }
    size_t n = hx.cols();
    std::vector<PauliVec> gens;
    for (const auto &row : hz.row_list()) {
        gens.emplace_back(row, BitVec(n));
    }
    for (const auto &row : hx.row_list()) {
        gens.emplace_back(BitVec(n), row);
    }
    QuantumCode code = QuantumCode::from_decomposition(decompose(gens, n));
    code.css = CssChecks{hx, hz};
    return code;
}

QuantumCode build_eaqecc_binary(const BitMatrix &h) { return build_css(h, h); }

QuantumCode build_eaqecc_gf4(const F4Matrix &h4) {
    BitMatrix hsp = f4_to_symplectic(h4);
    return QuantumCode::from_decomposition(decompose(from_symplectic_matrix(hsp), h4.cols()));
}

uint64_t enumeration_cost(size_t n, size_t d) {
    uint64_t total = 0;
    uint64_t binom = 1;  // C(n, w)
    uint64_t pow3 = 1;
    for (size_t w = 1; w < d && w <= n; w++) {
        // C(n,w) = C(n,w-1)·(n-w+1)/w; exact as long as it does not saturate.
        if (binom != std::numeric_limits<uint64_t>::max()) {
            unsigned __int128 next = static_cast<unsigned __int128>(binom) * (n - w + 1) / w;
            binom = next > std::numeric_limits<uint64_t>::max() ? std::numeric_limits<uint64_t>::max()
                                                                : static_cast<uint64_t>(next);
        }
        pow3 = sat_mul(pow3, 3);
        total = sat_add(total, sat_mul(binom, pow3));
    }
    return total;
}

DistanceResult verify_distance(const QuantumCode &code, size_t d, DistanceMode mode, uint64_t budget) {
    DistanceResult result;
    if (enumeration_cost(code.n(), d) > budget) {
        result.status = DistanceStatus::budget_exceeded;
        return result;
    }
    ErrorEnumerator enumerator(code, mode);
    for (size_t w = 1; w < d && w <= code.n(); w++) {
        if (enumerator.search(w, result.checked, result.witness)) {
            result.status = DistanceStatus::violated;
            return result;
        }
    }
    return result;
}

std::optional<size_t> find_distance(const QuantumCode &code, size_t max_d, DistanceMode mode, uint64_t budget) {
    DistanceResult r = verify_distance(code, max_d + 1, mode, budget);
    if (r.status != DistanceStatus::violated) {
        return std::nullopt;
    }
    return weight(*r.witness);
}

namespace {

size_t require_distance(const QuantumCode &code, std::optional<size_t> d) {
    if (d) {
        return *d;
    }
    if (code.claims.d) {
        return *code.claims.d;
    }
    throw std::invalid_argument("distance is unknown");
}

}  // namespace

bool singleton_check(const QuantumCode &code, std::optional<size_t> d) {
    size_t dist = require_distance(code, d);
    // n - (k - c) ≥ 2(d - 1), rearranged to stay unsigned.
    return code.n() + code.c() >= code.k() + 2 * (dist - 1);
}

bool hamming_check(const QuantumCode &code, std::optional<size_t> d) {
    size_t dist = require_distance(code, d);
    using u128 = unsigned __int128;
    const u128 kMax = ~u128{0};
    size_t t = dist == 0 ? 0 : (dist - 1) / 2;
    u128 lhs = 0, binom = 1, pow3 = 1;
    for (size_t j = 0; j <= t && j <= code.n(); j++) {
        if (j > 0) {
            binom = binom * (code.n() - j + 1) / j;
            pow3 *= 3;
        }
        u128 term = (pow3 != 0 && binom > kMax / pow3) ? kMax : binom * pow3;
        lhs = lhs > kMax - term ? kMax : lhs + term;
    }
    size_t exponent = code.n() - code.k();
    if (exponent >= 128) {
        return lhs != kMax;
    }
    return lhs <= (u128{1} << exponent);
}

QuantumCode extend_code(const QuantumCode &code) {
    size_t n = code.n() + 1;
    std::vector<PauliVec> gens;
    for (const auto &g : code.all_generators()) {
        gens.push_back(pad_one(g));
    }
    BitVec ones(n);
    for (size_t q = 0; q < n; q++) {
        ones.set(q, true);
    }
    gens.emplace_back(BitVec(n), ones);
    gens.emplace_back(ones, BitVec(n));
    return QuantumCode::from_decomposition(decompose(gens, n));
}

QuantumCode puncture_code(const QuantumCode &code) {
    size_t n = code.n();
    if (n < 2) {
        throw std::invalid_argument("cannot puncture a code on fewer than two qubits");
    }
    BitMatrix centralizer = symplectic_complement(to_symplectic_matrix(code.all_generators(), n));
    BitMatrix punctured(0, 2 * (n - 1));
    for (const auto &row : centralizer.row_list()) {
        punctured.append_row(drop_first_qubit(row, n));
    }
    BitMatrix group = symplectic_complement(punctured);
    return QuantumCode::from_decomposition(decompose(from_symplectic_matrix(group), n - 1));
}

QuantumCode gauge_move(const QuantumCode &code, size_t pair_index) {
    if (pair_index >= code.c()) {
        throw std::out_of_range(fmt::format("pair index {} out of range for c = {}", pair_index, code.c()));
    }
    auto entangled = code.entangled();
    auto gauge = code.gauge();
    gauge.push_back(entangled[pair_index]);
    entangled.erase(entangled.begin() + static_cast<std::ptrdiff_t>(pair_index));
    QuantumCode out(code.n(), code.isotropic(), std::move(entangled), std::move(gauge));
    out.name = code.name;
    out.logicals = code.logicals;
    return out;
}

QuantumCode ungauge(const QuantumCode &code) {
    if (code.r() == 0) {
        throw std::invalid_argument("code has no gauge qubits");
    }
    auto isotropic = code.isotropic();
    for (const auto &p : code.gauge()) {
        isotropic.push_back(p.first);
    }
    QuantumCode out(code.n(), std::move(isotropic), code.entangled());
    out.name = code.name;
    out.logicals = code.logicals;
    return out;
}

std::optional<size_t> search_gauge_move(const QuantumCode &code, size_t d, DistanceMode mode, uint64_t budget) {
    for (size_t i = 0; i < code.c(); i++) {
        if (verify_distance(gauge_move(code, i), d, mode, budget).ok()) {
            return i;
        }
    }
    return std::nullopt;
}

QuantumCode gauge_move(const QuantumCode &code, const SymplecticPair &pair) {
    const auto &[u, v] = pair;
    std::vector<PauliVec> halves;
    for (const auto &p : code.entangled()) {
        halves.push_back(p.first);
        halves.push_back(p.second);
    }
    RowSpace span(to_symplectic_matrix(halves, code.n()));
    if (u.n() != code.n() || v.n() != code.n() || !span.contains(u.symplectic()) || !span.contains(v.symplectic())) {
        throw std::invalid_argument("gauge pair must lie in the span of the entanglement pairs");
    }
    if (!symplectic_product(u, v)) {
        throw std::invalid_argument("gauge pair must anticommute");
    }
    // Project every generator onto the symplectic complement of span(u, v).
    for (auto &h : halves) {
        if (symplectic_product(h, v)) {
            h *= u;
        }
        if (symplectic_product(h, u)) {
            h *= v;
        }
    }
    std::vector<SymplecticPair> entangled;
    if (code.c() > 1) {
        entangled = decompose(halves, code.n()).pairs;
    }
    auto gauge = code.gauge();
    gauge.push_back(pair);
    QuantumCode out(code.n(), code.isotropic(), std::move(entangled), std::move(gauge));
    out.name = code.name;
    out.logicals = code.logicals;
    return out;
}

std::vector<SymplecticPair> hyperbolic_planes(const QuantumCode &code) {
    size_t dim = 2 * code.c();
    if (dim > kMaxPlaneSearchDim) {
        throw std::invalid_argument(fmt::format("plane search supports c <= {}", kMaxPlaneSearchDim / 2));
    }
    std::vector<PauliVec> span;
    for (uint32_t mask = 0; mask < (uint32_t{1} << dim); mask++) {
        PauliVec acc(code.n());
        for (size_t b = 0; b < dim; b++) {
            if ((mask >> b) & 1) {
                const auto &p = code.entangled()[b / 2];
                acc *= b % 2 ? p.second : p.first;
            }
        }
        span.push_back(std::move(acc));
    }
    // Each plane {a, b, a^b} is listed once, with a < b < a^b.
    std::vector<SymplecticPair> out;
    for (uint32_t a = 1; a < span.size(); a++) {
        for (uint32_t b = a + 1; b < span.size(); b++) {
            if ((a ^ b) > b && symplectic_product(span[a], span[b])) {
                out.push_back({span[a], span[b]});
            }
        }
    }
    return out;
}

std::optional<SymplecticPair> search_gauge_plane(const QuantumCode &code, size_t d, DistanceMode mode, uint64_t budget) {
    for (const auto &pair : hyperbolic_planes(code)) {
        if (verify_distance(gauge_move(code, pair), d, mode, budget).ok()) {
            return pair;
        }
    }
    return std::nullopt;
}

}  // namespace eaqec

#ifndef EAQEC_QUANTUM_CODE_H
#define EAQEC_QUANTUM_CODE_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eaqec/bit_matrix.h"
#include "eaqec/gf4.h"
#include "eaqec/pauli.h"
#include "eaqec/symplectic_gram_schmidt.h"

namespace eaqec {

/// Classical parity checks of a CSS code. X-type rows detect Z errors and
/// Z-type rows detect X errors.
struct CssChecks {
    BitMatrix x_checks;
    BitMatrix z_checks;
};

/// Parameters quoted in the literature for a named code, kept next to the
/// computed ones so reports can show both.
struct Claims {
    std::optional<size_t> k;
    std::optional<size_t> d;
    std::optional<size_t> c;
    std::optional<size_t> r;
};

/// Entanglement-assisted operator code [[n,k;r,c]] described by its
/// isotropic generators S_I, entanglement pairs S_E and gauge pairs S_G.
/// All operators act on the n channel qubits; the receiver half of each
/// ebit is implicit.
class QuantumCode {
   public:
    /// Checks that every generator has n qubits, that all generators are
    /// independent, and that the pair/commutation relations hold. Throws
    /// std::invalid_argument otherwise.
    QuantumCode(size_t n, std::vector<PauliVec> isotropic, std::vector<SymplecticPair> entangled,
                std::vector<SymplecticPair> gauge = {});

    /// Code whose S_I and S_E come from a decomposition of the stabilizer
    /// group; its outside pairs become the logical operators.
    static QuantumCode from_decomposition(const GroupDecomposition &dec);

    size_t n() const { return n_; }
    size_t k() const { return n_ - isotropic_.size() - entangled_.size() - gauge_.size(); }
    size_t c() const { return entangled_.size(); }
    size_t r() const { return gauge_.size(); }

    const std::vector<PauliVec> &isotropic() const { return isotropic_; }
    const std::vector<SymplecticPair> &entangled() const { return entangled_; }
    const std::vector<SymplecticPair> &gauge() const { return gauge_; }

    /// Measured generators: S_I followed by both halves of each S_E pair.
    std::vector<PauliVec> check_operators() const;
    /// Every generator including both halves of each gauge pair.
    std::vector<PauliVec> all_generators() const;
    /// S_I together with both halves of each gauge pair.
    std::vector<PauliVec> degenerate_group() const;

    std::string name;
    Claims claims;
    std::optional<CssChecks> css;
    /// (Z̄, X̄) pairs when known.
    std::vector<SymplecticPair> logicals;

   private:
    size_t n_;
    std::vector<PauliVec> isotropic_;
    std::vector<SymplecticPair> entangled_;
    std::vector<SymplecticPair> gauge_;
};

/// "[[n,k;c]]", "[[n,k,d;c]]", or with gauge qubits "[[n,k,d;r,c]]".
std::string format_params(const QuantumCode &code, std::optional<size_t> d = std::nullopt);

/// Block-diagonal [h 0; 0 h] in (z|x) layout.
BitMatrix css_sp_matrix(const BitMatrix &h);
/// True iff all rows of a (z|x) matrix pairwise commute.
bool is_dual_containing(const BitMatrix &hsp);
/// Rows pairwise orthogonal under the symplectic product, returned as a basis.
BitMatrix symplectic_complement(const BitMatrix &hsp);

/// CSS code with X-type stabilizers from `hx` and Z-type from `hz`.
QuantumCode build_css(const BitMatrix &hx, const BitMatrix &hz);
/// EAQECC [[n, 2k-n+c; c]] from a binary parity check H, c = rank(H Hᵀ).
QuantumCode build_eaqecc_binary(const BitMatrix &h);
/// EAQECC [[n, 2k-n+c; c]] from a quaternary parity check.
QuantumCode build_eaqecc_gf4(const F4Matrix &h4);

enum class DistanceMode { strict, degenerate };
enum class DistanceStatus { verified, violated, budget_exceeded };

struct DistanceResult {
    DistanceStatus status = DistanceStatus::verified;
    /// First violating error in enumeration order.
    std::optional<PauliVec> witness;
    uint64_t checked = 0;
    bool ok() const { return status == DistanceStatus::verified; }
};

inline constexpr uint64_t kDefaultDistanceBudget = 100'000'000;

/// Σ_{1≤w<d} C(n,w)·3^w, saturating at UINT64_MAX.
uint64_t enumeration_cost(size_t n, size_t d);

/// Checks every nonzero error of weight < d, lightest first. An error is a
/// violation when it commutes with all of S_I and S_E; in degenerate mode
/// it must additionally lie outside span(S_I ∪ S_G).
DistanceResult verify_distance(const QuantumCode &code, size_t d, DistanceMode mode,
                               uint64_t budget = kDefaultDistanceBudget);

/// Weight of the lightest violating error, searching weights up to max_d.
/// Returns nullopt when there is none that light or the budget is exceeded.
std::optional<size_t> find_distance(const QuantumCode &code, size_t max_d, DistanceMode mode,
                                    uint64_t budget = kDefaultDistanceBudget);

/// n - (k - c) ≥ 2(d - 1). Uses the claimed d when none is given.
bool singleton_check(const QuantumCode &code, std::optional<size_t> d = std::nullopt);
/// Σ_{j ≤ (d-1)/2} 3^j C(n,j) ≤ 2^{n-k}; only meaningful for non-degenerate codes.
bool hamming_check(const QuantumCode &code, std::optional<size_t> d = std::nullopt);

/// Appends one qubit: every generator gains an identity there and X^{⊗n+1},
/// Z^{⊗n+1} join the group, which is then re-decomposed.
QuantumCode extend_code(const QuantumCode &code);
/// Deletes qubit 0 from the centralizer of the full group and takes the
/// new group to be the symplectic complement.
QuantumCode puncture_code(const QuantumCode &code);

/// Moves entanglement pair `pair_index` into the gauge group.
QuantumCode gauge_move(const QuantumCode &code, size_t pair_index);
/// Keeps the first element of every gauge pair as an isotropic generator
/// and drops its partner.
QuantumCode ungauge(const QuantumCode &code);
/// First pair index whose gauge move still verifies distance d.
std::optional<size_t> search_gauge_move(const QuantumCode &code, size_t d, DistanceMode mode,
                                        uint64_t budget = kDefaultDistanceBudget);

/// Moves an anticommuting pair from the span of S_E into the gauge group.
/// The remaining entanglement pairs are rebuilt on its symplectic complement.
QuantumCode gauge_move(const QuantumCode &code, const SymplecticPair &pair);

inline constexpr size_t kMaxPlaneSearchDim = 16;
/// One generating pair per hyperbolic plane of span(S_E), in a fixed order.
/// Throws std::invalid_argument when 2c exceeds kMaxPlaneSearchDim.
std::vector<SymplecticPair> hyperbolic_planes(const QuantumCode &code);
/// Searches every hyperbolic plane of span(S_E), not just the listed pairs,
/// and returns the first whose gauge move still verifies distance d.
std::optional<SymplecticPair> search_gauge_plane(const QuantumCode &code, size_t d, DistanceMode mode,
                                                 uint64_t budget = kDefaultDistanceBudget);

/// Binary image of the [63,39,9] primitive BCH parity check over GF(2^6).
BitMatrix bch63_parity_check();
/// Parity check of the [15,10,4] quaternary code.
F4Matrix q15_parity_check();
/// The [7,4,3] Hamming parity check.
BitMatrix hamming7_parity_check();

std::vector<std::string> builtin_names();
/// Throws std::invalid_argument for unknown names.
QuantumCode builtin(const std::string &name);

/// Generator table: optional label I, E or G then a Pauli string, with an
/// optional "|bob" suffix. E and G lines come in consecutive pairs. A table
/// without labels is decomposed automatically.
QuantumCode read_code(std::istream &in);
void write_code(std::ostream &out, const QuantumCode &code);

struct CodeReport {
    std::string params;
    bool dual_containing = false;
    /// Empty when no distance is known.
    std::optional<bool> singleton_ok;
    std::optional<bool> hamming_ok;
    std::optional<size_t> verified_d;
    /// True when the budget stopped distance verification.
    bool distance_budget_exceeded = false;
};

struct ReportOptions {
    /// Distance to verify; the claimed distance is used when empty.
    std::optional<size_t> verify_d;
    bool verify = false;
    DistanceMode mode = DistanceMode::degenerate;
    uint64_t budget = kDefaultDistanceBudget;
};

CodeReport analyze_code(const QuantumCode &code, const ReportOptions &options = {});
void print_report(std::ostream &out, const QuantumCode &code, const CodeReport &report);

}  // namespace eaqec

#endif

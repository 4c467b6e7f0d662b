#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcoh/sign_vector.hpp"
#include "fcoh/states.hpp"

namespace fcoh {

/// Strictness for "overlap > threshold": margins within this band are
/// reported unfaithful and flagged marginal.
inline constexpr double kStrictness = 1e-9;

/// Largest dimension accepted by the exhaustive 2^{d-1} search.
inline constexpr std::size_t kMaxEnumerationDim = 24;

enum class Verdict { Faithful, Unfaithful };
enum class SearchMode { Full, Reduced, Phase };
enum class Criterion { SingleSystem, Bipartite };

std::string to_string(Verdict v);
std::string to_string(SearchMode m);
std::string to_string(Criterion c);
/// Throws InvalidInput for anything but "full", "reduced", "phase".
SearchMode parse_search_mode(const std::string& s);

/// Result of a phase-vector maximization of <φ_θ|ρ|φ_θ>, φ_θ = (e^{iθ_j})/sqrt(d).
struct PhaseSearch {
  double overlap = 0.0;
  std::vector<double> phases;  // θ_1 = 0
  int sweeps = 0;
};

struct FaithfulnessReport {
  Verdict verdict = Verdict::Unfaithful;
  SearchMode mode = SearchMode::Full;
  Criterion criterion = Criterion::SingleSystem;
  double best_overlap = 0.0;
  double threshold = 0.0;
  double margin = 0.0;
  bool marginal = false;
  double strictness = kStrictness;
  SignVector best_sign;
  std::optional<SignVector> best_sign_b;  // bipartite only: sign vector on B
  std::size_t candidates = 0;             // sign vectors examined

  // bipartite only
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::optional<double> literal_threshold;

  // qubit only: the closed-form "0 < s1 < 1" reading, and whether it disagrees
  std::optional<bool> literal_qubit_criterion;

  // phase mode only; never alters `verdict`
  std::optional<PhaseSearch> phase;
  std::optional<bool> phase_detectable;

  bool faithful() const noexcept { return verdict == Verdict::Faithful; }
};

/// All 2^{d-1} sign vectors in lexicographic order (+ before -).
/// Throws InvalidInput for d < 2 or d > kMaxEnumerationDim.
std::vector<SignVector> enumerate_sign_vectors(std::size_t d);

/// Exhaustive RFCW search: best_overlap = max_a <φ_a|ρ|φ_a>, faithful iff it
/// exceeds 1/d + eps. Ties go to the lexicographically smallest vector.
/// Large dimensions are split across threads; the result is identical to a
/// sequential scan.
FaithfulnessReport is_faithful(const DensityMatrix& rho, double eps = kStrictness);

/// Closed form for qubits: best overlap (1 + |s1|)/2 with a = sign(s1).
FaithfulnessReport qubit_faithful(const BlochVector& b, double eps = kStrictness);

/// The d(d-1)/2 sign vectors of the upper-triangular experimental family.
///
/// Row 1 flips a single position j = 2..d. Row i (2 <= i <= d-1) holds d-i
/// vectors flipping {2} ∪ S, where S runs over the first d-i subsets of
/// {3..d} of size i-1 in lexicographic order.
std::vector<SignVector> reduced_family(std::size_t d);

/// Same as is_faithful but maximizing over reduced_family(d) plus the all-+1
/// vector. Can only under-detect relative to is_faithful.
FaithfulnessReport screen_reduced(const DensityMatrix& rho, double eps = kStrictness);

/// Product search over (a, b): best overlap of ρ with |φ_a>⊗|φ_b>, faithful
/// iff it exceeds 1/(dA·dB) + eps. Throws DimensionMismatch unless
/// rho.dim() = dA·dB, InvalidInput when dA or dB < 2.
FaithfulnessReport is_faithful_bipartite(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                                         double eps = kStrictness);

inline constexpr int kPhaseMaxSweeps = 200;
inline constexpr double kPhaseTolerance = 1e-12;

/// Cyclic coordinate ascent θ_j <- arg Σ_{k≠j} ρ_jk e^{iθ_k}, started from
/// `start` (or the best sign vector when empty). Monotone; stops after
/// kPhaseMaxSweeps or when a sweep gains less than kPhaseTolerance.
PhaseSearch phase_ascent(const DensityMatrix& rho, std::vector<double> start = {});

/// Runs is_faithful and attaches a phase search. The verdict is the
/// sign-vector verdict; `phase_detectable` reports the phase overlap
/// against the same threshold.
FaithfulnessReport phase_screen(const DensityMatrix& rho, double eps = kStrictness);

/// Dispatch on mode for single-system states.
FaithfulnessReport check_faithfulness(const DensityMatrix& rho, SearchMode mode, double eps = kStrictness);

// ---------------------------------------------------------------------------
// Decomposition certificate

/// Probabilities p_a and residual D = W - d·β1²·Σ_a p_a·W_a showing that a
/// real fidelity witness W is dominated by a mixture of RFCWs.
///
/// Everything is expressed in the sorted frame (amplitudes decreasing);
/// `permutation[k]` is the original index of sorted position k.
struct DecompositionCertificate {
  std::size_t dim = 0;
  std::vector<std::size_t> permutation;
  std::vector<double> betas;   // sorted, decreasing
  std::vector<double> gammas;  // γ_j = β_j/β_1, j = 2..d
  std::vector<std::pair<SignVector, double>> probabilities;
  std::vector<double> residual_diag;
  double offdiag_norm = 0.0;

  struct Check {
    bool ok = true;
    std::vector<std::string> failures;
  };
  /// Certificate invariants: p_a >= 0, Σp_a = 1 (1e-12), residual_diag >= -1e-12,
  /// offdiag_norm <= 1e-10.
  Check verify() const;
};

inline constexpr std::size_t kMaxDecompositionDim = 16;

/// Throws InvalidInput when psi has a complex or negative amplitude (beyond
/// 1e-12) or d > kMaxDecompositionDim.
DecompositionCertificate decompose_witness(const PureState& psi);

}  // namespace fcoh

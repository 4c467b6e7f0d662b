#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcoh/linalg.hpp"
#include "fcoh/sign_vector.hpp"

namespace fcoh {

/// diag(signs) on k qubits, signs in {±1}^{2^k} with signs[0] = +1.
/// Basis index bits are big-endian: qubit 0 is the most significant bit.
class SignDiagonalUnitary {
 public:
  /// Throws InvalidInput unless the length is 2^k (k >= 1), entries are ±1
  /// and the first entry is +1.
  static SignDiagonalUnitary from_signs(std::vector<int> signs);
  /// Parses "+-++".
  static SignDiagonalUnitary parse(std::string_view text);
  /// (1, a_2, ..., a_d) for d a power of two.
  static SignDiagonalUnitary from_sign_vector(const SignVector& a);

  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t dim() const noexcept { return signs_.size(); }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }
  std::size_t flip_count() const;
  std::string to_string() const;
  ComplexMatrix matrix() const;

  friend bool operator==(const SignDiagonalUnitary&, const SignDiagonalUnitary&) = default;

 private:
  std::size_t qubits_ = 0;
  std::vector<std::int8_t> signs_;
};

enum class Control : std::uint8_t { Free, Zero, One };

/// Z = diag(1,-1) and Z0 = diag(-1,1) on the target qubit.
enum class PhaseAction : std::uint8_t { Z, Z0 };

/// Pattern-controlled phase flip: acts with `action` on `target` when every
/// constrained qubit matches its required value.
struct Gate {
  std::vector<Control> controls;  // one slot per qubit
  std::size_t target = 0;
  PhaseAction action = PhaseAction::Z;

  /// ±1 applied to basis index x of a k-qubit register.
  int phase(std::uint64_t x) const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  std::size_t qubits = 0;
  std::vector<Gate> gates;

  /// Throws InvalidInput when a gate has the wrong width, an out-of-range
  /// target, or a constrained control on its own target.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

inline constexpr std::size_t kMaxMatrixQubits = 12;

/// One gate per -1 entry, ascending basis index. For index x the gate fixes the
/// first k-1 qubits to x's leading bits and applies Z to the last qubit when
/// x is odd, Z0 otherwise.
Circuit synthesize(const SignDiagonalUnitary& u);

/// Product of the gate matrices. Always diagonal ±1 for this gate set.
/// Throws InvalidInput for k > kMaxMatrixQubits.
ComplexMatrix to_matrix(const Circuit& c);

/// Dense matrix of one gate, built as I - ⊗_q M_q from Kronecker factors
/// (|b><b| on controls, I - action on the target, I elsewhere).
ComplexMatrix gate_matrix(const Gate& g, std::size_t qubits);

/// Statevector after the circuit. Throws DimensionMismatch unless the length is 2^k.
std::vector<Complex> apply(const Circuit& c, std::span<const Complex> state);

/// Text form: "QUBITS <k>" then one "GATE action=Z|Z0 target=<q> controls=<q:0|1>,..."
/// per gate; the controls field is omitted when no qubit is constrained.
std::string to_text(const Circuit& c);
/// Inverse of to_text. Blank lines and '#' comments are ignored.
/// Throws InvalidInput with the offending line number.
Circuit parse_circuit(std::string_view text);

struct NamedGenerator {
  std::string name;
  std::size_t row = 0;
  std::size_t col = 0;
  SignDiagonalUnitary unitary;
};

inline constexpr std::size_t kMaxGeneratorQubits = 6;

/// The experimental family on k qubits laid out as the upper-triangular
/// matrix U_{row,col}: U_{1,j} flips basis index j, later rows are the
/// reduced-family products. Names are "U_<row><col>" when both are single
/// digits, else "U_<row>,<col>".
std::vector<NamedGenerator> named_generators(std::size_t k);

/// Looks up a generator by name; accepts both "U_12" and "U_1,2".
std::optional<SignDiagonalUnitary> find_generator(std::size_t k, std::string_view name);

}  // namespace fcoh

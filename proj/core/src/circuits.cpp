#include "fcoh/circuits.hpp"

#include <bit>

#include "fcoh/error.hpp"
#include "fcoh/faithful.hpp"

namespace fcoh {

namespace {

bool qubit_bit(std::uint64_t x, std::size_t qubit, std::size_t k) { return (x >> (k - 1 - qubit)) & 1U; }

}  // namespace

SignDiagonalUnitary SignDiagonalUnitary::from_signs(std::vector<int> signs) {
  if (signs.size() < 2 || !std::has_single_bit(signs.size())) {
    throw InvalidInput("sign-diagonal unitary: length " + std::to_string(signs.size()) + " is not 2^k with k >= 1");
  }
  if (signs.front() != 1) throw InvalidInput("sign-diagonal unitary: first sign must be +");
  SignDiagonalUnitary u;
  u.qubits_ = static_cast<std::size_t>(std::countr_zero(signs.size()));
  u.signs_.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) throw InvalidInput("sign-diagonal unitary: entries must be ±1");
    u.signs_.push_back(static_cast<std::int8_t>(s));
  }
  return u;
}

SignDiagonalUnitary SignDiagonalUnitary::parse(std::string_view text) {
  std::vector<int> signs;
  for (char c : text) {
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else {
      throw InvalidInput(std::string("sign string: unexpected character '") + c + "'");
    }
  }
  return from_signs(std::move(signs));
}

SignDiagonalUnitary SignDiagonalUnitary::from_sign_vector(const SignVector& a) { return from_signs(a.pattern()); }

std::size_t SignDiagonalUnitary::flip_count() const {
  std::size_t n = 0;
  for (auto s : signs_) n += s < 0 ? 1 : 0;
  return n;
}

std::string SignDiagonalUnitary::to_string() const {
  std::string s;
  for (auto x : signs_) s += x > 0 ? '+' : '-';
  return s;
}

ComplexMatrix SignDiagonalUnitary::matrix() const {
  std::vector<double> d(signs_.begin(), signs_.end());
  return ComplexMatrix::diagonal(std::span<const double>(d));
}

int Gate::phase(std::uint64_t x) const {
  const std::size_t k = controls.size();
  for (std::size_t q = 0; q < k; ++q) {
    if (controls[q] == Control::Free) continue;
    if (qubit_bit(x, q, k) != (controls[q] == Control::One)) return 1;
  }
  const bool bit = qubit_bit(x, target, k);
  return (action == PhaseAction::Z) == bit ? -1 : 1;
}

void Circuit::validate() const {
  if (qubits == 0 || qubits > 63) throw InvalidInput("circuit: qubit count must lie in 1..63");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const std::string where = "circuit gate " + std::to_string(i) + ": ";
    if (g.controls.size() != qubits) throw InvalidInput(where + "control pattern width does not match qubit count");
    if (g.target >= qubits) throw InvalidInput(where + "target out of range");
    if (g.controls[g.target] != Control::Free) throw InvalidInput(where + "target is also a control");
  }
}

Circuit synthesize(const SignDiagonalUnitary& u) {
  const std::size_t k = u.qubits();
  Circuit c{k, {}};
  const auto signs = u.signs();
  for (std::uint64_t x = 0; x < signs.size(); ++x) {
    if (signs[x] > 0) continue;
    Gate g;
    g.controls.assign(k, Control::Free);
    for (std::size_t q = 0; q + 1 < k; ++q) g.controls[q] = qubit_bit(x, q, k) ? Control::One : Control::Zero;
    g.target = k - 1;
    g.action = (x & 1U) ? PhaseAction::Z : PhaseAction::Z0;
    c.gates.push_back(std::move(g));
  }
  return c;
}

ComplexMatrix to_matrix(const Circuit& c) {
  c.validate();
  if (c.qubits > kMaxMatrixQubits) {
    throw InvalidInput("to_matrix: " + std::to_string(c.qubits) + " qubits exceeds " +
                       std::to_string(kMaxMatrixQubits));
  }
  const std::uint64_t n = std::uint64_t{1} << c.qubits;
  std::vector<double> diag(n, 1.0);
  for (const Gate& g : c.gates)
    for (std::uint64_t x = 0; x < n; ++x) diag[x] *= g.phase(x);
  return ComplexMatrix::diagonal(std::span<const double>(diag));
}

ComplexMatrix gate_matrix(const Gate& g, std::size_t qubits) {
  if (g.controls.size() != qubits || g.target >= qubits) throw InvalidInput("gate_matrix: gate does not fit register");
  const ComplexMatrix p0{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix p1{{0.0, 0.0}, {0.0, 1.0}};
  const ComplexMatrix id = ComplexMatrix::identity(2);
  // I - Z = diag(0,2); I - Z0 = diag(2,0)
  const ComplexMatrix kick = g.action == PhaseAction::Z ? ComplexMatrix{{0.0, 0.0}, {0.0, 2.0}}
                                                        : ComplexMatrix{{2.0, 0.0}, {0.0, 0.0}};
  ComplexMatrix prod = ComplexMatrix::identity(1);
  for (std::size_t q = 0; q < qubits; ++q) {
    const ComplexMatrix* f = &id;
    if (q == g.target) {
      f = &kick;
    } else if (g.controls[q] == Control::Zero) {
      f = &p0;
    } else if (g.controls[q] == Control::One) {
      f = &p1;
    }
    prod = kron(prod, *f);
  }
  return ComplexMatrix::identity(prod.rows()) - prod;
}

std::vector<Complex> apply(const Circuit& c, std::span<const Complex> state) {
  c.validate();
  if (c.qubits >= 63 || state.size() != (std::size_t{1} << c.qubits)) {
    throw DimensionMismatch("apply: state length " + std::to_string(state.size()) + " does not match " +
                            std::to_string(c.qubits) + " qubits");
  }
  std::vector<Complex> out(state.begin(), state.end());
  for (const Gate& g : c.gates)
    for (std::uint64_t x = 0; x < out.size(); ++x)
      if (g.phase(x) < 0) out[x] = -out[x];
  return out;
}

namespace {

std::string generator_name(std::size_t row, std::size_t col) {
  if (row < 10 && col < 10) return "U_" + std::to_string(row) + std::to_string(col);
  return "U_" + std::to_string(row) + "," + std::to_string(col);
}

}  // namespace

std::vector<NamedGenerator> named_generators(std::size_t k) {
  if (k < 1 || k > kMaxGeneratorQubits) {
    throw InvalidInput("named_generators: k must lie in 1.." + std::to_string(kMaxGeneratorQubits));
  }
  const std::size_t d = std::size_t{1} << k;
  const auto family = reduced_family(d);
  std::vector<NamedGenerator> out;
  out.reserve(family.size());
  std::size_t idx = 0;
  for (std::size_t row = 1; row < d; ++row) {
    for (std::size_t col = 1; col <= d - row; ++col) {
      out.push_back({generator_name(row, col), row, col, SignDiagonalUnitary::from_sign_vector(family[idx++])});
    }
  }
  return out;
}

std::optional<SignDiagonalUnitary> find_generator(std::size_t k, std::string_view name) {
  for (auto& g : named_generators(k)) {
    if (g.name == name || "U_" + std::to_string(g.row) + "," + std::to_string(g.col) == name) {
      return std::move(g.unitary);
    }
  }
  return std::nullopt;
}

}  // namespace fcoh

#include <charconv>
#include <sstream>

#include "fcoh/circuits.hpp"
#include "fcoh/error.hpp"

namespace fcoh {

std::string to_text(const Circuit& c) {
  c.validate();
  std::ostringstream os;
  os << "QUBITS " << c.qubits << '\n';
  for (const Gate& g : c.gates) {
    os << "GATE action=" << (g.action == PhaseAction::Z ? "Z" : "Z0") << " target=" << g.target;
    bool first = true;
    for (std::size_t q = 0; q < g.controls.size(); ++q) {
      if (g.controls[q] == Control::Free) continue;
      os << (first ? " controls=" : ",") << q << ':' << (g.controls[q] == Control::One ? '1' : '0');
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

[[noreturn]] void bad_line(std::size_t line, const std::string& why) {
  throw InvalidInput("circuit text line " + std::to_string(line) + ": " + why);
}

std::size_t parse_index(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) bad_line(line, "bad integer '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;

    if (tok[0] == "QUBITS") {
      if (have_header) bad_line(line_no, "duplicate QUBITS header");
      if (tok.size() != 2) bad_line(line_no, "expected 'QUBITS <k>'");
      c.qubits = parse_index(tok[1], line_no);
      if (c.qubits == 0 || c.qubits > 63) bad_line(line_no, "qubit count must lie in 1..63");
      have_header = true;
      continue;
    }
    if (tok[0] != "GATE") bad_line(line_no, "unknown statement '" + std::string(tok[0]) + "'");
    if (!have_header) bad_line(line_no, "GATE before QUBITS header");

    Gate g;
    g.controls.assign(c.qubits, Control::Free);
    bool have_action = false, have_target = false, have_controls = false;
    for (std::size_t t = 1; t < tok.size(); ++t) {
      const auto eq = tok[t].find('=');
      if (eq == std::string_view::npos) bad_line(line_no, "expected key=value, got '" + std::string(tok[t]) + "'");
      const std::string_view key = tok[t].substr(0, eq), value = tok[t].substr(eq + 1);
      if (key == "action" && !have_action) {
        if (value == "Z") {
          g.action = PhaseAction::Z;
        } else if (value == "Z0") {
          g.action = PhaseAction::Z0;
        } else {
          bad_line(line_no, "action must be Z or Z0");
        }
        have_action = true;
      } else if (key == "target" && !have_target) {
        g.target = parse_index(value, line_no);
        if (g.target >= c.qubits) bad_line(line_no, "target out of range");
        have_target = true;
      } else if (key == "controls" && !have_controls) {
        have_controls = true;
        if (value.empty()) continue;
        for (std::string_view item : split(value, ',')) {
          const auto colon = item.find(':');
          if (colon == std::string_view::npos) bad_line(line_no, "control must be <qubit>:<0|1>");
          const std::size_t q = parse_index(item.substr(0, colon), line_no);
          const std::string_view bit = item.substr(colon + 1);
          if (q >= c.qubits) bad_line(line_no, "control qubit out of range");
          if (g.controls[q] != Control::Free) bad_line(line_no, "control qubit listed twice");
          if (bit == "0") {
            g.controls[q] = Control::Zero;
          } else if (bit == "1") {
            g.controls[q] = Control::One;
          } else {
            bad_line(line_no, "control value must be 0 or 1");
          }
        }
      } else {
        bad_line(line_no, "unexpected or repeated field '" + std::string(key) + "'");
      }
    }
    if (!have_action || !have_target) bad_line(line_no, "GATE needs action= and target=");
    if (g.controls[g.target] != Control::Free) bad_line(line_no, "target is also a control");
    c.gates.push_back(std::move(g));
  }
  if (!have_header) throw InvalidInput("circuit text: missing QUBITS header");
  return c;
}

}  // namespace fcoh

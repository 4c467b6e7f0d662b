#include "fcoh/sign_vector.hpp"

#include "fcoh/error.hpp"

namespace fcoh {

SignVector::SignVector(std::vector<int> entries) {
  entries_.reserve(entries.size());
  for (int e : entries) {
    if (e != 1 && e != -1) throw InvalidInput("sign vector entries must be +1 or -1, got " + std::to_string(e));
    entries_.push_back(static_cast<std::int8_t>(e));
  }
}

SignVector SignVector::from_mask(std::size_t d, std::uint64_t mask) {
  if (d < 1 || d > 64) throw InvalidInput("sign vector: dimension out of range");
  SignVector s;
  s.entries_.assign(d - 1, 1);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    if ((mask >> (d - 2 - i)) & 1U) s.entries_[i] = -1;
  }
  return s;
}

SignVector SignVector::identity(std::size_t d) { return from_mask(d, 0); }

SignVector SignVector::flips(std::size_t d, std::span<const std::size_t> positions) {
  SignVector s = identity(d);
  for (std::size_t pos : positions) {
    if (pos < 2 || pos > d) throw InvalidInput("sign vector: flip position " + std::to_string(pos) + " outside 2..d");
    s.entries_[pos - 2] = -1;
  }
  return s;
}

std::vector<int> SignVector::pattern() const {
  std::vector<int> p;
  p.reserve(entries_.size() + 1);
  p.push_back(1);
  for (auto e : entries_) p.push_back(e);
  return p;
}

std::uint64_t SignVector::mask() const {
  std::uint64_t m = 0;
  for (auto e : entries_) m = (m << 1) | (e < 0 ? 1U : 0U);
  return m;
}

std::vector<std::size_t> SignVector::flipped_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] < 0) out.push_back(i + 2);
  return out;
}

std::string SignVector::to_string() const {
  std::string s = "+";
  for (auto e : entries_) s += e > 0 ? '+' : '-';
  return s;
}

}  // namespace fcoh

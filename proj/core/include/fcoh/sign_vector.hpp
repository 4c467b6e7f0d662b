#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fcoh {

/// Signs (a_2, ..., a_d) in {+1,-1}^{d-1}; the coefficient on |1> is fixed at +1.
class SignVector {
 public:
  SignVector() = default;
  /// Throws InvalidInput for any entry other than ±1.
  explicit SignVector(std::vector<int> entries);
  SignVector(std::initializer_list<int> entries) : SignVector(std::vector<int>(entries)) {}

  /// Vector for dimension d whose bit (d-2-i) of `mask` set means a_{i+2} = -1.
  /// Increasing masks therefore walk the vectors in lexicographic order, + before -.
  static SignVector from_mask(std::size_t d, std::uint64_t mask);
  /// All +1.
  static SignVector identity(std::size_t d);
  /// -1 exactly at the given 1-based positions (each in 2..d).
  static SignVector flips(std::size_t d, std::span<const std::size_t> positions);

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t dim() const noexcept { return entries_.size() + 1; }
  std::span<const std::int8_t> entries() const noexcept { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }

  /// Full coefficient pattern (1, a_2, ..., a_d).
  std::vector<int> pattern() const;
  std::uint64_t mask() const;
  /// 1-based positions carrying -1.
  std::vector<std::size_t> flipped_positions() const;

  /// "+-+" style, leading + included.
  std::string to_string() const;

  friend auto operator<=>(const SignVector& a, const SignVector& b) {
    // + sorts before -, matching enumeration order.
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (a.entries_[i] != b.entries_[i]) return a.entries_[i] > b.entries_[i] ? std::strong_ordering::less
                                                                                : std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
  }
  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::int8_t> entries_;
};

}  // namespace fcoh

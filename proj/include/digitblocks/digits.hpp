#pragma once

// Base-B expansions and block-occurrence counting.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace digitblocks {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr unsigned kMinBase = 2;
inline constexpr unsigned kMaxBase = 16;

/// Throws std::invalid_argument unless 2 <= base <= 16.
void require_base(unsigned base);

/// A non-empty block of base-B digits, most significant first. Leading
/// zeros are significant: they change how occurrences are counted.
class Word {
public:
  Word(unsigned base, std::vector<std::uint8_t> digits);

  /// Digits written with 0-9, a-f (case-insensitive), e.g. ("011", 2).
  static Word from_digits(std::string_view digits, unsigned base);
  /// Textual form `<digits>@<base>`, e.g. "011@2".
  static Word parse(std::string_view text);
  /// One-digit word.
  static Word single(unsigned digit, unsigned base);

  unsigned base() const noexcept { return base_; }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  std::size_t length() const noexcept { return digits_.size(); }

  /// v_B(w): the digits read as a base-B numeral.
  BigInt value() const;
  /// B^|w|.
  BigInt modulus() const;
  /// True iff every digit is 0 (w = 0^j).
  bool is_zero_block() const noexcept;
  bool has_leading_zero() const noexcept { return digits_.front() == 0; }

  /// "011"
  std::string digit_string() const;
  /// "011@2"
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

private:
  unsigned base_;
  std::vector<std::uint8_t> digits_;
};

/// Base-B digits of n, most significant first; empty for n = 0.
std::vector<std::uint8_t> expand(std::uint64_t n, unsigned base);

/// s_B(n).
std::uint64_t digit_sum(std::uint64_t n, unsigned base);

/// Number of digits of n in base B (0 for n = 0).
unsigned digit_count(std::uint64_t n, unsigned base);

/// N_{w,B}(n): overlapping occurrences of w in the base-B expansion of n.
///
/// A word with a leading zero and a nonzero value is matched against the
/// expansion padded on the left with |w|-1 zeros. Any occurrence has to cover
/// a nonzero digit of n, so it cannot start further left than that; longer
/// padding adds nothing. Zero blocks (w = 0^j) use the plain expansion.
/// N_{w,B}(0) = 0.
std::uint64_t count_block(std::uint64_t n, const Word& w);

}  // namespace digitblocks

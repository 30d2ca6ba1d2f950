#include "digitblocks/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace digitblocks {

void require_base(unsigned base) {
  if (base < kMinBase || base > kMaxBase) {
    throw std::invalid_argument("base must be in [2, 16], got " + std::to_string(base));
  }
}

Word::Word(unsigned base, std::vector<std::uint8_t> digits)
    : base_(base), digits_(std::move(digits)) {
  require_base(base_);
  if (digits_.empty()) throw std::invalid_argument("word must be non-empty");
  for (auto d : digits_) {
    if (d >= base_) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " +
                                  std::to_string(base_));
    }
  }
}

Word Word::from_digits(std::string_view text, unsigned base) {
  std::vector<std::uint8_t> ds;
  ds.reserve(text.size());
  for (char c : text) {
    int d = -1;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    if (d < 0) throw std::invalid_argument(std::string("invalid digit character '") + c + "'");
    ds.push_back(static_cast<std::uint8_t>(d));
  }
  return Word(base, std::move(ds));
}

Word Word::parse(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) {
    throw std::invalid_argument("word must look like <digits>@<base>");
  }
  const auto base_text = text.substr(at + 1);
  if (base_text.empty() || base_text.size() > 2 ||
      !std::all_of(base_text.begin(), base_text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("invalid base in word '" + std::string(text) + "'");
  }
  return from_digits(text.substr(0, at), static_cast<unsigned>(std::stoul(std::string(base_text))));
}

Word Word::single(unsigned digit, unsigned base) {
  return Word(base, {static_cast<std::uint8_t>(digit)});
}

BigInt Word::value() const {
  BigInt v = 0;
  for (auto d : digits_) v = v * base_ + d;
  return v;
}

BigInt Word::modulus() const {
  return boost::multiprecision::pow(BigInt(base_), static_cast<unsigned>(digits_.size()));
}

bool Word::is_zero_block() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(), [](auto d) { return d == 0; });
}

std::string Word::digit_string() const {
  static constexpr char kChars[] = "0123456789abcdef";
  std::string s;
  s.reserve(digits_.size());
  for (auto d : digits_) s.push_back(kChars[d]);
  return s;
}

std::string Word::to_string() const { return digit_string() + "@" + std::to_string(base_); }

std::vector<std::uint8_t> expand(std::uint64_t n, unsigned base) {
  require_base(base);
  std::vector<std::uint8_t> ds;
  while (n > 0) {
    ds.push_back(static_cast<std::uint8_t>(n % base));
    n /= base;
  }
  std::reverse(ds.begin(), ds.end());
  return ds;
}

std::uint64_t digit_sum(std::uint64_t n, unsigned base) {
  require_base(base);
  std::uint64_t s = 0;
  for (; n > 0; n /= base) s += n % base;
  return s;
}

unsigned digit_count(std::uint64_t n, unsigned base) {
  require_base(base);
  unsigned k = 0;
  for (; n > 0; n /= base) ++k;
  return k;
}

std::uint64_t count_block(std::uint64_t n, const Word& w) {
  if (n == 0) return 0;
  const unsigned base = w.base();
  const auto& pat = w.digits();
  const std::size_t len = pat.size();

  // Little-endian digits of n, then the zero padding on the (high) end.
  const bool padded = w.has_leading_zero() && !w.is_zero_block();
  const std::size_t pad = padded ? len - 1 : 0;
  std::uint8_t small[128];
  std::vector<std::uint8_t> large;
  std::uint8_t* buf = small;
  if (64 + pad > sizeof small) {
    large.resize(64 + pad);
    buf = large.data();
  }
  std::size_t k = 0;
  for (; n > 0; n /= base) buf[k++] = static_cast<std::uint8_t>(n % base);
  for (std::size_t i = 0; i < pad; ++i) buf[k++] = 0;
  if (len > k) return 0;

  std::uint64_t count = 0;
  // pat[len-1] is the least significant digit of the block.
  for (std::size_t start = 0; start + len <= k; ++start) {
    bool match = true;
    for (std::size_t j = 0; j < len; ++j) {
      if (buf[start + j] != pat[len - 1 - j]) {
        match = false;
        break;
      }
    }
    count += match;
  }
  return count;
}

}  // namespace digitblocks

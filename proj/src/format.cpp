#include "digitblocks/format.hpp"

#include <charconv>

namespace digitblocks {

std::string format_number(double x, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

}  // namespace digitblocks

#include "circeig/format.hpp"

#include <array>
#include <charconv>

namespace circeig {

std::string format_double(double value) {
  if (value == 0.0) return "0";  // folds -0 into 0
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

}  // namespace circeig

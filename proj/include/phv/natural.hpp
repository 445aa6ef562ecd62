#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace phv {

// Dimensions square under castling (4 -> 12 -> 132 -> 17292 -> ...), so every
// dimension is carried as an unbounded integer.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Natural& value) { return value.str(); }

inline Natural gcd(const Natural& a, const Natural& b) {
  return boost::multiprecision::gcd(a, b);
}

inline bool fits_u64(const Natural& value) {
  return value >= 0 && value <= Natural(std::numeric_limits<std::uint64_t>::max());
}

}  // namespace phv

// numeric.hpp -- extended integers (finite or +infinity) and rounding helpers.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace davkit {

// An integer quantity that may be +infinity.  Used for bound tracking:
// several of the constants here are genuinely infinite below a threshold.
struct ExtInt {
  bool finite = true;
  long long v = 0;

  static ExtInt fin(long long x) { return ExtInt{true, x}; }
  static ExtInt inf() { return ExtInt{false, 0}; }

  bool operator==(const ExtInt& o) const {
    return finite == o.finite && (!finite || v == o.v);
  }
  bool operator<(const ExtInt& o) const {
    if (!finite) return false;
    if (!o.finite) return true;
    return v < o.v;
  }
  bool operator<=(const ExtInt& o) const { return *this < o || *this == o; }

  ExtInt operator+(long long d) const {
    return finite ? fin(v + d) : inf();
  }

  std::string str() const { return finite ? std::to_string(v) : "INF"; }
};

inline ExtInt ext_min(ExtInt a, ExtInt b) { return a < b ? a : b; }
inline ExtInt ext_max(ExtInt a, ExtInt b) { return a < b ? b : a; }

// Table rounding: lower bounds round down, upper bounds round up, three
// decimal places.  A hair of slack absorbs binary representation error.
inline double round_down_3(double x) {
  return std::floor(x * 1000.0 + 1e-9) / 1000.0;
}
inline double round_up_3(double x) {
  return std::ceil(x * 1000.0 - 1e-9) / 1000.0;
}

}  // namespace davkit

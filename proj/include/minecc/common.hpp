// Shared scalar types, exact rationals, guard errors, and deadlines.

#ifndef MINECC_COMMON_HPP
#define MINECC_COMMON_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace minecc {

// Edge weights are exact nonnegative integers in caller-scaled units.
using Weight = std::int64_t;

// Largest allowed total edge weight of an instance. Flow capacities are
// stored in half-unit scale (x2) and infinite arcs use (sum of finite
// capacities)+1, so the bound keeps every intermediate value inside int64.
inline constexpr Weight kMaxTotalWeight = Weight{1} << 61;

// Cap on the number of bad edge pairs materialized by enumerate_bad_pairs.
inline constexpr long long kDefaultBadPairCap = 50'000'000;

// Raised by input parsing and validation; carries a 1-based line number
// when the problem is tied to a specific input line (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ")"
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raised when a resource guard trips (search-space caps, bad-pair caps).
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& message) : std::runtime_error(message) {}
};

// Raised when a cooperative time limit expires.
class TimeoutError : public GuardError {
 public:
  explicit TimeoutError(const std::string& message) : GuardError(message) {}
};

// Cooperative wall-clock limit checked at coarse intervals by long loops.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(double seconds) {
    if (seconds > 0) {
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds));
    }
  }

  bool active() const { return deadline_.has_value(); }

  bool expired() const {
    return deadline_.has_value() && std::chrono::steady_clock::now() > *deadline_;
  }

  void check(const char* what) const {
    if (expired()) {
      throw TimeoutError(std::string("time limit exceeded during ") + what);
    }
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

// Exact nonnegative rational, normalized (gcd-reduced, positive denominator).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) {
      throw std::invalid_argument("rational with zero denominator");
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational& other) const {
    return num == other.num && den == other.den;
  }
  bool operator!=(const Rational& other) const { return !(*this == other); }

  bool operator<(const Rational& other) const {
    return static_cast<__int128>(num) * other.den <
           static_cast<__int128>(other.num) * den;
  }
  bool operator<=(const Rational& other) const { return !(other < *this); }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  // Fixed-point decimal rendering, rounded half away from zero.
  std::string decimal(int places = 3) const {
    __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    __int128 scaled = static_cast<__int128>(num) * scale;
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    __int128 q = (scaled + den / 2) / den;
    std::string digits;
    if (q == 0) digits = "0";
    while (q > 0) {
      digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(q % 10)));
      q /= 10;
    }
    while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
    digits.insert(digits.end() - places, '.');
    if (negative) digits.insert(digits.begin(), '-');
    return digits;
  }
};

// Named operation counters emitted in solver reports.
using WorkCounters = std::map<std::string, std::uint64_t>;

}  // namespace minecc

#endif  // MINECC_COMMON_HPP

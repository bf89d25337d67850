#pragma once

// Checked 64-bit integer arithmetic and a small exact rational type.
// All census arithmetic goes through these helpers; overflow is a hard
// error, never wraparound.

#include <cstdint>
#include <numeric>
#include <string>

#include "kunzcount/errors.hpp"

namespace kunzcount {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) raise(errc::overflow, "add");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) raise(errc::overflow, "sub");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) raise(errc::overflow, "mul");
  return r;
}

// Mathematical floor division: floor_div(-3, 2) == -2.
inline i64 floor_div(i64 a, i64 b) {
  if (b == 0) raise(errc::domain_error, "floor_div by zero");
  if (b < 0) { a = checked_sub(0, a); b = -b; }
  i64 q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Mathematical ceiling division: ceil_div(-3, 2) == -1.
inline i64 ceil_div(i64 a, i64 b) {
  if (b == 0) raise(errc::domain_error, "ceil_div by zero");
  if (b < 0) { a = checked_sub(0, a); b = -b; }
  i64 q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

// Division that must be exact; a remainder means a formula was evaluated
// outside its guard (a transcription bug), so fail loudly.
inline i64 exact_div(i64 a, i64 b) {
  if (b == 0 || a % b != 0)
    raise(errc::domain_error, "exact_div: " + std::to_string(a) + " / " + std::to_string(b));
  return a / b;
}

// Exact rational with i64 numerator/denominator, always normalized to den > 0.
struct rational {
  i64 num = 0;
  i64 den = 1;

  rational() = default;
  rational(i64 n) : num(n), den(1) {}  // NOLINT: implicit by design
  rational(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) raise(errc::domain_error, "rational with zero denominator");
    if (den < 0) { num = checked_sub(0, num); den = checked_sub(0, den); }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  i64 floor() const { return floor_div(num, den); }
  i64 ceil() const { return ceil_div(num, den); }
  bool is_integer() const { return den == 1; }

  friend rational operator+(rational a, rational b) {
    return rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                    checked_mul(a.den, b.den));
  }
  friend rational operator-(rational a, rational b) {
    return rational(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                    checked_mul(a.den, b.den));
  }
  friend rational operator*(rational a, rational b) {
    return rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
  }
  friend bool operator==(rational a, rational b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(rational a, rational b) {
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
  }
  friend bool operator<=(rational a, rational b) { return a < b || a == b; }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace kunzcount

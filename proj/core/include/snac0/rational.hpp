#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace snac0 {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline (16 bytes, no allocation). Larger values spill to a heap
/// GMP rational and are demoted back as soon as they fit again, so two equal
/// values always have the same representation.
class Rational {
 public:
  Rational() noexcept : num_{0}, den_{1} {}
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept;
  ~Rational();

  /// Parses "p/q", "p" or "-p/q" (decimal, arbitrary length). Throws
  /// InputError on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  /// 2^exponent, for any sign of exponent.
  static Rational pow2(int exponent);

  /// Canonical "p/q" rendering; integers keep the "/1".
  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  double to_double() const;
  int sign() const noexcept;
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const;
  Rational abs() const;
  Rational reciprocal() const;

  /// Inline representation accessors for integer fast paths.
  bool is_small() const noexcept { return den_ != 0; }
  std::int64_t small_num() const noexcept { return num_; }
  std::int64_t small_den() const noexcept { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  struct Big;
  friend struct RationalAccess;

  void release() noexcept;

  // den_ > 0: value is num_/den_. den_ == 0: value lives in *big_.
  union {
    std::int64_t num_;
    Big* big_;
  };
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

inline Rational abs(const Rational& value) { return value.abs(); }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace snac0

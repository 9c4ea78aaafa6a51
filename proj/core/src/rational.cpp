#include "snac0/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <utility>

#include "rational_internal.hpp"
#include "snac0/error.hpp"

namespace snac0 {

struct Rational::Big {
  mpq_class q;
};

namespace {

int ctz_u128(u128 v) noexcept {
  const auto lo = static_cast<std::uint64_t>(v);
  if (lo != 0) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
}

void set_mpz(mpz_class& z, u128 v) {
  z = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
  z <<= 64;
  z += static_cast<unsigned long>(static_cast<std::uint64_t>(v));
}

u128 abs_u128(i128 v) noexcept { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

u128 gcd_u128(u128 a, u128 b) noexcept {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = ctz_u128(a | b);
  a >>= ctz_u128(a);
  do {
    b >>= ctz_u128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

// ---------------------------------------------------------------------------
// Representation plumbing

namespace {

// num/den already reduced, den > 0.
Rational make_reduced(i128 num, i128 den) {
  if (fits_i64(num) && den <= static_cast<i128>(INT64_MAX)) {
    return RationalAccess::raw_small(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  }
  mpz_class n;
  mpz_class d;
  set_mpz(n, abs_u128(num));
  if (num < 0) n = -n;
  set_mpz(d, static_cast<u128>(den));
  return RationalAccess::from_mpq(mpq_class(n, d));
}

}  // namespace

Rational RationalAccess::from_i128(i128 num, i128 den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (num == 0) return Rational();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 g = gcd_u128(abs_u128(num), static_cast<u128>(den));
  if (g != 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  return make_reduced(num, den);
}

mpq_class RationalAccess::to_mpq(const Rational& value) {
  if (value.is_small()) {
    return mpq_class(mpz_class(static_cast<long>(value.num_)),
                     mpz_class(static_cast<long>(value.den_)));
  }
  return value.big_->q;
}

Rational RationalAccess::from_mpq(const mpq_class& value) {
  const mpz_srcptr num = value.get_num_mpz_t();
  const mpz_srcptr den = value.get_den_mpz_t();
  Rational out;
  if (mpz_fits_slong_p(num) && mpz_fits_slong_p(den)) {
    const long n = mpz_get_si(num);
    if (n != std::numeric_limits<long>::min()) {
      out.num_ = n;
      out.den_ = mpz_get_si(den);
      return out;
    }
  }
  out.big_ = new Rational::Big{value};
  out.den_ = 0;
  return out;
}

Rational::Rational(std::int64_t value) : num_{value}, den_{1} {
  if (value == INT64_MIN) {
    big_ = new Big{mpq_class(mpz_class(static_cast<long>(value)))};
    den_ = 0;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_{0}, den_{1} {
  *this = RationalAccess::from_i128(num, den);
}

Rational::Rational(const Rational& other) : num_{other.num_}, den_{other.den_} {
  if (!other.is_small()) big_ = new Big{*other.big_};
}

Rational::Rational(Rational&& other) noexcept : num_{other.num_}, den_{other.den_} {
  other.num_ = 0;
  other.den_ = 1;
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  if (other.is_small()) {
    release();
    num_ = other.num_;
    den_ = other.den_;
  } else {
    Big* copy = new Big{*other.big_};
    release();
    big_ = copy;
    den_ = 0;
  }
  return *this;
}

Rational& Rational::operator=(Rational&& other) noexcept {
  if (this == &other) return *this;
  release();
  num_ = other.num_;
  den_ = other.den_;
  other.num_ = 0;
  other.den_ = 1;
  return *this;
}

Rational::~Rational() { release(); }

void Rational::release() noexcept {
  if (den_ == 0) {
    delete big_;
    num_ = 0;
    den_ = 1;
  }
}

// ---------------------------------------------------------------------------
// Text

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> InputError {
    return InputError("malformed rational '" + std::string(text) + "'");
  };
  const auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  std::string_view num_digits = num_text;
  if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!is_digits(num_digits) || !is_digits(den_text)) throw fail();

  std::int64_t n = 0;
  std::int64_t d = 0;
  const auto rn = std::from_chars(num_digits.data(), num_digits.data() + num_digits.size(), n);
  const auto rd = std::from_chars(den_text.data(), den_text.data() + den_text.size(), d);
  if (rn.ec == std::errc() && rd.ec == std::errc()) {
    if (d == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    if (!num_text.empty() && num_text.front() == '-') n = -n;
    return RationalAccess::from_i128(n, d);
  }
  mpz_class big_num(std::string(num_digits), 10);
  mpz_class big_den(std::string(den_text), 10);
  if (big_den == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  if (!num_text.empty() && num_text.front() == '-') big_num = -big_num;
  mpq_class q(big_num, big_den);
  q.canonicalize();
  return RationalAccess::from_mpq(q);
}

Rational Rational::pow2(int exponent) {
  const int magnitude = exponent < 0 ? -exponent : exponent;
  if (magnitude <= 62) {
    const std::int64_t p = std::int64_t{1} << magnitude;
    return exponent < 0 ? Rational(1, p) : Rational(p);
  }
  mpz_class p = 1;
  p <<= static_cast<unsigned long>(magnitude);
  return RationalAccess::from_mpq(exponent < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p));
}

std::string Rational::str() const { return numerator_str() + "/" + denominator_str(); }

std::string Rational::numerator_str() const {
  return is_small() ? std::to_string(num_) : big_->q.get_num().get_str();
}

std::string Rational::denominator_str() const {
  return is_small() ? std::to_string(den_) : big_->q.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

// ---------------------------------------------------------------------------
// Queries

double Rational::to_double() const {
  if (is_small()) return static_cast<double>(num_) / static_cast<double>(den_);
  return big_->q.get_d();
}

int Rational::sign() const noexcept {
  if (is_small()) return (num_ > 0) - (num_ < 0);
  return sgn(big_->q);
}

bool Rational::is_integer() const {
  if (is_small()) return den_ == 1;
  return big_->q.get_den() == 1;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw InputError("reciprocal of zero");
  if (is_small()) {
    Rational out;
    out.num_ = num_ < 0 ? -den_ : den_;
    out.den_ = num_ < 0 ? -num_ : num_;
    return out;
  }
  mpq_class q = 1 / big_->q;
  return RationalAccess::from_mpq(q);
}

// ---------------------------------------------------------------------------
// Arithmetic

Rational Rational::operator-() const {
  if (is_small()) {
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  return RationalAccess::from_mpq(mpq_class(-big_->q));
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    if (a.den_ == b.den_) {
      return RationalAccess::from_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
    }
    const std::uint64_t g = gcd_u64(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_));
    if (g == 1) {
      const i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
      const i128 d = static_cast<i128>(a.den_) * b.den_;
      return n == 0 ? Rational() : make_reduced(n, d);
    }
    const auto gi = static_cast<std::int64_t>(g);
    const std::int64_t ad = a.den_ / gi;
    const std::int64_t bd = b.den_ / gi;
    const i128 t = static_cast<i128>(a.num_) * bd + static_cast<i128>(b.num_) * ad;
    if (t == 0) return Rational();
    const auto g2 = static_cast<std::int64_t>(
        gcd_u64(static_cast<std::uint64_t>(abs_u128(t) % g), g));
    return make_reduced(t / g2, static_cast<i128>(ad) * (b.den_ / g2));
  }
  return RationalAccess::from_mpq(mpq_class(RationalAccess::to_mpq(a) + RationalAccess::to_mpq(b)));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.is_small() && b.is_small()) {
    const auto g1 = static_cast<std::int64_t>(gcd_u64(
        static_cast<std::uint64_t>(a.num_ < 0 ? -a.num_ : a.num_), static_cast<std::uint64_t>(b.den_)));
    const auto g2 = static_cast<std::int64_t>(gcd_u64(
        static_cast<std::uint64_t>(b.num_ < 0 ? -b.num_ : b.num_), static_cast<std::uint64_t>(a.den_)));
    const i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    const i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    return make_reduced(n, d);
  }
  return RationalAccess::from_mpq(mpq_class(RationalAccess::to_mpq(a) * RationalAccess::to_mpq(b)));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.big_->q == b.big_->q;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  if (a.is_small() && b.is_small()) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const int c = cmp(RationalAccess::to_mpq(a), RationalAccess::to_mpq(b));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace snac0

#ifndef FAIRPART_RATIONAL_HPP
#define FAIRPART_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fairpart {

// Exact rational number with 64-bit numerator and denominator, canonical form
// (denominator > 0, gcd(|num|, den) == 1, zero stored as 0/1).  Intermediate
// products use 128-bit arithmetic; results that do not fit back into 64 bits
// after reduction throw std::overflow_error rather than silently wrapping.
// Every comparison is exact (cross multiplication in 128 bits), which is what
// makes tie detection and zero tests in the allocation algorithms sound.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long integer) : num_(integer), den_(1) {}  // NOLINT(runtime/explicit)
  constexpr Rational(int integer) : num_(integer), den_(1) {}        // NOLINT(runtime/explicit)
  Rational(long long num, long long den) { assign(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // Parses "p", "p/q", or a plain decimal such as "0.25" (kept exact as
  // p/10^digits).  Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  // "p" when the value is an integer, "p/q" otherwise.
  std::string str() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_i128(i128 num, i128 den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      Rational r;
      return r;
    }
    i128 g = gcd128(num, den);
    num /= g;
    den /= g;
    constexpr i128 kMax = INT64_MAX;
    constexpr i128 kMin = INT64_MIN;
    if (num > kMax || num < kMin || den > kMax)
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  void assign(long long num, long long den) { *this = from_i128(num, den); }

  long long num_;
  long long den_;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  };
  size_t b = 0, e = text.size();
  while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
  while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t')) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) fail();
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.remove_prefix(1);
    if (s.empty()) fail();
  }
  auto digits = [&](std::string_view d) -> i128 {
    if (d.empty() || d.size() > 38) fail();
    i128 v = 0;
    for (char c : d) {
      if (c < '0' || c > '9') fail();
      v = v * 10 + (c - '0');
    }
    return v;
  };
  i128 num = 0, den = 1;
  size_t slash = s.find('/');
  size_t dot = s.find('.');
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos) fail();
    num = digits(s.substr(0, slash));
    den = digits(s.substr(slash + 1));
  } else if (dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) fail();
    if (fp.size() > 18) fail();  // 10^18 still fits in 64 bits
    num = ip.empty() ? 0 : digits(ip);
    for (char c : fp) {
      if (c < '0' || c > '9') fail();
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    num = digits(s);
  }
  return from_i128(neg ? -num : num, den);
}

inline std::string Rational::str() const {
  std::string out = std::to_string(num_);
  if (den_ != 1) {
    out += '/';
    out += std::to_string(den_);
  }
  return out;
}

inline Rational abs(const Rational& r) { return r.abs(); }

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace fairpart

#endif  // FAIRPART_RATIONAL_HPP

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "svh/errors.hpp"

namespace svh {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
public:
  Rat() = default;
  Rat(std::int64_t value) : v_(value) {} // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = den < 0 ? Value(-num, -den) : Value(num, den);
  }

  /// Parses "a" or "a/b" with an optional leading sign.
  static Rat parse(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) throw std::invalid_argument("Rat: empty integer");
      std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (pos == s.size()) throw std::invalid_argument("Rat: bad integer");
      for (std::size_t i = pos; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
          throw std::invalid_argument("Rat: bad integer '" + std::string(s) + "'");
      return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    if (slash == std::string_view::npos) return Rat(parse_int(text), BigInt(1));
    return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  bool is_integer() const { return den() == 1; }

  std::string str() const {
    auto d = den();
    if (d == 1) return num().str();
    return num().str() + "/" + d.str();
  }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) {
    Rat r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
  using Value = boost::multiprecision::cpp_rational;
  Value v_;
};

} // namespace svh

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "svh/rational.hpp"

namespace svh {

/// Polynomial in the left index n and the right index m with rational
/// coefficients. Stored as exponent pair (deg_n, deg_m) -> coefficient.
class CoeffPoly {
public:
  using Monomial = std::pair<unsigned, unsigned>;

  CoeffPoly() = default;
  CoeffPoly(const Rat& c) { add_term({0, 0}, c); } // NOLINT(google-explicit-constructor)

  static CoeffPoly n() { return monomial({1, 0}); }
  static CoeffPoly m() { return monomial({0, 1}); }
  static CoeffPoly monomial(Monomial e, const Rat& c = Rat(1)) {
    CoeffPoly p;
    p.add_term(e, c);
    return p;
  }

  void add_term(Monomial e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<Monomial, Rat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
  }
  Rat constant_value() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Rat eval(int n, int m) const {
    Rat sum;
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (unsigned k = 0; k < e.first; ++k) t *= Rat(n);
      for (unsigned k = 0; k < e.second; ++k) t *= Rat(m);
      sum += t;
    }
    return sum;
  }

  /// Swaps the roles of n and m.
  CoeffPoly swapped() const {
    CoeffPoly p;
    for (const auto& [e, c] : terms_) p.add_term({e.second, e.first}, c);
    return p;
  }

  CoeffPoly& operator+=(const CoeffPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CoeffPoly& operator-=(const CoeffPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
  friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
  friend CoeffPoly operator-(const CoeffPoly& a) { return CoeffPoly() - a; }
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    CoeffPoly p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        p.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return p;
  }
  CoeffPoly& operator*=(const CoeffPoly& o) { return *this = *this * o; }

  CoeffPoly pow(unsigned k) const {
    CoeffPoly r(Rat(1));
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// Canonical text: monomials by descending total degree, then descending
  /// n-degree, e.g. "m - 1/2*n", "n^2*m + 3".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rat>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      unsigned da = a.first.first + a.first.second;
      unsigned db = b.first.first + b.first.second;
      if (da != db) return da > db;
      return a.first.first > b.first.first;
    });
    std::string out;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      const auto& [e, c] = ordered[i];
      bool negative = c.sign() < 0;
      Rat mag = negative ? -c : c;
      if (i == 0)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";

      std::string mono;
      auto var = [&](const char* name, unsigned k) {
        if (k == 0) return;
        if (!mono.empty()) mono += "*";
        mono += name;
        if (k > 1) mono += "^" + std::to_string(k);
      };
      var("n", e.first);
      var("m", e.second);

      if (mono.empty())
        out += mag.str();
      else if (mag == Rat(1))
        out += mono;
      else
        out += mag.str() + "*" + mono;
    }
    return out;
  }

  friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

private:
  std::map<Monomial, Rat> terms_;
};

} // namespace svh

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "svh/errors.hpp"
#include "svh/rational.hpp"

namespace svh {

// Families are referred to by their position in the owning spec's
// declaration list.
using FamilyId = std::size_t;

struct BasisElement {
  FamilyId family = 0;
  int index = 0;

  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

/// Truncation of the index set to [-bound, bound].
class Window {
public:
  explicit Window(int bound) : bound_(bound) {
    if (bound < 0) throw ConfigError("window bound must be non-negative");
  }

  int bound() const noexcept { return bound_; }
  bool contains(int i) const noexcept { return i >= -bound_ && i <= bound_; }
  bool contains(const BasisElement& e) const noexcept { return contains(e.index); }

  friend bool operator==(const Window&, const Window&) = default;

private:
  int bound_;
};

/// Finite linear combination of basis elements; never stores zeros.
class LinearCombo {
public:
  LinearCombo() = default;
  LinearCombo(BasisElement e, Rat c = Rat(1)) { add(e, std::move(c)); } // NOLINT

  void add(const BasisElement& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Rat coeff(const BasisElement& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  const std::map<BasisElement, Rat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  LinearCombo& operator+=(const LinearCombo& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  LinearCombo& operator-=(const LinearCombo& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  LinearCombo& operator*=(const Rat& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { return a += b; }
  friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { return a -= b; }
  friend LinearCombo operator*(const Rat& s, LinearCombo a) { return a *= s; }
  friend bool operator==(const LinearCombo&, const LinearCombo&) = default;

private:
  std::map<BasisElement, Rat> terms_;
};

} // namespace svh

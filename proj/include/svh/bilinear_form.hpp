#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "svh/basis.hpp"
#include "svh/errors.hpp"
#include "svh/rational.hpp"

namespace svh {

using BasisPair = std::pair<BasisElement, BasisElement>;

/// Sparse bilinear form on the generators inside a window. A form with a
/// degree tag d only stores pairs (A_i, B_j) with i + j = d; no tag means
/// mixed degree.
class BilinearForm {
public:
  BilinearForm(std::string spec_name, Window window, std::optional<int> degree)
      : spec_name_(std::move(spec_name)), window_(window), degree_(degree) {}

  const std::string& spec_name() const noexcept { return spec_name_; }
  Window window() const noexcept { return window_; }
  std::optional<int> degree() const noexcept { return degree_; }
  const std::map<BasisPair, Rat>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  void set(const BasisElement& x, const BasisElement& y, const Rat& v) {
    check(x, y);
    if (degree_ && x.index + y.index != *degree_) {
      if (v.is_zero()) return;
      throw std::invalid_argument("BilinearForm: entry outside the form's degree");
    }
    if (v.is_zero())
      entries_.erase({x, y});
    else
      entries_[{x, y}] = v;
  }

  void add(const BasisElement& x, const BasisElement& y, const Rat& v) { set(x, y, at(x, y) + v); }

  Rat at(const BasisElement& x, const BasisElement& y) const {
    check(x, y);
    auto it = entries_.find({x, y});
    return it == entries_.end() ? Rat(0) : it->second;
  }

  /// Entries with both indices in [-inner, inner], as a form on that window.
  BilinearForm restricted(int inner) const {
    Window w(inner);
    if (inner > window_.bound())
      throw InnerBoundExceedsWindow("restriction bound exceeds the form's window");
    BilinearForm out(spec_name_, w, degree_);
    for (const auto& [p, v] : entries_)
      if (w.contains(p.first) && w.contains(p.second)) out.entries_.emplace(p, v);
    return out;
  }

  BilinearForm& operator+=(const BilinearForm& o) {
    for (const auto& [p, v] : o.entries_) add(p.first, p.second, v);
    return *this;
  }
  BilinearForm& operator-=(const BilinearForm& o) {
    for (const auto& [p, v] : o.entries_) add(p.first, p.second, -v);
    return *this;
  }
  BilinearForm& operator*=(const Rat& s) {
    if (s.is_zero()) entries_.clear();
    for (auto& [p, v] : entries_) v *= s;
    return *this;
  }
  friend BilinearForm operator+(BilinearForm a, const BilinearForm& b) { return a += b; }
  friend BilinearForm operator-(BilinearForm a, const BilinearForm& b) { return a -= b; }
  friend BilinearForm operator*(const Rat& s, BilinearForm a) { return a *= s; }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

private:
  void check(const BasisElement& x, const BasisElement& y) const {
    if (!window_.contains(x) || !window_.contains(y))
      throw OutOfWindow("pair (" + std::to_string(x.index) + ", " + std::to_string(y.index) +
                        ") outside window " + std::to_string(window_.bound()));
  }

  std::string spec_name_;
  Window window_;
  std::optional<int> degree_;
  std::map<BasisPair, Rat> entries_;
};

/// Stored value or zero; throws OutOfWindow outside the form's window.
inline Rat evaluate(const BilinearForm& phi, const BasisElement& x, const BasisElement& y) {
  return phi.at(x, y);
}

inline BilinearForm symmetric_part(const BilinearForm& phi) {
  BilinearForm out(phi.spec_name(), phi.window(), phi.degree());
  const Rat half(BigInt(1), BigInt(2));
  for (const auto& [p, v] : phi.entries()) {
    out.add(p.first, p.second, half * v);
    out.add(p.second, p.first, half * v);
  }
  return out;
}

inline BilinearForm antisymmetric_part(const BilinearForm& phi) {
  BilinearForm out(phi.spec_name(), phi.window(), phi.degree());
  const Rat half(BigInt(1), BigInt(2));
  for (const auto& [p, v] : phi.entries()) {
    out.add(p.first, p.second, half * v);
    out.add(p.second, p.first, -(half * v));
  }
  return out;
}

/// Linear functional on the generators; never stores zeros.
class LinearFunctional {
public:
  void set(const BasisElement& e, const Rat& v) {
    if (v.is_zero())
      values_.erase(e);
    else
      values_[e] = v;
  }

  Rat operator()(const BasisElement& e) const {
    auto it = values_.find(e);
    return it == values_.end() ? Rat(0) : it->second;
  }

  Rat operator()(const LinearCombo& c) const {
    Rat sum;
    for (const auto& [e, coeff] : c.terms()) sum += coeff * (*this)(e);
    return sum;
  }

  const std::map<BasisElement, Rat>& values() const noexcept { return values_; }
  bool is_zero() const noexcept { return values_.empty(); }

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

private:
  std::map<BasisElement, Rat> values_;
};

} // namespace svh

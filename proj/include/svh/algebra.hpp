#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "svh/basis.hpp"
#include "svh/coeff_poly.hpp"
#include "svh/errors.hpp"

namespace svh {

struct BracketTerm {
  CoeffPoly coeff;
  FamilyId target = 0;

  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// [A_n, B_m] = sum_k coeff_k(n, m) * T_k_{n+m}
struct BracketRule {
  FamilyId left = 0;
  FamilyId right = 0;
  std::vector<BracketTerm> terms;

  friend bool operator==(const BracketRule&, const BracketRule&) = default;
};

/// A Z-graded algebra given by bracket rules on ordered family pairs.
/// With antisymmetric closure on, an unlisted pair (B, A) whose mirror
/// (A, B) is listed brackets as -[A, B]; everything else unlisted is zero.
class AlgebraSpec {
public:
  AlgebraSpec() = default;
  AlgebraSpec(std::string name, std::vector<std::string> families, bool antisymmetric_closure)
      : name_(std::move(name)), families_(std::move(families)), closure_(antisymmetric_closure) {}

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& families() const noexcept { return families_; }
  std::size_t family_count() const noexcept { return families_.size(); }
  bool antisymmetric_closure() const noexcept { return closure_; }
  const std::map<std::pair<FamilyId, FamilyId>, BracketRule>& rules() const noexcept {
    return rules_;
  }

  std::optional<FamilyId> find_family(std::string_view name) const {
    auto it = std::find(families_.begin(), families_.end(), name);
    if (it == families_.end()) return std::nullopt;
    return static_cast<FamilyId>(it - families_.begin());
  }

  FamilyId family(std::string_view name) const {
    auto id = find_family(name);
    if (!id) throw UnknownFamily("unknown family '" + std::string(name) + "'");
    return *id;
  }

  const std::string& family_name(FamilyId id) const {
    check_family(id);
    return families_[id];
  }

  void check_family(FamilyId id) const {
    if (id >= families_.size())
      throw UnknownFamily("family id " + std::to_string(id) + " not declared in '" + name_ + "'");
  }

  /// Adds a rule; terms with the same target are merged and zero terms
  /// dropped. Throws DuplicateRule when the ordered pair already has one.
  void add_rule(BracketRule rule) {
    check_family(rule.left);
    check_family(rule.right);
    std::map<FamilyId, CoeffPoly> merged;
    for (auto& t : rule.terms) {
      check_family(t.target);
      merged[t.target] += t.coeff;
    }
    rule.terms.clear();
    for (auto& [target, poly] : merged)
      if (!poly.is_zero()) rule.terms.push_back({std::move(poly), target});
    auto key = std::make_pair(rule.left, rule.right);
    if (rules_.count(key))
      throw DuplicateRule(0, 0, "duplicate bracket rule for " + families_[rule.left] + " " +
                                    families_[rule.right]);
    rules_.emplace(key, std::move(rule));
  }

  const BracketRule* rule(FamilyId a, FamilyId b) const {
    auto it = rules_.find({a, b});
    return it == rules_.end() ? nullptr : &it->second;
  }

  /// Nonzero structure constants of [A_n, B_m] as (target family, coefficient);
  /// every target carries index n + m.
  std::vector<std::pair<FamilyId, Rat>> structure(FamilyId a, int n, FamilyId b, int m) const {
    check_family(a);
    check_family(b);
    std::vector<std::pair<FamilyId, Rat>> out;
    if (const BracketRule* r = rule(a, b)) {
      for (const auto& t : r->terms) {
        Rat c = t.coeff.eval(n, m);
        if (!c.is_zero()) out.emplace_back(t.target, std::move(c));
      }
    } else if (closure_) {
      if (const BracketRule* r = rule(b, a)) {
        for (const auto& t : r->terms) {
          Rat c = t.coeff.eval(m, n);
          if (!c.is_zero()) out.emplace_back(t.target, -c);
        }
      }
    }
    return out;
  }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

private:
  std::string name_;
  std::vector<std::string> families_;
  bool closure_ = false;
  std::map<std::pair<FamilyId, FamilyId>, BracketRule> rules_;
};

inline LinearCombo bracket(const AlgebraSpec& spec, const BasisElement& x, const BasisElement& y) {
  LinearCombo out;
  for (const auto& [t, c] : spec.structure(x.family, x.index, y.family, y.index))
    out.add({t, x.index + y.index}, c);
  return out;
}

/// Bilinear extension of the generator rules.
inline LinearCombo bracket(const AlgebraSpec& spec, const LinearCombo& a, const LinearCombo& b) {
  LinearCombo out;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms())
      for (const auto& [t, c] : spec.structure(x.family, x.index, y.family, y.index))
        out.add({t, x.index + y.index}, cx * cy * c);
  return out;
}

/// All generators in the window, family declaration order then index
/// ascending; optionally only those of one degree.
inline std::vector<BasisElement> enumerate_basis(const AlgebraSpec& spec, Window w,
                                                 std::optional<int> degree = std::nullopt) {
  std::vector<BasisElement> out;
  for (FamilyId f = 0; f < spec.family_count(); ++f) {
    if (degree) {
      if (w.contains(*degree)) out.push_back({f, *degree});
      continue;
    }
    for (int i = -w.bound(); i <= w.bound(); ++i) out.push_back({f, i});
  }
  return out;
}

struct LeibnizViolation {
  BasisElement x, y, z;
  LinearCombo lhs;  // [x, [y, z]]
  LinearCombo rhs;  // [[x, y], z] - [[x, z], y]
};

struct LeibnizCheck {
  std::vector<LeibnizViolation> violations;
  std::size_t checked = 0;
  std::size_t skipped = 0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Verifies [x,[y,z]] = [[x,y],z] - [[x,z],y] on every ordered generator
/// triple in the window. A triple is skipped (and counted) when any of
/// j+k, i+j, i+k, i+j+k leaves the window.
inline LeibnizCheck check_leibniz(const AlgebraSpec& spec, Window w) {
  LeibnizCheck out;
  const int n = w.bound();
  const std::size_t fc = spec.family_count();
  for (FamilyId fx = 0; fx < fc; ++fx)
    for (FamilyId fy = 0; fy < fc; ++fy)
      for (FamilyId fz = 0; fz < fc; ++fz)
        for (int i = -n; i <= n; ++i)
          for (int j = -n; j <= n; ++j)
            for (int k = -n; k <= n; ++k) {
              if (!w.contains(j + k) || !w.contains(i + j) || !w.contains(i + k) ||
                  !w.contains(i + j + k)) {
                ++out.skipped;
                continue;
              }
              ++out.checked;
              BasisElement x{fx, i}, y{fy, j}, z{fz, k};
              LinearCombo lhs = bracket(spec, LinearCombo(x), bracket(spec, y, z));
              LinearCombo rhs = bracket(spec, bracket(spec, x, y), LinearCombo(z)) -
                                bracket(spec, bracket(spec, x, z), LinearCombo(y));
              if (lhs != rhs) out.violations.push_back({x, y, z, std::move(lhs), std::move(rhs)});
            }
  return out;
}

} // namespace svh

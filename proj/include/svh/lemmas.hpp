#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "svh/algebra.hpp"
#include "svh/bilinear_form.hpp"
#include "svh/errors.hpp"

namespace svh {

struct LemmaOffense {
  BasisElement left;
  BasisElement right;
  Rat value;
  Rat expected;
};

struct LemmaVerdict {
  std::string lemma;
  std::string claim;
  bool passed = true;
  std::optional<LemmaOffense> offense;  // first failing pair
};

struct LemmaReport {
  std::vector<LemmaVerdict> verdicts;
  Rat c;   // scalar of (n^3 - n)/12 on (L_n, L_{-n})
  Rat c1;  // value at (L_1, M_{-1})

  bool passed() const {
    for (const auto& v : verdicts)
      if (!v.passed) return false;
    return true;
  }

  const LemmaVerdict* find(const std::string& lemma) const {
    for (const auto& v : verdicts)
      if (v.lemma == lemma) return &v;
    return nullptr;
  }
};

namespace lemma_detail {

struct Families {
  std::optional<FamilyId> L, Y, M;
};

inline Families lookup(const AlgebraSpec& spec) {
  return {spec.find_family("L"), spec.find_family("Y"), spec.find_family("M")};
}

using Expected = std::function<Rat(int, int)>;

inline Rat zero(int, int) { return Rat(0); }

// Compares phi on every inner pair (A_i, B_j) against expected(i, j).
inline void expect_block(LemmaVerdict& v, const BilinearForm& phi, int inner,
                         std::optional<FamilyId> a, std::optional<FamilyId> b, const Expected& expected) {
  if (!a || !b) return;
  for (int i = -inner; i <= inner; ++i)
    for (int j = -inner; j <= inner; ++j) {
      BasisElement x{*a, i}, y{*b, j};
      Rat value = phi.at(x, y);
      Rat want = expected(i, j);
      if (value != want && v.passed) {
        v.passed = false;
        v.offense = LemmaOffense{x, y, value, want};
      }
    }
}

inline void expect_entry(LemmaVerdict& v, const BilinearForm& phi, std::optional<FamilyId> a, int i,
                         std::optional<FamilyId> b, int j, const Rat& want) {
  if (!a || !b) return;
  if (!phi.window().contains(i) || !phi.window().contains(j)) return;
  BasisElement x{*a, i}, y{*b, j};
  Rat value = phi.at(x, y);
  if (value != want && v.passed) {
    v.passed = false;
    v.offense = LemmaOffense{x, y, value, want};
  }
}

inline Rat virasoro(int n) { return Rat(BigInt(n) * n * n - n, BigInt(12)); }

} // namespace lemma_detail

/// Weaker pattern that holds once the f-step is done but before the g-step:
///   phi(L_n, M_m) = phi(M_n, L_m) = n c1 delta_{m,-n},
///   phi(Y_n, Y_m) = 2 n c1 delta_{m,-n},  c1 = phi(L_1, M_{-1}).
inline LemmaVerdict lemma4_pattern(const AlgebraSpec& spec, const BilinearForm& phi, int inner) {
  using namespace lemma_detail;
  auto f = lookup(spec);
  Rat c1 = (f.L && f.M && inner >= 1) ? phi.at({*f.L, 1}, {*f.M, -1}) : Rat(0);
  LemmaVerdict v{"lemma4", "phi(L_n,M_-n) = phi(M_n,L_-n) = n*c1, phi(Y_n,Y_-n) = 2n*c1", true, {}};
  auto linear = [c1](Rat scale) {
    return [c1, scale](int i, int j) { return i + j == 0 ? scale * Rat(i) * c1 : Rat(0); };
  };
  expect_block(v, phi, inner, f.L, f.M, linear(Rat(1)));
  expect_block(v, phi, inner, f.M, f.L, linear(Rat(1)));
  expect_block(v, phi, inner, f.Y, f.Y, linear(Rat(2)));
  return v;
}

/// Checks a normalized degree-0 form against the canonical pattern on
/// [-inner, inner]: the only surviving entries are c (n^3 - n)/12 on
/// (L_n, L_{-n}). Blocks whose families the spec lacks are not checked.
inline LemmaReport lemma_assertions(const AlgebraSpec& spec, const BilinearForm& phi, int inner) {
  using namespace lemma_detail;
  if (inner < 0 || inner > phi.window().bound())
    throw InnerBoundExceedsWindow("lemma check bound exceeds the form's window");
  auto f = lookup(spec);
  LemmaReport rep;
  if (f.L && inner >= 2) rep.c = Rat(2) * phi.at({*f.L, 2}, {*f.L, -2});
  if (f.L && f.M && inner >= 1) rep.c1 = phi.at({*f.L, 1}, {*f.M, -1});

  LemmaVerdict norm{"normalization", "phi(L_-1,L_1) = phi(L_-1,Y_1) = phi(L_-1,M_1) = 0", true, {}};
  for (auto x : {f.L, f.Y, f.M}) expect_entry(norm, phi, f.L, -1, x, 1, Rat(0));
  rep.verdicts.push_back(norm);

  LemmaVerdict l1{"lemma1", "phi(L_1,L_-1) = phi(L_1,Y_-1) = phi(L_1,M_-1) = 0, phi(L_0,X_n) = phi(X_n,L_0) = 0 (n != 0)",
                  true, {}};
  for (auto x : {f.L, f.Y, f.M}) expect_entry(l1, phi, f.L, 1, x, -1, Rat(0));
  for (auto x : {f.L, f.Y, f.M})
    for (int n = -inner; n <= inner; ++n) {
      if (n == 0) continue;
      expect_entry(l1, phi, f.L, 0, x, n, Rat(0));
      expect_entry(l1, phi, x, n, f.L, 0, Rat(0));
    }
  rep.verdicts.push_back(l1);

  LemmaVerdict l2{"lemma2", "phi(L_n,L_m) = c*(n^3-n)/12*delta_{m,-n}", true, {}};
  const Rat c = rep.c;
  expect_block(l2, phi, inner, f.L, f.L,
               [c](int i, int j) { return i + j == 0 ? c * virasoro(i) : Rat(0); });
  rep.verdicts.push_back(l2);

  LemmaVerdict l3{"lemma3", "phi(M_m,M_n) = phi(Y_m,M_n) = phi(M_m,Y_n) = 0", true, {}};
  expect_block(l3, phi, inner, f.M, f.M, zero);
  expect_block(l3, phi, inner, f.Y, f.M, zero);
  expect_block(l3, phi, inner, f.M, f.Y, zero);
  rep.verdicts.push_back(l3);

  if (f.M || f.Y) rep.verdicts.push_back(lemma4_pattern(spec, phi, inner));

  LemmaVerdict l5{"lemma5", "phi(L_m,Y_n) = phi(Y_n,L_m) = 0", true, {}};
  expect_block(l5, phi, inner, f.L, f.Y, zero);
  expect_block(l5, phi, inner, f.Y, f.L, zero);
  rep.verdicts.push_back(l5);

  LemmaVerdict l6{"lemma6", "c1 = 0: phi(L_n,M_m) = phi(M_n,L_m) = phi(Y_n,Y_m) = 0", true, {}};
  expect_block(l6, phi, inner, f.L, f.M, zero);
  expect_block(l6, phi, inner, f.M, f.L, zero);
  expect_block(l6, phi, inner, f.Y, f.Y, zero);
  rep.verdicts.push_back(l6);
  return rep;
}

} // namespace svh

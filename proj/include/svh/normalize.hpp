#pragma once

#include <optional>

#include "svh/algebra.hpp"
#include "svh/bilinear_form.hpp"
#include "svh/cocycle.hpp"
#include "svh/errors.hpp"

namespace svh {

struct NormalizationTrace {
  LinearFunctional f;  // first coboundary removed
  Rat c1;              // value at (L_1, M_{-1}) after the f-step
  Rat g_scalar;        // multiple of psi_g (g = M_0^*) removed afterwards

  /// normalized + psi_f + g_scalar * psi_g, which equals the input form.
  BilinearForm reconstruct(const AlgebraSpec& spec, const BilinearForm& normalized) const {
    BilinearForm out = normalized + coboundary_of(spec, f, normalized.window(), normalized.degree());
    if (!g_scalar.is_zero()) out += g_scalar * coboundary_of(spec, g_functional(spec), normalized.window(),
                                                              normalized.degree());
    return out;
  }

  static LinearFunctional g_functional(const AlgebraSpec& spec) {
    LinearFunctional g;
    if (auto m = spec.find_family("M")) g.set({*m, 0}, Rat(1));
    return g;
  }
};

struct NormalizedForm {
  BilinearForm form;
  NormalizationTrace trace;
};

namespace detail {

// Coefficient of target in [a, b].
inline Rat structure_coeff(const AlgebraSpec& spec, const BasisElement& a, const BasisElement& b,
                           const BasisElement& target) {
  return bracket(spec, a, b).coeff(target);
}

} // namespace detail

/// Removes coboundaries from a degree-0 cocycle in two steps.
///
/// f-step: with X ranging over the families,
///   f(X_0) = phi(L_{-1}, X_1) / c  where [L_{-1}, X_1] = c X_0 + ...
///   f(X_n) = phi(L_0, X_n) / c     where [L_0, X_n]    = c X_n + ...  (n != 0)
/// which for the twisted Schroedinger-Virasoro algebra is
///   f(L_0) = phi(L_{-1},L_1)/2, f(Y_0) = 2 phi(L_{-1},Y_1)/3, f(M_0) = phi(L_{-1},M_1),
///   f(X_n) = phi(L_0,X_n)/n.
/// Then phi - psi_f vanishes on (L_{-1}, X_1) and on (L_0, X_n).
///
/// g-step (only when a family M exists): subtracts the multiple of psi_g,
/// g = M_0^*, that zeroes the (L_1, M_{-1}) entry. The multiple is solved
/// for rather than fixed in advance.
///
/// Needs a family named L. Throws NotACocycle when phi fails the
/// degree-0 Leibniz cocycle system of its window.
inline NormalizedForm normalize_representative(const AlgebraSpec& spec, const BilinearForm& phi) {
  auto L = spec.find_family("L");
  if (!L) throw ConfigError("normalization needs a family named L in '" + spec.name() + "'");
  if (phi.degree() != 0) throw ConfigError("normalization needs a degree-0 form");
  const Window w = phi.window();
  const auto sys = build_cocycle_system(spec, w, 0, Mode::leibniz);
  if (!sys.satisfied_by(phi)) throw NotACocycle("form is not a degree-0 Leibniz cocycle");

  NormalizationTrace trace;
  for (FamilyId x = 0; x < spec.family_count(); ++x) {
    for (int n = -w.bound(); n <= w.bound(); ++n) {
      BasisElement target{x, n};
      BasisElement left{*L, n == 0 ? -1 : 0};
      BasisElement right{x, n == 0 ? 1 : n};
      if (!w.contains(left) || !w.contains(right)) continue;
      Rat c = detail::structure_coeff(spec, left, right, target);
      if (c.is_zero()) continue;
      trace.f.set(target, phi.at(left, right) / c);
    }
  }
  BilinearForm out = phi - coboundary_of(spec, trace.f, w, 0);

  auto M = spec.find_family("M");
  if (M && w.bound() >= 1) {
    BasisElement l1{*L, 1}, m1{*M, -1};
    trace.c1 = out.at(l1, m1);
    BilinearForm psi_g = coboundary_of(spec, NormalizationTrace::g_functional(spec), w, 0);
    Rat denom = psi_g.at(l1, m1);
    if (!denom.is_zero() && !trace.c1.is_zero()) {
      trace.g_scalar = trace.c1 / denom;
      out -= trace.g_scalar * psi_g;
    }
  }
  return {std::move(out), std::move(trace)};
}

} // namespace svh

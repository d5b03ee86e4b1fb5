#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svh/algebra.hpp"
#include "svh/bilinear_form.hpp"
#include "svh/coeff_poly.hpp"

namespace svh {

namespace preset_detail {

inline Rat half() { return Rat(BigInt(1), BigInt(2)); }

} // namespace preset_detail

/// Twisted Schroedinger-Virasoro algebra on L_n, Y_n, M_n (n in Z):
///   [L_n, L_m] = (m - n) L_{n+m}     [L_n, M_m] = m M_{n+m}
///   [L_n, Y_m] = (m - n/2) Y_{n+m}   [Y_n, Y_m] = (m - n) M_{n+m}
inline AlgebraSpec twisted_sv_spec() {
  AlgebraSpec s("twisted-sv", {"L", "Y", "M"}, true);
  const FamilyId L = 0, Y = 1, M = 2;
  const auto n = CoeffPoly::n();
  const auto m = CoeffPoly::m();
  s.add_rule({L, L, {{m - n, L}}});
  s.add_rule({L, Y, {{m - CoeffPoly(preset_detail::half()) * n, Y}}});
  s.add_rule({L, M, {{m, M}}});
  s.add_rule({Y, Y, {{m - n, M}}});
  return s;
}

/// Witt algebra: the L family alone. The central element of the Virasoro
/// algebra is not a generator here; its class shows up in cohomology.
inline AlgebraSpec witt_spec() {
  AlgebraSpec s("witt", {"L"}, true);
  s.add_rule({0, 0, {{CoeffPoly::m() - CoeffPoly::n(), 0}}});
  return s;
}

/// Twisted Schroedinger subalgebra spanned by Y_n, M_n.
inline AlgebraSpec schrodinger_spec() {
  AlgebraSpec s("schrodinger", {"Y", "M"}, true);
  s.add_rule({0, 0, {{CoeffPoly::m() - CoeffPoly::n(), 1}}});
  return s;
}

inline std::vector<std::string> preset_names() { return {"twisted-sv", "witt", "schrodinger"}; }

inline std::optional<AlgebraSpec> preset_by_name(std::string_view name) {
  if (name == "twisted-sv") return twisted_sv_spec();
  if (name == "witt") return witt_spec();
  if (name == "schrodinger") return schrodinger_spec();
  return std::nullopt;
}

/// Degree-0 form with value (n^3 - n)/12 at (L_n, L_{-n}), zero elsewhere.
inline BilinearForm virasoro_form(const AlgebraSpec& spec, Window w) {
  const FamilyId L = spec.family("L");
  BilinearForm out(spec.name(), w, 0);
  for (int n = -w.bound(); n <= w.bound(); ++n) {
    BigInt cube = BigInt(n) * n * n - n;
    out.set({L, n}, {L, -n}, Rat(cube, BigInt(12)));
  }
  return out;
}

inline BilinearForm virasoro_form(Window w) { return virasoro_form(twisted_sv_spec(), w); }

} // namespace svh

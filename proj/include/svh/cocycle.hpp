#pragma once

#include <cstddef>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "svh/algebra.hpp"
#include "svh/bilinear_form.hpp"
#include "svh/echelon.hpp"
#include "svh/errors.hpp"

namespace svh {

enum class Mode { leibniz, lie };

inline std::string_view to_string(Mode m) { return m == Mode::lie ? "lie" : "leibniz"; }

inline std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "leibniz") return Mode::leibniz;
  if (s == "lie") return Mode::lie;
  return std::nullopt;
}

/// Column numbering of the unknowns psi(A_i, B_j).
class UnknownIndex {
public:
  std::size_t size() const noexcept { return pairs_.size(); }
  const BasisPair& pair(std::size_t i) const { return pairs_.at(i); }
  const std::vector<BasisPair>& pairs() const noexcept { return pairs_; }

  std::optional<std::size_t> find(const BasisPair& p) const {
    auto it = lookup_.find(p);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  void push(const BasisPair& p) {
    lookup_.emplace(p, pairs_.size());
    pairs_.push_back(p);
  }

  DenseVector vector_of(const BilinearForm& phi) const {
    DenseVector v(pairs_.size());
    for (const auto& [p, value] : phi.entries()) {
      auto i = find(p);
      if (!i) throw std::invalid_argument("form has an entry outside the unknown set");
      v[*i] = value;
    }
    return v;
  }

  BilinearForm form_of(const DenseVector& v, const std::string& spec_name, Window w,
                       std::optional<int> degree) const {
    BilinearForm phi(spec_name, w, degree);
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if (!v[i].is_zero()) phi.set(pairs_[i].first, pairs_[i].second, v[i]);
    return phi;
  }

private:
  std::vector<BasisPair> pairs_;
  std::map<BasisPair, std::size_t> lookup_;
};

struct CocycleSystem {
  SparseMatrixQ matrix;
  UnknownIndex unknowns;
  Window window{0};
  std::optional<int> degree;  // nullopt: all degrees jointly
  Mode mode = Mode::leibniz;
  std::size_t triples = 0;   // triples that produced a constraint
  std::size_t skipped = 0;   // triples needing an out-of-window unknown

  /// True when phi satisfies every row exactly.
  bool satisfied_by(const BilinearForm& phi) const {
    return is_zero(matrix.multiply(unknowns.vector_of(phi)));
  }
};

namespace detail {

inline UnknownIndex degree_unknowns(const AlgebraSpec& spec, Window w, std::optional<int> degree) {
  UnknownIndex idx;
  const int n = w.bound();
  for (FamilyId a = 0; a < spec.family_count(); ++a)
    for (FamilyId b = 0; b < spec.family_count(); ++b)
      for (int i = -n; i <= n; ++i) {
        if (degree) {
          int j = *degree - i;
          if (w.contains(j)) idx.push({{a, i}, {b, j}});
        } else {
          for (int j = -n; j <= n; ++j) idx.push({{a, i}, {b, j}});
        }
      }
  return idx;
}

} // namespace detail

/// Linear system whose kernel is the truncated space of 2-cocycles
///   psi(x,[y,z]) - psi([x,y],z) + psi([x,z],y) = 0
/// over ordered generator triples in the window. A triple is skipped when
/// a pairing with a nonzero structure constant needs an out-of-window
/// unknown. Lie mode adds psi(x,y) + psi(y,x) = 0.
inline CocycleSystem build_cocycle_system(const AlgebraSpec& spec, Window w,
                                          std::optional<int> degree, Mode mode) {
  CocycleSystem sys;
  sys.window = w;
  sys.degree = degree;
  sys.mode = mode;
  sys.unknowns = detail::degree_unknowns(spec, w, degree);
  sys.matrix = SparseMatrixQ(sys.unknowns.size());

  const int n = w.bound();
  const std::size_t fc = spec.family_count();
  auto emit = [&](const BasisElement& x, const BasisElement& y, const BasisElement& z) {
    SparseRow row;
    bool ok = true;
    auto term = [&](const BasisElement& a, const BasisElement& b, const Rat& c) {
      if (auto col = sys.unknowns.find({a, b}))
        row.push_back({*col, c});
      else
        ok = false;
    };
    for (const auto& [t, c] : spec.structure(y.family, y.index, z.family, z.index))
      term(x, {t, y.index + z.index}, c);
    for (const auto& [t, c] : spec.structure(x.family, x.index, y.family, y.index))
      term({t, x.index + y.index}, z, -c);
    for (const auto& [t, c] : spec.structure(x.family, x.index, z.family, z.index))
      term({t, x.index + z.index}, y, c);
    if (!ok) {
      ++sys.skipped;
      return;
    }
    ++sys.triples;
    detail::canonicalize(row);
    if (!row.empty()) sys.matrix.append_row(std::move(row));
  };

  for (FamilyId fx = 0; fx < fc; ++fx)
    for (FamilyId fy = 0; fy < fc; ++fy)
      for (FamilyId fz = 0; fz < fc; ++fz)
        for (int i = -n; i <= n; ++i)
          for (int j = -n; j <= n; ++j) {
            if (degree) {
              int k = *degree - i - j;
              if (w.contains(k)) emit({fx, i}, {fy, j}, {fz, k});
            } else {
              for (int k = -n; k <= n; ++k) emit({fx, i}, {fy, j}, {fz, k});
            }
          }

  if (mode == Mode::lie) {
    for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
      const auto& [x, y] = sys.unknowns.pair(u);
      auto v = sys.unknowns.find({y, x});
      if (!v || *v < u) continue;
      sys.matrix.append_row({{u, Rat(1)}, {*v, Rat(1)}});
    }
  }
  return sys;
}

/// Basis of the truncated cocycle space (kernel of the system).
inline std::vector<BilinearForm> cocycle_space(const AlgebraSpec& spec, Window w,
                                               std::optional<int> degree, Mode mode) {
  auto sys = build_cocycle_system(spec, w, degree, mode);
  std::vector<BilinearForm> out;
  for (const auto& v : nullspace(sys.matrix))
    out.push_back(sys.unknowns.form_of(v, spec.name(), w, degree));
  return out;
}

/// psi_f(x, y) = f([x, y]) over the in-window pairs of the given degree.
inline BilinearForm coboundary_of(const AlgebraSpec& spec, const LinearFunctional& f, Window w,
                                  std::optional<int> degree) {
  BilinearForm out(spec.name(), w, degree);
  const auto idx = detail::degree_unknowns(spec, w, degree);
  for (const auto& [x, y] : idx.pairs()) {
    Rat v = f(bracket(spec, x, y));
    if (!v.is_zero()) out.set(x, y, v);
  }
  return out;
}

/// Basis of the coboundaries of functionals supported on in-window
/// generators of the given degree. Generators are tried in enumerate_basis
/// order and kept when independent.
inline std::vector<BilinearForm> coboundary_space(const AlgebraSpec& spec, Window w, int degree) {
  auto idx = detail::degree_unknowns(spec, w, degree);
  RowSpan span(idx.size());
  std::vector<BilinearForm> out;
  for (const auto& e : enumerate_basis(spec, w, degree)) {
    LinearFunctional f;
    f.set(e, Rat(1));
    auto form = coboundary_of(spec, f, w, degree);
    if (span.add(idx.vector_of(form))) out.push_back(std::move(form));
  }
  return out;
}

struct CohomologyReport {
  std::string algebra;
  int window = 0;
  int inner = 0;
  int degree = 0;
  Mode mode = Mode::leibniz;
  std::size_t dim_cocycle = 0;
  std::size_t dim_coboundary = 0;
  std::size_t dim_cocycle_inner = 0;
  std::size_t dim_coboundary_inner = 0;
  std::size_t dim_cohomology_inner = 0;
  std::size_t skipped_triples = 0;
  // Inner-window restrictions of the chosen class representatives.
  std::vector<BilinearForm> representatives;
  // The same representatives on the full window (genuine cocycles there).
  std::vector<BilinearForm> full_representatives;
};

/// Cocycles modulo coboundaries, both restricted to pairs with indices in
/// [-inner, inner].
inline CohomologyReport cohomology(const AlgebraSpec& spec, Window w, int degree, Mode mode,
                                   int inner) {
  if (inner < 0 || inner > w.bound())
    throw InnerBoundExceedsWindow("inner bound " + std::to_string(inner) +
                                  " outside [0, " + std::to_string(w.bound()) + "]");
  CohomologyReport rep;
  rep.algebra = spec.name();
  rep.window = w.bound();
  rep.inner = inner;
  rep.degree = degree;
  rep.mode = mode;

  auto sys = build_cocycle_system(spec, w, degree, mode);
  rep.skipped_triples = sys.skipped;
  auto cocycles = nullspace(sys.matrix);
  rep.dim_cocycle = cocycles.size();

  std::vector<DenseVector> coboundaries;
  for (const auto& b : coboundary_space(spec, w, degree))
    coboundaries.push_back(sys.unknowns.vector_of(b));
  rep.dim_coboundary = coboundaries.size();

  Window iw(inner);
  std::vector<std::size_t> inner_cols;
  UnknownIndex inner_idx;
  for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
    const auto& p = sys.unknowns.pair(u);
    if (iw.contains(p.first) && iw.contains(p.second)) {
      inner_cols.push_back(u);
      inner_idx.push(p);
    }
  }
  auto restrict = [&](const std::vector<DenseVector>& vs) {
    std::vector<DenseVector> out;
    for (const auto& v : vs) {
      DenseVector r(inner_cols.size());
      for (std::size_t c = 0; c < inner_cols.size(); ++c) r[c] = v[inner_cols[c]];
      out.push_back(std::move(r));
    }
    return out;
  };
  auto z_inner = restrict(cocycles);
  auto b_inner = restrict(coboundaries);
  rep.dim_cocycle_inner = rank_of(z_inner, inner_cols.size());
  rep.dim_coboundary_inner = rank_of(b_inner, inner_cols.size());

  for (auto i : quotient_basis_indices(z_inner, b_inner, inner_cols.size())) {
    rep.representatives.push_back(inner_idx.form_of(z_inner[i], spec.name(), iw, degree));
    rep.full_representatives.push_back(sys.unknowns.form_of(cocycles[i], spec.name(), w, degree));
  }
  rep.dim_cohomology_inner = rep.representatives.size();
  return rep;
}

struct ScanRow {
  int degree = 0;
  int window = 0;
  int inner = 0;
  std::size_t dim_cocycle = 0;
  std::size_t dim_coboundary = 0;
  std::size_t dim_cocycle_inner = 0;
  std::size_t dim_coboundary_inner = 0;
  std::size_t dim_cohomology_inner = 0;
};

/// One cohomology run per window with inner bound floor(N/2). Windows are
/// solved concurrently; rows come back in input order.
inline std::vector<ScanRow> convergence_scan(const AlgebraSpec& spec, const std::vector<int>& windows,
                                             int degree, Mode mode) {
  for (std::size_t i = 1; i < windows.size(); ++i)
    if (windows[i] <= windows[i - 1]) throw ConfigError("scan windows must be strictly ascending");
  std::vector<std::future<CohomologyReport>> jobs;
  for (int n : windows) {
    Window w(n);
    jobs.push_back(std::async(std::launch::async, [&spec, w, n, degree, mode] {
      return cohomology(spec, w, degree, mode, n / 2);
    }));
  }
  std::vector<ScanRow> rows;
  for (auto& j : jobs) {
    auto r = j.get();
    rows.push_back({r.degree, r.window, r.inner, r.dim_cocycle, r.dim_coboundary, r.dim_cocycle_inner,
                    r.dim_coboundary_inner, r.dim_cohomology_inner});
  }
  return rows;
}

} // namespace svh

#pragma once

#include <optional>
#include <vector>

#include "svh/cocycle.hpp"
#include "svh/lemmas.hpp"
#include "svh/normalize.hpp"
#include "svh/presets.hpp"

namespace svh {

/// Per-representative results of the normalization pipeline.
struct CanonicalClass {
  BilinearForm raw;         // inner restriction of the quotient representative
  BilinearForm normalized;  // inner restriction after the f- and g-steps
  BilinearForm canonical;   // normalized / c when c != 0
  NormalizationTrace trace;
  LemmaReport lemmas;
};

struct AnalyzedCohomology {
  CohomologyReport report;
  // Filled when the degree is 0 and the spec has an L family.
  std::vector<CanonicalClass> classes;

  bool normalized() const noexcept { return !classes.empty(); }
};

/// cohomology() followed, where it applies, by normalization, lemma checks
/// and scaling of each representative so that c = 1.
inline AnalyzedCohomology analyze_cohomology(const AlgebraSpec& spec, Window w, int degree, Mode mode,
                                             int inner) {
  AnalyzedCohomology out{cohomology(spec, w, degree, mode, inner), {}};
  if (degree != 0 || !spec.find_family("L")) return out;
  const auto& rep = out.report;
  for (std::size_t i = 0; i < rep.full_representatives.size(); ++i) {
    auto nf = normalize_representative(spec, rep.full_representatives[i]);
    BilinearForm normalized = nf.form.restricted(inner);
    LemmaReport lemmas = lemma_assertions(spec, normalized, inner);
    BilinearForm canonical = lemmas.c.is_zero() ? normalized : (Rat(1) / lemmas.c) * normalized;
    out.classes.push_back({rep.representatives[i], std::move(normalized), std::move(canonical),
                           std::move(nf.trace), std::move(lemmas)});
  }
  return out;
}

} // namespace svh

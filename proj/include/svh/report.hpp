#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "svh/algebra.hpp"
#include "svh/analysis.hpp"
#include "svh/cocycle.hpp"
#include "svh/errors.hpp"
#include "svh/lemmas.hpp"

namespace svh {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

namespace report_detail {

inline Json big_int_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

inline BigInt big_int_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

inline std::string element_text(const AlgebraSpec& spec, const BasisElement& e) {
  return spec.family_name(e.family) + "_" + std::to_string(e.index);
}

} // namespace report_detail

/// Rationals serialize as {"num": n, "den": d}; never as floats.
inline Json rat_json(const Rat& r) {
  return Json{{"num", report_detail::big_int_json(r.num())}, {"den", report_detail::big_int_json(r.den())}};
}

inline Rat rat_from_json(const Json& j) {
  return Rat(report_detail::big_int_from_json(j.at("num")), report_detail::big_int_from_json(j.at("den")));
}

inline Json form_json(const AlgebraSpec& spec, const BilinearForm& phi) {
  Json arr = Json::array();
  for (const auto& [p, v] : phi.entries()) {
    arr.push_back(Json{{"left_family", spec.family_name(p.first.family)},
                       {"left_index", p.first.index},
                       {"right_family", spec.family_name(p.second.family)},
                       {"right_index", p.second.index},
                       {"num", report_detail::big_int_json(v.num())},
                       {"den", report_detail::big_int_json(v.den())}});
  }
  return arr;
}

inline BilinearForm form_from_json(const AlgebraSpec& spec, const Json& entries, Window w,
                                   std::optional<int> degree) {
  BilinearForm phi(spec.name(), w, degree);
  for (const auto& e : entries) {
    BasisElement x{spec.family(e.at("left_family").get<std::string>()), e.at("left_index").get<int>()};
    BasisElement y{spec.family(e.at("right_family").get<std::string>()), e.at("right_index").get<int>()};
    phi.set(x, y, rat_from_json(e));
  }
  return phi;
}

inline Json lemma_verdicts_json(const AlgebraSpec& spec, const LemmaReport& rep) {
  Json arr = Json::array();
  for (const auto& v : rep.verdicts) {
    Json j{{"lemma", v.lemma}, {"claim", v.claim}, {"verdict", v.passed ? "pass" : "fail"}};
    if (v.offense) {
      j["offending"] = Json{{"left", report_detail::element_text(spec, v.offense->left)},
                            {"right", report_detail::element_text(spec, v.offense->right)},
                            {"value", rat_json(v.offense->value)},
                            {"expected", rat_json(v.offense->expected)}};
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

inline Json to_json(const AlgebraSpec& spec, const LemmaReport& rep) {
  return Json{{"passed", rep.passed()},
              {"c", rat_json(rep.c)},
              {"c1", rat_json(rep.c1)},
              {"lemma_verdicts", lemma_verdicts_json(spec, rep)}};
}

inline Json to_json(const AlgebraSpec& spec, const AnalyzedCohomology& a) {
  const auto& r = a.report;
  Json j{{"algebra", r.algebra},
         {"window", r.window},
         {"inner", r.inner},
         {"degree", r.degree},
         {"mode", std::string(to_string(r.mode))},
         {"dim_cocycle", r.dim_cocycle},
         {"dim_coboundary", r.dim_coboundary},
         {"dim_cocycle_inner", r.dim_cocycle_inner},
         {"dim_coboundary_inner", r.dim_coboundary_inner},
         {"dim_cohomology_inner", r.dim_cohomology_inner},
         {"skipped_triples", r.skipped_triples}};
  Json reps = Json::array();
  Json raw = Json::array();
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    raw.push_back(form_json(spec, r.representatives[i]));
    reps.push_back(form_json(spec, a.normalized() ? a.classes[i].canonical : r.representatives[i]));
  }
  j["representatives"] = std::move(reps);
  j["raw_representatives"] = std::move(raw);
  if (a.normalized()) {
    j["lemma_verdicts"] = lemma_verdicts_json(spec, a.classes.front().lemmas);
    j["c"] = rat_json(a.classes.front().lemmas.c);
    Json classes = Json::array();
    for (const auto& c : a.classes) {
      Json f = Json::array();
      for (const auto& [e, v] : c.trace.f.values())
        f.push_back(Json{{"family", spec.family_name(e.family)}, {"index", e.index},
                         {"num", report_detail::big_int_json(v.num())},
                         {"den", report_detail::big_int_json(v.den())}});
      classes.push_back(Json{{"c", rat_json(c.lemmas.c)},
                             {"c1", rat_json(c.trace.c1)},
                             {"g_scalar", rat_json(c.trace.g_scalar)},
                             {"f", std::move(f)},
                             {"lemmas_passed", c.lemmas.passed()}});
    }
    j["normalization"] = std::move(classes);
  } else {
    j["c"] = nullptr;
  }
  return j;
}

inline Json to_json(const std::vector<ScanRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back(Json{{"degree", r.degree},
                       {"window", r.window},
                       {"inner", r.inner},
                       {"dim_cocycle", r.dim_cocycle},
                       {"dim_coboundary", r.dim_coboundary},
                       {"dim_cocycle_inner", r.dim_cocycle_inner},
                       {"dim_coboundary_inner", r.dim_coboundary_inner},
                       {"dim_cohomology_inner", r.dim_cohomology_inner}});
  return arr;
}

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "degree,window,inner,dim_cocycle,dim_coboundary,dim_cocycle_inner,dim_coboundary_inner,"
         "dim_cohomology_inner\n";
  for (const auto& r : rows)
    out << r.degree << ',' << r.window << ',' << r.inner << ',' << r.dim_cocycle << ','
        << r.dim_coboundary << ',' << r.dim_cocycle_inner << ',' << r.dim_coboundary_inner << ','
        << r.dim_cohomology_inner << '\n';
  return out.str();
}

inline std::string scan_text(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "degree  window  inner  cocycles  coboundaries  cohomology(inner)\n";
  for (const auto& r : rows)
    out << r.degree << "  " << r.window << "  " << r.inner << "  " << r.dim_cocycle << "  "
        << r.dim_coboundary << "  " << r.dim_cohomology_inner << '\n';
  return out.str();
}

inline std::string form_text(const AlgebraSpec& spec, const BilinearForm& phi, const std::string& indent) {
  std::ostringstream out;
  if (phi.is_zero()) out << indent << "(zero)\n";
  for (const auto& [p, v] : phi.entries())
    out << indent << "(" << report_detail::element_text(spec, p.first) << ", "
        << report_detail::element_text(spec, p.second) << ") = " << v << '\n';
  return out.str();
}

inline std::string lemma_text(const AlgebraSpec& spec, const LemmaReport& rep) {
  std::ostringstream out;
  out << "c = " << rep.c << ", c1 = " << rep.c1 << '\n';
  for (const auto& v : rep.verdicts) {
    out << "  " << (v.passed ? "pass" : "FAIL") << "  " << v.lemma << "  " << v.claim;
    if (v.offense)
      out << "  [at (" << report_detail::element_text(spec, v.offense->left) << ", "
          << report_detail::element_text(spec, v.offense->right) << "): " << v.offense->value
          << ", expected " << v.offense->expected << "]";
    out << '\n';
  }
  return out.str();
}

inline std::string cohomology_text(const AlgebraSpec& spec, const AnalyzedCohomology& a) {
  const auto& r = a.report;
  std::ostringstream out;
  out << "algebra " << r.algebra << "  window " << r.window << "  inner " << r.inner << "  degree "
      << r.degree << "  mode " << to_string(r.mode) << '\n'
      << "dim cocycles              " << r.dim_cocycle << '\n'
      << "dim coboundaries          " << r.dim_coboundary << '\n'
      << "dim cocycles (inner)      " << r.dim_cocycle_inner << '\n'
      << "dim coboundaries (inner)  " << r.dim_coboundary_inner << '\n'
      << "dim cohomology (inner)    " << r.dim_cohomology_inner << '\n'
      << "skipped triples           " << r.skipped_triples << '\n';
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    out << "representative " << i + 1;
    if (a.normalized()) {
      const auto& c = a.classes[i];
      out << " (normalized, c = " << c.lemmas.c << ")\n" << form_text(spec, c.canonical, "  ");
      out << "lemma checks: " << lemma_text(spec, c.lemmas);
    } else {
      out << '\n' << form_text(spec, r.representatives[i], "  ");
    }
  }
  return out.str();
}

inline std::string cohomology_csv(const AlgebraSpec& spec, const std::vector<AnalyzedCohomology>& all) {
  std::ostringstream out;
  out << "degree,representative,left_family,left_index,right_family,right_index,num,den\n";
  for (const auto& a : all) {
    for (std::size_t i = 0; i < a.report.representatives.size(); ++i) {
      const auto& phi = a.normalized() ? a.classes[i].canonical : a.report.representatives[i];
      for (const auto& [p, v] : phi.entries())
        out << a.report.degree << ',' << i + 1 << ',' << spec.family_name(p.first.family) << ','
            << p.first.index << ',' << spec.family_name(p.second.family) << ',' << p.second.index << ','
            << v.num() << ',' << v.den() << '\n';
    }
  }
  return out.str();
}

/// Writes to `path`, or to `fallback` when no path is given.
inline void write_artifact(const std::optional<std::string>& path, const std::string& content,
                           std::ostream& fallback) {
  if (!path) {
    fallback << content;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + *path + "' for writing");
  f << content;
  if (!f) throw IoError("failed writing '" + *path + "'");
}

} // namespace svh

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "svh/algebra.hpp"
#include "svh/analysis.hpp"
#include "svh/dsl.hpp"
#include "svh/presets.hpp"
#include "svh/report.hpp"

namespace svh {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_bad_config = 2, exit_parse_error = 3 };

struct RunConfig {
  std::string command;              // check | cocycles | cohomology | scan | assert-paper
  std::string spec = "twisted-sv";  // preset name or rule file path
  std::optional<int> window;
  std::optional<int> inner;         // default floor(window / 2)
  std::vector<int> degrees{0};
  std::vector<int> windows;         // scan only; defaults to {window}
  Mode mode = Mode::leibniz;
  std::optional<std::string> out;
  Format format = Format::text;
};

/// Preset by name, otherwise a rule file.
inline AlgebraSpec resolve_spec(const std::string& source) {
  if (auto p = preset_by_name(source)) return *p;
  if (!std::filesystem::exists(source))
    throw ConfigError("'" + source + "' is neither a preset (twisted-sv, witt, schrodinger) nor a readable file");
  return load_algebra_file(source);
}

struct ReferenceStep {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The bundle that reproduces the main result on the twisted
/// Schroedinger-Virasoro preset: structure check at N = 12, degree-0
/// cohomology with normalization and lemma checks at N = 4, 6, 8, and
/// vanishing of degrees 1 <= |d| <= 4 at N = 8.
inline std::vector<ReferenceStep> run_reference_assertions() {
  const AlgebraSpec sv = twisted_sv_spec();
  std::vector<ReferenceStep> steps;

  {
    auto chk = check_leibniz(sv, Window(12));
    std::ostringstream d;
    d << chk.violations.size() << " violations, " << chk.checked << " triples checked, " << chk.skipped
      << " skipped";
    steps.push_back({"leibniz identity (N=12)", chk.ok(), d.str()});
  }

  for (int n : {4, 6, 8}) {
    const int inner = n / 2;
    auto a = analyze_cohomology(sv, Window(n), 0, Mode::leibniz, inner);
    bool dim_ok = a.report.dim_cohomology_inner == 1;
    std::ostringstream d;
    d << "dim " << a.report.dim_cohomology_inner;
    steps.push_back({"cohomology dimension (N=" + std::to_string(n) + ")", dim_ok, d.str()});
    if (!dim_ok || !a.normalized()) {
      steps.push_back({"normalization (N=" + std::to_string(n) + ")", false, "no single class to normalize"});
      continue;
    }
    const auto& cls = a.classes.front();
    bool matches = !cls.lemmas.c.is_zero() && cls.canonical == virasoro_form(sv, Window(inner));
    std::ostringstream dn;
    dn << "c = " << cls.lemmas.c << ", c1 = " << cls.trace.c1 << ", g scalar = " << cls.trace.g_scalar;
    steps.push_back({"virasoro representative (N=" + std::to_string(n) + ")", matches, dn.str()});
    std::ostringstream dl;
    for (const auto& v : cls.lemmas.verdicts) dl << v.lemma << ":" << (v.passed ? "pass" : "fail") << " ";
    steps.push_back({"lemma assertions (N=" + std::to_string(n) + ")", cls.lemmas.passed(), dl.str()});
  }

  bool all_zero = true;
  std::ostringstream d;
  for (int deg : {-4, -3, -2, -1, 1, 2, 3, 4}) {
    auto r = cohomology(sv, Window(8), deg, Mode::leibniz, 4);
    d << "d=" << deg << ":" << r.dim_cohomology_inner << " ";
    all_zero = all_zero && r.dim_cohomology_inner == 0;
  }
  steps.push_back({"nonzero degrees trivial (N=8)", all_zero, d.str()});
  return steps;
}

namespace cli_detail {

inline Json maybe_single(Json arr) { return arr.size() == 1 ? arr.front() : arr; }

inline int run_check(const RunConfig& cfg, const AlgebraSpec& spec, std::ostream& out) {
  auto chk = check_leibniz(spec, Window(*cfg.window));
  std::ostringstream s;
  if (cfg.format == Format::json) {
    Json details = Json::array();
    for (const auto& v : chk.violations) {
      auto el = [&](const BasisElement& e) { return spec.family_name(e.family) + "_" + std::to_string(e.index); };
      auto combo = [&](const LinearCombo& c) {
        Json arr = Json::array();
        for (const auto& [e, x] : c.terms()) arr.push_back(Json{{"element", el(e)}, {"coeff", rat_json(x)}});
        return arr;
      };
      details.push_back(Json{{"triple", {el(v.x), el(v.y), el(v.z)}}, {"lhs", combo(v.lhs)}, {"rhs", combo(v.rhs)}});
    }
    Json j{{"algebra", spec.name()},      {"window", *cfg.window},       {"violations", chk.violations.size()},
           {"checked", chk.checked},      {"skipped", chk.skipped},      {"details", std::move(details)}};
    s << j.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    s << "algebra,window,violations,checked,skipped\n"
      << spec.name() << ',' << *cfg.window << ',' << chk.violations.size() << ',' << chk.checked << ','
      << chk.skipped << '\n';
  } else {
    s << chk.violations.size() << " violations, " << chk.checked << " triples checked, " << chk.skipped
      << " skipped\n";
    for (const auto& v : chk.violations) {
      auto el = [&](const BasisElement& e) { return spec.family_name(e.family) + "_" + std::to_string(e.index); };
      auto combo = [&](const LinearCombo& c) {
        std::string t;
        for (const auto& [e, x] : c.terms()) t += (t.empty() ? "" : " + ") + x.str() + "*" + el(e);
        return t.empty() ? std::string("0") : t;
      };
      s << "  (" << el(v.x) << ", " << el(v.y) << ", " << el(v.z) << "): " << combo(v.lhs) << " vs "
        << combo(v.rhs) << '\n';
    }
  }
  write_artifact(cfg.out, s.str(), out);
  return chk.ok() ? exit_ok : exit_failed;
}

inline int run_cocycles(const RunConfig& cfg, const AlgebraSpec& spec, std::ostream& out) {
  const Window w(*cfg.window);
  std::ostringstream s;
  Json arr = Json::array();
  if (cfg.format == Format::csv)
    s << "degree,basis_vector,left_family,left_index,right_family,right_index,num,den\n";
  for (int d : cfg.degrees) {
    auto sys = build_cocycle_system(spec, w, d, cfg.mode);
    auto basis = nullspace(sys.matrix);
    if (cfg.format == Format::json) {
      Json forms = Json::array();
      for (const auto& v : basis) forms.push_back(form_json(spec, sys.unknowns.form_of(v, spec.name(), w, d)));
      arr.push_back(Json{{"algebra", spec.name()}, {"window", w.bound()}, {"degree", d},
                         {"mode", std::string(to_string(cfg.mode))}, {"unknowns", sys.unknowns.size()},
                         {"rows", sys.matrix.rows()}, {"skipped_triples", sys.skipped},
                         {"dim_cocycle", basis.size()}, {"basis", std::move(forms)}});
    } else if (cfg.format == Format::csv) {
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [p, v] : sys.unknowns.form_of(basis[i], spec.name(), w, d).entries())
          s << d << ',' << i + 1 << ',' << spec.family_name(p.first.family) << ',' << p.first.index << ','
            << spec.family_name(p.second.family) << ',' << p.second.index << ',' << v.num() << ',' << v.den()
            << '\n';
    } else {
      s << "degree " << d << ": dim cocycles " << basis.size() << " (" << sys.unknowns.size() << " unknowns, "
        << sys.matrix.rows() << " rows, " << sys.skipped << " skipped triples)\n";
      for (std::size_t i = 0; i < basis.size(); ++i) {
        s << " basis " << i + 1 << '\n';
        s << form_text(spec, sys.unknowns.form_of(basis[i], spec.name(), w, d), "   ");
      }
    }
  }
  if (cfg.format == Format::json) s << maybe_single(std::move(arr)).dump(2) << '\n';
  write_artifact(cfg.out, s.str(), out);
  return exit_ok;
}

inline int run_cohomology(const RunConfig& cfg, const AlgebraSpec& spec, std::ostream& out) {
  const Window w(*cfg.window);
  const int inner = cfg.inner.value_or(w.bound() / 2);
  std::vector<AnalyzedCohomology> all;
  for (int d : cfg.degrees) all.push_back(analyze_cohomology(spec, w, d, cfg.mode, inner));
  std::ostringstream s;
  if (cfg.format == Format::json) {
    Json arr = Json::array();
    for (const auto& a : all) arr.push_back(to_json(spec, a));
    s << maybe_single(std::move(arr)).dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    s << cohomology_csv(spec, all);
  } else {
    for (const auto& a : all) s << cohomology_text(spec, a);
  }
  write_artifact(cfg.out, s.str(), out);
  return exit_ok;
}

inline int run_scan(const RunConfig& cfg, const AlgebraSpec& spec, std::ostream& out) {
  std::vector<int> windows = cfg.windows.empty() ? std::vector<int>{*cfg.window} : cfg.windows;
  std::vector<ScanRow> rows;
  for (int d : cfg.degrees)
    for (auto& r : convergence_scan(spec, windows, d, cfg.mode)) rows.push_back(r);
  std::string text;
  if (cfg.format == Format::json)
    text = Json{{"algebra", spec.name()}, {"mode", std::string(to_string(cfg.mode))}, {"rows", to_json(rows)}}
               .dump(2) + "\n";
  else if (cfg.format == Format::csv)
    text = scan_csv(rows);
  else
    text = scan_text(rows);
  write_artifact(cfg.out, text, out);
  return exit_ok;
}

inline int run_reference_check(const RunConfig& cfg, std::ostream& out) {
  auto steps = run_reference_assertions();
  bool ok = true;
  for (const auto& st : steps) ok = ok && st.passed;
  std::ostringstream s;
  if (cfg.format == Format::json) {
    Json arr = Json::array();
    for (const auto& st : steps) arr.push_back(Json{{"step", st.name}, {"passed", st.passed}, {"detail", st.detail}});
    s << Json{{"algebra", "twisted-sv"}, {"passed", ok}, {"steps", std::move(arr)}}.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    s << "step,passed,detail\n";
    for (const auto& st : steps) s << '"' << st.name << "\"," << (st.passed ? "true" : "false") << ",\"" << st.detail << "\"\n";
  } else {
    for (const auto& st : steps) s << (st.passed ? "pass  " : "FAIL  ") << st.name << "  " << st.detail << '\n';
    s << (ok ? "all assertions hold\n" : "assertions FAILED\n");
  }
  write_artifact(cfg.out, s.str(), out);
  return ok ? exit_ok : exit_failed;
}

} // namespace cli_detail

/// Executes one subcommand. Exit codes: 0 ok, 1 violations or failed
/// assertions, 2 bad configuration or I/O, 3 rule-file parse error.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "assert-paper") return cli_detail::run_reference_check(cfg, out);

    if (cfg.command != "check" && cfg.command != "cocycles" && cfg.command != "cohomology" &&
        cfg.command != "scan")
      throw ConfigError("unknown command '" + cfg.command + "'");
    if (!cfg.window && !(cfg.command == "scan" && !cfg.windows.empty()))
      throw ConfigError("--window is required");
    if (cfg.window && *cfg.window < 0) throw ConfigError("--window must be non-negative");
    if (cfg.inner && (*cfg.inner < 0 || (cfg.window && *cfg.inner > *cfg.window)))
      throw ConfigError("--inner must lie in [0, window]");
    if (cfg.degrees.empty()) throw ConfigError("--degree list is empty");

    const AlgebraSpec spec = resolve_spec(cfg.spec);
    if (cfg.command == "check") return cli_detail::run_check(cfg, spec, out);
    if (cfg.command == "cocycles") return cli_detail::run_cocycles(cfg, spec, out);
    if (cfg.command == "cohomology") return cli_detail::run_cohomology(cfg, spec, out);
    return cli_detail::run_scan(cfg, spec, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_bad_config;
  }
}

} // namespace svh

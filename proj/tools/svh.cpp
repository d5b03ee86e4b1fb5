#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "svh/cli.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    out.push_back(v);
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leibniz/Lie 2-cocycles and second cohomology of Z-graded algebras"};
  app.require_subcommand(1);

  svh::RunConfig cfg;
  std::string degrees = "0";
  std::string windows;
  std::string mode = "leibniz";
  std::string format = "text";
  std::string out;
  int window = 0;
  int inner = 0;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec) sub->add_option("--spec", cfg.spec, "preset name (twisted-sv, witt, schrodinger) or rule file");
    sub->add_option("--window", window, "window bound N (indices in [-N, N])");
    sub->add_option("--inner", inner, "inner bound M (default floor(N/2))");
    sub->add_option("--degree", degrees, "degree or comma-separated degrees");
    sub->add_option("--mode", mode, "leibniz or lie");
    sub->add_option("--out", out, "output path (default stdout)");
    sub->add_option("--format", format, "text, json or csv");
  };
  add_common(app.add_subcommand("check", "verify the Leibniz identity on the window"), true);
  add_common(app.add_subcommand("cocycles", "cocycle space dimension and basis"), true);
  add_common(app.add_subcommand("cohomology", "cocycles modulo coboundaries on the inner window"), true);
  auto* scan = app.add_subcommand("scan", "cohomology across several windows");
  add_common(scan, true);
  scan->add_option("--windows", windows, "comma-separated ascending windows");
  add_common(app.add_subcommand("assert-paper", "reproduce the twisted Schroedinger-Virasoro result"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return svh::exit_bad_config;
  }

  auto* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (sub->count("--window")) cfg.window = window;
  if (sub->count("--inner")) cfg.inner = inner;
  if (sub->count("--out")) cfg.out = out;

  try {
    cfg.degrees = parse_int_list(degrees);
    if (!windows.empty()) cfg.windows = parse_int_list(windows);
  } catch (const std::exception&) {
    std::cerr << "error: integer list expected\n";
    return svh::exit_bad_config;
  }
  auto m = svh::parse_mode(mode);
  auto f = svh::parse_format(format);
  if (!m || !f) {
    std::cerr << "error: bad --mode or --format\n";
    return svh::exit_bad_config;
  }
  cfg.mode = *m;
  cfg.format = *f;
  return svh::run(cfg, std::cout, std::cerr);
}

// ladders: command-line front end over the C API.
//
//   ladders verify <config> [--out <report>] [--dump-dir <dir>] [--seed <n>] [--tol <x>]
//   ladders dump <config> --what <name> [--out <file>]
//   ladders spectrum <config>
//
// Exit status: 0 all checks passed, 1 some check failed, 2 config error,
// 3 numeric error, 4 I/O error, 5 anything else.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ladders/ladders.h"

namespace {

int exit_code(ladders_status s) {
  switch (s) {
  case LADDERS_OK:
    return 0;
  case LADDERS_CHECKS_FAILED:
    return 1;
  case LADDERS_ERR_CONFIG:
  case LADDERS_ERR_INVALID_ARGUMENT:
    return 2;
  case LADDERS_ERR_NUMERIC:
  case LADDERS_ERR_DOMAIN:
    return 3;
  case LADDERS_ERR_IO:
    return 4;
  default:
    return 5;
  }
}

int report_error(ladders_status s) {
  std::cerr << "ladders: " << ladders_last_error() << "\n";
  return exit_code(s);
}

struct ConfigDeleter {
  void operator()(ladders_config *c) const { ladders_config_free(c); }
};
struct ReportDeleter {
  void operator()(ladders_report *r) const { ladders_report_free(r); }
};
struct MatrixDeleter {
  void operator()(ladders_matrix *m) const { ladders_matrix_free(m); }
};
struct StringDeleter {
  void operator()(char *s) const { ladders_string_free(s); }
};
using ConfigPtr = std::unique_ptr<ladders_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<ladders_report, ReportDeleter>;
using MatrixPtr = std::unique_ptr<ladders_matrix, MatrixDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::optional<double> env_tolerance() {
  const char *raw = std::getenv("LADDERS_TOL");
  if (!raw || !*raw)
    return std::nullopt;
  const std::string text(raw);
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !(value > 0.0) ||
      !std::isfinite(value))
    throw CLI::ValidationError("LADDERS_TOL", "expected a positive number, got '" + text + "'");
  return value;
}

int cmd_verify(const std::string &config_path, const std::string &out,
               const std::string &dump_dir, std::optional<std::uint64_t> seed,
               std::optional<double> tol) {
  ladders_config *raw_cfg = nullptr;
  if (auto s = ladders_config_load(config_path.c_str(), &raw_cfg); s != LADDERS_OK)
    return report_error(s);
  ConfigPtr cfg(raw_cfg);

  ladders_suite_options opt{};
  if (!tol)
    tol = env_tolerance();
  if (tol) {
    opt.has_tolerance = 1;
    opt.tolerance = *tol;
  }
  if (seed) {
    opt.has_seed = 1;
    opt.seed = *seed;
  }
  opt.dump_dir = dump_dir.empty() ? nullptr : dump_dir.c_str();

  ladders_report *raw_report = nullptr;
  if (auto s = ladders_run_suite(cfg.get(), &opt, &raw_report); s != LADDERS_OK)
    return report_error(s);
  ReportPtr report(raw_report);

  if (out.empty()) {
    char *json = nullptr;
    if (auto s = ladders_report_to_json(report.get(), &json); s != LADDERS_OK)
      return report_error(s);
    StringPtr hold(json);
    std::cout << json;
  } else if (auto s = ladders_report_write(report.get(), out.c_str()); s != LADDERS_OK) {
    return report_error(s);
  }

  if (ladders_report_all_passed(report.get()))
    return 0;
  for (std::size_t j = 0; j < ladders_report_check_count(report.get()); ++j) {
    ladders_check_info info{};
    ladders_report_check(report.get(), j, &info);
    if (info.enforced && !info.passed)
      std::cerr << "FAILED " << info.name << ": residual " << info.residual << " > "
                << info.tolerance << "\n";
  }
  return 1;
}

int cmd_dump(const std::string &config_path, const std::string &what, const std::string &out) {
  ladders_config *raw_cfg = nullptr;
  if (auto s = ladders_config_load(config_path.c_str(), &raw_cfg); s != LADDERS_OK)
    return report_error(s);
  ConfigPtr cfg(raw_cfg);

  ladders_matrix *raw_m = nullptr;
  if (auto s = ladders_build_operator(cfg.get(), what.c_str(), &raw_m); s != LADDERS_OK)
    return report_error(s);
  MatrixPtr m(raw_m);

  if (!out.empty()) {
    if (auto s = ladders_matrix_dump(m.get(), out.c_str()); s != LADDERS_OK)
      return report_error(s);
    return 0;
  }
  char *text = nullptr;
  if (auto s = ladders_matrix_to_text(m.get(), &text); s != LADDERS_OK)
    return report_error(s);
  StringPtr hold(text);
  std::cout << text;
  return 0;
}

int cmd_spectrum(const std::string &config_path) {
  ladders_config *raw_cfg = nullptr;
  if (auto s = ladders_config_load(config_path.c_str(), &raw_cfg); s != LADDERS_OK)
    return report_error(s);
  ConfigPtr cfg(raw_cfg);

  std::size_t count = 0;
  if (auto s = ladders_spectrum(cfg.get(), nullptr, &count); s != LADDERS_OK)
    return report_error(s);
  std::vector<double> values(2 * count);
  if (auto s = ladders_spectrum(cfg.get(), values.data(), &count); s != LADDERS_OK)
    return report_error(s);
  for (std::size_t j = 0; j < count; ++j) {
    char *text = nullptr;
    if (auto s = ladders_complex_to_text(values[2 * j], values[2 * j + 1], &text); s != LADDERS_OK)
      return report_error(s);
    StringPtr hold(text);
    std::cout << text << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Build finite-dimensional ladder-operator families and verify their algebra."};
  app.set_version_flag("--version", std::string(ladders_version()));
  app.require_subcommand(1);

  std::string config_path;
  std::string out;
  std::string dump_dir;
  std::string what;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;

  auto *verify = app.add_subcommand("verify", "Run every verification that applies to a family");
  verify->add_option("config", config_path, "Config file")->required();
  verify->add_option("--out", out, "Write the JSON report here instead of stdout");
  verify->add_option("--dump-dir", dump_dir, "Dump every operator of the family into this directory");
  verify->add_option("--seed", seed, "Seed for randomized checks (overrides the config)");
  verify->add_option("--tol", tol, "Uniform tolerance for every check (overrides LADDERS_TOL)")
      ->check(CLI::PositiveNumber);

  auto *dump = app.add_subcommand("dump", "Print one operator of a family");
  dump->add_option("config", config_path, "Config file")->required();
  dump->add_option("--what", what, "a, adagger, N, Gamma, C, K, D, G or Q")->required();
  dump->add_option("--out", out, "Write the matrix here instead of stdout");

  auto *spectrum = app.add_subcommand("spectrum", "Print the eigenvalues of the lowering operator");
  spectrum->add_option("config", config_path, "Config file")->required();

  try {
    app.parse(argc, argv);
    if (verify->parsed())
      return cmd_verify(config_path, out, dump_dir, seed, tol);
    if (dump->parsed())
      return cmd_dump(config_path, what, out);
    return cmd_spectrum(config_path);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
}

#include "ladders/ladders.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "ladders/config.hpp"
#include "ladders/errors.hpp"
#include "ladders/matrix_io.hpp"
#include "ladders/suite.hpp"

struct ladders_config {
  ladders::FamilyConfig value;
};

struct ladders_report {
  ladders::VerificationReport value;
};

struct ladders_matrix {
  ladders::ComplexMatrix value;
};

namespace {

thread_local std::string last_error;

ladders_status fail(ladders_status status, const std::string &message) {
  last_error = message;
  return status;
}

// Maps the exception in flight to a status code.
ladders_status translate() {
  try {
    throw;
  } catch (const ladders::ConfigError &e) {
    return fail(LADDERS_ERR_CONFIG, e.what());
  } catch (const ladders::IoError &e) {
    return fail(LADDERS_ERR_IO, e.what());
  } catch (const ladders::SingularMatrixError &e) {
    return fail(LADDERS_ERR_NUMERIC, e.what());
  } catch (const ladders::DegenerateSpectrumError &e) {
    return fail(LADDERS_ERR_NUMERIC, e.what());
  } catch (const ladders::DegenerateNormalizerError &e) {
    return fail(LADDERS_ERR_NUMERIC, e.what());
  } catch (const ladders::ConvergenceError &e) {
    return fail(LADDERS_ERR_NUMERIC, e.what());
  } catch (const ladders::DomainError &e) {
    return fail(LADDERS_ERR_DOMAIN, e.what());
  } catch (const ladders::DimensionError &e) {
    return fail(LADDERS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc &) {
    return fail(LADDERS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(LADDERS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LADDERS_ERR_INTERNAL, "unknown error");
  }
}

char *copy_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define REQUIRE_ARG(cond)                                                                    \
  do {                                                                                       \
    if (!(cond))                                                                             \
      return fail(LADDERS_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond);         \
  } while (0)

} // namespace

extern "C" {

const char *ladders_version(void) { return ladders::kArtifactVersion; }

const char *ladders_last_error(void) { return last_error.c_str(); }

void ladders_string_free(char *s) { std::free(s); }

ladders_status ladders_config_parse(const char *text, ladders_config **out) {
  REQUIRE_ARG(text && out);
  try {
    *out = new ladders_config{ladders::parse_config(text)};
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

ladders_status ladders_config_load(const char *path, ladders_config **out) {
  REQUIRE_ARG(path && out);
  try {
    *out = new ladders_config{ladders::load_config(path)};
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

ladders_status ladders_config_descriptor(const ladders_config *cfg, char **out) {
  REQUIRE_ARG(cfg && out);
  try {
    *out = copy_string(cfg->value.descriptor());
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

void ladders_config_free(ladders_config *cfg) { delete cfg; }

ladders_status ladders_run_suite(const ladders_config *cfg, const ladders_suite_options *options,
                                 ladders_report **out) {
  REQUIRE_ARG(cfg && out);
  try {
    ladders::SuiteOptions opt;
    if (options) {
      if (options->has_tolerance) {
        if (!(options->tolerance > 0.0))
          return fail(LADDERS_ERR_INVALID_ARGUMENT, "tolerance must be positive");
        opt.tolerance = options->tolerance;
      }
      if (options->has_seed)
        opt.seed = options->seed;
      if (options->dump_dir)
        opt.dump_dir = options->dump_dir;
    }
    *out = new ladders_report{ladders::run_suite(cfg->value, opt)};
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

int ladders_report_all_passed(const ladders_report *report) {
  return report && report->value.all_passed() ? 1 : 0;
}

size_t ladders_report_check_count(const ladders_report *report) {
  return report ? report->value.checks().size() : 0;
}

ladders_status ladders_report_check(const ladders_report *report, size_t index,
                                    ladders_check_info *out) {
  REQUIRE_ARG(report && out);
  REQUIRE_ARG(index < report->value.checks().size());
  const auto &c = report->value.checks()[index];
  *out = {c.name.c_str(), c.residual, c.tolerance, c.passed ? 1 : 0, c.enforced ? 1 : 0};
  return LADDERS_OK;
}

size_t ladders_report_skipped_count(const ladders_report *report) {
  return report ? report->value.skipped().size() : 0;
}

ladders_status ladders_report_to_json(const ladders_report *report, char **out) {
  REQUIRE_ARG(report && out);
  try {
    *out = copy_string(ladders::report_to_json(report->value, ladders::utc_timestamp()));
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

ladders_status ladders_report_write(const ladders_report *report, const char *path) {
  REQUIRE_ARG(report && path);
  try {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw ladders::IoError(std::string("cannot open '") + path + "' for writing");
    out << ladders::report_to_json(report->value, ladders::utc_timestamp());
    if (!out)
      throw ladders::IoError(std::string("write to '") + path + "' failed");
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

void ladders_report_free(ladders_report *report) { delete report; }

ladders_status ladders_build_operator(const ladders_config *cfg, const char *what,
                                      ladders_matrix **out) {
  REQUIRE_ARG(cfg && what && out);
  try {
    *out = new ladders_matrix{ladders::build_operator(cfg->value, what)};
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

size_t ladders_matrix_dim(const ladders_matrix *m) {
  return m ? static_cast<size_t>(m->value.rows()) : 0;
}

ladders_status ladders_matrix_entry(const ladders_matrix *m, size_t row, size_t col, double *re,
                                    double *im) {
  REQUIRE_ARG(m && re && im);
  REQUIRE_ARG(row < ladders_matrix_dim(m) && col < ladders_matrix_dim(m));
  const auto z = m->value(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  *re = z.real();
  *im = z.imag();
  return LADDERS_OK;
}

ladders_status ladders_matrix_to_text(const ladders_matrix *m, char **out) {
  REQUIRE_ARG(m && out);
  try {
    *out = copy_string(ladders::format_matrix(m->value));
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

ladders_status ladders_matrix_dump(const ladders_matrix *m, const char *path) {
  REQUIRE_ARG(m && path);
  try {
    ladders::dump_matrix(m->value, path);
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

ladders_status ladders_matrix_load(const char *path, ladders_matrix **out) {
  REQUIRE_ARG(path && out);
  try {
    *out = new ladders_matrix{ladders::load_matrix(path)};
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

void ladders_matrix_free(ladders_matrix *m) { delete m; }

ladders_status ladders_spectrum(const ladders_config *cfg, double *values, size_t *count) {
  REQUIRE_ARG(cfg && count);
  try {
    const auto spectrum = ladders::sorted_spectrum(ladders::spectrum_operator(cfg->value));
    if (!values) {
      *count = spectrum.size();
      return LADDERS_OK;
    }
    if (*count < spectrum.size()) {
      const std::string msg = "buffer holds " + std::to_string(*count) + " values, need " +
                              std::to_string(spectrum.size());
      *count = spectrum.size();
      return fail(LADDERS_ERR_INVALID_ARGUMENT, msg);
    }
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
      values[2 * j] = spectrum[j].real();
      values[2 * j + 1] = spectrum[j].imag();
    }
    *count = spectrum.size();
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

ladders_status ladders_complex_to_text(double re, double im, char **out) {
  REQUIRE_ARG(out);
  try {
    *out = copy_string(ladders::format_complex({re, im}));
    return LADDERS_OK;
  } catch (...) {
    return translate();
  }
}

} // extern "C"

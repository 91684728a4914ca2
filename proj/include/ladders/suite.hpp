#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ladders/config.hpp"
#include "ladders/matrix_core.hpp"
#include "ladders/report.hpp"

namespace ladders {

inline constexpr std::uint64_t kDefaultSeed = 20250101;

struct SuiteOptions {
  // Replaces every default tolerance when set.
  std::optional<double> tolerance;
  // Overrides the config's seed.
  std::optional<std::uint64_t> seed;
  // When set, every operator of the family is written there as <name>.txt.
  std::optional<std::string> dump_dir;
};

// Builds the family and runs every verification that applies to it. Checks
// that cannot run (e.g. coherent states of a degenerate spectrum) are listed
// as skipped with a reason.
VerificationReport run_suite(const FamilyConfig &config, const SuiteOptions &options = {});

// Operator names accepted by build_operator for this kind, in dump order.
std::vector<std::string> available_operators(const FamilyConfig &config);

// One of a, adagger, N, Gamma, C, K, D, G, Q. Throws ConfigError (field
// "what") when the kind has no such operator.
ComplexMatrix build_operator(const FamilyConfig &config, std::string_view what);

// The lowering operator whose eigenvalues `ladders spectrum` prints.
ComplexMatrix spectrum_operator(const FamilyConfig &config);

// Eigenvalues sorted by argument in (-pi, pi], then by modulus. Components
// below 1e-14 * |z| are flushed to zero first.
std::vector<cdouble> sorted_spectrum(const ComplexMatrix &x);

// The random similarity used by `pseudo` configs without an explicit R:
// entries uniform in [-1, 1] on the regime's block pattern, redrawn until
// cond(R) <= 1e6.
ComplexMatrix random_block_similarity(int L, Regime regime, std::uint64_t seed);

// JSON document for a report; `generated_at` is the only non-deterministic
// field.
std::string report_to_json(const VerificationReport &report, const std::string &generated_at);

// UTC timestamp in ISO-8601 form.
std::string utc_timestamp();

} // namespace ladders

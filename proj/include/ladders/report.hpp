#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ladders {

inline constexpr const char *kArtifactVersion = LADDERS_VERSION_STRING;
inline constexpr const char *kReportSchemaVersion = "1.0";

// Default thresholds for the verification suites. `uniform` replaces every
// field with one value (used for --tol / LADDERS_TOL).
struct Tolerances {
  double identity = 1e-12;     // exact algebra of boson/quon/circulant families
  double deformed = 1e-10;     // identities after similarity deformation
  double chain = 1e-11;        // closed-chain algebra
  double dynamics = 1e-10;     // Heisenberg evolution, exponentials
  double biorthogonal = 1e-10; // eigen-equations and duality of coherent states
  double resolution = 1e-9;    // resolution of the identity, general matrices
  double pattern = 1e-14;      // forbidden entries of a block-structured R
  double log_number = 1e-10;   // logarithmic quon number operator

  static Tolerances uniform(double value) {
    return {value, value, value, value, value, value, value, value};
  }
};

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  // Informational checks are recorded but do not decide the overall verdict.
  bool enforced = true;
  std::string note;
};

struct SkippedCheck {
  std::string name;
  std::string reason;
};

class VerificationReport {
public:
  VerificationReport() = default;
  explicit VerificationReport(std::string family_descriptor)
      : family_descriptor_(std::move(family_descriptor)) {}

  // passed is residual <= tolerance; NaN residuals fail.
  const Check &add(std::string name, double residual, double tolerance,
                   std::string note = {});
  const Check &add_info(std::string name, double residual, double tolerance,
                        std::string note = {});
  // Boolean claims are stored with residual 0 (holds) or 1 (fails) against
  // tolerance 0.5.
  const Check &add_claim(std::string name, bool holds, std::string note = {});
  void skip(std::string name, std::string reason);

  // Appends every check and skip of `other`, prefixing names with `prefix`.
  void merge(const VerificationReport &other, const std::string &prefix = {});

  bool all_passed() const;
  const Check *find(const std::string &name) const;
  double max_residual() const;

  const std::string &artifact_version() const { return artifact_version_; }
  const std::string &family_descriptor() const { return family_descriptor_; }
  void set_family_descriptor(std::string d) { family_descriptor_ = std::move(d); }
  const std::vector<Check> &checks() const { return checks_; }
  const std::vector<SkippedCheck> &skipped() const { return skipped_; }
  const std::vector<std::string> &matrices_dumped() const { return dumped_; }
  void add_dumped(std::string path) { dumped_.push_back(std::move(path)); }
  std::optional<std::uint64_t> seed() const { return seed_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

private:
  std::string artifact_version_ = kArtifactVersion;
  std::string family_descriptor_;
  std::vector<Check> checks_;
  std::vector<SkippedCheck> skipped_;
  std::vector<std::string> dumped_;
  std::optional<std::uint64_t> seed_;
};

} // namespace ladders

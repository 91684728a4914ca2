#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ladders/matrix_core.hpp"
#include "ladders/quon.hpp"

namespace ladders {

enum class FamilyKind {
  TruncatedBoson,
  TruncatedQuon,
  BosonlikeQuon,
  CirculantQuon,
  Pseudo,
  Chain,
  ExampleFixture,
  GeneralMatrix,
};

const char *kind_name(FamilyKind kind);
std::optional<FamilyKind> kind_from_name(std::string_view name);

// Parsed and validated family description. Only the fields that the kind
// accepts are ever set.
struct FamilyConfig {
  FamilyKind kind = FamilyKind::TruncatedBoson;
  std::optional<int> L;
  std::optional<int> M;
  std::optional<double> q;
  std::optional<std::vector<double>> gammas;
  std::optional<Regime> base;      // pseudo: family being deformed
  std::optional<ComplexMatrix> R;  // pseudo: similarity (random if absent)
  std::optional<ComplexMatrix> A;  // general_matrix
  std::optional<std::uint64_t> seed;

  std::string descriptor() const;
};

// Flat `key = value` lines; `#` starts a comment; lists are bracketed and
// comma-separated, matrices use `;` between rows:
//
//   kind = pseudo
//   L = 2
//   q = 0.5
//   base = quon_rule
//   R = [1, 0.5, 0; 0, 2, 0; 0, 0, 1]
//
// Throws ConfigError naming the offending field and line.
FamilyConfig parse_config(std::string_view text);
// Throws IoError if the file cannot be read.
FamilyConfig load_config(const std::string &path);

} // namespace ladders

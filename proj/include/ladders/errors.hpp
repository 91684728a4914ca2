#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ladders {

// Root of the library's exception hierarchy. The C API maps each subclass to a
// status code (see ladders.h).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

// Parameter outside the mathematical domain of an operation (q range, gamma
// sign, log-form N outside 0<q<1, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class ConvergenceError : public Error {
public:
  using Error::Error;
};

class SingularMatrixError : public Error {
public:
  SingularMatrixError(const std::string &what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

private:
  double condition_;
};

class DegenerateSpectrumError : public Error {
public:
  DegenerateSpectrumError(const std::string &what, double min_gap)
      : Error(what), min_gap_(min_gap) {}
  double min_gap() const noexcept { return min_gap_; }

private:
  double min_gap_;
};

// A state normalizer (q-factorial) vanished; index() names the beta that is 0.
class DegenerateNormalizerError : public Error {
public:
  DegenerateNormalizerError(const std::string &what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

class ConfigError : public Error {
public:
  ConfigError(const std::string &field, std::size_t line,
              const std::string &message)
      : Error(format(field, line, message)), field_(field), line_(line) {}

  const std::string &field() const noexcept { return field_; }
  // 1-based; 0 when the problem is not tied to a single line.
  std::size_t line() const noexcept { return line_; }

private:
  static std::string format(const std::string &field, std::size_t line,
                            const std::string &message) {
    std::string out = "config error";
    if (line > 0)
      out += " (line " + std::to_string(line) + ")";
    if (!field.empty())
      out += " [" + field + "]";
    return out + ": " + message;
  }

  std::string field_;
  std::size_t line_;
};

class IoError : public Error {
public:
  using Error::Error;
};

} // namespace ladders

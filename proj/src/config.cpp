#include "ladders/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ladders/errors.hpp"
#include "ladders/matrix_io.hpp"

namespace ladders {

namespace {

struct KindSpec {
  FamilyKind kind;
  const char *name;
  std::set<std::string> required;
  std::set<std::string> optional;
};

const std::vector<KindSpec> &kind_table() {
  static const std::vector<KindSpec> table = {
      {FamilyKind::TruncatedBoson, "truncated_boson", {"L"}, {"seed"}},
      {FamilyKind::TruncatedQuon, "truncated_quon", {"L", "q"}, {"seed"}},
      {FamilyKind::BosonlikeQuon, "bosonlike_quon", {"L", "q"}, {"seed"}},
      {FamilyKind::CirculantQuon, "circulant_quon", {"L", "q"}, {"seed"}},
      {FamilyKind::Pseudo, "pseudo", {"L", "q", "base"}, {"R", "seed"}},
      {FamilyKind::Chain, "chain", {"gammas"}, {"M", "seed"}},
      {FamilyKind::ExampleFixture, "example_fixture", {}, {"q", "seed"}},
      {FamilyKind::GeneralMatrix, "general_matrix", {"A"}, {"seed"}},
  };
  return table;
}

const KindSpec &spec_for(FamilyKind kind) {
  for (const auto &k : kind_table())
    if (k.kind == kind)
      return k;
  throw std::logic_error("unknown family kind");
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

struct Entry {
  std::string value;
  std::size_t line;
};

double to_double(const std::string &field, const Entry &e, std::string_view text) {
  double value = 0.0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (first != last && *first == '+')
    ++first;
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || first == last || !std::isfinite(value))
    throw ConfigError(field, e.line, "expected a finite real number, got '" + std::string(text) + "'");
  return value;
}

long long to_integer(const std::string &field, const Entry &e) {
  long long value = 0;
  const char *first = e.value.data();
  const char *last = e.value.data() + e.value.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || first == last)
    throw ConfigError(field, e.line, "expected an integer, got '" + e.value + "'");
  return value;
}

std::string strip_brackets(const std::string &field, const Entry &e) {
  if (e.value.size() < 2 || e.value.front() != '[' || e.value.back() != ']')
    throw ConfigError(field, e.line, "expected a bracketed list, got '" + e.value + "'");
  return e.value.substr(1, e.value.size() - 2);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    out.push_back(trim(item));
  if (!s.empty() && s.back() == sep)
    out.emplace_back();
  return out;
}

std::vector<double> to_real_list(const std::string &field, const Entry &e) {
  const std::string body = trim(strip_brackets(field, e));
  if (body.empty())
    throw ConfigError(field, e.line, "list is empty");
  std::vector<double> out;
  for (const auto &item : split(body, ','))
    out.push_back(to_double(field, e, item));
  return out;
}

ComplexMatrix to_matrix(const std::string &field, const Entry &e) {
  const std::string body = trim(strip_brackets(field, e));
  if (body.empty())
    throw ConfigError(field, e.line, "matrix literal is empty");
  std::vector<std::vector<cdouble>> rows;
  for (const auto &row_text : split(body, ';')) {
    std::vector<cdouble> row;
    for (const auto &item : split(row_text, ',')) {
      if (item.empty())
        throw ConfigError(field, e.line, "empty matrix entry");
      if (item.back() == 'i') {
        try {
          row.push_back(parse_complex(item));
        } catch (const DomainError &) {
          throw ConfigError(field, e.line, "malformed complex entry '" + item + "'");
        }
      } else {
        row.emplace_back(to_double(field, e, item), 0.0);
      }
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (rows[j].size() != n)
      throw ConfigError(field, e.line,
                        "matrix must be square: row " + std::to_string(j) + " has " +
                            std::to_string(rows[j].size()) + " entries, expected " +
                            std::to_string(n));
    for (std::size_t k = 0; k < n; ++k)
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = rows[j][k];
  }
  return m;
}

// Shortest text that reads back to the same double.
std::string shortest(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string join(const std::vector<double> &xs) {
  std::string out = "[";
  for (std::size_t j = 0; j < xs.size(); ++j)
    out += (j ? "," : "") + shortest(xs[j]);
  return out + "]";
}

} // namespace

const char *kind_name(FamilyKind kind) { return spec_for(kind).name; }

std::optional<FamilyKind> kind_from_name(std::string_view name) {
  for (const auto &k : kind_table())
    if (name == k.name)
      return k.kind;
  return std::nullopt;
}

std::string FamilyConfig::descriptor() const {
  std::ostringstream out;
  out << kind_name(kind);
  if (L)
    out << " L=" << *L;
  if (M)
    out << " M=" << *M;
  if (q)
    out << " q=" << shortest(*q);
  if (base)
    out << " base=" << regime_name(*base);
  if (gammas)
    out << " gammas=" << join(*gammas);
  if (R)
    out << " R=" << R->rows() << "x" << R->cols();
  if (A)
    out << " A=" << A->rows() << "x" << A->cols();
  if (seed)
    out << " seed=" << *seed;
  return out.str();
}

FamilyConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream lines{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(raw.substr(0, hash));
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("", line_no, "expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("", line_no, "missing key");
    if (value.empty())
      throw ConfigError(key, line_no, "missing value");
    if (entries.count(key))
      throw ConfigError(key, line_no,
                        "duplicate key (first set on line " + std::to_string(entries[key].line) + ")");
    entries.emplace(key, Entry{value, line_no});
  }

  const auto kind_it = entries.find("kind");
  if (kind_it == entries.end())
    throw ConfigError("kind", 0, "missing required field");
  const auto kind = kind_from_name(kind_it->second.value);
  if (!kind)
    throw ConfigError("kind", kind_it->second.line, "unknown kind '" + kind_it->second.value + "'");
  const KindSpec &spec = spec_for(*kind);

  for (const auto &[key, e] : entries) {
    if (key == "kind")
      continue;
    if (!spec.required.count(key) && !spec.optional.count(key))
      throw ConfigError(key, e.line,
                        std::string("parameter not accepted by kind '") + spec.name + "'");
  }
  for (const auto &key : spec.required)
    if (!entries.count(key))
      throw ConfigError(key, 0, std::string("missing required field for kind '") + spec.name + "'");

  FamilyConfig cfg;
  cfg.kind = *kind;
  for (const auto &[key, e] : entries) {
    if (key == "kind")
      continue;
    if (key == "L") {
      const auto L = to_integer(key, e);
      if (L < 1 || L > 255)
        throw ConfigError(key, e.line, "L must lie in [1, 255]");
      cfg.L = static_cast<int>(L);
    } else if (key == "M") {
      const auto M = to_integer(key, e);
      if (M < 2 || M > 256)
        throw ConfigError(key, e.line, "M must lie in [2, 256]");
      cfg.M = static_cast<int>(M);
    } else if (key == "q") {
      const double q = to_double(key, e, e.value);
      if (q < -1.0 || q > 1.0)
        throw ConfigError(key, e.line, "q must lie in [-1, 1]");
      cfg.q = q;
    } else if (key == "gammas") {
      auto gammas = to_real_list(key, e);
      for (std::size_t j = 0; j < gammas.size(); ++j)
        if (!(gammas[j] > 0.0))
          throw ConfigError(key, e.line, "gamma_" + std::to_string(j) + " must be positive");
      if (gammas.size() < 2)
        throw ConfigError(key, e.line, "a closed chain needs at least 2 gammas");
      cfg.gammas = std::move(gammas);
    } else if (key == "base") {
      if (e.value == "quon_rule" || e.value == "truncated_quon")
        cfg.base = Regime::QuonRule;
      else if (e.value == "bosonlike_rule" || e.value == "bosonlike_quon")
        cfg.base = Regime::BosonLikeRule;
      else
        throw ConfigError(key, e.line, "base must be quon_rule or bosonlike_rule");
    } else if (key == "R") {
      cfg.R = to_matrix(key, e);
    } else if (key == "A") {
      cfg.A = to_matrix(key, e);
    } else if (key == "seed") {
      const auto s = to_integer(key, e);
      if (s < 0)
        throw ConfigError(key, e.line, "seed must be non-negative");
      cfg.seed = static_cast<std::uint64_t>(s);
    }
  }

  if (cfg.kind == FamilyKind::CirculantQuon && std::abs(1.0 - *cfg.q) < 1e-12)
    throw ConfigError("q", entries.at("q").line,
                      "singular normalization: circulant quon needs q < 1");
  if (cfg.M && cfg.gammas && static_cast<std::size_t>(*cfg.M) != cfg.gammas->size())
    throw ConfigError("M", entries.at("M").line,
                      "M = " + std::to_string(*cfg.M) + " but " +
                          std::to_string(cfg.gammas->size()) + " gammas were given");
  if (cfg.R && cfg.L && cfg.R->rows() != *cfg.L + 1)
    throw ConfigError("R", entries.at("R").line,
                      "R must be " + std::to_string(*cfg.L + 1) + "x" + std::to_string(*cfg.L + 1));
  return cfg;
}

FamilyConfig load_config(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

} // namespace ladders

#include "ladders/matrix_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "ladders/errors.hpp"

namespace ladders {

namespace {

constexpr int kDigits = 17;

void append_double(std::string &out, double x) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general,
                           kDigits);
  out.append(buf.data(), res.ptr);
}

double parse_double(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  // from_chars rejects a leading '+'.
  if (first != last && *first == '+')
    ++first;
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || first == last)
    throw DomainError("malformed complex number '" + std::string(whole) + "'");
  return value;
}

} // namespace

std::string format_complex(cdouble z) {
  std::string out;
  append_double(out, z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  append_double(out, std::abs(z.imag()));
  out += 'i';
  return out;
}

cdouble parse_complex(std::string_view text) {
  if (text.size() < 2 || text.back() != 'i')
    throw DomainError("malformed complex number '" + std::string(text) + "'");
  const std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary sign is the last +/- that is not a leading sign and does
  // not belong to an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos)
    throw DomainError("malformed complex number '" + std::string(text) + "'");
  const double re = parse_double(body.substr(0, split), text);
  const double im_mag = parse_double(body.substr(split + 1), text);
  if (std::signbit(im_mag))
    throw DomainError("malformed complex number '" + std::string(text) + "'");
  return {re, body[split] == '-' ? -im_mag : im_mag};
}

std::string format_matrix(const ComplexMatrix &x) {
  std::string out;
  for (Eigen::Index j = 0; j < x.rows(); ++j) {
    for (Eigen::Index k = 0; k < x.cols(); ++k) {
      if (k)
        out += ' ';
      out += format_complex(x(j, k));
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<cdouble>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::vector<cdouble> row;
    std::string token;
    while (tokens >> token)
      row.push_back(parse_complex(token));
    if (!row.empty())
      rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0)
    throw DimensionError("parse_matrix: no rows");
  ComplexMatrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (rows[j].size() != n)
      throw DimensionError("parse_matrix: row " + std::to_string(j) + " has " +
                           std::to_string(rows[j].size()) + " entries, expected " +
                           std::to_string(n));
    for (std::size_t k = 0; k < n; ++k)
      x(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = rows[j][k];
  }
  return x;
}

void dump_matrix(const ComplexMatrix &x, const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot open '" + path + "' for writing");
  out << format_matrix(x);
  out.flush();
  if (!out)
    throw IoError("failed writing '" + path + "'");
}

ComplexMatrix load_matrix(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

} // namespace ladders

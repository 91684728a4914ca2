#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>

#include "ladders/chain.hpp"
#include "ladders/errors.hpp"
#include "ladders/matrix_io.hpp"

using namespace ladders;

namespace {

bool same_bits(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool same_bits(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  for (Eigen::Index j = 0; j < a.rows(); ++j)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (!same_bits(a(j, k).real(), b(j, k).real()) || !same_bits(a(j, k).imag(), b(j, k).imag()))
        return false;
  return true;
}

std::string temp_path(const std::string &name) {
  return (std::filesystem::temp_directory_path() / ("ladders_io_" + name)).string();
}

// Doubles drawn from raw bit patterns, skipping NaN.
double random_double(std::mt19937_64 &rng) {
  for (;;) {
    const double x = std::bit_cast<double>(rng());
    if (!std::isnan(x))
      return x;
  }
}

} // namespace

TEST(ComplexText, Format) {
  EXPECT_EQ(format_complex({1.0, 0.0}), "1+0i");
  EXPECT_EQ(format_complex({0.0, 0.0}), "0+0i");
  EXPECT_EQ(format_complex({-2.5, -0.25}), "-2.5-0.25i");
  EXPECT_EQ(format_complex({0.1, 1e-20}), "0.10000000000000001+9.9999999999999995e-21i");
  EXPECT_EQ(format_complex({0.0, -0.0}), "0-0i");
}

TEST(ComplexText, Parse) {
  EXPECT_EQ(parse_complex("1+0i"), cdouble(1.0, 0.0));
  EXPECT_EQ(parse_complex("-2.5-0.25i"), cdouble(-2.5, -0.25));
  EXPECT_EQ(parse_complex("+3+4i"), cdouble(3.0, 4.0));
  EXPECT_EQ(parse_complex("1e-05+2E+10i"), cdouble(1e-5, 2e10));
  EXPECT_EQ(parse_complex("-1e+300-1e-300i"), cdouble(-1e300, -1e-300));
}

TEST(ComplexText, ParseRejectsMalformed) {
  for (const char *bad : {"", "i", "1", "1+i", "1+2", "1 + 2i", "abc+1i", "1+2j", "1+-2i", "+i"})
    EXPECT_THROW(parse_complex(bad), DomainError) << bad;
}

TEST(ComplexText, RoundTripIsBitExact) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20000; ++trial) {
    const cdouble z{random_double(rng), random_double(rng)};
    const cdouble back = parse_complex(format_complex(z));
    ASSERT_TRUE(same_bits(z.real(), back.real()) && same_bits(z.imag(), back.imag()))
        << format_complex(z);
  }
  const double specials[] = {0.0,
                             -0.0,
                             std::numeric_limits<double>::min(),
                             std::numeric_limits<double>::denorm_min(),
                             -std::numeric_limits<double>::max(),
                             std::numeric_limits<double>::infinity(),
                             -std::numeric_limits<double>::infinity(),
                             0.1,
                             1.0 / 3.0};
  for (double re : specials)
    for (double im : specials) {
      const cdouble back = parse_complex(format_complex({re, im}));
      EXPECT_TRUE(same_bits(re, back.real()) && same_bits(im, back.imag())) << format_complex({re, im});
    }
}

TEST(MatrixText, IdentityLayout) {
  EXPECT_EQ(format_matrix(ComplexMatrix::Identity(2, 2)), "1+0i 0+0i\n0+0i 1+0i\n");
}

TEST(MatrixText, ParseErrors) {
  EXPECT_THROW(parse_matrix(""), DimensionError);
  EXPECT_THROW(parse_matrix("1+0i 0+0i\n0+0i\n"), DimensionError);
  EXPECT_THROW(parse_matrix("1+0i 0+0i\n"), DimensionError);
  EXPECT_THROW(parse_matrix("1+0i x\n0+0i 1+0i\n"), DomainError);
}

TEST(MatrixFile, RandomRoundTrip) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  const std::string path = temp_path("random.txt");
  for (int n = 1; n <= 9; ++n) {
    ComplexMatrix x(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        x(j, k) = n % 2 ? cdouble(u(rng), u(rng)) : cdouble(random_double(rng), random_double(rng));
    dump_matrix(x, path);
    EXPECT_TRUE(same_bits(load_matrix(path), x)) << "n=" << n;
  }
  std::filesystem::remove(path);
}

TEST(MatrixFile, ChainOperatorFile) {
  const std::string path = temp_path("chain.txt");
  dump_matrix(make_chain({1, 2, 3, 4}).a, path);
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, "0+0i 2+0i 0+0i 0+0i\n"
                     "0+0i 0+0i 3+0i 0+0i\n"
                     "0+0i 0+0i 0+0i 4+0i\n"
                     "1+0i 0+0i 0+0i 0+0i\n");
  std::filesystem::remove(path);
}

TEST(MatrixFile, IoErrors) {
  EXPECT_THROW(dump_matrix(ComplexMatrix::Identity(2, 2), "/nonexistent-dir/x.txt"), IoError);
  EXPECT_THROW(load_matrix("/nonexistent-dir/x.txt"), IoError);
}

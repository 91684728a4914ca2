#include "ladders/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "ladders/errors.hpp"

namespace ladders {

namespace {

void require_square(const ComplexMatrix &x, const char *what) {
  if (x.rows() != x.cols() || x.rows() == 0)
    throw DimensionError(std::string(what) + ": operand must be a non-empty square matrix, got " +
                         std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
}

void require_same_dim(const ComplexMatrix &x, const ComplexMatrix &y, const char *what) {
  require_square(x, what);
  require_square(y, what);
  if (x.rows() != y.rows())
    throw DimensionError(std::string(what) + ": incompatible operands (" +
                         std::to_string(x.rows()) + " vs " + std::to_string(y.rows()) + ")");
}

bool all_finite(const ComplexMatrix &x) {
  for (Eigen::Index j = 0; j < x.rows(); ++j)
    for (Eigen::Index k = 0; k < x.cols(); ++k)
      if (!std::isfinite(x(j, k).real()) || !std::isfinite(x(j, k).imag()))
        return false;
  return true;
}

} // namespace

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

ComplexVector basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim)
    throw DimensionError("basis_vector: index " + std::to_string(index) +
                         " out of range for dimension " + std::to_string(dim));
  ComplexVector e = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  e(static_cast<Eigen::Index>(index)) = 1.0;
  return e;
}

ComplexMatrix adjoint(const ComplexMatrix &x) { return x.adjoint(); }

ComplexMatrix qmutator(const ComplexMatrix &x, const ComplexMatrix &y, double q) {
  require_same_dim(x, y, "qmutator");
  ComplexMatrix out = x * y;
  out.noalias() -= q * (y * x);
  return out;
}

ComplexMatrix commutator(const ComplexMatrix &x, const ComplexMatrix &y) {
  require_same_dim(x, y, "commutator");
  ComplexMatrix out = x * y;
  out.noalias() -= y * x;
  return out;
}

ComplexMatrix rank_one(const ComplexVector &u, const ComplexVector &v) {
  if (u.size() != v.size() || u.size() == 0)
    throw DimensionError("rank_one: vectors of dimension " + std::to_string(u.size()) + " and " +
                         std::to_string(v.size()));
  return u * v.adjoint();
}

ComplexMatrix matrix_power(const ComplexMatrix &x, unsigned power) {
  require_square(x, "matrix_power");
  ComplexMatrix result = ComplexMatrix::Identity(x.rows(), x.cols());
  ComplexMatrix base = x;
  while (power > 0) {
    if (power & 1u)
      result = result * base;
    power >>= 1u;
    if (power > 0)
      base = base * base;
  }
  return result;
}

double off_diagonal_norm(const ComplexMatrix &x) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < x.rows(); ++j)
    for (Eigen::Index k = 0; k < x.cols(); ++k)
      if (j != k)
        sum += std::norm(x(j, k));
  return std::sqrt(sum);
}

bool is_diagonal(const ComplexMatrix &x) {
  return x.rows() == x.cols() && off_diagonal_norm(x) == 0.0;
}

double frobenius_norm(const ComplexMatrix &x) { return x.norm(); }

double matrix_residual(const ComplexMatrix &lhs, const ComplexMatrix &rhs, double scale) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw DimensionError("residual: shape mismatch");
  return (lhs - rhs).norm() / scale;
}

double vector_residual(const ComplexVector &lhs, const ComplexVector &rhs, double scale) {
  if (lhs.size() != rhs.size())
    throw DimensionError("residual: length mismatch");
  return (lhs - rhs).norm() / scale;
}

ComplexVector normalize_phase(const ComplexVector &v, double cutoff) {
  const double norm = v.norm();
  if (norm == 0.0)
    return v;
  ComplexVector out = v / norm;
  const double largest = out.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    if (std::abs(out(k)) > cutoff * largest) {
      out *= std::conj(out(k)) / std::abs(out(k));
      out(k) = std::abs(out(k));
      break;
    }
  }
  return out;
}

EigenSystem eigensystem(const ComplexMatrix &a, const SpectralOptions &options) {
  require_square(a, "eigensystem");
  if (!all_finite(a))
    throw DomainError("eigensystem: matrix has non-finite entries");

  const Eigen::Index n = a.rows();
  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  solver.setMaxIterations(options.max_iterations_per_dim * n);
  solver.compute(a, true);
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("eigensystem: shifted QR did not converge within " +
                           std::to_string(options.max_iterations_per_dim * n) + " iterations");

  EigenSystem out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  out.vectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    out.vectors.col(j) = normalize_phase(solver.eigenvectors().col(j), options.phase_cutoff);

  double largest = 0.0;
  for (const auto &z : out.values)
    largest = std::max(largest, std::abs(z));
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < out.values.size(); ++j)
    for (std::size_t k = j + 1; k < out.values.size(); ++k)
      gap = std::min(gap, std::abs(out.values[j] - out.values[k]));
  out.min_gap = gap;
  // A 1x1 matrix has a trivially distinct spectrum.
  out.distinct = n == 1 || gap > options.separation * largest;
  return out;
}

ComplexMatrix matrix_exponential(const ComplexMatrix &x) {
  require_square(x, "matrix_exponential");
  if (!all_finite(x))
    throw DomainError("matrix_exponential: matrix has non-finite entries");
  if (is_diagonal(x)) {
    ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
    for (Eigen::Index j = 0; j < x.rows(); ++j)
      out(j, j) = std::exp(x(j, j));
    return out;
  }
  return x.exp();
}

std::vector<double> singular_values(const ComplexMatrix &x) {
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  const auto &s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

double smallest_singular_value(const ComplexMatrix &x) {
  const auto s = singular_values(x);
  return s.empty() ? 0.0 : s.back();
}

double condition_number(const ComplexMatrix &x) {
  require_square(x, "condition_number");
  const auto s = singular_values(x);
  if (s.back() == 0.0)
    return std::numeric_limits<double>::infinity();
  return s.front() / s.back();
}

ComplexMatrix inverse(const ComplexMatrix &x, double max_condition) {
  require_square(x, "inverse");
  if (!all_finite(x))
    throw DomainError("inverse: matrix has non-finite entries");
  const double cond = condition_number(x);
  if (!(cond <= max_condition))
    throw SingularMatrixError("inverse: matrix is singular or near-singular (condition " +
                                  std::to_string(cond) + ")",
                              cond);
  Eigen::FullPivLU<ComplexMatrix> lu(x);
  return lu.solve(ComplexMatrix::Identity(x.rows(), x.cols()));
}

cdouble trace(const ComplexMatrix &x) {
  require_square(x, "trace");
  return x.trace();
}

} // namespace ladders

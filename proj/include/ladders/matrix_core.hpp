#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace ladders {

using cdouble = std::complex<double>;

// Every operator in the library is a dense square complex matrix; states are
// dense complex column vectors.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Default numeric thresholds of the spectral primitives. All of them can be
// overridden per call.
struct SpectralOptions {
  // Max shifted-QR sweeps is max_iterations_per_dim * dim.
  int max_iterations_per_dim = 500;
  // Eigenvalues are distinct iff min pairwise gap > separation * max|z_j|.
  double separation = 1e-8;
  // Components below this fraction of the largest one count as zero when
  // fixing the phase of an eigenvector.
  double phase_cutoff = 1e-12;
};

struct EigenSystem {
  std::vector<cdouble> values;
  // Column j is the right eigenvector for values[j], unit norm, first nonzero
  // component real positive.
  ComplexMatrix vectors;
  bool distinct = false;
  double min_gap = 0.0;

  std::size_t size() const noexcept { return values.size(); }
};

ComplexMatrix identity(std::size_t dim);
ComplexVector basis_vector(std::size_t dim, std::size_t index);

ComplexMatrix adjoint(const ComplexMatrix &x);

// X*Y - q*Y*X. Throws DimensionError on mismatched or non-square operands.
ComplexMatrix qmutator(const ComplexMatrix &x, const ComplexMatrix &y, double q);
ComplexMatrix commutator(const ComplexMatrix &x, const ComplexMatrix &y);

// |u><v|, entry (j,k) = u_j * conj(v_k).
ComplexMatrix rank_one(const ComplexVector &u, const ComplexVector &v);

// Integer power by repeated squaring; power 0 gives the identity.
ComplexMatrix matrix_power(const ComplexMatrix &x, unsigned power);

bool is_diagonal(const ComplexMatrix &x);
double off_diagonal_norm(const ComplexMatrix &x);

double frobenius_norm(const ComplexMatrix &x);

double matrix_residual(const ComplexMatrix &lhs, const ComplexMatrix &rhs, double scale);
double vector_residual(const ComplexVector &lhs, const ComplexVector &rhs, double scale);

// ||lhs - rhs||_F / scale. Shapes must agree. Accepts unevaluated expressions.
template <class X, class Y>
double residual(const Eigen::MatrixBase<X> &lhs, const Eigen::MatrixBase<Y> &rhs,
                double scale = 1.0) {
  if constexpr (X::ColsAtCompileTime == 1 && Y::ColsAtCompileTime == 1)
    return vector_residual(lhs, rhs, scale);
  else
    return matrix_residual(lhs, rhs, scale);
}

EigenSystem eigensystem(const ComplexMatrix &a,
                        const SpectralOptions &options = {});

// Rescales v to unit norm and rotates its first nonzero component onto the
// positive real axis.
ComplexVector normalize_phase(const ComplexVector &v, double cutoff = 1e-12);

// exp(X). Diagonal input is exponentiated entrywise; anything else goes
// through scaling-and-squaring. Non-finite entries throw DomainError.
ComplexMatrix matrix_exponential(const ComplexMatrix &x);

std::vector<double> singular_values(const ComplexMatrix &x);
double smallest_singular_value(const ComplexMatrix &x);
// 2-norm condition number sigma_max / sigma_min (infinity when singular).
double condition_number(const ComplexMatrix &x);

// Factorization-based inverse. Throws SingularMatrixError when the condition
// number exceeds max_condition.
ComplexMatrix inverse(const ComplexMatrix &x, double max_condition = 1e12);

cdouble trace(const ComplexMatrix &x);

} // namespace ladders

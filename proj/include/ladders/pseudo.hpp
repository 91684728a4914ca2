#pragma once

#include <array>
#include <vector>

#include "ladders/matrix_core.hpp"
#include "ladders/quon.hpp"
#include "ladders/report.hpp"

namespace ladders {

// Pseudo-quon pair obtained from a truncated quon family by a non-unitary
// similarity: D = R C R^{-1}, G = R C^dagger R^{-1}, Q = R K R^{-1}.
struct PseudoTriple {
  QuonFamily base;
  ComplexMatrix R;
  ComplexMatrix R_inv;
  ComplexMatrix D;
  ComplexMatrix G;
  ComplexMatrix Q;
  // ||R R^{-1} - 1||_F of the computed inverse.
  double inversion_residual = 0.0;

  // N~ = G D.
  ComplexMatrix N_tilde() const { return G * D; }
};

// Throws DimensionError when R does not match the family and
// SingularMatrixError when cond(R) > max_condition.
PseudoTriple deform(const QuonFamily &family, const ComplexMatrix &R,
                    double max_condition = 1e12);

// Sparsity pattern an R must have for the deformed pair to inherit the
// regime's number-operator rule on both sides:
//   QuonRule      - last row and column vanish except the corner;
//   BosonLikeRule - diagonal.
// Forbidden entries must be <= pattern_tolerance in modulus and R must be
// invertible.
bool r_block_validator(const ComplexMatrix &R, Regime regime,
                       double pattern_tolerance = 1e-14);

// Deformed q-mutator, the regime's QD/GQ side conditions and number-operator
// commutators (for D and, on block-form R, for G^dagger), Q hermiticity when
// [K, R^dagger R] = 0, and Q^2 = Q iff K^2 = K. Residuals are relative to the
// operand scale max(1, ||X|| ||Y||).
VerificationReport validate_regime_conditions(const PseudoTriple &triple,
                                              const Tolerances &tol = {});

// The four-dimensional biorthogonal example: phi_n = R e_n, psi_n =
// (R^{-1})^dagger e_n with R unit upper bidiagonal, E and F built from rank-one
// terms, and the matching C, K, Q.
struct ExampleFixture {
  double q = 0.5;
  std::array<double, 3> betas{};
  std::vector<ComplexVector> phi;
  std::vector<ComplexVector> psi;
  ComplexMatrix R;
  ComplexMatrix E;
  ComplexMatrix F;
  ComplexMatrix Q;
  ComplexMatrix K;
  ComplexMatrix C;
};

ExampleFixture example_fixture(double q = 0.5);

// Biorthogonality table, phi = R e / psi = (R^{-1})^dagger e, resolution of the
// identity, [E,F]_q = 1 - 4Q, K = (1 - C C^dagger + q C^dagger C)/4, and
// E, F, Q as similarity transforms of C, C^dagger, K.
VerificationReport verify_example_fixture(const ExampleFixture &fixture,
                                          const Tolerances &tol = {});

} // namespace ladders

#pragma once

#include <cstddef>
#include <vector>

#include "ladders/matrix_core.hpp"
#include "ladders/report.hpp"

namespace ladders {

// Which number-operator rule a truncated quon family is built to satisfy.
enum class Regime {
  // [N_C, C] = -C + (1-q) N_C C, weights beta_n from the q-number closed form.
  QuonRule,
  // [N_C, C] = -C with q != 1 allowed; C is the truncated boson.
  BosonLikeRule,
};

const char *regime_name(Regime regime);

// beta_n = sqrt((1 - q^{n+1}) / (1 - q)), or sqrt(n+1) when |1-q| < 1e-12.
// A radicand that rounds to a tiny negative is clamped to 0.
double beta(int n, double q);

// beta_n! = beta_n beta_{n-1} ... beta_1; empty product (n <= 0) is 1.
double q_factorial(int n, double q);

// (L+1)x(L+1) matrix with sqrt(n+1) at (n, n+1). Throws DomainError if L < 1.
ComplexMatrix make_truncated_boson(int L);

// K_0 = |e_L><e_L|, the projector that corrects the truncated CCR.
ComplexMatrix truncated_boson_projector(int L);

struct QuonFamily {
  int L = 0;
  double q = 1.0;
  Regime regime = Regime::QuonRule;
  // weights[n] for n = 0..L: C(n, n+1) = weights[n] for n < L; weights[L] is
  // the first weight beyond the cut (it enters K under QuonRule).
  std::vector<double> weights;
  ComplexMatrix C;
  ComplexMatrix K;

  std::size_t dim() const { return static_cast<std::size_t>(L) + 1; }
  ComplexMatrix C_dagger() const { return C.adjoint(); }
};

// Throws DomainError for L < 1 or q outside [-1, 1].
QuonFamily make_quon_family(int L, double q, Regime regime);

// C C^dagger - q C^dagger C = 1 - (L+1) K, the regime's number-operator
// commutator, the regime's KC side condition, K hermiticity, nilpotency of
// C^dagger, and the "K^2 = K iff q = 1 (or K = 0)" claim.
VerificationReport verify_regime(const QuonFamily &family, const Tolerances &tol = {});

// C e_n = w_{n-1} e_{n-1} (zero for n = 0), 0 <= n <= L.
ComplexVector lower(const QuonFamily &family, int n);
// C^dagger e_n = w_n e_{n+1}, 0 <= n <= L-1.
ComplexVector raise(const QuonFamily &family, int n);

// (C^dagger)^n e_0 divided by beta_{n-1}! (QuonRule) or sqrt(n!)
// (BosonLikeRule). Throws DegenerateNormalizerError naming the vanishing beta.
ComplexVector generate_state(const QuonFamily &family, int n);

// N_C = C^dagger C.
ComplexMatrix number_operator(const QuonFamily &family);

// N = log(1 - N_C (1-q)) / log(q), defined for 0 < q < 1.
ComplexMatrix quon_logarithmic_number(const QuonFamily &family);

struct TraceObstruction {
  double lhs = 0.0; // sum_{n=0}^{L-1} (1 - q^{n+1})
  double rhs = 0.0; // L + 1
  bool satisfiable = false;
};

// Trace condition for an exact q-mutator [c, c^dagger]_q = 1 on the
// truncated quon space.
TraceObstruction trace_obstruction(int L, double q, double tolerance = 1e-12);

// (L+1)x(L+1) cyclic shift scaled by 1/sqrt(1-q). Throws DomainError for
// q = 1 (singular normalization) or q outside [-1, 1).
ComplexMatrix make_circulant_quon(int L, double q);

} // namespace ladders

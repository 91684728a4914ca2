#include "ladders/quon.hpp"

#include <cmath>
#include <string>

#include "ladders/errors.hpp"

namespace ladders {

namespace {

constexpr double kUnitQThreshold = 1e-12;

bool is_unit_q(double q) { return std::abs(1.0 - q) < kUnitQThreshold; }

void require_ladder_length(int L, const char *what) {
  if (L < 1)
    throw DomainError(std::string(what) + ": L must be >= 1, got " + std::to_string(L));
}

void require_q(double q, const char *what) {
  if (!(q >= -1.0 && q <= 1.0))
    throw DomainError(std::string(what) + ": q must lie in [-1, 1], got " + std::to_string(q));
}

void require_index(const QuonFamily &f, int n, int max, const char *what) {
  if (n < 0 || n > max)
    throw DomainError(std::string(what) + ": index " + std::to_string(n) +
                      " outside [0, " + std::to_string(max) + "] for L = " + std::to_string(f.L));
}

} // namespace

const char *regime_name(Regime regime) {
  switch (regime) {
  case Regime::QuonRule:
    return "quon_rule";
  case Regime::BosonLikeRule:
    return "bosonlike_rule";
  }
  return "unknown";
}

double beta(int n, double q) {
  if (n < 0)
    return 0.0;
  if (is_unit_q(q))
    return std::sqrt(static_cast<double>(n) + 1.0);
  double radicand;
  if (q > 0.0) {
    // 1 - q^{n+1} without cancellation for q close to 1.
    radicand = -std::expm1((n + 1.0) * std::log(q)) / (1.0 - q);
  } else {
    radicand = (1.0 - std::pow(q, n + 1)) / (1.0 - q);
  }
  return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

double q_factorial(int n, double q) {
  double value = 1.0;
  for (int k = 1; k <= n; ++k)
    value *= beta(k, q);
  return value;
}

ComplexMatrix make_truncated_boson(int L) {
  require_ladder_length(L, "make_truncated_boson");
  const Eigen::Index dim = L + 1;
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index n = 0; n < L; ++n)
    a(n, n + 1) = std::sqrt(static_cast<double>(n) + 1.0);
  return a;
}

ComplexMatrix truncated_boson_projector(int L) {
  require_ladder_length(L, "truncated_boson_projector");
  const auto e_last = basis_vector(static_cast<std::size_t>(L) + 1, static_cast<std::size_t>(L));
  return rank_one(e_last, e_last);
}

QuonFamily make_quon_family(int L, double q, Regime regime) {
  require_ladder_length(L, "make_quon_family");
  require_q(q, "make_quon_family");

  QuonFamily f;
  f.L = L;
  f.q = q;
  f.regime = regime;
  f.weights.resize(static_cast<std::size_t>(L) + 1);
  const Eigen::Index dim = L + 1;
  f.K = ComplexMatrix::Zero(dim, dim);

  if (regime == Regime::QuonRule) {
    for (int n = 0; n <= L; ++n)
      f.weights[n] = beta(n, q);
    f.C = ComplexMatrix::Zero(dim, dim);
    for (int n = 0; n < L; ++n)
      f.C(n, n + 1) = f.weights[n];
    f.K(L, L) = f.weights[L] * f.weights[L] / (L + 1.0);
  } else {
    for (int n = 0; n <= L; ++n)
      f.weights[n] = std::sqrt(n + 1.0);
    f.C = make_truncated_boson(L);
    for (int n = 0; n < L; ++n)
      f.K(n, n) = n * (q - 1.0) / (L + 1.0);
    f.K(L, L) = (1.0 + L * q) / (L + 1.0);
  }
  return f;
}

VerificationReport verify_regime(const QuonFamily &f, const Tolerances &tol) {
  VerificationReport report(std::string("quon L=") + std::to_string(f.L) +
                            " q=" + std::to_string(f.q) + " " + regime_name(f.regime));
  const auto one = identity(f.dim());
  const ComplexMatrix Cd = f.C.adjoint();
  const ComplexMatrix NC = Cd * f.C;
  const double L1 = f.L + 1.0;

  report.add("q_mutator_identity", residual(qmutator(f.C, Cd, f.q), one - L1 * f.K),
             tol.identity, "[C,C^dagger]_q = 1 - (L+1)K");

  ComplexMatrix pattern = f.C;
  for (Eigen::Index n = 0; n + 1 < pattern.rows(); ++n)
    pattern(n, n + 1) = 0.0;
  report.add("C_upper_bidiagonal", pattern.norm(), tol.identity,
             "only (n, n+1) entries of C are nonzero");
  report.add("C_dagger_nilpotent", matrix_power(Cd, static_cast<unsigned>(f.L + 1)).norm(),
             tol.identity, "(C^dagger)^{L+1} = 0");
  report.add("K_hermitian", residual(f.K, f.K.adjoint()), tol.identity);

  const ComplexMatrix KC = f.K * f.C;
  if (f.regime == Regime::QuonRule) {
    report.add("number_commutator_quon_rule",
               residual(commutator(NC, f.C), -f.C + (1.0 - f.q) * NC * f.C), tol.identity,
               "[N_C,C] = -C + (1-q) N_C C");
    report.add("KC_zero", KC.norm(), tol.identity, "KC = 0");
  } else {
    report.add("number_commutator_boson_rule", residual(commutator(NC, f.C), -f.C),
               tol.identity, "[N_C,C] = -C");
    report.add("KC_side_condition", residual(KC, ((f.q - 1.0) / L1) * NC * f.C), tol.identity,
               "KC = (q-1)/(L+1) N_C C");
  }

  const double idempotency = residual(f.K * f.K, f.K);
  report.add_info("K_squared_minus_K", idempotency, tol.identity);
  const bool idempotent = idempotency <= tol.identity;
  const bool expected = std::abs(f.q - 1.0) <= tol.identity || f.K.norm() <= tol.identity;
  report.add_claim("K_idempotent_iff_q_is_one", idempotent == expected,
                   "K^2 = K exactly when q = 1, apart from the trivial K = 0");
  return report;
}

ComplexVector lower(const QuonFamily &f, int n) {
  require_index(f, n, f.L, "lower");
  return f.C * basis_vector(f.dim(), static_cast<std::size_t>(n));
}

ComplexVector raise(const QuonFamily &f, int n) {
  require_index(f, n, f.L - 1, "raise");
  return f.C.adjoint() * basis_vector(f.dim(), static_cast<std::size_t>(n));
}

ComplexVector generate_state(const QuonFamily &f, int n) {
  require_index(f, n, f.L, "generate_state");
  double normalizer = 1.0;
  if (f.regime == Regime::QuonRule) {
    for (int k = 1; k < n; ++k)
      if (beta(k, f.q) == 0.0)
        throw DegenerateNormalizerError("generate_state: normalizer beta_" +
                                            std::to_string(n - 1) + "! vanishes because beta_" +
                                            std::to_string(k) + " = 0 at q = " +
                                            std::to_string(f.q),
                                        static_cast<std::size_t>(k));
    normalizer = q_factorial(n - 1, f.q);
  } else {
    normalizer = std::sqrt(std::tgamma(n + 1.0));
  }

  const ComplexMatrix Cd = f.C.adjoint();
  ComplexVector state = basis_vector(f.dim(), 0);
  for (int k = 0; k < n; ++k)
    state = Cd * state;
  return state / normalizer;
}

ComplexMatrix number_operator(const QuonFamily &f) { return f.C.adjoint() * f.C; }

ComplexMatrix quon_logarithmic_number(const QuonFamily &f) {
  if (!(f.q > 0.0 && f.q < 1.0))
    throw DomainError("quon_logarithmic_number: requires 0 < q < 1, got q = " +
                      std::to_string(f.q));
  const ComplexMatrix NC = number_operator(f);
  if (!is_diagonal(NC))
    throw DomainError("quon_logarithmic_number: N_C is not diagonal");

  // The argument 1 - (1-q) N_C is diagonal. Under the quon rule its entries
  // obey d_m = q d_{m-1} (from beta_m^2 = 1 + q beta_{m-1}^2); evaluating the
  // subtraction directly would cancel down to rounding noise once q^m < eps.
  const Eigen::Index dim = NC.rows();
  ComplexMatrix N = ComplexMatrix::Zero(dim, dim);
  const double log_q = std::log(f.q);
  double d = 1.0;
  for (Eigen::Index m = 0; m < dim; ++m) {
    double argument;
    if (f.regime == Regime::QuonRule) {
      argument = d;
      d *= f.q;
    } else {
      argument = 1.0 - (1.0 - f.q) * NC(m, m).real();
    }
    if (!(argument > 0.0))
      throw DomainError("quon_logarithmic_number: 1 - (1-q) N_C is not positive at level " +
                        std::to_string(m));
    N(m, m) = std::log(argument) / log_q;
  }
  return N;
}

TraceObstruction trace_obstruction(int L, double q, double tolerance) {
  require_ladder_length(L, "trace_obstruction");
  TraceObstruction out;
  for (int n = 0; n < L; ++n)
    out.lhs += 1.0 - std::pow(q, n + 1);
  out.rhs = L + 1.0;
  out.satisfiable = std::abs(out.lhs - out.rhs) <= tolerance;
  return out;
}

ComplexMatrix make_circulant_quon(int L, double q) {
  require_ladder_length(L, "make_circulant_quon");
  if (is_unit_q(q) || q > 1.0)
    throw DomainError("make_circulant_quon: singular normalization 1/sqrt(1-q) at q = " +
                      std::to_string(q));
  require_q(q, "make_circulant_quon");
  const Eigen::Index dim = L + 1;
  const double scale = 1.0 / std::sqrt(1.0 - q);
  ComplexMatrix c = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index n = 0; n + 1 < dim; ++n)
    c(n, n + 1) = scale;
  c(dim - 1, 0) = scale;
  return c;
}

} // namespace ladders

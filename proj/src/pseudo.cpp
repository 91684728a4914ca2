#include "ladders/pseudo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ladders/errors.hpp"

namespace ladders {

namespace {

double scale_of(const ComplexMatrix &x, const ComplexMatrix &y) {
  return std::max(1.0, x.norm() * y.norm());
}

ComplexVector real_vector(std::initializer_list<double> entries) {
  ComplexVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index k = 0;
  for (double x : entries)
    v(k++) = x;
  return v;
}

} // namespace

PseudoTriple deform(const QuonFamily &family, const ComplexMatrix &R, double max_condition) {
  if (R.rows() != R.cols() || static_cast<std::size_t>(R.rows()) != family.dim())
    throw DimensionError("deform: R must be " + std::to_string(family.dim()) + "x" +
                         std::to_string(family.dim()));
  PseudoTriple t;
  t.base = family;
  t.R = R;
  t.R_inv = inverse(R, max_condition);
  t.inversion_residual = residual(R * t.R_inv, identity(family.dim()));
  t.D = R * family.C * t.R_inv;
  t.G = R * family.C.adjoint() * t.R_inv;
  t.Q = R * family.K * t.R_inv;
  return t;
}

bool r_block_validator(const ComplexMatrix &R, Regime regime, double pattern_tolerance) {
  if (R.rows() != R.cols() || R.rows() == 0)
    return false;
  const Eigen::Index last = R.rows() - 1;
  for (Eigen::Index j = 0; j <= last; ++j) {
    for (Eigen::Index k = 0; k <= last; ++k) {
      if (j == k)
        continue;
      const bool forbidden =
          regime == Regime::BosonLikeRule || j == last || k == last;
      if (forbidden && std::abs(R(j, k)) > pattern_tolerance)
        return false;
    }
  }
  return condition_number(R) <= 1e12;
}

VerificationReport validate_regime_conditions(const PseudoTriple &t, const Tolerances &tol) {
  const QuonFamily &f = t.base;
  VerificationReport report(std::string("pseudo L=") + std::to_string(f.L) +
                            " q=" + std::to_string(f.q) + " " + regime_name(f.regime));
  const double L1 = f.L + 1.0;
  const double q = f.q;
  const auto one = identity(f.dim());
  const ComplexMatrix Nt = t.N_tilde();
  const ComplexMatrix Gd = t.G.adjoint();
  const ComplexMatrix Ntd = Nt.adjoint();
  const bool block_form = r_block_validator(t.R, f.regime, tol.pattern);

  report.add_info("R_inverse_residual", t.inversion_residual, tol.identity,
                  "||R R^{-1} - 1||_F");
  report.add("q_mutator_identity",
             residual(qmutator(t.D, t.G, q), one - L1 * t.Q,
                      std::max(scale_of(t.D, t.G), L1 * t.Q.norm())),
             tol.deformed, "[D,G]_q = 1 - (L+1)Q");
  report.add_info("R_block_form", block_form ? 0.0 : 1.0, 0.5,
                  "R has the sparsity pattern required by the regime");

  // Adjoint-side identities are only guaranteed on block-form R.
  auto add_gated = [&](std::string name, double value, std::string note) {
    if (block_form)
      report.add(std::move(name), value, tol.deformed, std::move(note));
    else
      report.add_info(std::move(name), value, tol.deformed,
                      std::move(note) + " (R not in block form: reported only)");
  };

  if (f.regime == Regime::QuonRule) {
    report.add("QD_zero", (t.Q * t.D).norm() / scale_of(t.Q, t.D), tol.deformed, "QD = 0");
    report.add("GQ_zero", (t.G * t.Q).norm() / scale_of(t.G, t.Q), tol.deformed, "GQ = 0");
    report.add("number_commutator_quon_rule",
               residual(commutator(Nt, t.D), -t.D + (1.0 - q) * Nt * t.D, scale_of(Nt, t.D)),
               tol.deformed, "[N~,D] = -D + (1-q) N~ D");
    add_gated("adjoint_number_commutator_quon_rule",
              residual(commutator(Ntd, Gd), -Gd + (1.0 - q) * Ntd * Gd, scale_of(Ntd, Gd)),
              "[N~^dagger,G^dagger] = -G^dagger + (1-q) N~^dagger G^dagger");
    add_gated("KD_zero", (f.K * t.D).norm() / scale_of(f.K, t.D), "KD = 0");
    add_gated("KG_dagger_zero", (f.K * Gd).norm() / scale_of(f.K, Gd), "KG^dagger = 0");
  } else {
    const double c = (q - 1.0) / L1;
    report.add("QD_side_condition", residual(t.Q * t.D, c * Nt * t.D, scale_of(Nt, t.D)),
               tol.deformed, "QD = (q-1)/(L+1) N~ D");
    report.add("GQ_side_condition", residual(t.G * t.Q, c * t.G * Nt, scale_of(t.G, Nt)),
               tol.deformed, "GQ = (q-1)/(L+1) G N~");
    report.add("number_commutator_boson_rule",
               residual(commutator(Nt, t.D), -t.D, scale_of(Nt, t.D)), tol.deformed,
               "[N~,D] = -D");
    add_gated("adjoint_number_commutator_boson_rule",
              residual(commutator(Ntd, Gd), -Gd, scale_of(Ntd, Gd)),
              "[N~^dagger,G^dagger] = -G^dagger");
    add_gated("KD_side_condition", residual(f.K * t.D, c * Nt * t.D, scale_of(Nt, t.D)),
              "KD = (q-1)/(L+1) N~ D");
    add_gated("KG_dagger_side_condition", residual(f.K * Gd, c * Ntd * Gd, scale_of(Ntd, Gd)),
              "KG^dagger = (q-1)/(L+1) N~^dagger G^dagger");
  }

  const ComplexMatrix RdR = t.R.adjoint() * t.R;
  const double k_rdr = commutator(f.K, RdR).norm() / scale_of(f.K, RdR);
  const double q_herm = residual(t.Q, t.Q.adjoint(), std::max(1.0, t.Q.norm()));
  if (k_rdr <= tol.deformed)
    report.add("Q_hermitian", q_herm, tol.deformed, "Q = Q^dagger since [K, R^dagger R] = 0");
  else
    report.add_info("Q_hermitian", q_herm, tol.deformed, "[K, R^dagger R] != 0: reported only");

  const bool k_idem = residual(f.K * f.K, f.K) <= tol.deformed;
  const bool q_idem = residual(t.Q * t.Q, t.Q, std::max(1.0, t.Q.norm() * t.Q.norm())) <=
                      tol.deformed;
  report.add_claim("Q_idempotent_iff_K_idempotent", k_idem == q_idem);

  const double k_r = commutator(f.K, t.R).norm() / scale_of(f.K, t.R);
  if (k_r <= tol.deformed) {
    report.add("Q_equals_K", residual(t.Q, f.K, std::max(1.0, f.K.norm())), tol.deformed,
               "Q = K since [K, R] = 0");
    report.add("adjoint_q_mutator_identity",
               residual(qmutator(Gd, t.D.adjoint(), q), one - L1 * f.K, scale_of(Gd, t.D)),
               tol.deformed, "[G^dagger, D^dagger]_q = 1 - (L+1)K");
  } else {
    report.skip("Q_equals_K", "[K, R] != 0");
    report.skip("adjoint_q_mutator_identity", "[K, R] != 0");
  }
  return report;
}

ExampleFixture example_fixture(double q) {
  if (!(q >= -1.0 && q <= 1.0))
    throw DomainError("example_fixture: q must lie in [-1, 1]");
  ExampleFixture fx;
  fx.q = q;
  for (int n = 0; n < 3; ++n)
    fx.betas[n] = beta(n, q);

  fx.phi = {real_vector({1, 0, 0, 0}), real_vector({1, 1, 0, 0}), real_vector({0, 1, 1, 0}),
            real_vector({0, 0, 1, 1})};
  fx.psi = {real_vector({1, -1, 1, -1}), real_vector({0, 1, -1, 1}),
            real_vector({0, 0, 1, -1}), real_vector({0, 0, 0, 1})};

  fx.R = ComplexMatrix::Zero(4, 4);
  for (Eigen::Index j = 0; j < 4; ++j) {
    fx.R(j, j) = 1.0;
    if (j + 1 < 4)
      fx.R(j, j + 1) = 1.0;
  }

  fx.C = ComplexMatrix::Zero(4, 4);
  fx.E = ComplexMatrix::Zero(4, 4);
  fx.F = ComplexMatrix::Zero(4, 4);
  for (int n = 0; n < 3; ++n) {
    const double b = fx.betas[n];
    fx.C += b * rank_one(basis_vector(4, n), basis_vector(4, n + 1));
    fx.E += b * rank_one(fx.phi[n], fx.psi[n + 1]);
    fx.F += b * rank_one(fx.phi[n + 1], fx.psi[n]);
  }

  const auto &b = fx.betas;
  const std::array<double, 4> k_diag = {
      (1.0 - b[0] * b[0]) / 4.0,
      (1.0 + q * b[0] * b[0] - b[1] * b[1]) / 4.0,
      (1.0 + q * b[1] * b[1] - b[2] * b[2]) / 4.0,
      (1.0 + q * b[2] * b[2]) / 4.0,
  };
  fx.K = ComplexMatrix::Zero(4, 4);
  fx.Q = ComplexMatrix::Zero(4, 4);
  for (int n = 0; n < 4; ++n) {
    fx.K(n, n) = k_diag[n];
    fx.Q += k_diag[n] * rank_one(fx.phi[n], fx.psi[n]);
  }
  return fx;
}

VerificationReport verify_example_fixture(const ExampleFixture &fx, const Tolerances &tol) {
  VerificationReport report("example_fixture q=" + std::to_string(fx.q));
  const auto one = identity(4);

  ComplexMatrix gram(4, 4);
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m < 4; ++m)
      gram(n, m) = fx.phi[n].dot(fx.psi[m]); // conjugates phi
  report.add("biorthogonality", residual(gram, one), tol.identity, "<phi_n, psi_m> = delta_nm");

  const ComplexMatrix R_inv_dagger = inverse(fx.R).adjoint();
  double riesz_phi = 0.0;
  double riesz_psi = 0.0;
  for (int n = 0; n < 4; ++n) {
    riesz_phi += residual(fx.phi[n], ComplexVector(fx.R * basis_vector(4, n)));
    riesz_psi += residual(fx.psi[n], ComplexVector(R_inv_dagger * basis_vector(4, n)));
  }
  report.add("riesz_phi", riesz_phi, tol.identity, "phi_n = R e_n");
  report.add("riesz_psi", riesz_psi, tol.identity, "psi_n = (R^{-1})^dagger e_n");

  ComplexMatrix phi_psi = ComplexMatrix::Zero(4, 4);
  ComplexMatrix psi_phi = ComplexMatrix::Zero(4, 4);
  for (int n = 0; n < 4; ++n) {
    phi_psi += rank_one(fx.phi[n], fx.psi[n]);
    psi_phi += rank_one(fx.psi[n], fx.phi[n]);
  }
  report.add("resolution_phi_psi", residual(phi_psi, one), tol.identity,
             "sum |phi_n><psi_n| = 1");
  report.add("resolution_psi_phi", residual(psi_phi, one), tol.identity,
             "sum |psi_n><phi_n| = 1");

  report.add("q_mutator_EF", residual(qmutator(fx.E, fx.F, fx.q), one - 4.0 * fx.Q),
             tol.identity, "[E,F]_q = 1 - 4Q");
  const ComplexMatrix Cd = fx.C.adjoint();
  report.add("K_from_q_mutator",
             residual(fx.K, 0.25 * (one - fx.C * Cd + fx.q * Cd * fx.C)), tol.identity,
             "K = (1 - C C^dagger + q C^dagger C)/4");

  const ComplexMatrix R_inv = inverse(fx.R);
  report.add("E_similarity", residual(fx.E, fx.R * fx.C * R_inv), tol.identity, "E = R C R^{-1}");
  report.add("F_similarity", residual(fx.F, fx.R * Cd * R_inv), tol.identity,
             "F = R C^dagger R^{-1}");
  report.add("Q_similarity", residual(fx.Q, fx.R * fx.K * R_inv), tol.identity, "Q = R K R^{-1}");
  return report;
}

} // namespace ladders

#include "ladders/chain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "ladders/errors.hpp"

namespace ladders {

namespace {

constexpr cdouble kI{0.0, 1.0};

double scale_of(const ComplexMatrix &x, const ComplexMatrix &y) {
  return std::max(1.0, x.norm() * y.norm());
}

std::string describe(const std::vector<double> &gammas) {
  std::string out = "chain M=" + std::to_string(gammas.size()) + " gammas=(";
  for (std::size_t j = 0; j < gammas.size(); ++j) {
    if (j)
      out += ",";
    out += std::to_string(gammas[j]);
  }
  return out + ")";
}

// Rescales v so its last component is 1.
ComplexVector as_ray(const ComplexVector &v) { return v / v(v.size() - 1); }

} // namespace

double ChainSystem::gamma_product() const {
  double p = 1.0;
  for (double g : gammas)
    p *= g;
  return p;
}

double ChainSystem::gamma_mean() const { return std::pow(gamma_product(), 1.0 / M); }

ChainSystem make_chain(const std::vector<double> &gammas) {
  if (gammas.size() < 2)
    throw DomainError("make_chain: a closed chain needs M >= 2 levels, got " +
                      std::to_string(gammas.size()));
  for (std::size_t j = 0; j < gammas.size(); ++j)
    if (!(gammas[j] > 0.0) || !std::isfinite(gammas[j]))
      throw DomainError("make_chain: gamma_" + std::to_string(j) + " must be positive, got " +
                        std::to_string(gammas[j]));

  ChainSystem c;
  c.M = static_cast<int>(gammas.size());
  c.gammas = gammas;
  const Eigen::Index M = c.M;
  c.a = ComplexMatrix::Zero(M, M);
  for (Eigen::Index j = 0; j + 1 < M; ++j)
    c.a(j, j + 1) = gammas[j + 1];
  c.a(M - 1, 0) = gammas[0];
  c.a_dagger = c.a.adjoint();
  c.N = c.a_dagger * c.a;
  c.Gamma = commutator(c.a, c.a_dagger);
  return c;
}

VerificationReport verify_chain_algebra(const ChainSystem &c, const Tolerances &tol) {
  VerificationReport report(describe(c.gammas));
  const auto &a = c.a;
  const auto &ad = c.a_dagger;
  const auto &N = c.N;
  const auto &G = c.Gamma;
  const std::size_t M = static_cast<std::size_t>(c.M);

  ComplexMatrix N_expected = ComplexMatrix::Zero(c.M, c.M);
  ComplexMatrix Gamma_expected = ComplexMatrix::Zero(c.M, c.M);
  for (int j = 0; j < c.M; ++j) {
    const double gj = c.gammas[j];
    const double gnext = c.gammas[(j + 1) % c.M];
    N_expected(j, j) = gj * gj;
    Gamma_expected(j, j) = gnext * gnext - gj * gj;
  }
  report.add("N_diagonal_gamma_squared", residual(N, N_expected, std::max(1.0, N.norm())),
             tol.chain, "N = diag(gamma_j^2)");
  report.add("Gamma_diagonal_entries", residual(G, Gamma_expected, std::max(1.0, N.norm())),
             tol.chain, "Gamma = diag(gamma_{j+1}^2 - gamma_j^2)");
  report.add("trace_Gamma_zero", std::abs(trace(G)) / std::max(1.0, N.norm()), tol.chain);

  report.add("N_a_commutator", residual(commutator(N, a), -G * a, scale_of(N, a)), tol.chain,
             "[N,a] = -Gamma a");
  report.add("N_adagger_commutator", residual(commutator(N, ad), ad * G, scale_of(N, ad)),
             tol.chain, "[N,a^dagger] = a^dagger Gamma");
  report.add("N_Gamma_commute", commutator(N, G).norm() / scale_of(N, G), tol.chain,
             "[N,Gamma] = 0");
  const ComplexMatrix Mop = a * ad;
  report.add("M_equals_Gamma_plus_N", residual(Mop, G + N, std::max(1.0, Mop.norm())), tol.chain,
             "a a^dagger = Gamma + N");
  report.add("M_Gamma_commute", commutator(G + N, G).norm() / scale_of(G + N, G), tol.chain,
             "[Gamma+N, Gamma] = 0");

  const double P = c.gamma_product();
  const ComplexMatrix P1 = P * identity(M);
  report.add("a^M = prod(gamma) * I",
             residual(matrix_power(a, static_cast<unsigned>(M)), P1, std::max(1.0, P)), tol.chain);
  report.add("adagger^M = prod(gamma) * I",
             residual(matrix_power(ad, static_cast<unsigned>(M)), P1, std::max(1.0, P)),
             tol.chain);

  const double ccr_defect = residual(G, identity(M));
  report.add_claim("ccr_not_satisfied", ccr_defect > tol.chain,
                   "||[a,a^dagger] - 1||_F = " + std::to_string(ccr_defect));
  return report;
}

ComplexMatrix heisenberg_evolve(const ChainSystem &c, double t) {
  const ComplexMatrix forward = matrix_exponential(kI * t * c.N);
  const ComplexMatrix backward = matrix_exponential(-kI * t * c.N);
  return forward * c.a * backward;
}

VerificationReport verify_heisenberg(const ChainSystem &c, double t, const Tolerances &tol) {
  VerificationReport report(describe(c.gammas) + " t=" + std::to_string(t));
  const ComplexMatrix at = heisenberg_evolve(c, t);
  const ComplexMatrix closed = matrix_exponential(-kI * t * c.Gamma) * c.a;
  const double scale = std::max(1.0, c.a.norm());
  report.add("heisenberg_closed_form", residual(at, closed, scale), tol.dynamics,
             "exp(iNt) a exp(-iNt) = exp(-i Gamma t) a");
  report.add("number_conserved", residual(at.adjoint() * at, c.N, std::max(1.0, c.N.norm())),
             tol.dynamics, "a^dagger(t) a(t) = a^dagger a");
  return report;
}

std::vector<cdouble> chain_spectrum(const ChainSystem &c) {
  std::vector<cdouble> out;
  const double g = c.gamma_mean();
  for (int k = 0; k < c.M; ++k)
    out.push_back(std::polar(g, 2.0 * std::numbers::pi * k / c.M));
  return out;
}

BiorthogonalSystem discrete_coherent_states(const ComplexMatrix &A,
                                            const SpectralOptions &options) {
  const EigenSystem eig = eigensystem(A, options);
  if (!eig.distinct)
    throw DegenerateSpectrumError("discrete_coherent_states: degenerate spectrum (min gap " +
                                      std::to_string(eig.min_gap) + ")",
                                  eig.min_gap);
  BiorthogonalSystem sys;
  sys.values = eig.values;
  sys.phi = eig.vectors;
  sys.psi = inverse(eig.vectors.adjoint(), std::numeric_limits<double>::infinity());
  return sys;
}

VerificationReport verify_biorthogonal_system(const ComplexMatrix &A, const BiorthogonalSystem &s,
                                              const Tolerances &tol) {
  VerificationReport report("biorthogonal system n=" + std::to_string(A.rows()));
  const double a_scale = std::max(1.0, A.norm());
  const ComplexMatrix Ad = A.adjoint();
  double eig_phi = 0.0;
  double eig_psi = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    const ComplexVector phi = s.phi.col(jj);
    const ComplexVector psi = s.psi.col(jj);
    eig_phi = std::max(eig_phi, residual(ComplexVector(A * phi), ComplexVector(s.values[j] * phi),
                                         a_scale * phi.norm()));
    eig_psi = std::max(eig_psi,
                       residual(ComplexVector(Ad * psi), ComplexVector(std::conj(s.values[j]) * psi),
                                a_scale * psi.norm()));
  }
  const auto one = identity(s.size());
  report.add("phi_eigen_equation", eig_phi, tol.biorthogonal, "A phi_j = z_j phi_j");
  report.add("psi_adjoint_eigen_equation", eig_psi, tol.biorthogonal,
             "A^dagger psi_j = conj(z_j) psi_j");
  report.add("biorthonormality", residual(ComplexMatrix(s.phi.adjoint() * s.psi), one),
             tol.biorthogonal, "<phi_j, psi_k> = delta_jk");
  report.add("resolution_phi_psi", residual(ComplexMatrix(s.phi * s.psi.adjoint()), one),
             tol.resolution, "sum |phi_j><psi_j| = 1");
  report.add("resolution_psi_phi", residual(ComplexMatrix(s.psi * s.phi.adjoint()), one),
             tol.resolution, "sum |psi_j><phi_j| = 1");
  return report;
}

VerificationReport verify_off_spectrum(const ComplexMatrix &A, const std::vector<cdouble> &values,
                                       int samples, std::uint64_t seed, double threshold) {
  VerificationReport report("off-spectrum sampling n=" + std::to_string(A.rows()));
  std::mt19937_64 rng(seed);
  const double radius = 2.0 * std::max(1.0, A.norm());
  std::uniform_real_distribution<double> coord(-radius, radius);
  const double floor = threshold * A.norm();
  double worst = std::numeric_limits<double>::infinity();
  int taken = 0;
  while (taken < samples) {
    const cdouble z{coord(rng), coord(rng)};
    const bool near = std::any_of(values.begin(), values.end(),
                                  [&](cdouble v) { return std::abs(v - z) <= 1e-6; });
    if (near)
      continue;
    ++taken;
    const ComplexMatrix shifted = A - z * identity(static_cast<std::size_t>(A.rows()));
    worst = std::min(worst, smallest_singular_value(shifted));
  }
  report.add_claim("only_trivial_solution_off_spectrum", worst > floor,
                   "min sigma_min(A - z) over " + std::to_string(samples) +
                       " samples = " + std::to_string(worst));
  return report;
}

BiorthogonalSystem chain_coherent_closed_form(const ChainSystem &c) {
  if (c.M != 4)
    throw DomainError("chain_coherent_closed_form: closed forms exist only for M = 4, got M = " +
                      std::to_string(c.M));
  const double g0 = c.gammas[0];
  const double g1 = c.gammas[1];
  const double g3 = c.gammas[3];
  const double g = c.gamma_mean();

  const double x = g / g0;
  const double y = g * g / (g0 * g1);
  const double w = g3 / g;

  BiorthogonalSystem s;
  s.values = {cdouble(-g, 0.0), cdouble(0.0, -g), cdouble(0.0, g), cdouble(g, 0.0)};
  s.phi.resize(4, 4);
  s.psi.resize(4, 4);
  // u_j = z_j / g; component k of Phi carries u_j^k, of psi u_j^k as well
  // (conj(z_j) psi_k = gamma psi_{k-1} forces the same phase as Phi).
  const std::array<cdouble, 4> u = {cdouble(-1, 0), cdouble(0, -1), cdouble(0, 1), cdouble(1, 0)};
  for (int j = 0; j < 4; ++j) {
    const cdouble uj = u[j];
    s.phi(0, j) = 0.5 * uj * x;
    s.phi(1, j) = 0.5 * uj * uj * y;
    s.phi(2, j) = 0.5 * uj * uj * uj * w;
    s.phi(3, j) = 0.5;
    s.psi(0, j) = 0.5 * uj / x;
    s.psi(1, j) = 0.5 * uj * uj / y;
    s.psi(2, j) = 0.5 * uj * uj * uj / w;
    s.psi(3, j) = 0.5;
  }
  return s;
}

VerificationReport verify_chain_closed_form(const ChainSystem &c, const Tolerances &tol) {
  const BiorthogonalSystem closed = chain_coherent_closed_form(c);
  Tolerances strict = tol;
  strict.resolution = tol.biorthogonal;
  VerificationReport report = verify_biorthogonal_system(c.a, closed, strict);
  report.set_family_descriptor(describe(c.gammas) + " closed form");

  double adjoint = 0.0;
  for (int j = 0; j < 4; ++j) {
    const ComplexVector psi = closed.psi.col(j);
    adjoint = std::max(adjoint, residual(ComplexVector(c.a_dagger * psi),
                                         ComplexVector(std::conj(closed.values[j]) * psi),
                                         std::max(1.0, c.a.norm()) * psi.norm()));
  }
  report.add("adagger_psi_conjugate_eigenvalue", adjoint, tol.biorthogonal,
             "a^dagger psi_j = conj(E_j) psi_j");

  // The conjugated vectors, i.e. psi(z_1) and psi(z_2) with labels exchanged,
  // are eigenvectors of a^dagger only for the real eigenvalues.
  double conjugated = 0.0;
  for (int j = 0; j < 4; ++j) {
    const ComplexVector psi = closed.psi.col(j).conjugate();
    conjugated = std::max(conjugated, residual(c.a_dagger * psi, std::conj(closed.values[j]) * psi,
                                               std::max(1.0, c.a.norm()) * psi.norm()));
  }
  report.add_info("conjugated_psi_labels", conjugated, tol.biorthogonal,
                  "conj(psi_j) fails a^dagger psi = conj(E_j) psi for j = 1, 2");

  const double g = c.gamma_mean();
  const EigenSystem eig = eigensystem(c.a);
  double spectrum = 0.0;
  double rays = 0.0;
  for (int j = 0; j < 4; ++j) {
    std::size_t nearest = 0;
    for (std::size_t k = 1; k < eig.size(); ++k)
      if (std::abs(eig.values[k] - closed.values[j]) <
          std::abs(eig.values[nearest] - closed.values[j]))
        nearest = k;
    spectrum = std::max(spectrum, std::abs(eig.values[nearest] - closed.values[j]) / g);
    const ComplexVector numeric = eig.vectors.col(static_cast<Eigen::Index>(nearest));
    const ComplexVector formula = closed.phi.col(j);
    rays = std::max(rays, residual(as_ray(numeric), as_ray(formula),
                                   std::max(1.0, as_ray(formula).norm())));
  }
  report.add("spectrum_matches_closed_form", spectrum, tol.biorthogonal,
             "eigenvalues of a are (-g, -ig, ig, g), relative to g");
  report.add("eigenvectors_match_closed_form", rays, tol.biorthogonal,
             "numeric and closed-form Phi agree as rays (last component 1)");
  return report;
}

std::vector<cdouble> coherent_state_instability(const ChainSystem &c, int j, double t) {
  const BiorthogonalSystem s = chain_coherent_closed_form(c);
  if (j < 0 || j > 3)
    throw DomainError("coherent_state_instability: index " + std::to_string(j) +
                      " outside [0, 3]");
  const ComplexVector evolved = matrix_exponential(kI * t * c.N) * s.phi.col(j);
  std::vector<cdouble> profile(4);
  for (int k = 0; k < 4; ++k)
    profile[k] = s.psi.col(k).dot(evolved);
  return profile;
}

} // namespace ladders

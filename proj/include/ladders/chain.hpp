#pragma once

#include <cstdint>
#include <vector>

#include "ladders/matrix_core.hpp"
#include "ladders/report.hpp"

namespace ladders {

// Ladder on a closed chain of M levels. gammas[j] weights the step into
// level j: a^dagger e_j = gammas[j+1] e_{j+1}, and the last level wraps with
// a^dagger e_{M-1} = gammas[0] e_0.
struct ChainSystem {
  int M = 0;
  std::vector<double> gammas;
  ComplexMatrix a;
  ComplexMatrix a_dagger;
  ComplexMatrix N;     // a^dagger a = diag(gamma_j^2)
  ComplexMatrix Gamma; // [a, a^dagger] = diag(gamma_{j+1}^2 - gamma_j^2)

  double gamma_product() const;
  // (prod gamma_j)^{1/M}, the common modulus of the spectrum of a.
  double gamma_mean() const;
};

// Throws DomainError for M < 2 or any gamma <= 0 (or non-finite).
ChainSystem make_chain(const std::vector<double> &gammas);

// [N,a] = -Gamma a, [N,a^dagger] = a^dagger Gamma, [N,Gamma] = 0,
// [Gamma+N, Gamma] = 0, a a^dagger = Gamma + N, a^M = (a^dagger)^M =
// (prod gamma) 1, and [a,a^dagger] != 1.
VerificationReport verify_chain_algebra(const ChainSystem &chain, const Tolerances &tol = {});

// exp(iNt) a exp(-iNt).
ComplexMatrix heisenberg_evolve(const ChainSystem &chain, double t);

// Compares heisenberg_evolve with exp(-i Gamma t) a and checks that
// a^dagger(t) a(t) = a^dagger a.
VerificationReport verify_heisenberg(const ChainSystem &chain, double t,
                                     const Tolerances &tol = {});

// gamma * exp(2 pi i k / M), k = 0..M-1.
std::vector<cdouble> chain_spectrum(const ChainSystem &chain);

// Eigenvectors of A and their biorthonormal dual family.
struct BiorthogonalSystem {
  std::vector<cdouble> values;
  ComplexMatrix phi; // column j: A phi_j = z_j phi_j
  ComplexMatrix psi; // column j: A^dagger psi_j = conj(z_j) psi_j

  std::size_t size() const { return values.size(); }
};

// phi from eigensystem(A), psi as the columns of (V^dagger)^{-1}. Throws
// DegenerateSpectrumError when the spectrum is not distinct.
BiorthogonalSystem discrete_coherent_states(const ComplexMatrix &A,
                                            const SpectralOptions &options = {});

// Eigen-equations of phi and psi, <phi_j, psi_k> = delta_jk and both orders of
// the resolution of the identity.
VerificationReport verify_biorthogonal_system(const ComplexMatrix &A,
                                              const BiorthogonalSystem &system,
                                              const Tolerances &tol = {});

// Samples points off the spectrum and checks that A - z 1 keeps its smallest
// singular value above threshold * ||A||_F, i.e. only Phi = 0 solves
// A Phi = z Phi there.
VerificationReport verify_off_spectrum(const ComplexMatrix &A, const std::vector<cdouble> &values,
                                       int samples, std::uint64_t seed,
                                       double threshold = 1e-8);

// Closed-form eigenvectors of a 4-level chain, values (-g, -ig, ig, g) with
// g = gamma_mean(); both families carry the overall 1/2 and last component
// 1/2. Throws DomainError unless M == 4.
BiorthogonalSystem chain_coherent_closed_form(const ChainSystem &chain);

// Closed forms checked against the eigen-equations, a^dagger psi_j =
// conj(E_j) psi_j, biorthonormality, the resolution of the identity, and the
// numerically computed eigenvectors (compared as rays, last component 1).
VerificationReport verify_chain_closed_form(const ChainSystem &chain, const Tolerances &tol = {});

// <psi_k, exp(iNt) Phi_j> for k = 0..3: the evolved coherent state expanded
// in the Phi family.
std::vector<cdouble> coherent_state_instability(const ChainSystem &chain, int j, double t);

} // namespace ladders

#include "ladders/suite.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ladders/chain.hpp"
#include "ladders/errors.hpp"
#include "ladders/matrix_io.hpp"
#include "ladders/pseudo.hpp"
#include "ladders/quon.hpp"

namespace ladders {

namespace {

constexpr std::array<double, 3> kHeisenbergTimes = {0.1, 1.0, 10.0};
constexpr int kOffSpectrumSamples = 20;

std::string fmt(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

Regime regime_of(const FamilyConfig &cfg) {
  return cfg.kind == FamilyKind::BosonlikeQuon ? Regime::BosonLikeRule : Regime::QuonRule;
}

QuonFamily quon_family(const FamilyConfig &cfg) {
  switch (cfg.kind) {
  case FamilyKind::TruncatedBoson:
    return make_quon_family(*cfg.L, 1.0, Regime::QuonRule);
  case FamilyKind::TruncatedQuon:
  case FamilyKind::BosonlikeQuon:
    return make_quon_family(*cfg.L, *cfg.q, regime_of(cfg));
  case FamilyKind::Pseudo:
    return make_quon_family(*cfg.L, *cfg.q, *cfg.base);
  default:
    throw std::logic_error("quon_family: kind has no quon family");
  }
}

std::uint64_t seed_of(const FamilyConfig &cfg, const SuiteOptions &opt) {
  if (opt.seed)
    return *opt.seed;
  return cfg.seed.value_or(kDefaultSeed);
}

PseudoTriple pseudo_triple(const FamilyConfig &cfg, std::uint64_t seed) {
  const QuonFamily base = quon_family(cfg);
  const ComplexMatrix R = cfg.R ? *cfg.R : random_block_similarity(*cfg.L, *cfg.base, seed);
  return deform(base, R);
}

void truncated_boson_suite(const FamilyConfig &cfg, const Tolerances &tol,
                           VerificationReport &report) {
  const int L = *cfg.L;
  const ComplexMatrix A = make_truncated_boson(L);
  const ComplexMatrix Ad = A.adjoint();
  const ComplexMatrix K0 = truncated_boson_projector(L);
  const auto one = identity(static_cast<std::size_t>(L) + 1);

  report.add("boson_commutator_identity", residual(commutator(A, Ad), one - (L + 1.0) * K0),
             tol.identity, "[A,A^dagger] = 1 - (L+1) K_0");
  report.add("K0_projector", residual(K0 * K0, K0) + residual(K0, K0.adjoint()), tol.identity,
             "K_0 = K_0^2 = K_0^dagger");
  report.add("K0_annihilates_A", (K0 * A).norm(), tol.identity, "K_0 A = 0");
  report.add("A_dagger_nilpotent", matrix_power(Ad, static_cast<unsigned>(L + 1)).norm(),
             tol.identity, "(A^dagger)^{L+1} = 0");

  double states = 0.0;
  ComplexVector v = basis_vector(one.rows(), 0);
  for (int n = 0; n <= L; ++n) {
    if (n > 0)
      v = Ad * v;
    const ComplexVector en = basis_vector(one.rows(), static_cast<std::size_t>(n));
    states = std::max(states, residual(ComplexVector(v / std::sqrt(std::tgamma(n + 1.0))), en));
  }
  report.add("number_states", states, tol.identity, "e_n = (A^dagger)^n e_0 / sqrt(n!)");
  report.add_claim("equals_quon_rule_at_q_one",
                   A == make_quon_family(L, 1.0, Regime::QuonRule).C,
                   "the q = 1 truncated quon is entrywise the truncated boson");
}

void quon_suite(const FamilyConfig &cfg, const Tolerances &tol, VerificationReport &report) {
  const QuonFamily f = quon_family(cfg);
  report.merge(verify_regime(f, tol));

  double ladder = 0.0;
  for (int n = 0; n <= f.L; ++n) {
    const double w = n > 0 ? f.weights[n - 1] : 0.0;
    const ComplexVector expected =
        n > 0 ? ComplexVector(w * basis_vector(f.dim(), static_cast<std::size_t>(n - 1)))
              : ComplexVector(ComplexVector::Zero(static_cast<Eigen::Index>(f.dim())));
    ladder += residual(lower(f, n), expected);
    if (n < f.L)
      ladder += residual(raise(f, n),
                         ComplexVector(f.weights[n] *
                                       basis_vector(f.dim(), static_cast<std::size_t>(n + 1))));
  }
  report.add("ladder_actions", ladder, tol.identity,
             "C e_n = w_{n-1} e_{n-1}, C^dagger e_n = w_n e_{n+1}");

  ComplexMatrix NC_expected = ComplexMatrix::Zero(f.C.rows(), f.C.cols());
  for (int n = 1; n <= f.L; ++n)
    NC_expected(n, n) = f.weights[n - 1] * f.weights[n - 1];
  report.add("number_operator_spectrum", residual(number_operator(f), NC_expected), tol.identity,
             "N_C e_n = w_{n-1}^2 e_n");

  try {
    double worst = 0.0;
    for (int n = 0; n <= f.L; ++n)
      worst = std::max(worst, residual(generate_state(f, n),
                                       basis_vector(f.dim(), static_cast<std::size_t>(n))));
    report.add("generated_states", worst, tol.identity, "(C^dagger)^n e_0 / normalizer = e_n");
  } catch (const DegenerateNormalizerError &e) {
    report.skip("generated_states", "degenerate normalizer: beta_" + std::to_string(e.index()) +
                                        " = 0");
  }

  if (f.q > 0.0 && f.q < 1.0) {
    try {
      ComplexMatrix levels = ComplexMatrix::Zero(f.C.rows(), f.C.cols());
      for (int m = 0; m <= f.L; ++m)
        levels(m, m) = m;
      report.add("logarithmic_number_operator", residual(quon_logarithmic_number(f), levels),
                 tol.log_number, "log(1 - N_C (1-q)) / log q = diag(0..L)");
      if (f.regime == Regime::QuonRule) {
        ComplexMatrix powers = ComplexMatrix::Zero(f.C.rows(), f.C.cols());
        for (int m = 0; m <= f.L; ++m)
          powers(m, m) = std::pow(f.q, m);
        report.add("logarithm_argument",
                   residual(identity(f.dim()) - (1.0 - f.q) * number_operator(f), powers),
                   tol.identity, "1 - (1-q) N_C = diag(q^m)");
      }
    } catch (const DomainError &e) {
      report.skip("logarithmic_number_operator", e.what());
    }
  } else {
    report.skip("logarithmic_number_operator", "requires 0 < q < 1");
  }

  const TraceObstruction obstruction = trace_obstruction(f.L, f.q, tol.identity);
  report.add_info("exact_q_mutator_trace_condition", std::abs(obstruction.lhs - obstruction.rhs),
                  tol.identity,
                  "sum (1 - q^{n+1}) = L+1 is needed for [c,c^dagger]_q = 1 on this space; holds "
                  "only for q = -1 with odd L");
}

void circulant_suite(const FamilyConfig &cfg, const Tolerances &tol, VerificationReport &report) {
  const int L = *cfg.L;
  const double q = *cfg.q;
  const ComplexMatrix c = make_circulant_quon(L, q);
  const auto one = identity(static_cast<std::size_t>(L) + 1);
  report.add("circulant_q_mutator_identity", residual(qmutator(c, c.adjoint(), q), one),
             tol.identity, "[c,c^dagger]_q = 1");
  const double power_scale = std::pow(1.0 - q, -(L + 1) / 2.0);
  report.add("circulant_cyclic_power",
             residual(matrix_power(c, static_cast<unsigned>(L + 1)), power_scale * one,
                      std::max(1.0, power_scale)),
             tol.identity, "c^{L+1} = (1-q)^{-(L+1)/2} 1");
  const TraceObstruction obstruction = trace_obstruction(L, q, tol.identity);
  report.add_info("exact_q_mutator_trace_condition", std::abs(obstruction.lhs - obstruction.rhs),
                  tol.identity, "the bidiagonal ansatz cannot reach [c,c^dagger]_q = 1 here");
}

void chain_suite(const FamilyConfig &cfg, const Tolerances &tol, std::uint64_t seed,
                 VerificationReport &report) {
  const ChainSystem chain = make_chain(*cfg.gammas);
  report.merge(verify_chain_algebra(chain, tol));
  for (double t : kHeisenbergTimes)
    report.merge(verify_heisenberg(chain, t, tol), "t=" + fmt(t) + "/");

  const EigenSystem eig = eigensystem(chain.a);
  const auto expected = chain_spectrum(chain);
  double spectrum = 0.0;
  for (const auto &z : expected) {
    double nearest = INFINITY;
    for (const auto &v : eig.values)
      nearest = std::min(nearest, std::abs(v - z));
    spectrum = std::max(spectrum, nearest / chain.gamma_mean());
  }
  report.add("spectrum_roots_of_unity", spectrum, tol.resolution,
             "eigenvalues of a are g * exp(2 pi i k / M), relative to g");

  const BiorthogonalSystem sys = discrete_coherent_states(chain.a);
  report.merge(verify_biorthogonal_system(chain.a, sys, tol), "coherent/");
  report.merge(verify_off_spectrum(chain.a, sys.values, kOffSpectrumSamples, seed), "coherent/");

  if (chain.M == 4) {
    report.merge(verify_chain_closed_form(chain, tol), "closed_form/");
    const auto profile = coherent_state_instability(chain, 0, 1.0);
    int spread = 0;
    for (const auto &p : profile)
      spread += std::abs(p) > 1e-6 ? 1 : 0;
    report.add_info("closed_form/evolved_state_components", spread, 1.0,
                    "number of Phi components of exp(iN) Phi(z_0) above 1e-6; more than one "
                    "means the state is not stable under the evolution");
  } else {
    report.skip("closed_form", "closed-form coherent states need M = 4");
  }
}

void general_suite(const FamilyConfig &cfg, const Tolerances &tol, std::uint64_t seed,
                   VerificationReport &report) {
  const ComplexMatrix &A = *cfg.A;
  const EigenSystem eig = eigensystem(A);
  double worst = 0.0;
  for (std::size_t j = 0; j < eig.size(); ++j) {
    const ComplexVector v = eig.vectors.col(static_cast<Eigen::Index>(j));
    worst = std::max(worst, residual(ComplexVector(A * v), ComplexVector(eig.values[j] * v),
                                     std::max(1.0, A.norm())));
  }
  report.add("eigen_residual", worst, tol.biorthogonal, "||A v - z v|| / ||A||");
  report.merge(verify_off_spectrum(A, eig.values, kOffSpectrumSamples, seed), "coherent/");
  if (!eig.distinct) {
    for (const char *name : {"phi_eigen_equation", "psi_adjoint_eigen_equation",
                             "biorthonormality", "resolution_phi_psi", "resolution_psi_phi"})
      report.skip(std::string("coherent/") + name, "degenerate spectrum");
    return;
  }
  const BiorthogonalSystem sys = discrete_coherent_states(A);
  report.merge(verify_biorthogonal_system(A, sys, tol), "coherent/");
}

void dump_all(const FamilyConfig &cfg, const std::string &dir, VerificationReport &report) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw IoError("cannot create dump directory '" + dir + "': " + ec.message());
  for (const auto &name : available_operators(cfg)) {
    const std::string path = (std::filesystem::path(dir) / (name + ".txt")).string();
    dump_matrix(build_operator(cfg, name), path);
    report.add_dumped(path);
  }
}

} // namespace

ComplexMatrix random_block_similarity(int L, Regime regime, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  const Eigen::Index dim = L + 1;
  for (;;) {
    ComplexMatrix R = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
      for (Eigen::Index k = 0; k < dim; ++k) {
        const bool allowed = regime == Regime::BosonLikeRule
                                 ? j == k
                                 : (j == k) || (j < dim - 1 && k < dim - 1);
        if (allowed)
          R(j, k) = entry(rng);
      }
    if (condition_number(R) <= 1e6)
      return R;
  }
}

VerificationReport run_suite(const FamilyConfig &cfg, const SuiteOptions &opt) {
  const Tolerances tol = opt.tolerance ? Tolerances::uniform(*opt.tolerance) : Tolerances{};
  const std::uint64_t seed = seed_of(cfg, opt);
  VerificationReport report(cfg.descriptor());
  report.set_seed(seed);

  switch (cfg.kind) {
  case FamilyKind::TruncatedBoson:
    truncated_boson_suite(cfg, tol, report);
    break;
  case FamilyKind::TruncatedQuon:
  case FamilyKind::BosonlikeQuon:
    quon_suite(cfg, tol, report);
    break;
  case FamilyKind::CirculantQuon:
    circulant_suite(cfg, tol, report);
    break;
  case FamilyKind::Pseudo: {
    const PseudoTriple t = pseudo_triple(cfg, seed);
    report.merge(validate_regime_conditions(t, tol));
    break;
  }
  case FamilyKind::Chain:
    chain_suite(cfg, tol, seed, report);
    break;
  case FamilyKind::ExampleFixture:
    report.merge(verify_example_fixture(example_fixture(cfg.q.value_or(0.5)), tol));
    break;
  case FamilyKind::GeneralMatrix:
    general_suite(cfg, tol, seed, report);
    break;
  }

  if (opt.dump_dir)
    dump_all(cfg, *opt.dump_dir, report);
  return report;
}

namespace {

std::string join(const std::vector<std::string> &names) {
  std::string out;
  for (const auto &n : names)
    out += (out.empty() ? "" : ", ") + n;
  return out;
}

} // namespace

std::vector<std::string> available_operators(const FamilyConfig &cfg) {
  switch (cfg.kind) {
  case FamilyKind::TruncatedBoson:
  case FamilyKind::TruncatedQuon:
  case FamilyKind::BosonlikeQuon:
    return {"C", "K", "N"};
  case FamilyKind::CirculantQuon:
    return {"C", "N"};
  case FamilyKind::Pseudo:
  case FamilyKind::ExampleFixture:
    return {"C", "K", "D", "G", "Q"};
  case FamilyKind::Chain:
    return {"a", "adagger", "N", "Gamma"};
  case FamilyKind::GeneralMatrix:
    return {"a", "adagger"};
  }
  return {};
}

ComplexMatrix build_operator(const FamilyConfig &cfg, std::string_view what) {
  const auto names = available_operators(cfg);
  if (std::find(names.begin(), names.end(), what) == names.end())
    throw ConfigError("what", 0,
                      "operator '" + std::string(what) + "' is not available for kind '" +
                          kind_name(cfg.kind) + "' (valid: " + join(names) + ")");

  switch (cfg.kind) {
  case FamilyKind::TruncatedBoson:
  case FamilyKind::TruncatedQuon:
  case FamilyKind::BosonlikeQuon: {
    const QuonFamily f = quon_family(cfg);
    if (what == "C")
      return f.C;
    if (what == "K")
      return cfg.kind == FamilyKind::TruncatedBoson ? truncated_boson_projector(*cfg.L) : f.K;
    return number_operator(f);
  }
  case FamilyKind::CirculantQuon: {
    const ComplexMatrix c = make_circulant_quon(*cfg.L, *cfg.q);
    return what == "C" ? c : ComplexMatrix(c.adjoint() * c);
  }
  case FamilyKind::Pseudo: {
    const PseudoTriple t = pseudo_triple(cfg, cfg.seed.value_or(kDefaultSeed));
    if (what == "C")
      return t.base.C;
    if (what == "K")
      return t.base.K;
    if (what == "D")
      return t.D;
    if (what == "G")
      return t.G;
    return t.Q;
  }
  case FamilyKind::ExampleFixture: {
    const ExampleFixture fx = example_fixture(cfg.q.value_or(0.5));
    if (what == "C")
      return fx.C;
    if (what == "K")
      return fx.K;
    if (what == "D")
      return fx.E;
    if (what == "G")
      return fx.F;
    return fx.Q;
  }
  case FamilyKind::Chain: {
    const ChainSystem c = make_chain(*cfg.gammas);
    if (what == "a")
      return c.a;
    if (what == "adagger")
      return c.a_dagger;
    if (what == "N")
      return c.N;
    return c.Gamma;
  }
  case FamilyKind::GeneralMatrix:
    return what == "a" ? *cfg.A : ComplexMatrix(cfg.A->adjoint());
  }
  throw std::logic_error("build_operator: unhandled kind");
}

ComplexMatrix spectrum_operator(const FamilyConfig &cfg) {
  switch (cfg.kind) {
  case FamilyKind::Chain:
  case FamilyKind::GeneralMatrix:
    return build_operator(cfg, "a");
  case FamilyKind::Pseudo:
  case FamilyKind::ExampleFixture:
    return build_operator(cfg, "D");
  default:
    return build_operator(cfg, "C");
  }
}

std::vector<cdouble> sorted_spectrum(const ComplexMatrix &x) {
  std::vector<cdouble> values = eigensystem(x).values;
  for (auto &z : values) {
    const double mod = std::abs(z);
    double re = z.real();
    double im = z.imag();
    if (std::abs(re) <= 1e-14 * mod)
      re = 0.0;
    if (std::abs(im) <= 1e-14 * mod)
      im = 0.0;
    z = {re + 0.0, im + 0.0}; // also turns -0 into +0
  }
  auto arg_of = [](cdouble z) {
    const double a = std::arg(z);
    return a <= -std::numbers::pi ? std::numbers::pi : a;
  };
  std::stable_sort(values.begin(), values.end(), [&](cdouble a, cdouble b) {
    const double da = arg_of(a);
    const double db = arg_of(b);
    if (std::abs(da - db) > 1e-12)
      return da < db;
    return std::abs(a) < std::abs(b);
  });
  return values;
}

std::string report_to_json(const VerificationReport &report, const std::string &generated_at) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["artifact_version"] = report.artifact_version();
  doc["generated_at"] = generated_at;
  doc["family_descriptor"] = report.family_descriptor();
  if (report.seed())
    doc["seed"] = *report.seed();
  else
    doc["seed"] = nullptr;

  ordered_json checks = ordered_json::array();
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const auto &c : report.checks()) {
    ordered_json j;
    j["name"] = c.name;
    if (std::isfinite(c.residual))
      j["residual"] = c.residual;
    else
      j["residual"] = nullptr;
    j["tolerance"] = c.tolerance;
    j["passed"] = c.passed;
    j["enforced"] = c.enforced;
    j["note"] = c.note;
    checks.push_back(std::move(j));
    if (c.enforced)
      (c.passed ? passed : failed) += 1;
  }
  doc["checks"] = std::move(checks);

  ordered_json skipped = ordered_json::array();
  for (const auto &s : report.skipped())
    skipped.push_back({{"name", s.name}, {"reason", s.reason}});
  doc["skipped"] = std::move(skipped);
  doc["matrices_dumped"] = report.matrices_dumped();
  doc["summary"] = {{"checks", report.checks().size()},
                    {"passed", passed},
                    {"failed", failed},
                    {"skipped", report.skipped().size()},
                    {"all_passed", report.all_passed()}};
  return doc.dump(2) + "\n";
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace ladders

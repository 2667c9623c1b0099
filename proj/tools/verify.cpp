#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "spinwire/chain.hpp"
#include "spinwire/logical.hpp"
#include "spinwire/mqc.hpp"
#include "spinwire/oracle.hpp"
#include "spinwire/propagator.hpp"
#include "spinwire/states.hpp"

namespace spinwire::cli {

namespace {

using nlohmann::ordered_json;

std::string scientific(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", value);
  return buffer;
}

class Suite {
 public:
  Suite(const VerifyOptions& options) : options_(options), rng_(options.seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  ChainSpec random_chain(int n, Model model) {
    std::vector<double> couplings(static_cast<std::size_t>(n - 1));
    for (double& c : couplings) c = uniform(0.2, 1.5);
    return ChainSpec(n, std::move(couplings), model);
  }

  void record(std::string name, ordered_json inputs, double deviation) {
    cases_.push_back({std::move(name), inputs.dump(), deviation,
                      std::isfinite(deviation) && deviation < options_.tolerance});
  }

  std::vector<VerifyCase> take() { return std::move(cases_); }

 private:
  VerifyOptions options_;
  std::mt19937_64 rng_;
  std::vector<VerifyCase> cases_;
};

ordered_json chain_inputs(const ChainSpec& spec, double t) {
  ordered_json j;
  j["n"] = spec.n();
  j["model"] = std::string(to_string(spec.model()));
  j["couplings"] = std::vector<double>(spec.couplings().begin(), spec.couplings().end());
  j["t"] = t;
  return j;
}

std::size_t basis_index(int n, const std::vector<int>& sites) {
  std::size_t index = 0;
  for (int s : sites) index |= std::size_t{1} << (n - s);
  return index;
}

std::vector<int> random_sites(Suite& suite, int n, int m) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < m; ++i) {
    std::swap(all[static_cast<std::size_t>(i)],
              all[static_cast<std::size_t>(suite.integer(i, n - 1))]);
  }
  std::vector<int> picked(all.begin(), all.begin() + m);
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::string bits_of(int n, const std::vector<int>& sites) {
  std::string bits(static_cast<std::size_t>(n), '0');
  for (int s : sites) bits[static_cast<std::size_t>(s - 1)] = '1';
  return bits;
}

void check_polarization(Suite& suite, int max_n) {
  const oracle::OracleBudget budget{max_n};
  for (int n = 2; n <= max_n; ++n) {
    for (Model model : {Model::kXX, Model::kDQ}) {
      const ChainSpec spec = suite.random_chain(n, model);
      const double t = suite.uniform(0.0, 5.0);
      const int j = suite.integer(1, n);
      const int l = suite.integer(1, n);
      PauliSum zj(n), zl(n);
      zj.add(1.0, {{j, 'Z'}});
      zl.add(1.0, {{l, 'Z'}});
      const double exact = oracle::trace_overlap(
          oracle::evolve_deviation(oracle::build_hamiltonian(spec, budget), oracle::to_dense(zj), t),
          oracle::to_dense(zl)).real();
      auto inputs = chain_inputs(spec, t);
      inputs["j"] = j;
      inputs["l"] = l;
      suite.record("polarization_vs_oracle", inputs,
                   std::abs(polarization_correlation(spec, j, l, t, model) - exact));
      const double sign = (j - l) % 2 == 0 ? 1.0 : -1.0;
      const Propagator prop = propagate(spec, t);
      suite.record("dq_sign_rule", inputs,
                   std::abs(polarization_correlation(prop, j, l, Model::kDQ) -
                            sign * polarization_correlation(prop, j, l, Model::kXX)));
    }
  }
}

void check_slater(Suite& suite, int max_n) {
  const oracle::OracleBudget budget{max_n};
  for (int n = 4; n <= max_n; ++n) {
    for (int m : {2, 3}) {
      const ChainSpec spec = suite.random_chain(n, Model::kXX);
      const double t = suite.uniform(0.0, 5.0);
      const auto sources = random_sites(suite, n, m);
      const auto targets = random_sites(suite, n, m);
      const oracle::Evolver evolver(oracle::build_hamiltonian(spec, budget));
      const auto u = evolver.unitary(t);
      const Complex exact = u(static_cast<Eigen::Index>(basis_index(n, targets)),
                              static_cast<Eigen::Index>(basis_index(n, sources)));
      auto inputs = chain_inputs(spec, t);
      inputs["sources"] = sources;
      inputs["targets"] = targets;
      suite.record("slater_vs_oracle", inputs,
                   std::abs(slater_amplitude(propagate(spec, t), sources, targets) - exact));
    }
  }
}

void check_mixed_overlap(Suite& suite, int max_n) {
  const oracle::OracleBudget budget{max_n};
  for (int n = 4; n <= std::min(max_n, 6); ++n) {
    const ChainSpec spec = suite.random_chain(n, Model::kXX);
    const double t = suite.uniform(0.0, 5.0);
    auto random_operator = [&](BasisCoefficients& coefficients, Eigen::MatrixXcd& dense) {
      dense = Eigen::MatrixXcd::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
      for (int e = 0; e < 4; ++e) {
        const int m = suite.integer(0, n);
        const auto ket = random_sites(suite, n, m);
        const auto bra = random_sites(suite, n, suite.integer(0, n));
        const Complex w(suite.uniform(-1.0, 1.0), suite.uniform(-1.0, 1.0));
        coefficients[{bits_of(n, ket), bits_of(n, bra)}] += w;
        dense(static_cast<Eigen::Index>(basis_index(n, ket)),
              static_cast<Eigen::Index>(basis_index(n, bra))) += w;
      }
    };
    BasisCoefficients a, b;
    Eigen::MatrixXcd da, db;
    random_operator(a, da);
    random_operator(b, db);
    const oracle::Evolver evolver(oracle::build_hamiltonian(spec, budget));
    const Eigen::MatrixXcd u = evolver.unitary(t);
    const Complex exact = (u * da * u.adjoint() * db).trace();
    suite.record("mixed_overlap_vs_oracle", chain_inputs(spec, t),
                 std::abs(mixed_state_overlap(propagate(spec, t), a, b) - exact));
  }
}

void check_logical(Suite& suite, int max_n) {
  const oracle::OracleBudget budget{max_n};
  for (int n = 4; n <= max_n; ++n) {
    for (Model model : {Model::kXX, Model::kDQ}) {
      const ChainSpec spec = suite.random_chain(n, model);
      const double t = suite.uniform(0.0, 6.0);
      const LogicalBasis basis(model);
      const oracle::Evolver evolver(oracle::build_hamiltonian(spec, budget));
      const auto values = logical_correlations(spec, t, model);
      double worst = 0.0;
      for (std::size_t i = 0; i < kLogicalAxes.size(); ++i) {
        const PauliSum source = basis.source(n, kLogicalAxes[i]);
        const double exact =
            oracle::trace_overlap(evolver.evolve(oracle::to_dense(source), t),
                                  oracle::to_dense(basis.target(n, kLogicalAxes[i]))).real() /
            source.overlap(source);
        worst = std::max(worst, std::abs(values.values[i] - exact));
      }
      suite.record("logical_vs_oracle", chain_inputs(spec, t), worst);
    }
  }
  for (int n = 4; n <= std::max(max_n, 12); ++n) {
    const double t = suite.uniform(0.0, 2.0 * n);
    double hom = 0.0, eng = 0.0;
    const auto exact_h = logical_correlations(homogeneous_couplings(n, 1.0), t, Model::kXX);
    const auto exact_e = logical_correlations(engineered_couplings(n, 1.0), t, Model::kXX);
    for (std::size_t i = 0; i < kLogicalAxes.size(); ++i) {
      hom = std::max(hom, std::abs(logical_transport_homogeneous(n, 1.0, kLogicalAxes[i], t) -
                                   exact_h.values[i]));
      eng = std::max(eng, std::abs(logical_transport_engineered(n, 1.0, kLogicalAxes[i], t) -
                                   exact_e.values[i]));
    }
    ordered_json inputs{{"n", n}, {"d", 1.0}, {"t", t}};
    suite.record("logical_homogeneous_closed_form", inputs, hom);
    suite.record("logical_engineered_closed_form", inputs, eng);
  }
}

void check_mqc(Suite& suite, int max_n) {
  const oracle::OracleBudget budget{max_n};
  for (int n = 4; n <= max_n; ++n) {
    const ChainSpec spec = homogeneous_couplings(n, 1.0, Model::kDQ);
    for (StateKind kind : {StateKind::kZEnds, StateKind::kYLogical, StateKind::kXLogical}) {
      const MqcOracle oracle(spec, prepare_state(n, kind), budget);
      const double t = suite.uniform(0.0, 4.0);
      const MqcSpectrum numeric = oracle.spectrum(t);
      const MqcSpectrum closed = mqc_analytic(n, 1.0, kind, t);
      double worst = 0.0;
      for (int q = -4; q <= 4; ++q) {
        worst = std::max(worst, std::abs(numeric.normalized(q) - closed.normalized(q)));
      }
      ordered_json inputs{{"n", n}, {"d", 1.0}, {"t", t}, {"initial", std::string(to_string(kind))}};
      suite.record("mqc_vs_oracle", inputs, worst);
      suite.record("mqc_conservation", inputs, std::abs(numeric.total() - numeric.normalization));
    }
  }
}

void check_structure(Suite& suite, int max_n) {
  const oracle::OracleBudget budget{max_n};
  for (int n = 2; n <= max_n; ++n) {
    const auto seed = static_cast<std::uint64_t>(suite.integer(0, 1 << 30));
    suite.record("similarity_transform", ordered_json{{"n", n}, {"seed", seed}},
                 oracle::similarity_check(n, seed, budget));
  }
  for (int n = 2; n <= 25; ++n) {
    const auto decomp = spectral_decompose(engineered_couplings(n, 1.0));
    double spectrum = 0.0, modes = 0.0;
    for (int k = 1; k <= n; ++k) {
      spectrum = std::max(spectrum, std::abs(decomp.omegas[k - 1] - 2.0 / n * (2.0 * k - (n + 1))));
      double overlap = 0.0;
      for (int j = 1; j <= n; ++j) overlap += engineered_mode_coefficient(n, j, k) * decomp.modes(j - 1, k - 1);
      const double sign = overlap < 0.0 ? -1.0 : 1.0;
      for (int j = 1; j <= n; ++j) {
        modes = std::max(modes, std::abs(engineered_mode_coefficient(n, j, k) -
                                         sign * decomp.modes(j - 1, k - 1)));
      }
    }
    suite.record("engineered_spectrum", ordered_json{{"n", n}, {"d", 1.0}}, spectrum);
    suite.record("jacobi_modes", ordered_json{{"n", n}, {"d", 1.0}}, modes);
  }
  for (int n = 2; n <= 25; n += 3) {
    const ChainSpec spec = suite.random_chain(n, Model::kXX);
    const double t = suite.uniform(-5.0, 5.0);
    const Propagator prop = propagate(spec, t);
    const Eigen::MatrixXcd& a = prop.amplitudes();
    const double unitarity = (a * a.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    const double s = suite.uniform(-5.0, 5.0);
    const double group = (propagate(spec, t + s).amplitudes() - a * propagate(spec, s).amplitudes())
                             .cwiseAbs()
                             .maxCoeff();
    auto inputs = chain_inputs(spec, t);
    inputs["s"] = s;
    suite.record("propagator_unitarity", inputs, unitarity);
    suite.record("propagator_group", inputs, group);
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.passed; });
}

namespace {

struct GroupSummary {
  std::string name;
  int count = 0;
  int failures = 0;
  double worst = 0.0;
};

std::vector<GroupSummary> summarize(const std::vector<VerifyCase>& cases) {
  std::vector<GroupSummary> groups;
  for (const auto& c : cases) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const GroupSummary& g) { return g.name == c.name; });
    if (it == groups.end()) it = groups.insert(groups.end(), GroupSummary{c.name});
    ++it->count;
    if (!c.passed) ++it->failures;
    it->worst = std::max(it->worst, std::isfinite(c.deviation) ? c.deviation : INFINITY);
  }
  return groups;
}

}  // namespace

std::string VerifyReport::to_text() const {
  std::ostringstream text;
  text << "spinwire verify: max-n " << options.max_n << ", seed " << options.seed
       << ", tolerance " << scientific(options.tolerance) << '\n';
  for (const auto& g : summarize(cases)) {
    text << (g.failures == 0 ? "PASS " : "FAIL ") << g.name << ": " << g.count << " cases, max deviation "
         << scientific(g.worst);
    if (g.failures) text << ", " << g.failures << " failed";
    text << '\n';
  }
  for (const auto& c : cases) {
    if (!c.passed) text << "  failed " << c.name << " deviation " << scientific(c.deviation) << " inputs " << c.inputs << '\n';
  }
  text << (passed() ? "all checks passed" : "verification FAILED") << '\n';
  return text.str();
}

std::string VerifyReport::to_json() const {
  ordered_json j;
  j["options"] = {{"max_n", options.max_n}, {"seed", options.seed}, {"tolerance", options.tolerance}};
  j["passed"] = passed();
  ordered_json groups = ordered_json::array();
  for (const auto& g : summarize(cases)) {
    groups.push_back({{"name", g.name}, {"cases", g.count}, {"failures", g.failures},
                      {"max_deviation", scientific(g.worst)}});
  }
  j["groups"] = groups;
  ordered_json failures = ordered_json::array();
  for (const auto& c : cases) {
    if (c.passed) continue;
    failures.push_back({{"name", c.name}, {"deviation", scientific(c.deviation)},
                        {"inputs", ordered_json::parse(c.inputs)}});
  }
  j["failures"] = failures;
  return j.dump(2) + "\n";
}

VerifyReport run_verification(const VerifyOptions& options) {
  Suite suite(options);
  check_polarization(suite, options.max_n);
  check_slater(suite, options.max_n);
  check_mixed_overlap(suite, options.max_n);
  check_logical(suite, options.max_n);
  check_mqc(suite, options.max_n);
  check_structure(suite, options.max_n);
  return {options, suite.take()};
}

}  // namespace spinwire::cli

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "spinwire/chain.hpp"
#include "spinwire/error.hpp"
#include "spinwire/oracle.hpp"
#include "spinwire/pauli.hpp"
#include "spinwire/states.hpp"

using namespace spinwire;
using oracle::DenseOperator;

TEST(PauliSum, AddMergesAndDropsNothing) {
  PauliSum op(3);
  op.add(0.5, {{1, 'X'}, {3, 'Y'}}).add("XIY", 0.25);
  EXPECT_DOUBLE_EQ(op.weight("XIY"), 0.75);
  EXPECT_DOUBLE_EQ(op.weight("ZZZ"), 0.0);
  EXPECT_EQ(op.terms().size(), 1u);
}

TEST(PauliSum, OverlapIsOrthonormal) {
  PauliSum a(2), b(2);
  a.add("ZI", 1.0).add("XY", 2.0);
  b.add("ZI", 3.0).add("YX", 1.0);
  EXPECT_DOUBLE_EQ(a.overlap(b), 3.0);
  EXPECT_DOUBLE_EQ(a.overlap(a), 5.0);
}

TEST(PauliSum, Errors) {
  EXPECT_THROW(PauliSum(0), Error);
  PauliSum op(2);
  EXPECT_THROW(op.add("XQ", 1.0), Error);
  EXPECT_THROW(op.add("XYZ", 1.0), Error);
  EXPECT_THROW(op.add(1.0, {{3, 'X'}}), Error);
  EXPECT_THROW(op.add(1.0, {{1, 'X'}, {1, 'Y'}}), Error);
  EXPECT_THROW(op.add("XX", NAN), Error);
  EXPECT_THROW(op.overlap(PauliSum(3)), Error);
}

TEST(PauliSum, ConjugationByX) {
  PauliSum op(3);
  op.add("XYZ", 1.0).add("ZII", 1.0);
  const auto c = conjugate_by_x(op, {2, 3});
  EXPECT_DOUBLE_EQ(c.weight("XYZ"), 1.0);
  EXPECT_DOUBLE_EQ(c.weight("ZII"), 1.0);
  const auto odd = conjugate_odd_sites(op);
  EXPECT_DOUBLE_EQ(odd.weight("XYZ"), -1.0);
  EXPECT_DOUBLE_EQ(odd.weight("ZII"), -1.0);
}

TEST(PauliSum, RotationAboutZ) {
  PauliSum op(1);
  op.add("X", 1.0);
  const auto r = rotate_about_z(op, 0.3);
  EXPECT_NEAR(r.weight("X"), std::cos(0.3), 1e-15);
  EXPECT_NEAR(r.weight("Y"), std::sin(0.3), 1e-15);
  const auto dense_r = oracle::to_dense(r);
  const auto rz = oracle::Evolver(oracle::total_z(1).scaled(0.5)).unitary(0.3);
  const Eigen::MatrixXcd expected = rz * oracle::to_dense(op).entries() * rz.adjoint();
  EXPECT_LT((dense_r.entries() - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(DeviationState, RejectsIdentity) {
  PauliSum op(2);
  op.add("II", 1.0);
  EXPECT_THROW(DeviationState{op}, Error);
}

TEST(PrepareState, ZEnds) {
  const auto s = prepare_state(5, StateKind::kZEnds);
  ASSERT_EQ(s.terms().terms().size(), 2u);
  EXPECT_DOUBLE_EQ(s.terms().weight("ZIIII"), 1.0);
  EXPECT_DOUBLE_EQ(s.terms().weight("IIIIZ"), 1.0);
}

TEST(PrepareState, YLogical) {
  const auto s = prepare_state(6, StateKind::kYLogical);
  ASSERT_EQ(s.terms().terms().size(), 4u);
  for (const auto& [letters, w] : s.terms().terms()) EXPECT_DOUBLE_EQ(std::abs(w), 0.5) << letters;
  EXPECT_DOUBLE_EQ(s.terms().weight("YXIIII"), 0.5);
  EXPECT_DOUBLE_EQ(s.terms().weight("IIIIXY"), 0.5);
}

TEST(PrepareState, AllKindsTraceless) {
  for (auto kind : {StateKind::kZEnds, StateKind::kYLogical, StateKind::kXLogical, StateKind::kFullZ}) {
    const auto s = prepare_state(6, kind);
    EXPECT_DOUBLE_EQ(s.terms().weight("IIIIII"), 0.0);
    EXPECT_NEAR(oracle::to_dense(s.terms()).entries().trace().real(), 0.0, 1e-12);
    EXPECT_EQ(parse_state_kind(to_string(kind)), kind);
  }
  EXPECT_EQ(prepare_state(4, StateKind::kFullZ).terms().terms().size(), 4u);
}

TEST(PrepareState, Errors) {
  EXPECT_THROW(prepare_state(1, StateKind::kZEnds), Error);
  EXPECT_THROW(prepare_state(3, StateKind::kYLogical), Error);
  EXPECT_THROW(parse_state_kind("w_state"), Error);
}

TEST(Dense, PauliMatrices) {
  const auto id = oracle::pauli_string_to_dense("II");
  EXPECT_TRUE(id.entries().isIdentity());
  const auto z1 = oracle::pauli_string_to_dense("ZI");
  Eigen::VectorXcd diag(4);
  diag << 1, 1, -1, -1;
  EXPECT_TRUE(z1.entries().isApprox(Eigen::MatrixXcd(diag.asDiagonal())));
  const auto y = oracle::pauli_string_to_dense("Y").entries();
  EXPECT_EQ(y(0, 1), oracle::Complex(0, -1));
  EXPECT_EQ(y(1, 0), oracle::Complex(0, 1));
  EXPECT_THROW(oracle::pauli_string_to_dense("XA"), Error);
}

TEST(Dense, Site1IsMostSignificantBit) {
  // Z_1 must commute with the number operator and read the top bit.
  const int n = 3;
  const auto z1 = oracle::pauli_string_to_dense("ZII");
  for (Eigen::Index i = 0; i < 8; ++i) EXPECT_EQ(z1.entries()(i, i).real(), (i & 4) ? -1.0 : 1.0);
  EXPECT_LT(oracle::max_abs(oracle::commutator(z1, oracle::total_z(n))), 1e-15);
}

TEST(Dense, FlipFlopMatchesHamiltonian) {
  PauliSum ff(2);
  ff.add("XX", 0.5).add("YY", 0.5);
  const auto h = oracle::build_hamiltonian(homogeneous_couplings(2, 1.0));
  EXPECT_LT(oracle::max_abs(h - oracle::to_dense(ff)), 1e-15);
  EXPECT_EQ(h.entries()(1, 2), oracle::Complex(1.0, 0.0));
}

TEST(Hamiltonian, TwoSiteSpectra) {
  for (Model model : {Model::kXX, Model::kDQ}) {
    const oracle::Evolver ev(oracle::build_hamiltonian(homogeneous_couplings(2, 1.0, model)));
    const Eigen::VectorXd& e = ev.energies();
    EXPECT_NEAR(e[0], -1.0, 1e-14);
    EXPECT_NEAR(e[1], 0.0, 1e-14);
    EXPECT_NEAR(e[2], 0.0, 1e-14);
    EXPECT_NEAR(e[3], 1.0, 1e-14);
  }
}

TEST(Hamiltonian, ConservedCharges) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int n : {2, 5, 8}) {
    std::vector<double> c(n - 1);
    for (double& x : c) x = u(rng);
    const auto hxx = oracle::build_hamiltonian(ChainSpec(n, c, Model::kXX));
    const auto hdq = oracle::build_hamiltonian(ChainSpec(n, c, Model::kDQ));
    EXPECT_LT(oracle::max_abs(oracle::commutator(hxx, oracle::total_z(n))), 1e-12);
    EXPECT_LT(oracle::max_abs(oracle::commutator(hdq, oracle::staggered_z(n))), 1e-12);
    EXPECT_GT(oracle::max_abs(oracle::commutator(hdq, oracle::total_z(n))), 0.1);
    EXPECT_LT(oracle::max_abs(hxx - hxx.adjoint()), 1e-12);
  }
}

TEST(Hamiltonian, XXBlockStructure) {
  const int n = 6;
  const auto h = oracle::build_hamiltonian(engineered_couplings(n, 1.0));
  double off = 0.0;
  for (Eigen::Index a = 0; a < h.dim(); ++a) {
    for (Eigen::Index b = 0; b < h.dim(); ++b) {
      if (__builtin_popcountll(a) != __builtin_popcountll(b)) off = std::max(off, std::abs(h.entries()(a, b)));
    }
  }
  EXPECT_LE(off, 1e-14);
}

TEST(Hamiltonian, DipolarTerms) {
  const auto spec = dipolar_couplings({{0.0, 1.0, 3.0}, 1.0}, Truncation::kFull);
  const auto h = oracle::build_hamiltonian(spec);
  PauliSum expected(3);
  for (int j = 1; j <= 3; ++j) {
    for (int l = j + 1; l <= 3; ++l) {
      const double d = spec.pair_coupling(j, l);
      expected.add(d, {{j, 'Z'}, {l, 'Z'}}).add(-d / 2, {{j, 'X'}, {l, 'X'}}).add(-d / 2, {{j, 'Y'}, {l, 'Y'}});
    }
  }
  EXPECT_LT(oracle::max_abs(h - oracle::to_dense(expected)), 1e-14);
}

TEST(Budget, DefaultCapAndEnvironment) {
  oracle::OracleBudget budget;
  EXPECT_EQ(budget.max_n, oracle::kDefaultMaxSites);
  EXPECT_THROW(budget.check(11), Error);
  EXPECT_NO_THROW(budget.check(10));
  EXPECT_THROW(oracle::build_hamiltonian(homogeneous_couplings(11, 1.0), budget), Error);
  ::setenv("SPINWIRE_ORACLE_MAX_N", "12", 1);
  EXPECT_EQ(oracle::OracleBudget::from_env().max_n, 12);
  ::setenv("SPINWIRE_ORACLE_MAX_N", "13", 1);
  EXPECT_THROW(oracle::OracleBudget::from_env(), Error);
  ::setenv("SPINWIRE_ORACLE_MAX_N", "ten", 1);
  EXPECT_THROW(oracle::OracleBudget::from_env(), Error);
  ::unsetenv("SPINWIRE_ORACLE_MAX_N");
}

TEST(Evolve, IdentityAtZeroAndTwoSiteTransfer) {
  const auto h = oracle::build_hamiltonian(homogeneous_couplings(2, 0.8));
  const auto z1 = oracle::pauli_string_to_dense("ZI");
  const auto z2 = oracle::pauli_string_to_dense("IZ");
  EXPECT_LT(oracle::max_abs(oracle::evolve_deviation(h, z1, 0.0) - z1), 1e-14);
  for (double t : {0.3, 1.1, 2.9}) {
    EXPECT_NEAR(oracle::trace_overlap(oracle::evolve_deviation(h, z1, t), z2).real(), std::pow(std::sin(0.8 * t), 2), 1e-13);
  }
  EXPECT_THROW(oracle::evolve_deviation(h, oracle::pauli_string_to_dense("ZII"), 1.0), Error);
}

TEST(Evolve, TracePurityAndEnergyConserved) {
  const auto spec = engineered_couplings(7, 1.0, Model::kDQ);
  const auto h = oracle::build_hamiltonian(spec);
  PauliSum rho(7);
  rho.add("ZIIIIIZ", 1.0).add("XYIIIII", 0.3).add("IIIZZII", -0.2);
  const auto r0 = oracle::to_dense(rho);
  const oracle::Evolver ev(h);
  for (double t : {0.5, 3.0, 40.0}) {
    const auto rt = ev.evolve(r0, t);
    EXPECT_NEAR(std::abs(rt.entries().trace()), 0.0, 1e-10);
    EXPECT_NEAR(oracle::trace_overlap(rt, rt).real(), oracle::trace_overlap(r0, r0).real(), 1e-10);
    EXPECT_NEAR(oracle::trace_overlap(h, rt).real(), oracle::trace_overlap(h, r0).real(), 1e-10);
  }
}

TEST(TraceOverlap, Orthonormality) {
  const auto a = oracle::pauli_string_to_dense("ZII");
  EXPECT_NEAR(std::abs(oracle::trace_overlap(a, a) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(oracle::trace_overlap(a, oracle::pauli_string_to_dense("IXY"))), 0.0, 1e-15);
  EXPECT_THROW(oracle::trace_overlap(a, oracle::pauli_string_to_dense("ZI")), Error);
}

TEST(Similarity, ResidualVanishes) {
  for (int n : {2, 3, 7, 8}) {
    for (std::uint64_t seed : {1u, 2u}) EXPECT_LE(oracle::similarity_check(n, seed), 1e-12);
  }
}

TEST(Similarity, PolarizationFlipsSignOnOddSites) {
  for (int j = 1; j <= 5; ++j) {
    PauliSum z(5);
    z.add(1.0, {{j, 'Z'}});
    EXPECT_DOUBLE_EQ(conjugate_odd_sites(z).weight(z.terms().begin()->first), j % 2 ? -1.0 : 1.0);
  }
}

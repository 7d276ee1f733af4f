// Randomized invariants, one suite per module.
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "sik/certify.hpp"
#include "sik/index.hpp"
#include "sik/linalg.hpp"
#include "sik/lyapunov.hpp"
#include "sik/norms.hpp"
#include "sik/oracle.hpp"
#include "support.hpp"

namespace sik {
namespace {

using test::random_series;
using test::random_series_spec;

CMatrix principal(const CMatrix& M, int N, int n) {
  return M.block(N - n, N - n, 2 * n + 1, 2 * n + 1);
}

Kernel2D inner_kernel(const Kernel2D& F, int n) {
  Kernel2D out(n);
  out.coeffs = F.coeffs.block(F.N - n, F.N - n, 2 * n + 1, 2 * n + 1);
  return out;
}

TEST(FourierProperties, RealPolynomialsEvaluateReal) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly f = random_series(rng, 6, 3.0).poly();
    for (int k = 0; k < 100; ++k) EXPECT_LT(std::abs(f(u(rng)).imag()), 1e-12);
  }
}

TEST(FourierProperties, MultiplyCommutesAndMatchesGrid) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    const test::RealSeries fs = random_series(rng, 4, 1.0), gs = random_series(rng, 7, 1.0);
    const TrigPoly f = fs.poly(), g = gs.poly();
    const TrigPoly fg = tp_multiply(f, g), gf = tp_multiply(g, f);
    const int n = sampling_grid_size(7);
    double scale = 0.0;
    for (int p = -11; p <= 11; ++p) scale = std::max(scale, std::abs(fg.coeff(p)));
    for (int p = -11; p <= 11; ++p) {
      EXPECT_EQ(fg.coeff(p), gf.coeff(p));
      Complex want = 0.0;
      for (int j = 0; j < n; ++j) {
        const double x = kTwoPi * j / n;
        want += fs.eval(x) * gs.eval(x) * std::exp(Complex(0.0, -p * x));
      }
      want /= static_cast<double>(n);
      EXPECT_LT(std::abs(fg.coeff(p) - want), 1e-10 * scale);
    }
  }
}

TEST(FourierProperties, LeibnitzInequality) {
  std::mt19937_64 rng(63);
  const double C = leibnitz_constant();
  for (int trial = 0; trial < 100; ++trial) {
    const test::RealSeries a = random_series(rng, 8, 2.0), phi = random_series(rng, 8, 2.0);
    const int n = 64;
    double l2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = kTwoPi * j / n;
      l2 += std::pow(a.eval(x) * phi.eval(x), 2) * kTwoPi / n;
    }
    EXPECT_LE(std::sqrt(l2), C * sobolev_norm(a.poly(), 1.0) * sobolev_norm(phi.poly(), 0.0) * (1.0 + 1e-12));
  }
}

TEST(OperatorProperties, AdjointConsistency) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    const OperatorSpec spec = random_series_spec(rng, 1 + trial % 4, 2.0).spec();
    const int N = 4 + trial % 13;
    EXPECT_LT((assemble_A_star(spec, N).entries - assemble_A(spec, N).entries.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(OperatorProperties, Coercivity) {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const OperatorSpec spec = random_series_spec(rng, 3, 1.5).spec();
    const int m = spec.max_mode();
    const int N = m + 12;
    const SectorParams sp = sector_params(spec);
    const CMatrix A = assemble_A(spec, N).entries;
    const Eigen::VectorXd dm2 = d_power_diagonal(N, -2.0);
    const CMatrix B = dm2.cast<Complex>().asDiagonal() * (sp.lambda0 * CMatrix::Identity(A.rows(), A.cols()) - A) *
                      dm2.cast<Complex>().asDiagonal();
    const CMatrix H = principal(hermitian_part(B), N, N - m);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
    EXPECT_GE(es.eigenvalues().minCoeff(), 0.5 - 1e-8) << trial;
  }
}

TEST(OperatorProperties, SelfAdjointAndBanded) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 10; ++trial) {
    const test::RealSeries a = random_series(rng, 3, 1.0), c = random_series(rng, 2, 1.0);
    const OperatorSpec spec(a.poly(), tp_derivative(a.poly(), 1), c.poly());
    const SpectralMatrix A = assemble_A(spec, 10);
    EXPECT_LT((A.entries - A.entries.adjoint()).norm(), 1e-12);
    for (int p = -10; p <= 10; ++p)
      for (int q = -10; q <= 10; ++q)
        if (std::abs(p - q) > spec.max_mode()) EXPECT_EQ(A.at(p, q), Complex(0.0));
  }
}

TEST(LyapunovProperties, TausskyOnRandomSixBySix) {
  const TausskyReport r = taussky_check(100, 67);
  EXPECT_EQ(r.agreements, r.trials);
}

TEST(LyapunovProperties, HermitianAndRegularity) {
  std::mt19937_64 rng(68);
  for (int trial = 0; trial < 6; ++trial) {
    const OperatorSpec spec = random_series_spec(rng, 2, 0.5).spec();
    const int N = 16 + 4 * trial;
    LyapunovSolution sol;
    try {
      sol = solve_finite_lyapunov(assemble_A(spec, N));
    } catch (const NearSingularPencil&) {
      continue;
    }
    EXPECT_LE(sol.hermitian_defect, 1e-10);
    const int n = N - spec.max_mode();
    const Kernel2D K = inner_kernel(sol.K, n);
    const Kernel2D U = inner_kernel(to_kernel(sol.U), n);
    EXPECT_LE(kernel2d_sobolev_norm(K, 4.0), 2.0 * constant_M(spec) * kernel2d_sobolev_norm(U, 2.0));
  }
}

TEST(LyapunovProperties, KVanishesForMinusD4) {
  for (int N : {1, 7, 40}) EXPECT_LE(solve_finite_lyapunov(assemble_A(OperatorSpec::constant(0, 0, 1), N)).K.coeffs.cwiseAbs().maxCoeff(), 1e-16);
}

TEST(NormProperties, TripleUAtLeastOneAndTailBounded) {
  std::mt19937_64 rng(69);
  for (int trial = 0; trial < 6; ++trial) {
    const OperatorSpec spec = random_series_spec(rng, 2, 0.7).spec();
    const int N = 32;
    LyapunovSolution sol;
    try {
      sol = solve_finite_lyapunov(assemble_A(spec, N));
    } catch (const NearSingularPencil&) {
      continue;
    }
    const double M = constant_M(spec);
    const double U = triple_norm(to_kernel(sol.U));
    EXPECT_GE(U, 1.0 - 1e-8);
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= N / 2; ++n) {
      const double tail = triple_norm(outside_block(sol.K, n));
      EXPECT_LE(tail, prev * (1.0 + 1e-12));
      if (M / (n * n) < 1.0) EXPECT_LE(tail, tail_bound(M, n, U) * (1.0 + 1e-8)) << n;
      prev = tail;
    }
  }
}

TEST(IndexProperties, SylvesterLaw) {
  std::mt19937_64 rng(70);
  std::uniform_int_distribution<int> size(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size(rng);
    const CMatrix H = test::random_hermitian(rng, n);
    const CMatrix T = test::random_complex(rng, n, n);
    const Inertia a = inertia_hermitian(H);
    const Inertia b = inertia_hermitian(hermitian_part(T.adjoint() * H * T));
    EXPECT_EQ(a.n_plus, b.n_plus);
    EXPECT_EQ(a.n_minus, b.n_minus);
    EXPECT_EQ(a.dimension(), n);
  }
}

TEST(IndexProperties, SimilarityInvariance) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix A = random_axis_separated(rng, 6, 0.1);
    CMatrix T = test::random_complex(rng, 6, 6);
    Eigen::JacobiSVD<CMatrix> svd(T);
    if (svd.singularValues()(0) / svd.singularValues()(5) > 1e3) continue;
    const CMatrix B = T * A * T.inverse();
    EXPECT_EQ(instability_index_general(A).counts.n_plus, instability_index_general(B).counts.n_plus);
  }
}

TEST(IndexProperties, AdditionRuleAndComplement) {
  std::mt19937_64 rng(72);
  std::uniform_int_distribution<int> size(2, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size(rng);
    std::uniform_int_distribution<int> dim(1, n - 1);
    const CMatrix U = test::random_hermitian(rng, n);
    const CMatrix S = test::random_complex(rng, n, dim(rng));
    const CMatrix B = u_orth_complement(U, S);
    EXPECT_LE((S.adjoint() * U * B).norm(), 1e-10 * spectral_norm(U) * S.norm());
    try {
      const AdditionRule r = addition_rule_check(U, S);
      EXPECT_EQ(r.lhs, r.rhs());
    } catch (const DegenerateRestriction&) {
    }
  }
}

TEST(CertifyProperties, InvariantsOnConstantFamily) {
  for (const auto& s : test::random_constant_specs(73, 50, 64)) {
    const OperatorSpec spec = OperatorSpec::constant(s.a, s.b, s.c);
    const Certificate c = certified_index(spec);
    if (c.cond2_ok) EXPECT_TRUE(c.cond1_ok);
    ASSERT_EQ(c.status, CertStatus::Certified);
    EXPECT_EQ(c.kappa_schur, *c.kappa_lyapunov);
    EXPECT_EQ(c.kappa(), dispersion_index(s.a, s.b, s.c, c.N_final));
    EXPECT_LE(c.N_history.size(), 20u);
    for (std::size_t i = 1; i < c.N_history.size(); ++i) EXPECT_GT(c.N_history[i], c.N_history[i - 1]);
    const CrossValidation v = cross_validate(c, spec);
    EXPECT_GE(v.lyap_min_eig, c.c_N - 1e-6);
  }
}

TEST(CertifyProperties, RouteAgreementOnSmoothSpecs) {
  std::mt19937_64 rng(74);
  CertifyOptions o;
  o.with_uinv = true;
  for (int trial = 0; trial < 5; ++trial) {
    const OperatorSpec spec = random_series_spec(rng, 2, 1.0).spec();
    const Certificate c = certified_index(spec, o);
    if (c.status != CertStatus::Certified) continue;
    EXPECT_EQ(c.kappa_schur, *c.kappa_lyapunov);
    EXPECT_EQ(c.kappa_schur, *c.kappa_uinv);
  }
}

}  // namespace
}  // namespace sik

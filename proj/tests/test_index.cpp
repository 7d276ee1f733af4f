#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sik/index.hpp"
#include "sik/operator.hpp"
#include "sik/oracle.hpp"
#include "support.hpp"

namespace sik {
namespace {

CMatrix diag(std::initializer_list<Complex> d) {
  CMatrix m = CMatrix::Zero(d.size(), d.size());
  int i = 0;
  for (const Complex& z : d) m(i, i) = z, ++i;
  return m;
}

CMatrix swap2() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

CMatrix e(int n, int k) {
  CMatrix v = CMatrix::Zero(n, 1);
  v(k, 0) = 1.0;
  return v;
}

TEST(InertiaHermitian, Examples) {
  const Inertia a = inertia_hermitian(diag({1.0, -2.0, 3.0}));
  EXPECT_EQ(a.n_plus, 2);
  EXPECT_EQ(a.n_minus, 1);
  EXPECT_EQ(a.n_zero, 0);
  const Inertia z = inertia_hermitian(CMatrix::Zero(4, 4));
  EXPECT_EQ(z.n_zero, 4);
  EXPECT_EQ(z.dimension(), 4);
  const Inertia s = inertia_hermitian(swap2());
  EXPECT_EQ(s.n_plus, 1);
  EXPECT_EQ(s.n_minus, 1);
}

TEST(InertiaHermitian, RejectsNonHermitian) {
  CMatrix m = swap2();
  m(0, 1) = 2.0;
  EXPECT_THROW(inertia_hermitian(m), NonHermitianInput);
}

TEST(InstabilityIndex, Examples) {
  EXPECT_EQ(instability_index_general(diag({-1.0, -2.0, Complex(3.0, 4.0)})).counts.n_plus, 1);
  EXPECT_EQ(instability_index_general(intro_upper_triangular().cast<Complex>()).counts.n_plus, 3);
  const SpectralMatrix A = assemble_A(OperatorSpec::constant(0, 0, -5), 4);
  EXPECT_EQ(instability_index_general(A.entries).counts.n_plus, 3);
  EXPECT_EQ(dispersion_index(0, 0, -5, 4), 3);
}

TEST(InstabilityIndex, ReportsAxisGap) {
  const SpectralCount sc = instability_index_general(diag({-0.25, 2.0, Complex(-1.0, 7.0)}));
  EXPECT_NEAR(sc.axis_gap, 0.25, 1e-15);
  EXPECT_EQ(sc.eigenvalues.size(), 3u);
}

TEST(UOrthComplement, Examples) {
  const CMatrix B1 = u_orth_complement(CMatrix::Identity(3, 3), e(3, 0));
  EXPECT_EQ(B1.cols(), 2);
  EXPECT_LT(B1.row(0).norm(), 1e-15);

  const CMatrix B2 = u_orth_complement(swap2(), e(2, 0));
  ASSERT_EQ(B2.cols(), 1);
  EXPECT_NEAR(std::abs(B2(0, 0)), 1.0, 1e-15);

  const CMatrix B3 = u_orth_complement(diag({1.0, -1.0}), e(2, 0));
  ASSERT_EQ(B3.cols(), 1);
  EXPECT_NEAR(std::abs(B3(1, 0)), 1.0, 1e-15);
}

TEST(AdditionRule, Examples) {
  const AdditionRule d = addition_rule_check(diag({1.0, -1.0}), e(2, 0));
  EXPECT_EQ(d.lhs, 1);
  EXPECT_EQ(d.kappa_restricted1, 1);
  EXPECT_EQ(d.kappa_restricted2, 0);
  EXPECT_EQ(d.intersection_dim, 0);

  const AdditionRule s = addition_rule_check(swap2(), e(2, 0));
  EXPECT_EQ(s.lhs, 1);
  EXPECT_EQ(s.kappa_restricted1, 0);
  EXPECT_EQ(s.kappa_restricted2, 0);
  EXPECT_EQ(s.intersection_dim, 1);
  EXPECT_EQ(s.rhs(), 1);
}

TEST(AdditionRule, RandomEightByEight) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix U = test::random_hermitian(rng, 8);
    const CMatrix S = test::random_complex(rng, 8, 3);
    try {
      const AdditionRule r = addition_rule_check(U, S);
      EXPECT_EQ(r.lhs, r.rhs());
      ++checked;
    } catch (const DegenerateRestriction&) {
    }
  }
  EXPECT_GE(checked, 95);
}

TEST(IndefiniteGramSchmidt, IdentityIsOrdinary) {
  std::mt19937_64 rng(42);
  const CMatrix V = test::random_complex(rng, 5, 3);
  const IndefiniteBasis b = indefinite_gram_schmidt(CMatrix::Identity(5, 5), V);
  EXPECT_LT((b.vectors.adjoint() * b.vectors - CMatrix::Identity(3, 3)).norm(), 1e-12);
  for (int s : b.signs) EXPECT_EQ(s, 1);
}

TEST(IndefiniteGramSchmidt, NeutralInputThrows) {
  CMatrix V(2, 2);
  V << 1.0, 1.0, 1.0, -1.0;
  EXPECT_THROW(indefinite_gram_schmidt(diag({1.0, -1.0}), V), NeutralVectorEncountered);
}

TEST(IndefiniteGramSchmidt, DiagonalScaling) {
  const IndefiniteBasis b = indefinite_gram_schmidt(diag({2.0, -3.0}), CMatrix::Identity(2, 2));
  EXPECT_NEAR(b.vectors(0, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(b.vectors(1, 1).real(), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_EQ(b.signs, (std::vector<int>{1, -1}));
}

TEST(IndefiniteGramSchmidt, OutputIsUOrthonormal) {
  std::mt19937_64 rng(43);
  const CMatrix U = test::random_hermitian(rng, 6);
  const IndefiniteBasis b = indefinite_gram_schmidt(U, test::random_complex(rng, 6, 6));
  CMatrix J = CMatrix::Zero(6, 6);
  for (int i = 0; i < 6; ++i) J(i, i) = static_cast<double>(b.signs[i]);
  EXPECT_LT((b.vectors.adjoint() * U * b.vectors - J).norm(), 1e-8);
  int plus = 0;
  for (int s : b.signs) plus += s > 0;
  EXPECT_EQ(plus, inertia_hermitian(U).n_plus);
}

TEST(ConditioningDiagnostic, QuietOnWellConditioned) {
  const EigenConditioning d = conditioning_diagnostic(diag({-1.0, 2.0, Complex(-3.0, 1.0)}));
  EXPECT_FALSE(d.unreliable);
  EXPECT_NEAR(d.max_condition, 1.0, 1e-12);
}

TEST(ConditioningDiagnostic, FiresOnIntroMatrix) {
  const EigenConditioning d = conditioning_diagnostic(intro_matrix().cast<Complex>());
  EXPECT_TRUE(d.unreliable);
  EXPECT_GT(d.max_condition, 1e6);
}

}  // namespace
}  // namespace sik

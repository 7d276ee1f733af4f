#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "sik/certify.hpp"
#include "sik/index.hpp"
#include "sik/linalg.hpp"
#include "sik/oracle.hpp"
#include "support.hpp"

namespace sik {
namespace {

TEST(CertifiedIndex, MinusD4IsCertifiedAtInitialN) {
  const Certificate c = certified_index(OperatorSpec::constant(0, 0, 1));
  EXPECT_EQ(c.status, CertStatus::Certified);
  EXPECT_EQ(c.kappa(), 0);
  EXPECT_EQ(c.N_history.size(), 1u);
  EXPECT_EQ(c.N_final, 8);
  EXPECT_EQ(c.M, 0.0);
  EXPECT_NEAR(c.tripleU_upper, 1.0, 1e-15);
}

TEST(CertifiedIndex, NegativeConstantC) {
  const Certificate c = certified_index(OperatorSpec::constant(0, 0, -5));
  EXPECT_EQ(c.status, CertStatus::Certified);
  EXPECT_EQ(c.kappa_schur, 3);
  EXPECT_EQ(c.kappa_lyapunov, 3);
}

TEST(CertifiedIndex, RouteAgreementWithInverse) {
  CertifyOptions o;
  o.with_uinv = true;
  const OperatorSpec spec(TrigPoly::cosine(1, 2.0), TrigPoly::sine(2, 0.5), TrigPoly::constant(-3.0));
  const Certificate c = certified_index(spec, o);
  ASSERT_EQ(c.status, CertStatus::Certified);
  ASSERT_TRUE(c.kappa_uinv.has_value());
  EXPECT_EQ(*c.kappa_uinv, c.kappa_schur);
  EXPECT_EQ(*c.kappa_lyapunov, c.kappa_schur);
}

TEST(CertifiedIndex, SineCoefficient) {
  const Certificate c = certified_index(OperatorSpec(TrigPoly::sine(1), TrigPoly(), TrigPoly()));
  EXPECT_EQ(c.status, CertStatus::Certified);
  EXPECT_TRUE(c.mean_deflated);
  EXPECT_EQ(c.kappa(), 0);
}

TEST(CertifiedIndex, MaxTruncationGivesConditionNotMet) {
  CertifyOptions o;
  o.max_N = 10;
  const Certificate c = certified_index(OperatorSpec::benilov(0.0, 1.0, 0.5), o);
  EXPECT_EQ(c.status, CertStatus::ConditionNotMet);
  EXPECT_LE(c.N_final, 10);
  EXPECT_FALSE(c.cond2_ok);
}

TEST(CertifiedIndex, SpectraTouchingAxisAreReported) {
  // -p^4 + a p^2 - c vanishes at p = 1 for a = 2, c = 1.
  const Certificate c = certified_index(OperatorSpec::constant(2, 0, 1));
  EXPECT_EQ(c.status, CertStatus::SpectraTouchAxis);
}

TEST(CertifiedIndex, ConstantSpecsMatchDispersion) {
  for (const auto& s : test::random_constant_specs(101, 15, 64)) {
    const Certificate c = certified_index(OperatorSpec::constant(s.a, s.b, s.c));
    ASSERT_EQ(c.status, CertStatus::Certified) << s.a << ' ' << s.b << ' ' << s.c;
    EXPECT_EQ(c.kappa(), dispersion_index(s.a, s.b, s.c, c.N_final));
    EXPECT_EQ(c.kappa(), dispersion_index(s.a, s.b, s.c, 1000));
  }
}

TEST(CrossValidate, ConstantSpecIsStable) {
  const OperatorSpec spec = OperatorSpec::constant(3.0, 1.0, -2.0);
  const Certificate c = certified_index(spec);
  const CrossValidation v = cross_validate(c, spec);
  EXPECT_TRUE(v.count_stable);
  EXPECT_EQ(v.kappa_N, v.kappa_2N);
  EXPECT_TRUE(v.inverse_ok);
  EXPECT_TRUE(v.lyap_ok);
  EXPECT_GE(v.lyap_min_eig, c.c_N - 1e-6);
}

TEST(CrossValidate, SelfAdjointMorseCount) {
  const OperatorSpec spec(TrigPoly::cosine(1, 4.0), TrigPoly::sine(1, -4.0), TrigPoly::constant(-1.0));
  const Certificate c = certified_index(spec);
  ASSERT_EQ(c.status, CertStatus::Certified);
  const SpectralMatrix A = assemble_A(spec, c.N_final);
  const double tol = tolerance_scale(A).absolute(1e-8);
  EXPECT_EQ(*c.kappa_lyapunov, inertia_hermitian(hermitian_part(A.entries), tol).n_plus);
}

TEST(Digest, StableAndSensitive) {
  const OperatorSpec s1 = OperatorSpec::benilov(0.0, 1.0, 0.02);
  EXPECT_EQ(spec_digest(s1), spec_digest(OperatorSpec::benilov(0.0, 1.0, 0.02)));
  EXPECT_NE(spec_digest(s1), spec_digest(OperatorSpec::benilov(0.0, 1.0, 0.021)));
  EXPECT_EQ(spec_digest(s1).size(), 64u);
}

TEST(CertificateJson, FieldNamesAndOrder) {
  const nlohmann::ordered_json j = to_json(certified_index(OperatorSpec::constant(0, 0, 1)));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> want = {"spec_digest", "M",           "N_final",        "delta_N",    "c_N",
                                         "tripleU_upper", "cond1_ok",  "cond2_ok",       "kappa_schur", "kappa_lyapunov",
                                         "kappa_uinv",  "residual",    "axis_gap",       "status"};
  EXPECT_EQ(keys, want);
  EXPECT_EQ(j["status"], "Certified");
  EXPECT_TRUE(j["kappa_uinv"].is_null());
  EXPECT_TRUE(j["kappa_schur"].is_number_integer());
}

TEST(ToleranceScale, FloorsAtRoundoff) {
  const SpectralMatrix A = assemble_A(OperatorSpec::constant(0, 0, 1), 10);
  const ToleranceScale ts = tolerance_scale(A);
  EXPECT_NEAR(ts.graph_norm, 1.0, 1e-12);
  EXPECT_GE(ts.absolute(0.0), 16.0 * 2.2e-16 * ts.a_norm);
  EXPECT_NEAR(ts.absolute(1e-8), 1e-8, 1e-12);
}

}  // namespace
}  // namespace sik

#include <gtest/gtest.h>

#include "lieqrt/cfo.hpp"
#include "lieqrt/error.hpp"
#include "lieqrt/linalg.hpp"
#include "lieqrt/purity.hpp"
#include "oracles.hpp"

using namespace lieqrt;

namespace {

const Complex I1(0, 1);

Eigen::VectorXd random_h(const LieRep& r, Rng& rng) {
  Eigen::VectorXd h(static_cast<Index>(r.generators.size()));
  for (Index k = 0; k < h.size(); ++k) h(k) = rng.uniform(-1, 1);
  return h;
}

State random_coherent(const LieRep& r, Rng& rng) {
  Operator x = Operator::Zero(r.dim, r.dim);
  for (const auto& g : r.generators) x += Complex(0, rng.uniform(-M_PI, M_PI)) * g;
  return oracle::taylor_exp(x) * r.hw_state;
}

}  // namespace

TEST(Iwasawa, Identity) {
  const IwasawaFactors f = iwasawa_sl2(Operator::Identity(2, 2));
  EXPECT_LT((f.u - Operator::Identity(2, 2)).norm(), 1e-15);
  EXPECT_EQ(f.alpha, 0.0);
  EXPECT_EQ(f.eta, Complex(0, 0));
}

TEST(Iwasawa, DiagonalReadsOffCartanCoefficient) {
  // diag(2, 1/2) = e^{alpha Jz} with Jz = diag(1/2, -1/2) gives alpha = 2 ln 2.
  Operator m = Operator::Zero(2, 2);
  m.diagonal() << 2.0, 0.5;
  const IwasawaFactors f = iwasawa_sl2(m);
  EXPECT_LT((f.u - Operator::Identity(2, 2)).norm(), 1e-15);
  EXPECT_NEAR(f.alpha, 2.0 * std::log(2.0), 1e-15);
  EXPECT_EQ(f.eta, Complex(0, 0));
}

TEST(Iwasawa, RoundTrip) {
  Rng rng(41);
  for (int t = 0; t < 1000; ++t) {
    const Operator m = ginibre(2, rng);
    const IwasawaFactors f = iwasawa_sl2(m);
    EXPECT_TRUE(is_unitary(f.u));
    EXPECT_NEAR(std::abs(f.u.determinant() - 1.0), 0.0, 1e-12);
    EXPECT_LT((f.det_root * reconstruct_sl2(f) - m).norm(), 1e-10 * m.norm());
    const Operator lift = lift_to_spin(f, 1);
    EXPECT_LT((f.det_root * lift - m).norm(), 1e-10 * m.norm());
  }
}

TEST(Iwasawa, Singular) {
  Operator m = Operator::Zero(2, 2);
  m(0, 0) = 1;
  m(1, 0) = 2;
  try {
    iwasawa_sl2(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Singular);
  }
  EXPECT_THROW(iwasawa_sl2(Operator::Identity(3, 3)), Error);
}

TEST(Euler, ReconstructsSu2) {
  Rng rng(42);
  const LieRep half = su2_rep(1);
  for (int t = 0; t < 100; ++t) {
    Operator u = haar_unitary(2, rng);
    u /= std::sqrt(u.determinant());
    const EulerAngles e = su2_euler_zyz(u);
    const Operator r = oracle::taylor_exp(Operator(I1 * e.a * half.generators[2])) *
                       oracle::taylor_exp(Operator(I1 * e.b * half.generators[1])) *
                       oracle::taylor_exp(Operator(I1 * e.c * half.generators[2]));
    EXPECT_LT((r - u).norm(), 1e-12);
  }
}

TEST(Lift, IdentityAndCartan) {
  const IwasawaFactors id;
  EXPECT_LT((lift_to_spin(id, 10) - Operator::Identity(11, 11)).norm(), 1e-14);
  IwasawaFactors f;
  f.alpha = 0.7;
  const LieRep r = su2_rep(10);
  const State v = lift_to_spin(f, r) * weight_state(r, 3);
  EXPECT_LT((v - std::exp(0.7 * 3) * weight_state(r, 3)).norm(), 1e-12);
}

TEST(Lift, IsAHomomorphism) {
  Rng rng(43);
  const LieRep r = su2_rep(6);
  for (int t = 0; t < 20; ++t) {
    const Operator a = ginibre(2, rng), b = ginibre(2, rng);
    const IwasawaFactors fa = iwasawa_sl2(a), fb = iwasawa_sl2(b);
    const IwasawaFactors fab = iwasawa_sl2(a * b);
    const Operator lhs = lift_to_spin(fab, r);
    const Operator rhs = lift_to_spin(fa, r) * lift_to_spin(fb, r);
    // Lifting through SL(2) / +-1: agreement up to sign (integer spin has none).
    EXPECT_LT((lhs - rhs).norm(), 1e-9 * rhs.norm());
  }
}

TEST(Lift, KeepsHighestWeightFree) {
  Rng rng(44);
  const LieRep r = su2_rep(10);
  for (int t = 0; t < 100; ++t) {
    const Operator lift = lift_to_spin(iwasawa_sl2(ginibre(2, rng)), r);
    const State out = normalize_after(lift, weight_state(r, 3));
    EXPECT_NEAR(out.norm(), 1.0, 1e-12);
    EXPECT_NEAR(g_purity(normalize_after(lift, r.hw_state), r), 1.0, 1e-8);
  }
}

TEST(CfoElement, SmallScaleNearIdentity) {
  const LieRep r = su2_rep(10);
  for (double scale : {1e-3, 1e-5}) {
    Rng rng(45);
    const Operator m = sample_cfo_element(r, rng, scale);
    const double dev = (m - Operator::Identity(11, 11)).norm();
    EXPECT_LT(dev, 100 * scale);
  }
  Rng rng(1);
  EXPECT_THROW(sample_cfo_element(r, rng, 0.0), Error);
}

TEST(CfoElement, UnitarySliceAndDeterminism) {
  const LieRep r = su2_rep(10);
  Rng rng(46);
  Eigen::VectorXd a(3), b = Eigen::VectorXd::Zero(3);
  for (int k = 0; k < 3; ++k) a(k) = rng.uniform(-1, 1);
  EXPECT_TRUE(is_unitary(cfo_element(r, a, b), 1e-10));
  Rng r1(7), r2(7);
  const Operator m1 = sample_cfo_element(r, r1, 1.0);
  EXPECT_EQ(m1, sample_cfo_element(r, r2, 1.0));
  EXPECT_GT(std::abs(m1.determinant()), 0.0);
}

TEST(CfoElement, MatchesTaylorOracle) {
  const LieRep r = so2n_rep(2);
  Rng rng(47);
  Eigen::VectorXd a(6), b(6);
  for (int k = 0; k < 6; ++k) {
    a(k) = rng.uniform(-1, 1);
    b(k) = rng.uniform(-1, 1);
  }
  Operator x = Operator::Zero(4, 4);
  for (int k = 0; k < 6; ++k) x += Complex(a(k), b(k)) * I1 * r.generators[k];
  const Operator ref = oracle::taylor_exp(x);
  EXPECT_LT((cfo_element(r, a, b) - ref).norm(), 1e-11 * ref.norm());
}

TEST(CfoImage, CoherentStatesStayFree) {
  Rng rng(48);
  for (int two_s = 1; two_s <= 16; two_s += 3) {
    const LieRep r = su2_rep(two_s);
    for (int t = 0; t < 30; ++t) {
      const State c = random_coherent(r, rng);
      const Operator m = sample_cfo_element(r, rng, 1.0);
      EXPECT_NEAR(g_purity(normalize_after(m, c), r), 1.0, 1e-8);
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const LieRep r = so2n_rep(n);
    for (int t = 0; t < 10; ++t) {
      const State c = random_coherent(r, rng);
      const Operator m = sample_cfo_element(r, rng, 1.0);
      EXPECT_NEAR(g_purity(normalize_after(m, c), r), 1.0, 1e-8);
    }
  }
}

TEST(Kraus, SingleStepClosedForm) {
  const LieRep r = su2_rep(4);
  Rng rng(49);
  const Eigen::VectorXd h = random_h(r, rng);
  const KrausChannel ch = weak_meas_kraus(r, h, 0.3, 1);
  ASSERT_EQ(ch.kraus.size(), 2u);
  Operator a = Operator::Zero(5, 5);
  for (int k = 0; k < 3; ++k) a += 0.3 * h(k) * r.generators[k];
  // cos and sin from exponentials of iA.
  const Operator e = oracle::taylor_exp(Operator(I1 * a));
  const Operator em = oracle::taylor_exp(Operator(-I1 * a));
  const Operator c = 0.5 * (e + em);
  const Operator s = Complex(0, -0.5) * (e - em);
  EXPECT_LT((ch.kraus[0] - (c - s) / std::sqrt(2.0)).norm(), 1e-12);
  EXPECT_LT((ch.kraus[1] - (c + s) / std::sqrt(2.0)).norm(), 1e-12);
  EXPECT_EQ(ch.labels[0], "0");
  EXPECT_EQ(ch.labels[1], "1");
}

TEST(Kraus, ZeroEpsilonIsScaledIdentity) {
  const LieRep r = su2_rep(10);
  Rng rng(50);
  const KrausChannel ch = weak_meas_kraus(r, random_h(r, rng), 0.0, 3);
  ASSERT_EQ(ch.kraus.size(), 8u);
  for (const auto& m : ch.kraus) EXPECT_LT((m - Operator::Identity(11, 11) / std::sqrt(8.0)).norm(), 1e-15);
  const State psi = haar_state(11, rng);
  for (const auto& o : apply_channel(ch, psi)) {
    EXPECT_NEAR(o.p, 1.0 / 8.0, 1e-15);
    ASSERT_TRUE(o.phi);
    EXPECT_LT((*o.phi - psi).norm(), 1e-14);
  }
}

TEST(Kraus, PaperParametersComplete) {
  const LieRep r = su2_rep(10);
  Rng rng(51);
  const KrausChannel ch = weak_meas_kraus(r, random_h(r, rng), 0.02, 5);
  EXPECT_EQ(ch.kraus.size(), 32u);
  EXPECT_EQ(ch.kraus[0].rows(), 11);
  EXPECT_LT(completeness_residual(ch), 1e-10);
  EXPECT_EQ(ch.labels[1], "10000");
  EXPECT_EQ(ch.labels[16], "00001");
}

TEST(Kraus, MatchesSequentialProduct) {
  const LieRep r = so2n_rep(2);
  Rng rng(52);
  const Eigen::VectorXd h = random_h(r, rng);
  const KrausChannel a = weak_meas_kraus(r, h, 0.1, 4);
  const KrausChannel b = weak_meas_kraus_steps(r, std::vector<Eigen::VectorXd>(4, h), 0.1);
  ASSERT_EQ(a.kraus.size(), b.kraus.size());
  for (std::size_t k = 0; k < a.kraus.size(); ++k) EXPECT_LT((a.kraus[k] - b.kraus[k]).norm(), 1e-13);
}

TEST(Kraus, PerStepHookComplete) {
  const LieRep r = su2_rep(5);
  Rng rng(53);
  std::vector<Eigen::VectorXd> hs;
  for (int t = 0; t < 4; ++t) hs.push_back(random_h(r, rng));
  const KrausChannel ch = weak_meas_kraus_steps(r, hs, 0.3);
  EXPECT_LT(completeness_residual(ch), 1e-12);
}

TEST(Kraus, CompletenessUnderGeneratorPermutation) {
  const LieRep r = so2n_rep(3);
  Rng rng(54);
  Eigen::VectorXd h = random_h(r, rng);
  const double before = completeness_residual(weak_meas_kraus(r, h, 0.2, 3));
  std::reverse(h.data(), h.data() + h.size());
  const double after = completeness_residual(weak_meas_kraus(r, h, 0.2, 3));
  EXPECT_LT(before, 1e-10);
  EXPECT_LT(after, 1e-10);
}

TEST(Kraus, RejectsBadInput) {
  const LieRep r = su2_rep(2);
  EXPECT_THROW(weak_meas_kraus(r, Eigen::VectorXd::Zero(2), 0.1, 2), Error);
  EXPECT_THROW(weak_meas_kraus(r, Eigen::VectorXd::Zero(3), 0.1, 0), Error);
  EXPECT_THROW(weak_meas_kraus(r, Eigen::VectorXd::Zero(3), 0.1, 13), Error);
}

TEST(ApplyChannel, JzEigenstateTwoOutcomes) {
  const LieRep r = su2_rep(10);
  const double eps = 0.1, m = 3;
  const Eigen::Vector3d h(0, 0, 1);
  const auto outs = apply_channel(weak_meas_kraus(r, h, eps, 1), weight_state(r, m));
  const double c = std::cos(eps * m), s = std::sin(eps * m);
  EXPECT_NEAR(outs[0].p, 0.5 * (c - s) * (c - s), 1e-15);
  EXPECT_NEAR(outs[1].p, 0.5 * (c + s) * (c + s), 1e-15);
  EXPECT_NEAR(outs[0].p + outs[1].p, 1.0, 1e-15);
}

TEST(ApplyChannel, ProbabilitiesSumToOne) {
  Rng rng(55);
  const LieRep r = su2_rep(10);
  for (int t = 0; t < 20; ++t) {
    const auto outs = apply_channel(weak_meas_kraus(r, random_h(r, rng), rng.uniform(0, 0.5), 4),
                                    haar_state(11, rng));
    double total = 0;
    for (const auto& o : outs) total += o.p;
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(ApplyChannel, NullBranch) {
  // eps * m = pi / 4 makes C - S vanish on |1, 1>.
  const LieRep r = su2_rep(2);
  const Eigen::Vector3d h(0, 0, 1);
  const auto outs = apply_channel(weak_meas_kraus(r, h, M_PI / 4, 1), weight_state(r, 1));
  EXPECT_LT(outs[0].p, 1e-14);
  EXPECT_FALSE(outs[0].phi.has_value());
  EXPECT_NEAR(outs[1].p, 1.0, 1e-14);
}

TEST(ApplyChannel, RejectsIncompleteFamily) {
  const LieRep r = su2_rep(2);
  KrausChannel bad;
  bad.kraus = {Operator::Identity(3, 3) * 0.5};
  EXPECT_THROW(apply_channel(bad, weight_state(r, 1)), Error);
  EXPECT_THROW(apply_channel(bad, State::Ones(3)), Error);
}

TEST(FixedPoint, CartanChannelKeepsHighestWeight) {
  const LieRep r = so2n_rep(3);
  Eigen::VectorXd h = Eigen::VectorXd::Zero(15);
  for (std::size_t idx : r.cartan_indices) h(Index(idx)) = 0.7;
  for (const auto& o : apply_channel(weak_meas_kraus(r, h, 0.05, 3), r.hw_state)) {
    ASSERT_TRUE(o.phi);
    EXPECT_NEAR(std::abs(o.phi->dot(r.hw_state)), 1.0, 1e-10);
  }
}

TEST(FixedPoint, ExponentialFamilyKeepsFreeStatesFree) {
  Rng rng(56);
  const LieRep r = su2_rep(10);
  const Eigen::VectorXd h = random_h(r, rng);
  for (std::size_t k = 0; k < 8; ++k) {
    const State out = normalize_after(first_order_kraus(r, h, 0.05, 3, k), r.hw_state);
    EXPECT_NEAR(g_purity(out, r), 1.0, 1e-10);
  }
}

TEST(FirstOrder, DeviationShrinksQuadratically) {
  Rng rng(57);
  const LieRep r = su2_rep(10);
  const Eigen::VectorXd h = random_h(r, rng);
  const int steps = 5;
  auto deviation = [&](double eps) {
    const KrausChannel ch = weak_meas_kraus(r, h, eps, steps);
    double worst = 0;
    for (std::size_t k = 0; k < ch.kraus.size(); ++k)
      worst = std::max(worst, (ch.kraus[k] - first_order_kraus(r, h, eps, steps, k)).norm());
    return worst;
  };
  double prev = deviation(0.04);
  for (double eps : {0.02, 0.01, 0.005}) {
    const double d = deviation(eps);
    EXPECT_GE(prev / d, 3.5) << eps;
    prev = d;
  }
}

TEST(NormalizeAfter, Examples) {
  Rng rng(58);
  const LieRep r = su2_rep(10);
  const State psi = haar_state(11, rng);
  EXPECT_LT((normalize_after(3.0 * Operator::Identity(11, 11), psi) - psi).norm(), 1e-15);
  const State w = weight_state(r, 2);
  EXPECT_LT((normalize_after(mat_exp(Operator(1.3 * r.generators[2])), w) - w).norm(), 1e-14);
  EXPECT_THROW(normalize_after(Operator::Zero(11, 11), psi), Error);
}

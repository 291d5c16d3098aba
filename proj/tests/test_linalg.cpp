#include <gtest/gtest.h>

#include "lieqrt/error.hpp"
#include "lieqrt/linalg.hpp"
#include "lieqrt/random.hpp"
#include "oracles.hpp"

using namespace lieqrt;
using oracle::sigma;

namespace {

const Complex I1(0, 1);

Operator random_hermitian(Index d, Rng& rng) {
  const Operator g = ginibre(d, rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST(MatExp, ZeroIsIdentity) {
  const Operator e = mat_exp(Operator::Zero(4, 4).eval());
  EXPECT_LT((e - Operator::Identity(4, 4)).norm(), 1e-15);
}

TEST(MatExp, DiagonalIPi) {
  Operator a = Operator::Zero(2, 2);
  a(0, 0) = I1 * M_PI;
  a(1, 1) = -I1 * M_PI;
  EXPECT_LT((mat_exp(a) + Operator::Identity(2, 2)).norm(), 1e-14);
}

TEST(MatExp, AntiHermitianGivesUnitary) {
  Rng rng(5);
  const Operator u = mat_exp(Operator(I1 * random_hermitian(8, rng)));
  EXPECT_LT((u.adjoint() * u - Operator::Identity(8, 8)).norm(), 1e-10);
}

TEST(MatExp, MatchesTaylorOracleOnNonNormal) {
  Rng rng(6);
  for (Index d : {2, 3, 7, 12}) {
    for (double scale : {0.01, 0.3, 1.0, 4.0}) {
      const Operator a = scale * ginibre(d, rng);
      ASSERT_GT(normality_defect(a), 1e-6);
      const Operator ref = oracle::taylor_exp(a);
      EXPECT_LT((mat_exp(a) - ref).norm() / ref.norm(), 1e-11) << "d=" << d << " scale=" << scale;
    }
  }
}

TEST(MatExp, MatchesTaylorOracleOnNilpotent) {
  Operator n = Operator::Zero(4, 4);
  n(0, 1) = 2.0;
  n(1, 2) = Complex(0, 1.5);
  n(2, 3) = -1.0;
  const Operator ref = oracle::taylor_exp(n);
  EXPECT_LT((mat_exp(n) - ref).norm(), 1e-12);
}

TEST(MatExp, InverseProperty) {
  Rng rng(7);
  for (Index d : {2, 16, 64, 256}) {
    const Operator h = random_hermitian(d, rng) / std::sqrt(double(d));
    for (const Operator& a : {h, Operator(I1 * h)}) {
      const Operator prod = mat_exp(a) * mat_exp(Operator(-a));
      EXPECT_LT((prod - Operator::Identity(d, d)).norm(), 1e-9) << "d=" << d;
    }
  }
}

TEST(MatExp, ConjugationCovariance) {
  Rng rng(8);
  for (Index d : {3, 10}) {
    const Operator a = ginibre(d, rng);
    const Operator u = haar_unitary(d, rng);
    const Operator lhs = mat_exp(Operator(u * a * u.adjoint()));
    const Operator rhs = u * mat_exp(a) * u.adjoint();
    EXPECT_LT((lhs - rhs).norm(), 1e-9 * rhs.norm());
  }
}

TEST(MatExp, RejectsNonFinite) {
  Operator a = Operator::Zero(2, 2);
  a(0, 1) = std::nan("");
  EXPECT_THROW(mat_exp(a), Error);
}

TEST(HsInner, Examples) {
  EXPECT_NEAR(std::abs(hs_inner(Operator::Identity(2, 2), Operator::Identity(2, 2)) - 2.0), 0, 1e-15);
  EXPECT_EQ(hs_inner(sigma('x'), sigma('y')), Complex(0, 0));
  Operator jz = Operator::Zero(3, 3);
  jz.diagonal() << 1, 0, -1;
  EXPECT_DOUBLE_EQ(hs_inner(jz, jz).real(), 2.0);
}

TEST(HsInner, PositiveDefinite) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const Operator a = ginibre(3, rng);
    const Complex v = hs_inner(a, a);
    EXPECT_GT(v.real(), 0.0);
    EXPECT_NEAR(v.imag(), 0.0, 1e-12);
  }
  EXPECT_EQ(hs_inner(Operator::Zero(3, 3), Operator::Zero(3, 3)), Complex(0, 0));
}

TEST(HsInner, ShapeMismatchThrows) {
  try {
    hs_inner(Operator::Identity(2, 2), Operator::Identity(3, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(GramSchmidt, OrthogonalInputUnchanged) {
  const OperatorList in{sigma('x'), sigma('y'), sigma('z')};
  const OperatorList out = gram_schmidt_hs(in);
  ASSERT_EQ(out.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_LT((out[i] - in[i]).norm(), 1e-15);
}

TEST(GramSchmidt, OneProjectionStep) {
  const OperatorList out = gram_schmidt_hs({sigma('x'), Operator(sigma('x') + sigma('y'))});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_NEAR(std::abs(hs_inner(out[0], out[1])), 0.0, 1e-14);
  // Second element is proportional to sigma_y.
  const Complex c = hs_inner(sigma('y'), out[1]) / 2.0;
  EXPECT_LT((out[1] - c * sigma('y')).norm(), 1e-14);
  EXPECT_GT(std::abs(c), 0.1);
}

TEST(GramSchmidt, DependentSetThrows) {
  try {
    gram_schmidt_hs({sigma('x'), Operator(2.0 * sigma('x'))});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DependentSet);
  }
}

TEST(QrPositive, Examples) {
  const QrFactors id = qr_positive(Operator::Identity(2, 2));
  EXPECT_LT((id.q - Operator::Identity(2, 2)).norm(), 1e-15);
  EXPECT_LT((id.r - Operator::Identity(2, 2)).norm(), 1e-15);

  Operator d = Operator::Zero(2, 2);
  d.diagonal() << 2.0, 0.5;
  const QrFactors f = qr_positive(d);
  EXPECT_LT((f.q - Operator::Identity(2, 2)).norm(), 1e-15);
  EXPECT_LT((f.r - d).norm(), 1e-15);
}

TEST(QrPositive, ReconstructionAndGauge) {
  Rng rng(10);
  for (int t = 0; t < 50; ++t) {
    const Operator m = ginibre(t % 2 ? 2 : 5, rng);
    const QrFactors a = qr_positive(m);
    const QrFactors b = qr_positive(m);
    EXPECT_LT((a.q * a.r - m).norm(), 1e-12);
    EXPECT_TRUE(is_unitary(a.q));
    for (Index i = 0; i < m.rows(); ++i) {
      EXPECT_GT(a.r(i, i).real(), 0.0);
      EXPECT_EQ(a.r(i, i).imag(), 0.0);
      for (Index j = 0; j < i; ++j) EXPECT_EQ(a.r(i, j), Complex(0, 0));
    }
    EXPECT_EQ(a.q, b.q);
    EXPECT_EQ(a.r, b.r);
  }
}

TEST(QrPositive, SingularThrows) {
  Operator m = Operator::Zero(2, 2);
  m(0, 0) = 1;
  EXPECT_THROW(qr_positive(m), Error);
}

TEST(RealSpan, ResidualOfPaulis) {
  const RealSpan span({Operator(I1 * sigma('x')), Operator(I1 * sigma('y'))});
  EXPECT_EQ(span.rank(), 2);
  EXPECT_LT(span.residual(Operator(I1 * sigma('x') - 3.0 * I1 * sigma('y'))), 1e-14);
  // sigma_x (no factor i) is outside the real span of i sigma_x.
  EXPECT_NEAR(span.residual(sigma('x')), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(span.residual(Operator(I1 * sigma('z'))), std::sqrt(2.0), 1e-14);
}

TEST(Kron, PauliProducts) {
  const Operator zx = kron(sigma('z'), sigma('x'));
  EXPECT_EQ(zx.rows(), 4);
  EXPECT_EQ(zx(0, 1), Complex(1, 0));
  EXPECT_EQ(zx(2, 3), Complex(-1, 0));
  EXPECT_EQ(zx(0, 2), Complex(0, 0));
}

TEST(Predicates, HermitianAndUnitary) {
  EXPECT_TRUE(is_hermitian(sigma('y')));
  EXPECT_FALSE(is_hermitian(Operator(I1 * sigma('y'))));
  EXPECT_TRUE(is_unitary(sigma('y')));
  EXPECT_FALSE(is_unitary(Operator(2.0 * sigma('y'))));
}
